use twist53_core::arith::poly::zpoly;
use twist53_core::arith::{Integer, QMatrix, Rational, Ring, UniPoly};
use twist53_core::numberfield::splitting::compose_perm;
use twist53_core::numberfield::{SplittingContext, TowerElem};

fn example_quartic() -> UniPoly<Integer> {
    zpoly(&[3, 2, -3, 0, 1])
}

#[test]
fn example_splitting_field() {
    let t0 = std::time::Instant::now();
    let ctx = SplittingContext::new(&example_quartic(), 100).unwrap();
    eprintln!("context built in {:?}; refined at {:?}", t0.elapsed(), ctx.basis.refined_primes);
    eprintln!("disc order = {}", ctx.basis.discriminant());
    assert_eq!(ctx.field.degree(), 24);
    assert_eq!(*ctx.disc_squarefree(), Integer::from(-33));
    assert_eq!(*ctx.k_radicand(), Integer::from(11));

    // prod (X - alpha_i) = f / lc
    let x = UniPoly::x(&ctx.roots[0]);
    let prod = ctx
        .roots
        .iter()
        .fold(UniPoly::constant(ctx.roots[0].one_like()), |acc, r| acc.mul(&x.sub(&UniPoly::constant(r.clone()))));
    for i in 0..=4 {
        let expect = TowerElem::from_rational(&Rational::from_integer(ctx.f.coeff(i)), &ctx.tower);
        assert_eq!(prod.coeff(i), expect);
    }

    for (idx, a) in ctx.automorphisms.iter().enumerate() {
        for i in 0..4 {
            assert_eq!(ctx.apply(idx, &ctx.roots[i]), ctx.roots[a.perm[i]]);
        }
        let g = ctx.field.minpoly();
        let val = g.coeffs().iter().rev().fold(a.image_of_theta.zero_like(), |acc, c| {
            acc.mul(&a.image_of_theta).add(&a.image_of_theta.from_int_like(c))
        });
        assert!(val.is_zero_elem());
    }
    let t1 = std::time::Instant::now();
    let s: Vec<QMatrix> = ctx.sigma.iter().map(|&i| ctx.automorphism_matrix(i)).collect();
    eprintln!("sigma matrices in {:?}", t1.elapsed());
    assert!(s[0].pow(3).is_identity());
    assert!(s[1].pow(2).is_identity());
    assert!(s[2].pow(2).is_identity());
    assert!(!s[2].is_identity());
    let p13 = compose_perm(&ctx.automorphisms[ctx.sigma[0]].perm, &ctx.automorphisms[ctx.sigma[2]].perm);
    let idx = ctx.perm_index(&p13).unwrap();
    assert_eq!(s[0].mul(&s[2]), ctx.automorphism_matrix(idx));
    for m in &s {
        assert!(m.to_rows().iter().flatten().all(|q| q.is_integer()));
    }
}
