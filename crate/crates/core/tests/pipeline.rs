use std::sync::OnceLock;

use twist53_core::arith::poly::zpoly;
use twist53_core::arith::{rat, ratio, Integer, QMatrix, Rational, Ring};
use twist53_core::modular::{t_from_j, ModularData};
use twist53_core::moduli::*;
use twist53_core::numberfield::{QuadraticNumber, SplittingContext};
use twist53_core::twist::*;
use twist53_core::Error;

struct Pipeline {
    ctx: SplittingContext,
    md: ModularData,
    basis: TwistBasis,
    theta: ThetaMatrix,
    model: TwistedModel,
}

fn run(coeffs: &[i64], prime_bound: u64) -> Pipeline {
    let ctx = SplittingContext::new(&zpoly(coeffs), prime_bound).unwrap();
    let md = ModularData::builtin();
    let basis = twist_basis(&ctx, &md.s_matrices()).unwrap();
    let theta = compute_theta(&basis, &ctx).unwrap();
    let model = twisted_model(&theta, &md).unwrap();
    Pipeline { ctx, md, basis, theta, model }
}

fn example() -> &'static Pipeline {
    static P: OnceLock<Pipeline> = OnceLock::new();
    P.get_or_init(|| run(&[3, 2, -3, 0, 1], 100))
}

fn q11(a: Rational, b: Rational) -> QuadraticNumber {
    QuadraticNumber::new(a, b, Integer::from(11))
}

/// The four `j`-invariants attached to the example, as cubes times `10 + 3√11`.
fn expected_j() -> Vec<QuadraticNumber> {
    let unit = q11(rat(10), rat(3));
    let d = Rational::from_integer(Integer::from(53).pow(5));
    [
        q11(rat(0), rat(-8)),
        q11(rat(6 * 110), rat(6 * 31)),
        q11(rat(12 * 10), rat(-12)),
        q11(rat(2 * -6878815950) / &d, rat(2 * 2118474913) / &d),
    ]
    .iter()
    .map(|c| c.pow(3).mul(&unit))
    .collect()
}

fn unimodular() -> [[Rational; 3]; 3] {
    [[rat(2), rat(1), rat(0)], [rat(-1), rat(0), rat(1)], [rat(3), rat(1), rat(1)]]
}

fn to_qmatrix(m: &[[Rational; 3]; 3]) -> QMatrix {
    QMatrix::from_rows(m.iter().map(|r| r.to_vec()).collect(), &rat(0))
}

fn from_qmatrix(m: &QMatrix) -> [[Rational; 3]; 3] {
    core::array::from_fn(|i| core::array::from_fn(|j| m.get(i, j).clone()))
}

#[test]
fn example_model_is_consistent() {
    let p = example();
    assert_eq!(p.basis.vectors.len(), 3);
    assert!(p.basis.reduced);
    assert!(p.theta.is_invertible());
    assert!(p.theta.fixed_by_nu_sigma3(&p.ctx));
    assert!(p.model.quartic.is_smooth());
    // P((X, Y, Z)·Θ) = μ·F exactly.
    let lhs = substitute_theta(&p.theta, &p.md.eq1_projective());
    let mu = p.model.mu.clone();
    let rhs = p.model.quartic.to_multipoly().map(&mu.zero_like(), |c| mu.from_rational_like(c).unwrap().mul(&mu));
    assert_eq!(lhs, rhs);
}

#[test]
fn example_points_give_the_four_j_invariants() {
    let p = example();
    let pts = search_points(&p.model.quartic, 30).unwrap();
    assert_eq!(pts.len(), 4);
    let expected = expected_j();
    let mut hit = [false; 4];
    for pt in &pts {
        let m = moduli_point(pt, &p.theta, &p.md, Some(p.ctx.k_radicand())).unwrap();
        assert_eq!(m.classification, Classification::Ordinary);
        let pair = m.j_pair.unwrap();
        // Vieta for j² − A(t)·j + B(t)³.
        assert_eq!(pair.j.conj(), pair.j_conj);
        let i = expected.iter().position(|j| pair.contains(j)).expect("known j-invariant");
        hit[i] = true;
    }
    assert_eq!(hit, [true; 4]);
}

#[test]
fn corrupted_sigma_changes_the_dimension() {
    let p = example();
    let mut sigmas = sigma_matrices(&p.ctx);
    sigmas[0] = QMatrix::identity(24, &rat(0));
    let w = build_w(&p.md.s_matrices(), &sigmas);
    assert!(matches!(fixed_space(&w), Err(Error::DimensionMismatch(d)) if d != 3));
}

#[test]
fn basis_change_transforms_theta_model_and_points() {
    let p = example();
    let n = unimodular();
    let basis2 = TwistBasis {
        vectors: (0..3)
            .map(|i| {
                (0..p.basis.vectors[0].len())
                    .map(|c| (0..3).map(|k| (n[i][k].to_integer()) * &p.basis.vectors[k][c]).sum())
                    .collect()
            })
            .collect(),
        reduced: false,
    };
    let theta2 = compute_theta(&basis2, &p.ctx).unwrap();
    let nt_inv = from_qmatrix(&to_qmatrix(&n).transpose().inverse().unwrap());
    assert_eq!(theta2, p.theta.left_mul_rational(&nt_inv));
    assert!(theta2.fixed_by_nu_sigma3(&p.ctx));

    let model2 = twisted_model(&theta2, &p.md).unwrap();
    assert_eq!(model2.quartic, p.model.quartic.substitute(&nt_inv).unwrap());

    let nt = from_qmatrix(&to_qmatrix(&n).transpose());
    for pt in search_points(&p.model.quartic, 10).unwrap() {
        let r = pt.as_rationals();
        let moved: [Rational; 3] = core::array::from_fn(|j| (0..3).map(|k| &r[k] * &nt[k][j]).sum());
        let pt2 = ProjPoint::from_rationals(&moved).unwrap();
        assert!(model2.quartic.eval(pt2.coords()) == Integer::from(0));
        let a = moduli_point(&pt, &p.theta, &p.md, None).unwrap();
        let b = moduli_point(&pt2, &theta2, &p.md, None).unwrap();
        assert_eq!((a.t, a.j_pair), (b.t, b.j_pair));
    }
}

#[test]
fn unrefined_order_gives_an_equivalent_model() {
    let p = example();
    let q = run(&[3, 2, -3, 0, 1], 0);
    let ts = |x: &Pipeline| {
        let mut v: Vec<Rational> = search_points(&x.model.quartic, 30)
            .unwrap()
            .iter()
            .map(|pt| moduli_point(pt, &x.theta, &x.md, None).unwrap().t.unwrap())
            .collect();
        v.sort();
        v
    };
    assert_eq!(ts(p), ts(&q));
}

#[test]
fn fiber_over_t_of_j1() {
    let p = example();
    let j1 = &expected_j()[0];
    let ts = t_from_j(&p.md, j1).unwrap();
    assert!(!ts.is_empty());
    let mut found = Vec::new();
    for t in &ts {
        let pts =
            fiber_over_t(&p.model.quartic, &p.theta, &p.ctx.tower, &p.md, None, Some(t), &FiberConfig::default()).unwrap();
        for pt in pts {
            let m = moduli_point(&pt, &p.theta, &p.md, Some(p.ctx.k_radicand())).unwrap();
            assert!(m.j_pair.unwrap().contains(j1));
            found.push(pt);
        }
    }
    assert!(!found.is_empty());
}

#[test]
fn fiber_over_unrelated_t_is_empty() {
    let p = example();
    let t0 = ratio(7, 13);
    let cfg = FiberConfig::default();
    let pts = fiber_over_t(&p.model.quartic, &p.theta, &p.ctx.tower, &p.md, None, Some(&t0), &cfg).unwrap();
    assert!(pts.is_empty());
    for pt in search_points(&p.model.quartic, 30).unwrap() {
        assert_ne!(moduli_point(&pt, &p.theta, &p.md, None).unwrap().t, Some(t0.clone()));
    }
    assert!(matches!(
        fiber_over_t(&p.model.quartic, &p.theta, &p.ctx.tower, &p.md, None, None, &cfg),
        Err(Error::ChainPole)
    ));
}

/// Further S₄ quartics with coefficients in `[−3, 3]`.
#[test]
fn other_s4_quartics() {
    for (c, radicand) in [([2, -1, 0, 1, 1], -11), ([1, 1, 0, 0, 1], -687), ([-2, 3, 1, -1, 1], 3945)] {
        let p = run(&c, 100);
        assert_eq!(*p.ctx.k_radicand(), Integer::from(radicand));
        assert_eq!(p.basis.vectors.len(), 3);
        assert!(p.theta.fixed_by_nu_sigma3(&p.ctx));
        assert!(p.model.quartic.is_smooth());
        for pt in search_points(&p.model.quartic, 50).unwrap() {
            let m = moduli_point(&pt, &p.theta, &p.md, Some(p.ctx.k_radicand())).unwrap();
            if m.classification == Classification::Ordinary {
                assert!(m.t.is_some());
            }
        }
    }
}

#[test]
fn identity_theta_returns_the_base_model() {
    let p = example();
    let one = p.theta.one_elem();
    let zero = one.zero_like();
    let id = ThetaMatrix {
        entries: core::array::from_fn(|i| core::array::from_fn(|j| if i == j { one.clone() } else { zero.clone() })),
    };
    let model = twisted_model(&id, &p.md).unwrap();
    assert_eq!(model.quartic, PlaneQuartic::from_multipoly(&p.md.eq1_projective()).unwrap());
}
