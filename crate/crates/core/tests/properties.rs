use proptest::prelude::*;

use twist53_core::arith::int::rational_reconstruct;
use twist53_core::arith::{rat, ratio, Integer, Jet, QMatrix, Rational, Ring, TruncSeries, UniPoly};
use twist53_core::modular::{j_from_t, t_from_j, ModularData};
use twist53_core::moduli::{search_points, ProjPoint};
use twist53_core::numberfield::QuadraticNumber;
use twist53_core::twist::PlaneQuartic;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn qpoly_strategy(max_len: usize) -> impl Strategy<Value = UniPoly<Rational>> {
    prop::collection::vec(small_rat(), 1..=max_len).prop_map(|c| UniPoly::new(c, rat(0)))
}

fn qmatrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-4i64..=4, rows * cols).prop_map(move |v| {
        QMatrix::from_rows(v.chunks(cols).map(|r| r.iter().map(|&x| rat(x)).collect()).collect(), &rat(0))
    })
}

fn series(len: usize) -> impl Strategy<Value = TruncSeries<Rational>> {
    prop::collection::vec(small_rat(), len).prop_map(move |c| TruncSeries::from_power_coeffs(c, len as i64, &rat(0)))
}

/// Unimodular 3×3 matrices as products of elementary moves.
fn unimodular() -> impl Strategy<Value = [[Rational; 3]; 3]> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 1..6).prop_map(|moves| {
        let mut m: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for (i, j, c) in moves {
            if i != j {
                for k in 0..3 {
                    m[i][k] += c * m[j][k];
                }
            }
        }
        m.map(|r| r.map(rat))
    })
}

fn quartic() -> impl Strategy<Value = PlaneQuartic> {
    prop::collection::vec(-3i64..=3, 15)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| PlaneQuartic::from_i64(c.try_into().unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_is_multiplicative(a in qpoly_strategy(4), b in qpoly_strategy(4), c in qpoly_strategy(4)) {
        prop_assume!(!a.is_zero_elem() && !b.is_zero_elem() && !c.is_zero_elem());
        let lhs = a.mul(&b).resultant(&c).unwrap();
        let rhs = a.resultant(&c).unwrap().mul(&b.resultant(&c).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_with_remainder(a in qpoly_strategy(7), d in qpoly_strategy(4)) {
        prop_assume!(!d.is_zero_elem());
        let (q, r) = a.div_rem(&d).unwrap();
        prop_assert_eq!(q.mul(&d).add(&r), a);
        prop_assert!(r.degree().map_or(true, |e| e < d.degree().unwrap()));
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in qmatrix(3, 5)) {
        let k = m.kernel_basis();
        prop_assert_eq!(k.len() + m.rank_bareiss(), 5);
        for v in k {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn kronecker_mixed_product(a in qmatrix(2, 2), b in qmatrix(2, 2), c in qmatrix(3, 3), d in qmatrix(3, 3)) {
        prop_assert_eq!(a.kron(&c).mul(&b.kron(&d)), a.mul(&b).kron(&c.mul(&d)));
    }

    #[test]
    fn series_division_inverts_multiplication(a in series(12), mut b in series(12)) {
        b = b.add(&b.one_like());
        let b0 = b.coeff(0).unwrap();
        prop_assume!(b0 != rat(0));
        let q = a.mul(&b).div(&b).unwrap();
        prop_assert!(q.sub(&a).is_zero_to_precision());
    }

    #[test]
    fn rational_reconstruction_round_trip(n in -10_000i64..=10_000, d in 1i64..=10_000) {
        let q = ratio(n, d);
        let m = Integer::from(1_000_000_007u64) * Integer::from(998_244_353u64);
        let di = q.denom().clone();
        let a = (q.numer() * twist53_core::arith::int::mod_inverse(&di, &m).unwrap()) % &m;
        let a = if a < Integer::from(0) { a + &m } else { a };
        prop_assert_eq!(rational_reconstruct(&a, &m, &Integer::from(20_000)), Some(q));
    }

    #[test]
    fn jets_follow_the_chain_rule(a in small_rat(), b in small_rat(), p in qpoly_strategy(5)) {
        // g(a, b) = p(a·b + a): ∂a = p'(ab + a)(b + 1), ∂b = p'(ab + a)·a.
        let ja = Jet::variable(a.clone(), 0);
        let jb = Jet::variable(b.clone(), 1);
        let inner = ja.mul(&jb).add(&ja);
        let g = p.eval_with(&inner, |c| inner.from_rational_like(c).unwrap());
        let dp = p.derivative().eval(&(&a * &b + &a));
        prop_assert_eq!(g.v, p.eval(&(&a * &b + &a)));
        prop_assert_eq!(&g.d[0], &(&dp * (&b + rat(1))));
        prop_assert_eq!(&g.d[1], &(&dp * &a));
    }

    #[test]
    fn norm_is_multiplicative(a in small_rat(), b in small_rat(), c in small_rat(), d in small_rat()) {
        let x = QuadraticNumber::new(a, b, Integer::from(11));
        let y = QuadraticNumber::new(c, d, Integer::from(11));
        prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
    }

    #[test]
    fn projective_points_are_normalized(a in -30i64..=30, b in -30i64..=30, c in -30i64..=30, s in prop::sample::select(vec![-6i64, -1, 2, 5])) {
        prop_assume!((a, b, c) != (0, 0, 0));
        let p = ProjPoint::from_i64([a, b, c]).unwrap();
        prop_assert_eq!(&ProjPoint::from_i64([s * a, s * b, s * c]).unwrap(), &p);
        let g = p.coords().iter().fold(Integer::from(0), |acc, x| num_integer::Integer::gcd(&acc, x));
        prop_assert_eq!(g, Integer::from(1));
        let first = p.coords().iter().find(|x| **x != Integer::from(0)).unwrap();
        prop_assert!(*first > Integer::from(0));
    }

    #[test]
    fn substitution_round_trip(f in quartic(), m in unimodular()) {
        let mq = QMatrix::from_rows(m.iter().map(|r| r.to_vec()).collect(), &rat(0));
        let inv = mq.inverse().unwrap();
        let minv: [[Rational; 3]; 3] = core::array::from_fn(|i| core::array::from_fn(|j| inv.get(i, j).clone()));
        prop_assert_eq!(f.substitute(&m).unwrap().substitute(&minv).unwrap(), f);
    }

    #[test]
    fn substituted_points_follow_the_matrix(f in quartic(), m in unimodular()) {
        let g = f.substitute(&m).unwrap();
        for p in search_points(&g, 3).unwrap() {
            let c = p.coords();
            let q: [Integer; 3] = core::array::from_fn(|j| (0..3).map(|k| &c[k] * m[k][j].to_integer()).sum());
            prop_assert_eq!(f.eval(&q), Integer::from(0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn j_pairs_satisfy_vieta_and_invert(t in small_rat()) {
        let md = ModularData::builtin();
        let Ok(pair) = j_from_t(&md, &t, None) else { return Ok(()) };
        prop_assert_eq!(pair.j_conj.clone(), pair.j.conj());
        let (a, b3) = (md.jt_a().eval(&t), md.jt_b().eval(&t).pow(3));
        prop_assert_eq!(pair.j.trace(), a);
        prop_assert_eq!(pair.j.norm(), b3);
        prop_assert!(t_from_j(&md, &pair.j).unwrap().contains(&t));
    }
}
