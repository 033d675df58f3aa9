//! The covering chain `X₀(45) → X₀(15) → X₀(5) → X⁺(5)` and the `j`–`t`
//! relation.
//!
//! Two evaluations are provided. [`uv_from_xy`] and [`downstairs_chain`]
//! follow the displayed rational functions over any exact ring with
//! inverses. [`projective_chain`] works from homogeneous coordinates
//! `(ℓ₁ : ℓ₂ : ℓ₃)` with `x = ℓ₁/ℓ₃`, `y = ℓ₂/ℓ₃` and needs no division: every
//! intermediate quantity is kept as a weighted pair, so `t` comes out as a
//! quotient `t_num / t_den` of two ring elements.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::constants::{ModularData, Poly2};
use crate::arith::int::{rational_sqrt, squarefree_part_rational};
use crate::arith::poly::rational_roots;
use crate::arith::{rat, Integer, Rational, Ring, UniPoly};
use crate::numberfield::QuadraticNumber;
use crate::{Error, Result};

/// `(U, V)` from `(x, y)`. Fails at stage `U` when `x` is not invertible.
pub fn uv_from_xy<R: Ring>(md: &ModularData, x: &R, y: &R) -> Result<(R, R)> {
    let xinv = x.try_inv().ok_or(Error::ZeroDenominator("U"))?;
    let k = |name: &str| x.from_rational_like(&md.c(name)).expect("rational constant");
    let lin = x.add(&k("U.y").mul(y));
    let num_u = lin.sub(&k("U.shift")).mul(&lin.add(&k("U.shift")));
    let u_big = num_u.mul(&xinv.square()).mul(&k("U.den").try_inv().ok_or(Error::ZeroDenominator("U"))?);
    let inner = k("V.1")
        .add(&k("V.x^2").mul(&x.square()))
        .add(&k("V.x*y").mul(&x.mul(y)))
        .add(&k("V.y^2").mul(&y.square()));
    let v_big = k("V.scale")
        .mul(&inner)
        .mul(&xinv.pow(3))
        .mul(&k("V.den").try_inv().ok_or(Error::ZeroDenominator("V"))?);
    Ok((u_big, v_big))
}

/// `u = Q(U, V) / 2D²` and `v = R(U, V) / 2D³`. Fails at stage `u` when
/// `D(U, V)` is not invertible.
pub fn x015_coordinates<R: Ring>(md: &ModularData, u_big: &R, v_big: &R) -> Result<(R, R)> {
    let k = |name: &str| u_big.from_rational_like(&md.c(name)).expect("rational constant");
    let d = md.d_poly().eval(u_big, v_big);
    let dinv = d.try_inv().ok_or(Error::ZeroDenominator("u"))?;
    let uden = k("u.den").try_inv().ok_or(Error::ZeroDenominator("u"))?;
    let vden = k("v.den").try_inv().ok_or(Error::ZeroDenominator("u"))?;
    let u = md.q_poly().eval(u_big, v_big).mul(&uden).mul(&dinv.square());
    let v = md.r_poly().eval(u_big, v_big).mul(&vden).mul(&dinv.pow(3));
    Ok((u, v))
}

/// Values of the functions `u, v` on `X₀(15)`, `G(3τ)` and `t(3τ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Downstairs<R> {
    pub u: R,
    pub v: R,
    pub g3: R,
    pub t: R,
}

/// `u, v` from `(U, V)`, then `G(3τ)` and `t` from `(u, v)`.
///
/// Stages: `u` (the shared denominator `D(U, V)`), `G` (`u + 1`) and `t`
/// (the denominator of `t`).
pub fn downstairs_chain<R: Ring>(md: &ModularData, u_big: &R, v_big: &R) -> Result<Downstairs<R>> {
    let (u, v) = x015_coordinates(md, u_big, v_big)?;
    let gden = md.g3_den().eval(&u, &v).try_inv().ok_or(Error::ZeroDenominator("G"))?;
    let g3 = md.g3_num().eval(&u, &v).mul(&gden);
    let tden = md.t_den().eval(&u, &v).try_inv().ok_or(Error::ZeroDenominator("t"))?;
    let t = md.t_num().eval(&u, &v).mul(&tden);
    Ok(Downstairs { u, v, g3, t })
}

/// Division-free chain data. With `S₁`, `S₂` the weight-one scalings,
/// `U = a_big / S₁²`, `V = c_big / S₁³`, `u = a_small / S₂²`,
/// `v = c_small / S₂³`, `G(3τ) = g3_num / g3_den` and `t = t_num / t_den`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedChain<R> {
    pub s1: R,
    pub a_big: R,
    pub c_big: R,
    pub s2: R,
    pub a_small: R,
    pub c_small: R,
    pub g3_num: R,
    pub g3_den: R,
    pub t_num: R,
    pub t_den: R,
}

fn require_nonzero<R: Ring>(x: &R, stage: &'static str) -> Result<()> {
    if x.is_zero_elem() {
        Err(Error::ZeroDenominator(stage))
    } else {
        Ok(())
    }
}

/// The chain on homogeneous coordinates `ℓ = (ℓ₁, ℓ₂, ℓ₃)`. A vanishing
/// denominator raises `ZeroDenominator` with the same stage names as the
/// affine chain; `ℓ₃ = 0` is allowed (then `x` and `y` are infinite but `U`
/// and `V` are still defined).
///
/// The ring must be an integral domain for the stage tests to be exact.
pub fn projective_chain<R: Ring>(md: &ModularData, l: &[R; 3]) -> Result<WeightedChain<R>> {
    let k = |name: &str| l[0].from_rational_like(&md.c(name)).expect("rational constant");
    require_nonzero(&l[0], "U")?;
    let (ud4, vd4) = (k("U.den"), k("V.den"));
    require_nonzero(&ud4, "U")?;
    require_nonzero(&vd4, "V")?;
    let lin = l[0].add(&k("U.y").mul(&l[1]));
    let shift = k("U.shift").mul(&l[2]);
    let nu = lin.sub(&shift).mul(&lin.add(&shift));
    let inner = k("V.1")
        .mul(&l[2].square())
        .add(&k("V.x^2").mul(&l[0].square()))
        .add(&k("V.x*y").mul(&l[0].mul(&l[1])))
        .add(&k("V.y^2").mul(&l[1].square()));
    let nv = k("V.scale").mul(&l[2]).mul(&inner);

    let s1 = ud4.mul(&vd4).mul(&l[0]);
    let a_big = nu.mul(&ud4).mul(&vd4.square());
    let c_big = nv.mul(&ud4.pow(3)).mul(&vd4.square());

    let dw = weighted(&md.d_poly(), &a_big, &c_big, &s1, 4);
    require_nonzero(&dw, "u")?;
    let (du, dv) = (k("u.den"), k("v.den"));
    require_nonzero(&du, "u")?;
    require_nonzero(&dv, "u")?;
    let s2 = du.mul(&dv).mul(&dw);
    let a_small = weighted(&md.q_poly(), &a_big, &c_big, &s1, 8).mul(&du).mul(&dv.square());
    let c_small = weighted(&md.r_poly(), &a_big, &c_big, &s1, 12).mul(&du.pow(3)).mul(&dv.square());

    let s2_cubed = s2.pow(3);
    let hw = weighted(&md.g3_den(), &a_small, &c_small, &s2, 2);
    require_nonzero(&hw, "G")?;
    let g3_num = weighted(&md.g3_num(), &a_small, &c_small, &s2, 5);
    let g3_den = hw.mul(&s2_cubed);

    let mw = weighted(&md.t_den(), &a_small, &c_small, &s2, 5);
    require_nonzero(&mw, "t")?;
    let t_num = weighted(&md.t_num(), &a_small, &c_small, &s2, 8);
    let t_den = mw.mul(&s2_cubed);
    Ok(WeightedChain { s1, a_big, c_big, s2, a_small, c_small, g3_num, g3_den, t_num, t_den })
}

fn weighted<R: Ring>(p: &Poly2, a: &R, c: &R, s: &R, w: u32) -> R {
    p.eval_weighted(a, c, s, w)
}

/// The two roots of the `j`–`t` relation at a rational `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct JPair {
    pub t: Rational,
    /// The root with nonnegative `√d` coefficient.
    pub j: QuadraticNumber,
    pub j_conj: QuadraticNumber,
}

impl JPair {
    pub fn contains(&self, j: &QuadraticNumber) -> bool {
        self.j == *j || self.j_conj == *j
    }
}

/// Coefficient of `−j` in the relation, `A(t)`, and its constant term
/// `B(t)³`.
pub fn jt_coefficients(md: &ModularData, t: &Rational) -> (Rational, Rational) {
    let a = md.jt_a().eval(t);
    let b = md.jt_b().eval(t);
    (a, &b * &b * &b)
}

/// `A(t)² − 4B(t)³`, the discriminant of the relation in `j`.
pub fn jt_discriminant(md: &ModularData) -> UniPoly<Rational> {
    let a = md.jt_a();
    let b = md.jt_b();
    a.mul(&a).sub(&b.pow(3).scale(&rat(4)))
}

/// `j² − A(t) j + B(t)³ = 0` solved in `Q(√Δ)`, `Δ = A² − 4B³`.
///
/// The radicand is read off the odd-multiplicity part of `Δ` as a
/// polynomial in `t`, so only a small value is ever trial-divided.
/// `radicand_hint`, when given, is tried first.
pub fn j_from_t(md: &ModularData, t: &Rational, radicand_hint: Option<&Integer>) -> Result<JPair> {
    let (a, b3) = jt_coefficients(md, t);
    let disc = &a * &a - &b3 * rat(4);
    let half = rat(1) / rat(2);
    let (m, d) = sqrt_split(&disc, radicand_hint, || odd_part_value(&jt_discriminant(md), t))?;
    let j = QuadraticNumber::new(&a * &half, &m * &half, d.clone());
    let j_conj = QuadraticNumber::new(&a * &half, -(&m * &half), d);
    Ok(JPair { t: t.clone(), j, j_conj })
}

/// `c · ∏ aᵢ(t)` over the odd-multiplicity squarefree factors `aᵢ` of `p`;
/// `p(t)` equals this value times a rational square.
fn odd_part_value(p: &UniPoly<Rational>, t: &Rational) -> Result<Rational> {
    let parts = p.squarefree_decomposition()?;
    let mut v = p.lc();
    for (i, a) in parts.iter().enumerate() {
        if i % 2 == 0 {
            v *= a.eval(t);
        }
    }
    Ok(v)
}

/// `(m, d)` with `q = m²·d`, `m ≥ 0` and `d` squarefree.
fn sqrt_split(
    q: &Rational,
    hint: Option<&Integer>,
    reduced: impl FnOnce() -> Result<Rational>,
) -> Result<(Rational, Integer)> {
    if Zero::is_zero(q) {
        return Ok((Rational::zero(), Integer::one()));
    }
    if let Some(r) = rational_sqrt(q) {
        return Ok((r, Integer::one()));
    }
    let over = |d: &Integer| rational_sqrt(&(q / Rational::from_integer(d.clone())));
    if let Some(h) = hint.filter(|h| !Zero::is_zero(*h)) {
        if let Some(r) = over(h) {
            return Ok((r, h.clone()));
        }
    }
    let small = reduced()?;
    let d = squarefree_part_rational(if Zero::is_zero(&small) { q } else { &small })?;
    match over(&d) {
        Some(r) => Ok((r, d)),
        None => {
            let d = squarefree_part_rational(q)?;
            Ok((over(&d).expect("q/d is a square"), d))
        }
    }
}

/// Rational `t` at which `j` is a root of the relation.
///
/// For irrational `j` both `A(t) = Tr j` and `B(t)³ = N j` must hold; for
/// rational `j` the relation itself is solved in `t`.
pub fn t_from_j(md: &ModularData, j: &QuadraticNumber) -> Result<Vec<Rational>> {
    let a = md.jt_a();
    let b = md.jt_b();
    let b3 = b.pow(3);
    let candidates = if j.is_rational() {
        let jc = UniPoly::constant(j.a.clone());
        let rel = b3.sub(&a.mul(&jc)).add(&jc.mul(&jc));
        rational_roots(&rel)?
    } else {
        let p = a.sub(&UniPoly::constant(j.trace()));
        rational_roots(&p)?.into_iter().filter(|t| b3.eval(t) == j.norm()).collect()
    };
    Ok(candidates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn uv_at_rational_points() {
        let md = ModularData::builtin();
        let (u, v) = uv_from_xy(&md, &rat(1), &rat(0)).unwrap();
        assert_eq!((u.clone(), v.clone()), (rat(-2), rat(9)));
        assert_eq!(uv_from_xy(&md, &rat(0), &ratio(1, 3)), Err(Error::ZeroDenominator("U")));
        assert_eq!(downstairs_chain(&md, &u, &v), Err(Error::ZeroDenominator("u")));
    }

    #[test]
    fn projective_matches_affine() {
        let md = ModularData::builtin();
        for (x, y) in [(ratio(2, 3), ratio(-5, 7)), (rat(3), ratio(1, 9)), (ratio(-7, 2), rat(2))] {
            let (ub, vb) = uv_from_xy(&md, &x, &y).unwrap();
            let aff = downstairs_chain(&md, &ub, &vb).unwrap();
            let w = projective_chain(&md, &[x.clone(), y.clone(), rat(1)]).unwrap();
            assert_eq!(&w.a_big / w.s1.pow(2), ub);
            assert_eq!(&w.c_big / w.s1.pow(3), vb);
            assert_eq!(&w.a_small / w.s2.pow(2), aff.u);
            assert_eq!(&w.c_small / w.s2.pow(3), aff.v);
            assert_eq!(&w.g3_num / &w.g3_den, aff.g3);
            assert_eq!(&w.t_num / &w.t_den, aff.t);
            // Homogeneous rescaling leaves every quotient unchanged.
            let l2 = [&x * rat(-6), &y * rat(-6), rat(-6)];
            let w2 = projective_chain(&md, &l2).unwrap();
            assert_eq!(&w2.t_num / &w2.t_den, aff.t);
        }
    }

    #[test]
    fn j_pairs_satisfy_vieta() {
        let md = ModularData::builtin();
        for t in [rat(0), ratio(-17, 5), rat(100)] {
            let p = j_from_t(&md, &t, None).unwrap();
            let (a, b3) = jt_coefficients(&md, &t);
            let sum = p.j.add(&p.j_conj);
            let prod = p.j.mul(&p.j_conj);
            assert!(sum.is_rational() && sum.a == a);
            assert!(prod.is_rational() && prod.a == b3);
        }
    }

    #[test]
    fn j_round_trip() {
        let md = ModularData::builtin();
        let t = ratio(-41, 3);
        let p = j_from_t(&md, &t, None).unwrap();
        assert_eq!(p.j.d, Integer::from(41i64 * 41 - 4500));
        assert!(t_from_j(&md, &p.j).unwrap().contains(&t));
        assert!(t_from_j(&md, &p.j_conj).unwrap().contains(&t));
    }
}
