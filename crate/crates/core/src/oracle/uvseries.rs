//! The coordinates `u, v` of `X₀(15)` as q-series, recovered from `f₁` and
//! the Weierstrass equation alone.
//!
//! With `ω = f₁ dq/q` the invariant differential, `θu = −f₁·(2v + a₁u + a₃)`
//! (`θ = q d/dq`), so `(θu)² = f₁²·(4u³ + b₂u² + 2b₄u + b₆)`. This fixes
//! `u = q⁻² + …` coefficient by coefficient, then `v` follows linearly.

use alloc::vec;

use super::eta::QSeries;
use super::newform::EllipticCurveW;
use crate::arith::{rat, Rational, Ring};
use crate::{Error, Result};

fn cubic_rhs(u: &QSeries, b: &[Rational; 3]) -> QSeries {
    let u2 = u.mul(u);
    u2.mul(u)
        .scale(&rat(4))
        .add(&u2.scale(&b[0]))
        .add(&u.scale(&(&b[1] * rat(2))))
        .add(&u.one_like().scale(&b[2]))
}

/// `(u, v)` modulo `q^prec`. `f1` must be known modulo `q^(prec + 4)`.
pub fn uv_series(e: &EllipticCurveW, f1: &QSeries, prec: i64) -> Result<(QSeries, QSeries)> {
    if prec < 5 {
        return Err(Error::InvalidArgument("u, v precision must be at least 5".into()));
    }
    if f1.precision() < prec + 4 {
        return Err(Error::InvalidArgument("f1 is not known to enough precision".into()));
    }
    let [b2, b4, b6, _] = e.b_invariants();
    let b = [b2, b4, b6].map(Rational::from_integer);
    let f1sq = f1.mul(f1);
    // u = q⁻² Σ cₙ qⁿ with c₀ = 1; cₙ enters the q^(n−4) coefficient of the
    // residual linearly with factor −4n − 4.
    let len = (prec + 3) as usize;
    let mut c = vec![rat(0); len];
    c[0] = rat(1);
    for n in 1..len {
        let u = QSeries::exact(-2, c[..n].to_vec(), &rat(0));
        let tu = u.theta();
        let res = tu.mul(&tu).sub(&f1sq.mul(&cubic_rhs(&u, &b)));
        let k = n as i64 - 4;
        let r = res.coeff(k).ok_or_else(|| Error::InvalidArgument("u recursion lost precision".into()))?;
        c[n] = r / rat(4 * n as i64 + 4);
    }
    let u = QSeries::new(-2, c, prec + 1, &rat(0));
    let a1 = Rational::from_integer(e.a1.clone());
    let a3 = Rational::from_integer(e.a3.clone());
    let v = u
        .theta()
        .div(f1)?
        .neg()
        .sub(&u.scale(&a1))
        .sub(&u.one_like().scale(&a3))
        .scale(&(rat(1) / rat(2)))
        .truncate(prec);
    Ok((u.truncate(prec), v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::ModularData;
    use crate::oracle::newform::{newform_series, Newform};

    #[test]
    fn displayed_prefixes_and_curve() {
        let md = ModularData::builtin();
        let e = EllipticCurveW::x015(&md).unwrap();
        let f1 = newform_series(&md, Newform::F1, 40).unwrap().to_series();
        let (u, v) = uv_series(&e, &f1, 30).unwrap();
        let r = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<alloc::vec::Vec<_>>();
        assert_eq!(u.coeff_range(-2, 3).unwrap(), r(&[1, 1, 1, 2, 4]));
        assert_eq!(v.coeff_range(-3, 3).unwrap(), r(&[1, 1, 2, 3, 2, 5]));
        let lhs = v.mul(&v).add(&u.mul(&v)).add(&v);
        let rhs = u.mul(&u).mul(&u).add(&u.mul(&u)).sub(&u.scale(&rat(10))).sub(&u.one_like().scale(&rat(10)));
        let res = lhs.sub(&rhs);
        assert!(res.is_zero_to_precision());
        assert!(res.precision() >= 20);
    }
}
