//! Eta quotients `q^e ∏_d ∏_{n≥1} (1 − q^{dn})^{r_d}` and the modular
//! invariant `j`, expanded exactly from the pentagonal-number series.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{rat, Integer, Rational, Ring, TruncSeries};
use crate::{Error, Result};

pub type QSeries = TruncSeries<Rational>;

/// `∏ η(dτ)^{r_d}` as a list of `(d, r_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    pub factors: Vec<(u32, i32)>,
}

impl EtaQuotientSpec {
    pub fn new(factors: &[(u32, i32)]) -> Self {
        EtaQuotientSpec { factors: factors.to_vec() }
    }

    /// `(η(τ)/η(5τ))⁶`.
    pub fn g() -> Self {
        Self::new(&[(1, 6), (5, -6)])
    }

    /// `η(3τ) η(5τ)⁵ / (η(τ) η(15τ)⁵)`.
    pub fn h() -> Self {
        Self::new(&[(3, 1), (5, 5), (1, -1), (15, -5)])
    }

    /// `e = Σ d·r_d / 24`, which must be an integer.
    pub fn leading_exponent(&self) -> Result<i64> {
        let s: i64 = self.factors.iter().map(|&(d, r)| d as i64 * r as i64).sum();
        if s % 24 != 0 {
            return Err(Error::InvalidArgument("eta quotient has a non-integral leading exponent".into()));
        }
        Ok(s / 24)
    }
}

/// `∏_{n≥1} (1 − qⁿ)` modulo `q^prec`, by Euler's pentagonal number theorem.
pub fn euler_product(prec: usize) -> Vec<Integer> {
    let mut c = vec![Integer::zero(); prec];
    for k in 0i64.. {
        let mut any = false;
        for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
            if (g as usize) < prec {
                c[g as usize] = if k % 2 == 0 { Integer::from(1) } else { Integer::from(-1) };
                any = true;
            }
            if k == 0 {
                break;
            }
        }
        if !any {
            break;
        }
    }
    c
}

fn power(s: &QSeries, mut e: u32) -> QSeries {
    let mut base = s.clone();
    let mut acc = s.one_like().truncate(s.precision());
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    acc
}

/// The eta quotient modulo `q^prec`.
pub fn eta_quotient_series(spec: &EtaQuotientSpec, prec: i64) -> Result<QSeries> {
    let e = spec.leading_exponent()?;
    let body_prec = prec - e;
    let mut acc = QSeries::from_power_coeffs(vec![rat(1)], body_prec.max(0), &rat(0));
    for &(d, r) in &spec.factors {
        let inner = (body_prec.max(0) as usize).div_ceil(d as usize);
        let base = QSeries::from_power_coeffs(
            euler_product(inner).into_iter().map(Rational::from_integer).collect(),
            inner as i64,
            &rat(0),
        );
        let mut f = power(&base, r.unsigned_abs());
        if r < 0 {
            f = f.inverse()?;
        }
        acc = acc.mul(&f.compose_power(d).truncate(body_prec));
    }
    Ok(acc.shift(e))
}

/// `Δ = q ∏ (1 − qⁿ)²⁴` modulo `q^prec`.
pub fn delta_series(prec: i64) -> QSeries {
    eta_quotient_series(&EtaQuotientSpec::new(&[(1, 24)]), prec).expect("integral exponent")
}

/// `E₄ = 1 + 240 Σ σ₃(n) qⁿ` modulo `q^prec`.
pub fn e4_series(prec: i64) -> QSeries {
    let n = prec.max(0) as usize;
    let mut c = vec![rat(0); n];
    if n > 0 {
        c[0] = rat(1);
    }
    for d in 1..n {
        let d3 = rat((d * d * d) as i64) * rat(240);
        for m in (d..n).step_by(d) {
            c[m] += &d3;
        }
    }
    QSeries::from_power_coeffs(c, prec, &rat(0))
}

/// `j = E₄³ / Δ` modulo `q^prec`.
pub fn j_series(prec: i64) -> QSeries {
    let e4 = e4_series(prec + 1);
    let delta = delta_series(prec + 2);
    e4.mul(&e4).mul(&e4).div(&delta).expect("Δ has unit leading coefficient").truncate(prec)
}
