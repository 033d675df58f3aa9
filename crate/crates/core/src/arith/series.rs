//! Truncated Laurent series `q^v (c₀ + c₁q + …) + O(q^N)` over an exact ring,
//! with explicit precision tracking.

use alloc::vec;
use alloc::vec::Vec;

use super::ring::{Integer, Rational, Ring};
use crate::{Error, Result};

/// Precision value marking a series known exactly (a Laurent polynomial).
pub const EXACT: i64 = i64::MAX / 4;

/// Coefficients are stored from the valuation upwards; positions between the
/// last stored coefficient and the precision are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<R: Ring> {
    val: i64,
    coeffs: Vec<R>,
    prec: i64,
    zero: R,
}

impl<R: Ring> TruncSeries<R> {
    /// `q^val · Σ coeffs[i] q^i + O(q^prec)`; coefficients at or beyond
    /// `prec` are discarded.
    pub fn new(val: i64, mut coeffs: Vec<R>, prec: i64, zero: &R) -> Self {
        let keep = (prec - val).max(0) as usize;
        coeffs.truncate(keep);
        let mut s = TruncSeries { val, coeffs, prec, zero: zero.zero_like() };
        s.normalize();
        s
    }

    /// Exact Laurent polynomial.
    pub fn exact(val: i64, coeffs: Vec<R>, zero: &R) -> Self {
        Self::new(val, coeffs, EXACT, zero)
    }

    pub fn zero(prec: i64, zero: &R) -> Self {
        Self::new(prec, Vec::new(), prec, zero)
    }

    /// Dense series from coefficients `c[n]` of `q^n`, `n = 0, 1, …`, known
    /// modulo `q^prec`.
    pub fn from_power_coeffs(coeffs: Vec<R>, prec: i64, zero: &R) -> Self {
        Self::new(0, coeffs, prec, zero)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero_elem()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.val = self.prec;
        }
    }

    /// Valuation of the first nonzero coefficient (equals the precision for
    /// a series that vanishes to its precision).
    pub fn valuation(&self) -> i64 {
        self.val
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec >= EXACT
    }

    pub fn zero_elem(&self) -> &R {
        &self.zero
    }

    /// Coefficient of `q^n`; `None` when `n` is at or beyond the precision.
    pub fn coeff(&self, n: i64) -> Option<R> {
        if n >= self.prec {
            return None;
        }
        if n < self.val {
            return Some(self.zero.clone());
        }
        Some(self.coeffs.get((n - self.val) as usize).cloned().unwrap_or_else(|| self.zero.clone()))
    }

    /// Coefficients of `q^from, …, q^(to−1)`, all below the precision.
    pub fn coeff_range(&self, from: i64, to: i64) -> Option<Vec<R>> {
        (from..to).map(|n| self.coeff(n)).collect()
    }

    /// True when every known coefficient is zero.
    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Forgets coefficients at and beyond `prec`.
    pub fn truncate(&self, prec: i64) -> Self {
        let p = prec.min(self.prec);
        Self::new(self.val, self.coeffs.clone(), p, &self.zero)
    }

    fn aligned(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let prec = self.prec.min(rhs.prec);
        let val = self.val.min(rhs.val).min(prec);
        let top = |s: &Self| if s.coeffs.is_empty() { i64::MIN } else { s.val + s.coeffs.len() as i64 };
        let end = top(self).max(top(rhs)).min(prec).max(val);
        let coeffs = (val..end)
            .map(|n| {
                let a = self.coeff(n).unwrap_or_else(|| self.zero.clone());
                let b = rhs.coeff(n).unwrap_or_else(|| self.zero.clone());
                f(&a, &b)
            })
            .collect();
        Self::new(val, coeffs, prec, &self.zero)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        let prec = if self.is_exact() { EXACT } else { self.prec + k };
        Self::new(self.val + k, self.coeffs.clone(), prec, &self.zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.val, self.coeffs.iter().map(|x| x.mul(c)).collect(), self.prec, &self.zero)
    }

    /// Substitution `q ↦ q^m` for `m ≥ 1`.
    pub fn compose_power(&self, m: u32) -> Self {
        assert!(m >= 1);
        let m64 = m as i64;
        let mut coeffs = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                coeffs.extend(core::iter::repeat_n(self.zero.clone(), (m - 1) as usize));
            }
            coeffs.push(c.clone());
        }
        let prec = if self.is_exact() { EXACT } else { self.prec * m64 };
        Self::new(self.val * m64, coeffs, prec, &self.zero)
    }

    /// The derivation `q d/dq`.
    pub fn theta(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul(&c.from_i64_like(self.val + i as i64)))
            .collect();
        Self::new(self.val, coeffs, self.prec, &self.zero)
    }

    /// Coefficientwise map into another ring.
    pub fn map<S: Ring>(&self, zero: &S, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries::new(self.val, self.coeffs.iter().map(f).collect(), self.prec, zero)
    }

    /// Coefficientwise map that also sees the exponent.
    pub fn map_indexed<S: Ring>(&self, zero: &S, f: impl Fn(i64, &R) -> S) -> TruncSeries<S> {
        let coeffs = self.coeffs.iter().enumerate().map(|(i, c)| f(self.val + i as i64, c)).collect();
        TruncSeries::new(self.val, coeffs, self.prec, zero)
    }

    /// Multiplicative inverse; the leading coefficient must be a unit and an
    /// inexact series must be known beyond its valuation.
    pub fn inverse(&self) -> Result<Self> {
        let lead = self.coeffs.first().ok_or(Error::DivisionByZero)?;
        let inv0 = lead.try_inv().ok_or(Error::DivisionByZero)?;
        if self.is_exact() {
            if self.coeffs.len() == 1 {
                return Ok(Self::exact(-self.val, vec![inv0], &self.zero));
            }
            return Err(Error::InvalidArgument("inverse of an exact series needs a precision".into()));
        }
        let rel = (self.prec - self.val) as usize;
        let mut out: Vec<R> = Vec::with_capacity(rel);
        out.push(inv0.clone());
        for n in 1..rel {
            let mut s = self.zero.clone();
            for k in 1..=n.min(self.coeffs.len() - 1) {
                s = s.add(&self.coeffs[k].mul(&out[n - k]));
            }
            out.push(s.neg().mul(&inv0));
        }
        Ok(Self::new(-self.val, out, self.prec - 2 * self.val, &self.zero))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_series(&rhs.inverse()?))
    }

    fn mul_series(&self, rhs: &Self) -> Self {
        let val = self.val + rhs.val;
        let prec = if self.is_exact() && rhs.is_exact() {
            EXACT
        } else {
            (self.prec.saturating_add(rhs.val)).min(rhs.prec.saturating_add(self.val))
        };
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero(prec, &self.zero);
        }
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let len = full.min((prec - val).max(0) as usize);
        let mut out = vec![self.zero.clone(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(val, out, prec, &self.zero)
    }
}

impl<R: Ring> Ring for TruncSeries<R> {
    fn zero_like(&self) -> Self {
        Self::zero(EXACT, &self.zero)
    }
    fn one_like(&self) -> Self {
        Self::exact(0, vec![self.zero.one_like()], &self.zero)
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.aligned(rhs, |a, b| a.add(b))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.aligned(rhs, |a, b| a.sub(b))
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_series(rhs)
    }
    fn neg(&self) -> Self {
        Self::new(self.val, self.coeffs.iter().map(Ring::neg).collect(), self.prec, &self.zero)
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        Self::exact(0, vec![self.zero.from_int_like(n)], &self.zero)
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(Self::exact(0, vec![self.zero.from_rational_like(q)?], &self.zero))
    }
    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::{rat, ratio};

    fn s(val: i64, c: &[i64], prec: i64) -> TruncSeries<Rational> {
        TruncSeries::new(val, c.iter().map(|&x| rat(x)).collect(), prec, &rat(0))
    }

    #[test]
    fn laurent_product_precision() {
        // (1/q + O(q^9)) · (q + O(q^10)) = 1 + O(q^9)
        let a = s(-1, &[1], 9);
        let b = s(1, &[1], 10);
        let p = a.mul(&b);
        assert_eq!(p.precision(), 9);
        assert_eq!(p.coeff(0), Some(rat(1)));
        assert_eq!(p.coeff(5), Some(rat(0)));
        assert_eq!(p.coeff(9), None);
    }

    #[test]
    fn long_division() {
        // (q − q² − q³ − q⁴ + q⁵) / (q + q² − q⁴ − q⁵) = 1 − 2q + q² − q³ + …
        let a = s(1, &[1, -1, -1, -1, 1], 6);
        let b = s(1, &[1, 1, 0, -1, -1], 6);
        let c = a.div(&b).unwrap();
        assert_eq!(c.coeff_range(0, 4).unwrap(), vec![rat(1), rat(-2), rat(1), rat(-1)]);
        assert_eq!(c.precision(), 5);
    }

    #[test]
    fn exact_zero_plus_constant() {
        let z = s(0, &[], EXACT).zero_like();
        let c = s(0, &[5], EXACT);
        let sum = z.add(&c);
        assert!(sum.is_exact());
        assert_eq!(sum.coeff(0), Some(rat(5)));
    }

    #[test]
    fn compose_and_theta() {
        let a = s(-1, &[1, 2, 3], 5);
        let c = a.compose_power(3);
        assert_eq!(c.valuation(), -3);
        assert_eq!(c.coeff(0), Some(rat(2)));
        assert_eq!(c.precision(), 15);
        assert_eq!(a.theta().coeff(-1), Some(rat(-1)));
        let h = s(0, &[2], 4).scale(&ratio(1, 2));
        assert_eq!(h.coeff(0), Some(rat(1)));
    }
}
