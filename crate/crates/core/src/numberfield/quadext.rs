//! The quadratic extension `F(√−3)` of an exact field `F`, with elements
//! `a + b√−3`.

use alloc::vec::Vec;

use crate::arith::{Integer, QCoords, Rational, Ring};

/// `a + b·√−3`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadExt<F: Ring> {
    pub a: F,
    pub b: F,
}

impl<F: Ring> QuadExt<F> {
    pub fn new(a: F, b: F) -> Self {
        QuadExt { a, b }
    }

    /// Embeds `a ∈ F`.
    pub fn from_base(a: F) -> Self {
        let b = a.zero_like();
        QuadExt { a, b }
    }

    /// `√−3` over the field of `template`.
    pub fn sqrt_m3(template: &F) -> Self {
        QuadExt { a: template.zero_like(), b: template.one_like() }
    }

    /// Conjugation `ν: √−3 ↦ −√−3`.
    pub fn conj_nu(&self) -> Self {
        QuadExt { a: self.a.clone(), b: self.b.neg() }
    }

    /// `a² + 3b²`.
    pub fn norm(&self) -> F {
        self.a.square().add(&self.b.square().scale_i64(3))
    }

    /// Applies a field map of `F` to both components; this is the lift
    /// fixing `√−3`.
    pub fn apply_sigma(&self, sigma: impl Fn(&F) -> F) -> Self {
        QuadExt { a: sigma(&self.a), b: sigma(&self.b) }
    }

    pub fn scale_base(&self, c: &F) -> Self {
        QuadExt { a: self.a.mul(c), b: self.b.mul(c) }
    }

    /// The component in `F` when `b = 0`.
    pub fn as_base(&self) -> Option<&F> {
        self.b.is_zero_elem().then_some(&self.a)
    }
}

impl<F: Ring> Ring for QuadExt<F> {
    fn zero_like(&self) -> Self {
        QuadExt { a: self.a.zero_like(), b: self.a.zero_like() }
    }
    fn one_like(&self) -> Self {
        QuadExt { a: self.a.one_like(), b: self.a.zero_like() }
    }
    fn is_zero_elem(&self) -> bool {
        self.a.is_zero_elem() && self.b.is_zero_elem()
    }
    fn add(&self, rhs: &Self) -> Self {
        QuadExt { a: self.a.add(&rhs.a), b: self.b.add(&rhs.b) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        QuadExt { a: self.a.sub(&rhs.a), b: self.b.sub(&rhs.b) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let ac = self.a.mul(&rhs.a);
        let bd = self.b.mul(&rhs.b);
        let cross = self.a.add(&self.b).mul(&rhs.a.add(&rhs.b)).sub(&ac).sub(&bd);
        QuadExt { a: ac.sub(&bd.scale_i64(3)), b: cross }
    }
    fn neg(&self) -> Self {
        QuadExt { a: self.a.neg(), b: self.b.neg() }
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        QuadExt::from_base(self.a.from_int_like(n))
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(QuadExt::from_base(self.a.from_rational_like(q)?))
    }
    fn try_inv(&self) -> Option<Self> {
        let n = self.norm().try_inv()?;
        Some(QuadExt { a: self.a.mul(&n), b: self.b.neg().mul(&n) })
    }
}

impl<F: QCoords> QCoords for QuadExt<F> {
    fn q_coords(&self) -> Vec<Rational> {
        let mut v = self.a.q_coords();
        v.extend(self.b.q_coords());
        v
    }
}

/// `Q(√−3)`.
pub type Eisenstein = QuadExt<Rational>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn sqrt_m3_squares_to_minus_three() {
        let s = Eisenstein::sqrt_m3(&rat(0));
        assert_eq!(s.square(), Eisenstein::from_base(rat(-3)));
        assert_eq!(s.try_inv().unwrap(), Eisenstein::new(rat(0), ratio(-1, 3)));
        assert!(Eisenstein::from_base(rat(0)).try_inv().is_none());
    }
}
