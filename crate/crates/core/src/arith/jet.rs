//! First-order jets `v + d₁ε₁ + d₂ε₂` with `εᵢεⱼ = 0`, for derivatives of
//! polynomial maps evaluated through generic ring code.

use super::ring::{Integer, Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Jet<R: Ring> {
    pub v: R,
    pub d: [R; 2],
}

impl<R: Ring> Jet<R> {
    pub fn constant(v: R) -> Self {
        let z = v.zero_like();
        Jet { v, d: [z.clone(), z] }
    }

    /// The coordinate function `i` (0 or 1) at the value `v`.
    pub fn variable(v: R, i: usize) -> Self {
        let mut j = Self::constant(v);
        j.d[i] = j.v.one_like();
        j
    }
}

impl<R: Ring> Ring for Jet<R> {
    fn zero_like(&self) -> Self {
        Self::constant(self.v.zero_like())
    }
    fn one_like(&self) -> Self {
        Self::constant(self.v.one_like())
    }
    fn is_zero_elem(&self) -> bool {
        self.v.is_zero_elem() && self.d.iter().all(Ring::is_zero_elem)
    }
    fn add(&self, rhs: &Self) -> Self {
        Jet { v: self.v.add(&rhs.v), d: [self.d[0].add(&rhs.d[0]), self.d[1].add(&rhs.d[1])] }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Jet { v: self.v.sub(&rhs.v), d: [self.d[0].sub(&rhs.d[0]), self.d[1].sub(&rhs.d[1])] }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let d = core::array::from_fn(|i| self.v.mul(&rhs.d[i]).add(&rhs.v.mul(&self.d[i])));
        Jet { v: self.v.mul(&rhs.v), d }
    }
    fn neg(&self) -> Self {
        Jet { v: self.v.neg(), d: [self.d[0].neg(), self.d[1].neg()] }
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        Self::constant(self.v.from_int_like(n))
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(Self::constant(self.v.from_rational_like(q)?))
    }
    fn try_inv(&self) -> Option<Self> {
        let inv = self.v.try_inv()?;
        let inv2 = inv.square();
        Some(Jet { v: inv, d: [self.d[0].mul(&inv2).neg(), self.d[1].mul(&inv2).neg()] })
    }
}
