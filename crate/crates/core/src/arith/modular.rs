//! Residue rings: word-sized prime fields and big moduli.

use alloc::sync::Arc;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::int::{bigint_mod_u64, inv_mod_u64, mod_inverse, mul_mod_u64};
use super::ring::{Integer, Rational, Ring};

/// Element of `F_p` for a prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }

    pub fn from_i64(v: i64, p: u64) -> Self {
        Fp { v: v.rem_euclid(p as i64) as u64, p }
    }

    pub fn from_int(v: &Integer, p: u64) -> Self {
        Fp { v: bigint_mod_u64(v, p), p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1 % self.p, p: self.p }
    }
    fn is_zero_elem(&self) -> bool {
        self.v == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        let s = self.v + rhs.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp { v: if self.v >= rhs.v { self.v - rhs.v } else { self.v + self.p - rhs.v }, p: self.p }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp { v: mul_mod_u64(self.v, rhs.v, self.p), p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        Fp::from_int(n, self.p)
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        let d = inv_mod_u64(bigint_mod_u64(q.denom(), self.p), self.p)?;
        Some(Fp::from_int(q.numer(), self.p).mul(&Fp { v: d, p: self.p }))
    }
    fn try_inv(&self) -> Option<Self> {
        Some(Fp { v: inv_mod_u64(self.v, self.p)?, p: self.p })
    }
}

/// Element of `Z/mZ` for an arbitrary modulus `m ≥ 2`.
#[derive(Clone, Debug)]
pub struct Zn {
    v: Integer,
    m: Arc<Integer>,
}

impl PartialEq for Zn {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v
    }
}

impl Zn {
    pub fn new(v: &Integer, m: &Arc<Integer>) -> Self {
        Zn { v: v.mod_floor(m), m: m.clone() }
    }

    pub fn value(&self) -> &Integer {
        &self.v
    }

    pub fn modulus(&self) -> &Arc<Integer> {
        &self.m
    }

    /// Representative in `(−m/2, m/2]`.
    pub fn symmetric(&self) -> Integer {
        let half = &*self.m / 2u32;
        if self.v > half {
            &self.v - &*self.m
        } else {
            self.v.clone()
        }
    }
}

impl Ring for Zn {
    fn zero_like(&self) -> Self {
        Zn { v: Integer::zero(), m: self.m.clone() }
    }
    fn one_like(&self) -> Self {
        Zn { v: Integer::one(), m: self.m.clone() }
    }
    fn is_zero_elem(&self) -> bool {
        self.v.is_zero_elem()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut v = &self.v + &rhs.v;
        if v >= *self.m {
            v -= &*self.m;
        }
        Zn { v, m: self.m.clone() }
    }
    fn sub(&self, rhs: &Self) -> Self {
        let mut v = &self.v - &rhs.v;
        if v < Integer::zero() {
            v += &*self.m;
        }
        Zn { v, m: self.m.clone() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Zn { v: (&self.v * &rhs.v) % &*self.m, m: self.m.clone() }
    }
    fn neg(&self) -> Self {
        if self.v.is_zero_elem() {
            self.clone()
        } else {
            Zn { v: &*self.m - &self.v, m: self.m.clone() }
        }
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        Zn::new(n, &self.m)
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        let d = mod_inverse(q.denom(), &self.m)?;
        Some(Zn { v: (q.numer() * d).mod_floor(&self.m), m: self.m.clone() })
    }
    fn try_inv(&self) -> Option<Self> {
        Some(Zn { v: mod_inverse(&self.v, &self.m)?, m: self.m.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_field_ops() {
        let p = 101;
        let a = Fp::new(37, p);
        assert_eq!(a.mul(&a.try_inv().unwrap()), a.one_like());
        assert_eq!(a.sub(&a.add(&a)), a.neg());
        let half = a.from_rational_like(&Rational::new(1.into(), 2.into())).unwrap();
        assert_eq!(half.add(&half), a.one_like());
    }

    #[test]
    fn zn_ops() {
        let m = Arc::new(Integer::from(7u32).pow(20));
        let a = Zn::new(&Integer::from(12345), &m);
        assert_eq!(a.mul(&a.try_inv().unwrap()), a.one_like());
        assert!(Zn::new(&Integer::from(7), &m).try_inv().is_none());
    }
}
