use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Contract for the exact coefficient domains used throughout the crate.
///
/// Elements may carry a context (a number field, a modulus), so constants are
/// produced from an existing element via the `*_like` constructors.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `n · 1` in this ring.
    fn from_int_like(&self, n: &Integer) -> Self;
    /// Image of a rational, if its denominator is invertible here.
    fn from_rational_like(&self, q: &Rational) -> Option<Self>;
    /// Multiplicative inverse when `self` is a unit.
    fn try_inv(&self) -> Option<Self>;

    fn from_i64_like(&self, n: i64) -> Self {
        self.from_int_like(&Integer::from(n))
    }

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    fn scale_i64(&self, n: i64) -> Self {
        self.mul(&self.from_i64_like(n))
    }

    /// `self / rhs`, `None` when `rhs` is not a unit.
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.try_inv().map(|inv| self.mul(&inv))
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        Rational::from_integer(n.clone())
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Ring for Integer {
    fn zero_like(&self) -> Self {
        Integer::zero()
    }
    fn one_like(&self) -> Self {
        Integer::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        n.clone()
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        q.is_integer().then(|| q.to_integer())
    }
    fn try_inv(&self) -> Option<Self> {
        (self.abs().is_one_elem()).then(|| self.clone())
    }
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> Integer {
    values
        .into_iter()
        .fold(Integer::one(), |acc, q| acc.lcm(q.denom()))
}

/// Gcd of a list of integers (0 for an empty or all-zero list).
pub fn content<'a, I: IntoIterator<Item = &'a Integer>>(values: I) -> Integer {
    values
        .into_iter()
        .fold(Integer::zero(), |acc, v| acc.gcd(v))
}
