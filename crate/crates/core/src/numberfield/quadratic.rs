//! Elements `a + b√d` of a quadratic field `Q(√d)` (or of `Q` when `d = 1`).

use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::int::{rational_sqrt, squarefree_part_rational};
use crate::arith::{Integer, Rational, Ring};
use crate::Result;

/// `a + b√d` with `d` squarefree; `d = 1` means the element is rational and
/// `b = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    pub a: Rational,
    pub b: Rational,
    pub d: Integer,
}

impl QuadraticNumber {
    pub fn new(a: Rational, b: Rational, d: Integer) -> Self {
        if One::is_one(&d) {
            return QuadraticNumber { a: a + b, b: Rational::zero(), d };
        }
        QuadraticNumber { a, b, d }
    }

    pub fn rational(a: Rational, d: &Integer) -> Self {
        QuadraticNumber { a, b: Rational::zero(), d: d.clone() }
    }

    /// `√q` for a rational `q`, written over the squarefree part of `q`.
    pub fn sqrt_of(q: &Rational) -> Result<Self> {
        if Zero::is_zero(q) {
            return Ok(QuadraticNumber::rational(Rational::zero(), &Integer::one()));
        }
        let d = squarefree_part_rational(q)?;
        let m = rational_sqrt(&(q / Rational::from_integer(d.clone()))).expect("q/d is a square");
        Ok(QuadraticNumber::new(Rational::zero(), m, d))
    }

    pub fn conj(&self) -> Self {
        QuadraticNumber { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    pub fn trace(&self) -> Rational {
        &self.a * Rational::from_integer(2.into())
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }

    fn with(&self, a: Rational, b: Rational) -> Self {
        QuadraticNumber::new(a, b, self.d.clone())
    }

    fn same_field(&self, rhs: &Self) -> Integer {
        if self.is_rational() && rhs.is_rational() {
            return if One::is_one(&self.d) { rhs.d.clone() } else { self.d.clone() };
        }
        if self.is_rational() {
            return rhs.d.clone();
        }
        if !rhs.is_rational() {
            assert_eq!(self.d, rhs.d, "elements of different quadratic fields");
        }
        self.d.clone()
    }
}

impl Ring for QuadraticNumber {
    fn zero_like(&self) -> Self {
        QuadraticNumber::rational(Rational::zero(), &self.d)
    }
    fn one_like(&self) -> Self {
        QuadraticNumber::rational(Rational::one(), &self.d)
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, rhs: &Self) -> Self {
        let d = self.same_field(rhs);
        QuadraticNumber::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let d = self.same_field(rhs);
        let dq = Rational::from_integer(d.clone());
        QuadraticNumber::new(
            &self.a * &rhs.a + &self.b * &rhs.b * dq,
            &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        )
    }
    fn neg(&self) -> Self {
        self.with(-&self.a, -&self.b)
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        QuadraticNumber::rational(Rational::from_integer(n.clone()), &self.d)
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(QuadraticNumber::rational(q.clone(), &self.d))
    }
    fn try_inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(self.with(&self.a / &n, -&self.b / &n))
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(f, "{} {} {}*sqrt({})", self.a, sign, self.b.abs(), self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn arithmetic_in_q_sqrt11() {
        let d = Integer::from(11);
        let s = QuadraticNumber::new(rat(0), rat(1), d.clone());
        assert_eq!(s.square(), QuadraticNumber::rational(rat(11), &d));
        let x = QuadraticNumber::new(rat(10), rat(3), d);
        assert_eq!(x.norm(), rat(1));
        assert!(x.mul(&x.try_inv().unwrap()).is_one_elem());
        let r = QuadraticNumber::sqrt_of(&rat(-12)).unwrap();
        assert_eq!(r.d, Integer::from(-3));
        assert_eq!(r.b, rat(2));
    }
}
