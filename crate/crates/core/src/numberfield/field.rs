//! Absolute number fields `Q[θ]/(g)` with `g` monic, integral and
//! irreducible.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::FiniteAlgebra;
use crate::arith::matrix::solve_integer_system;
use crate::arith::poly::{to_qpoly, QPoly};
use crate::arith::{Integer, QCoords, Rational, Ring, UniPoly};
use crate::{Error, Result};

#[derive(Debug, PartialEq)]
pub struct NumberField {
    minpoly: UniPoly<Integer>,
    qminpoly: QPoly,
}

impl NumberField {
    /// Field defined by a monic integer polynomial of degree ≥ 1.
    /// Irreducibility is the caller's responsibility.
    pub fn new(minpoly: UniPoly<Integer>) -> Result<Arc<Self>> {
        let deg = minpoly.degree().ok_or(Error::ZeroPolynomial)?;
        if deg == 0 || !num_traits::One::is_one(&minpoly.lc()) {
            return Err(Error::InvalidArgument("defining polynomial must be monic of degree ≥ 1".into()));
        }
        let qminpoly = to_qpoly(&minpoly);
        Ok(Arc::new(NumberField { minpoly, qminpoly }))
    }

    pub fn minpoly(&self) -> &UniPoly<Integer> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().expect("nonzero minpoly")
    }

    pub fn elem(self: &Arc<Self>, rep: QPoly) -> NfElem {
        let rep = rep.rem(&self.qminpoly).expect("monic modulus");
        NfElem { rep, field: self.clone() }
    }

    pub fn from_coords(self: &Arc<Self>, coords: &[Rational]) -> NfElem {
        self.elem(QPoly::new(coords.to_vec(), Rational::zero()))
    }

    pub fn gen(self: &Arc<Self>) -> NfElem {
        self.elem(QPoly::x(&Rational::zero()))
    }

    pub fn from_rational(self: &Arc<Self>, q: &Rational) -> NfElem {
        self.elem(QPoly::constant(q.clone()))
    }
}

impl FiniteAlgebra for NumberField {
    fn dim(&self) -> usize {
        self.degree()
    }

    fn mul_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let px = QPoly::new(x.to_vec(), Rational::zero());
        let py = QPoly::new(y.to_vec(), Rational::zero());
        let r = px.mul(&py).rem(&self.qminpoly).expect("monic modulus");
        (0..self.degree()).map(|i| r.coeff(i)).collect()
    }

    fn one_coords(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.degree()];
        v[0] = num_traits::One::one();
        v
    }
}

/// Element of a [`NumberField`], stored as its reduced representative.
#[derive(Clone, Debug)]
pub struct NfElem {
    rep: QPoly,
    field: Arc<NumberField>,
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl NfElem {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn rep(&self) -> &QPoly {
        &self.rep
    }

    pub fn coords(&self) -> Vec<Rational> {
        (0..self.field.degree()).map(|i| self.rep.coeff(i)).collect()
    }

    /// Matrix of multiplication by `self` on the power basis (rows).
    pub fn mult_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.field.degree();
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut e = vec![Rational::zero(); n];
                e[j] = num_traits::One::one();
                self.field.mul_coords(&self.coords(), &e)
            })
            .collect();
        (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    }
}

impl Ring for NfElem {
    fn zero_like(&self) -> Self {
        self.field.from_rational(&Rational::zero())
    }
    fn one_like(&self) -> Self {
        self.field.from_rational(&num_traits::One::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.rep.is_zero_elem()
    }
    fn add(&self, rhs: &Self) -> Self {
        NfElem { rep: self.rep.add(&rhs.rep), field: self.field.clone() }
    }
    fn sub(&self, rhs: &Self) -> Self {
        NfElem { rep: self.rep.sub(&rhs.rep), field: self.field.clone() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.field.elem(self.rep.mul(&rhs.rep))
    }
    fn neg(&self) -> Self {
        NfElem { rep: self.rep.neg(), field: self.field.clone() }
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        self.field.from_rational(&Rational::from_integer(n.clone()))
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(self.field.from_rational(q))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero_elem() {
            return None;
        }
        let rows = self.mult_matrix();
        let den = rows.iter().flatten().fold(Integer::from(1), |acc, q| num_integer::Integer::lcm(&acc, q.denom()));
        let int_rows: Vec<Vec<Integer>> = rows
            .iter()
            .map(|r| r.iter().map(|q| (q * Rational::from_integer(den.clone())).to_integer()).collect())
            .collect();
        let mut e0 = vec![Integer::zero(); self.field.degree()];
        e0[0] = Integer::from(1);
        let z = solve_integer_system(&int_rows, &e0)?;
        let coords: Vec<Rational> = z.iter().map(|q| q * Rational::from_integer(den.clone())).collect();
        Some(self.field.from_coords(&coords))
    }
}

impl QCoords for NfElem {
    fn q_coords(&self) -> Vec<Rational> {
        self.coords()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::zpoly;
    use crate::arith::rat;

    #[test]
    fn cubic_field_arithmetic() {
        let k = NumberField::new(zpoly(&[-2, 0, 0, 1])).unwrap();
        let t = k.gen();
        assert_eq!(t.pow(3), t.from_i64_like(2));
        let x = t.add(&t.square()).add(&t.from_i64_like(1));
        assert!(x.mul(&x.try_inv().unwrap()).is_one_elem());
        assert_eq!(k.from_rational(&rat(3)).coords()[0], rat(3));
    }
}
