//! Sparse polynomials in three variables `X, Y, Z`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::ring::{Integer, Rational, Ring};

/// Exponent triple for `X^a Y^b Z^c`.
pub type Exps = [u32; 3];

#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<R: Ring> {
    terms: BTreeMap<Exps, R>,
    zero: R,
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(zero: &R) -> Self {
        MultiPoly { terms: BTreeMap::new(), zero: zero.zero_like() }
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: R, e: Exps) -> Self {
        let mut p = Self::zero(&c);
        p.add_term(e, c);
        p
    }

    /// The variable with index `i` (0 = X, 1 = Y, 2 = Z).
    pub fn var(i: usize, template: &R) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(template.one_like(), e)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, R)>, zero: &R) -> Self {
        let mut p = Self::zero(zero);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exps, c: R) {
        if c.is_zero_elem() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero_elem() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exps) -> R {
        self.terms.get(e).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn zero_elem(&self) -> &R {
        &self.zero
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0] + e[1] + e[2]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e[0] + e[1] + e[2]);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn map<S: Ring>(&self, zero: &S, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        MultiPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))), zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x.mul(c))), &self.zero)
    }

    pub fn partial(&self, var: usize) -> Self {
        Self::from_terms(
            self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
                let mut e2 = *e;
                e2[var] -= 1;
                (e2, c.mul(&c.from_i64_like(e[var] as i64)))
            }),
            &self.zero,
        )
    }

    /// Homogenizes to total degree `d` using `Z` as the extra variable; the
    /// input must not involve `Z`.
    pub fn homogenize(&self, d: u32) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(e, c)| {
                assert_eq!(e[2], 0, "input already involves Z");
                ([e[0], e[1], d - e[0] - e[1]], c.clone())
            }),
            &self.zero,
        )
    }

    /// Evaluation at a point of another ring through a coefficient map, with
    /// cached variable powers.
    pub fn eval_with<S: Ring>(&self, pt: &[S; 3], embed: impl Fn(&R) -> S) -> S {
        let deg = self.total_degree().unwrap_or(0) as usize;
        let powers: Vec<Vec<S>> = pt
            .iter()
            .map(|x| {
                let mut v = vec![x.one_like()];
                for i in 1..=deg {
                    let next = v[i - 1].mul(x);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = pt[0].zero_like();
        for (e, c) in &self.terms {
            let mut t = embed(c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&powers[i][k as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn eval(&self, pt: &[R; 3]) -> R {
        self.eval_with(pt, |c| c.clone())
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.zero)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.zero.one_like())
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.neg());
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(&self.zero);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.neg())), &self.zero)
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        Self::constant(self.zero.from_int_like(n))
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(Self::constant(self.zero.from_rational_like(q)?))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().expect("one term");
            if *e == [0, 0, 0] {
                return Some(Self::constant(c.try_inv()?));
            }
        }
        None
    }
}

/// The 15 exponent triples of degree-4 ternary monomials in graded
/// lexicographic order with `X > Y > Z`:
/// `X⁴, X³Y, X³Z, X²Y², X²YZ, X²Z², XY³, XY²Z, XYZ², XZ³, Y⁴, Y³Z, Y²Z², YZ³, Z⁴`.
pub fn quartic_monomials() -> [Exps; 15] {
    let mut out = [[0u32; 3]; 15];
    let mut k = 0;
    for a in (0..=4u32).rev() {
        for b in (0..=4 - a).rev() {
            out[k] = [a, b, 4 - a - b];
            k += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::rat;

    #[test]
    fn monomial_order() {
        let m = quartic_monomials();
        assert_eq!(m[0], [4, 0, 0]);
        assert_eq!(m[1], [3, 1, 0]);
        assert_eq!(m[2], [3, 0, 1]);
        assert_eq!(m[14], [0, 0, 4]);
    }

    #[test]
    fn arithmetic_and_partials() {
        let x = MultiPoly::var(0, &rat(0));
        let y = MultiPoly::var(1, &rat(0));
        let p = x.add(&y).pow(2);
        assert_eq!(p.coeff(&[1, 1, 0]), rat(2));
        assert_eq!(p.partial(0), x.scale(&rat(2)).add(&y.scale(&rat(2))));
        assert_eq!(p.eval(&[rat(1), rat(2), rat(7)]), rat(9));
        assert!(p.homogenize(2).is_homogeneous());
    }
}
