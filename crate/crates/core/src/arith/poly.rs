//! Dense univariate polynomials over an exact ring.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::int::{bigint_mod_u64, inv_mod_u64, primes_from};
use super::ring::{Integer, Rational, Ring};
use super::Fp;
use crate::{Error, Result};

/// Polynomial with coefficients lowest degree first. The zero polynomial has
/// no coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<R: Ring> {
    coeffs: Vec<R>,
    zero: R,
}

pub type QPoly = UniPoly<Rational>;

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>, zero: R) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        UniPoly { coeffs, zero }
    }

    /// Builds from a nonempty coefficient list, taking the zero template
    /// from its first entry.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let zero = coeffs.first().expect("nonempty coefficient list").zero_like();
        Self::new(coeffs, zero)
    }

    pub fn zero(zero: R) -> Self {
        UniPoly { coeffs: Vec::new(), zero }
    }

    pub fn constant(c: R) -> Self {
        let zero = c.zero_like();
        Self::new(vec![c], zero)
    }

    /// The monomial `c·x^n`.
    pub fn monomial(c: R, n: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero.clone(); n];
        coeffs.push(c);
        Self::new(coeffs, zero)
    }

    /// `x` over the ring of `template`.
    pub fn x(template: &R) -> Self {
        Self::monomial(template.one_like(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn zero_elem(&self) -> &R {
        &self.zero
    }

    pub fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Self::new(coeffs, self.zero.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Self::new(coeffs, self.zero.clone())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(Ring::neg).collect(), self.zero.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero_elem() || rhs.is_zero_elem() {
            return Self::zero(self.zero.clone());
        }
        let mut out = vec![self.zero.clone(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out, self.zero.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.zero.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.zero.one_like());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(self.zero.clone(), |acc, c| acc.mul(x).add(c))
    }

    /// Evaluation at a point of another ring through a coefficient map.
    pub fn eval_with<S: Ring>(&self, x: &S, embed: impl Fn(&R) -> S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(x.zero_like(), |acc, c| acc.mul(x).add(&embed(c)))
    }

    /// Coefficientwise image under a ring map.
    pub fn map<S: Ring>(&self, zero: S, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect(), zero)
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.zero.clone()), |acc, c| {
                acc.mul(g).add(&Self::constant(c.clone()))
            })
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_i64_like(i as i64)))
            .collect();
        Self::new(coeffs, self.zero.clone())
    }

    /// Division with remainder; requires an invertible leading coefficient of
    /// the divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let inv = d.lc().try_inv().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(self.zero.clone()), self.clone()));
        }
        let mut q = vec![self.zero.clone(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul(&inv);
            if !c.is_zero_elem() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] = r[k + i].sub(&c.mul(dc));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q, self.zero.clone()), Self::new(r, self.zero.clone())))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Scales to leading coefficient one (requires a unit leading coefficient).
    pub fn monic(&self) -> Result<Self> {
        if self.is_zero_elem() {
            return Ok(self.clone());
        }
        let inv = self.lc().try_inv().ok_or(Error::DivisionByZero)?;
        Ok(self.scale(&inv))
    }

    /// Monic gcd over a field.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero_elem() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's squarefree decomposition over a field of characteristic zero:
    /// monic `a₁, a₂, …` with `self = lc · ∏ aᵢ^i` and the `aᵢ` squarefree and
    /// pairwise coprime. Entry `i − 1` holds `aᵢ`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<Self>> {
        if self.is_zero_elem() {
            return Err(Error::ZeroPolynomial);
        }
        let one = Self::constant(self.zero.one_like());
        let df = self.derivative();
        let a0 = self.gcd(&df)?;
        let mut b = self.div_rem(&a0)?.0;
        let c = df.div_rem(&a0)?.0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        while b.degree().is_some_and(|k| k > 0) {
            let a = b.gcd(&d)?;
            let b_next = b.div_rem(&a)?.0;
            let c_next = d.div_rem(&a)?.0;
            d = c_next.sub(&b_next.derivative());
            b = b_next;
            out.push(a);
        }
        while out.last() == Some(&one) {
            out.pop();
        }
        Ok(out)
    }

    /// Resultant over a field, by the Euclidean algorithm.
    ///
    /// Convention: `Res(p, q) = lc(p)^deg q · lc(q)^deg p · ∏ (αᵢ − βⱼ)` over
    /// the roots `αᵢ` of `p` and `βⱼ` of `q`; thus `Res(x−3, x−5) = −2` and
    /// `Res(q, p) = (−1)^(deg p · deg q) Res(p, q)`.
    pub fn resultant(&self, rhs: &Self) -> Result<R> {
        let one = self.zero.one_like();
        let (mut a, mut b) = (self.clone(), rhs.clone());
        let mut acc = one;
        let mut da = a.degree().ok_or(Error::ZeroPolynomial)?;
        let mut db = b.degree().ok_or(Error::ZeroPolynomial)?;
        loop {
            if db == 0 {
                return Ok(acc.mul(&b.lc().pow(da as u32)));
            }
            // Res(a, b) = (−1)^(da·db) Res(b, a) = (−1)^(da·db) lc(b)^(da − dr) Res(b, a mod b).
            let r = a.rem(&b)?;
            let Some(dr) = r.degree() else {
                return Ok(self.zero.clone());
            };
            if (da * db) % 2 == 1 {
                acc = acc.neg();
            }
            acc = acc.mul(&b.lc().pow((da - dr) as u32));
            a = b;
            b = r;
            da = db;
            db = dr;
        }
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero_like(&self) -> Self {
        Self::zero(self.zero.clone())
    }
    fn one_like(&self) -> Self {
        Self::constant(self.zero.one_like())
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        UniPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UniPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        Self::constant(self.zero.from_int_like(n))
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(Self::constant(self.zero.from_rational_like(q)?))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            Some(Self::constant(self.coeffs[0].try_inv()?))
        } else {
            None
        }
    }
}

/// Rational polynomial from small integer coefficients, lowest degree first.
pub fn qpoly(coeffs: &[i64]) -> QPoly {
    UniPoly::new(
        coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
        Rational::zero(),
    )
}

/// Integer polynomial, lowest degree first.
pub fn zpoly(coeffs: &[i64]) -> UniPoly<Integer> {
    UniPoly::new(coeffs.iter().map(|&c| Integer::from(c)).collect(), Integer::zero())
}

pub fn to_qpoly(p: &UniPoly<Integer>) -> QPoly {
    p.map(Rational::zero(), |c| Rational::from_integer(c.clone()))
}

/// Primitive integer multiple of a nonzero rational polynomial with positive
/// leading coefficient.
pub fn primitive_part(p: &QPoly) -> UniPoly<Integer> {
    let den = super::ring::denominator_lcm(p.coeffs());
    let ints: Vec<Integer> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let mut g = super::ring::content(&ints);
    if g.is_zero_elem() {
        return UniPoly::zero(Integer::zero());
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    UniPoly::new(ints.into_iter().map(|c| c / &g).collect(), Integer::zero())
}

/// Reduction of an integer polynomial modulo a prime.
pub fn reduce_mod_p(p: &UniPoly<Integer>, prime: u64) -> UniPoly<Fp> {
    let zero = Fp::new(0, prime);
    p.map(zero, |c| Fp::new(bigint_mod_u64(c, prime), prime))
}

/// Determinant of the Sylvester matrix, computed fraction-free over Z.
/// Agrees with [`UniPoly::resultant`] on integer inputs.
pub fn resultant_sylvester(p: &UniPoly<Integer>, q: &UniPoly<Integer>) -> Result<Integer> {
    let m = p.degree().ok_or(Error::ZeroPolynomial)?;
    let n = q.degree().ok_or(Error::ZeroPolynomial)?;
    let size = m + n;
    if size == 0 {
        return Ok(Integer::one());
    }
    let mut rows = vec![vec![Integer::zero(); size]; size];
    for (i, row) in rows.iter_mut().take(n).enumerate() {
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
    }
    for (i, row) in rows.iter_mut().skip(n).take(m).enumerate() {
        for (k, c) in q.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
    }
    Ok(super::matrix::det_bareiss(rows))
}

/// Discriminant of a rational polynomial of degree `n ≥ 1`:
/// `(−1)^(n(n−1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &QPoly) -> Result<Rational> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::InvalidArgument("discriminant of a constant".into()));
    }
    let r = f.resultant(&f.derivative())?;
    let mut d = r / f.lc();
    if (n * (n - 1) / 2) % 2 == 1 {
        d = -d;
    }
    Ok(d)
}

/// All rational roots of a nonzero rational polynomial, sorted increasingly
/// and without multiplicity.
///
/// Roots of the squarefree part are found modulo a prime of good reduction,
/// lifted p-adically past the Cauchy-type bound on `lc·root` and recognised
/// exactly; every returned value is verified by exact evaluation.
pub fn rational_roots(f: &QPoly) -> Result<Vec<Rational>> {
    if f.is_zero_elem() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let mut g = primitive_part(f);
    if g.coeffs()[0].is_zero_elem() {
        out.push(Rational::zero());
        let shift = g.coeffs().iter().take_while(|c| c.is_zero_elem()).count();
        g = UniPoly::new(g.coeffs()[shift..].to_vec(), Integer::zero());
    }
    if g.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    // Squarefree part over Q.
    let gq = to_qpoly(&g);
    let common = gq.gcd(&gq.derivative())?;
    let sf = primitive_part(&gq.div_rem(&common)?.0);
    let deg = sf.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(out);
    }
    let lc = sf.lc();
    let a0 = sf.coeffs()[0].clone();
    let bound = (&lc * &a0).abs() * 2u32 + 1u32;

    let prime = primes_from(5)
        .find(|&p| {
            if bigint_mod_u64(&lc, p) == 0 {
                return false;
            }
            let r = reduce_mod_p(&sf, p);
            r.gcd(&r.derivative()).map(|g| g.degree() == Some(0)).unwrap_or(false)
        })
        .expect("some prime has squarefree reduction");

    let pm = reduce_mod_p(&sf, prime);
    let dpm = pm.derivative();
    let dsf = sf.derivative();
    for r0 in 0..prime {
        let x = Fp::new(r0, prime);
        if !pm.eval(&x).is_zero_elem() {
            continue;
        }
        // Newton lifting with quadratic convergence.
        let mut r = Integer::from(r0);
        let mut m = Integer::from(prime);
        let dinv = inv_mod_u64(dpm.eval(&x).value(), prime).expect("simple root");
        let mut dinv_big = Integer::from(dinv);
        while m < bound {
            let m2 = &m * &m;
            let fr = eval_int_mod(&sf, &r, &m2);
            r = (&r - &fr * &dinv_big).mod_floor(&m2);
            let dr = eval_int_mod(&dsf, &r, &m2);
            // Refresh the inverse derivative to the new precision.
            dinv_big = (&dinv_big * (Integer::from(2) - &dr * &dinv_big)).mod_floor(&m2);
            m = m2;
        }
        let mut num = (&lc * &r).mod_floor(&m);
        if num > &m / 2u32 {
            num -= &m;
        }
        let cand = Rational::new(num, lc.clone());
        if to_qpoly(&sf).eval(&cand).is_zero_elem() {
            out.push(cand);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn eval_int_mod(p: &UniPoly<Integer>, x: &Integer, m: &Integer) -> Integer {
    p.coeffs()
        .iter()
        .rev()
        .fold(Integer::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::{rat, ratio};

    #[test]
    fn resultant_examples() {
        let p = qpoly(&[1, 0, 1]);
        assert!(Ring::is_zero_elem(&p.resultant(&p).unwrap()));
        // Res(x − 3, x − 5) = 3 − 5 under the documented convention.
        assert_eq!(qpoly(&[-3, 1]).resultant(&qpoly(&[-5, 1])).unwrap(), Rational::from_integer((-2).into()));
        assert_eq!(qpoly(&[-2, 0, 1]).resultant(&qpoly(&[-3, 0, 1])).unwrap(), Rational::one());
        assert_eq!(resultant_sylvester(&zpoly(&[-3, 1]), &zpoly(&[-5, 1])).unwrap(), Integer::from(-2));
    }

    #[test]
    fn discriminant_of_example_quartic() {
        let f = qpoly(&[3, 2, -3, 0, 1]);
        assert_eq!(discriminant(&f).unwrap(), Rational::from_integer((-4752).into()));
    }

    #[test]
    fn squarefree_decomposition_yun() {
        // 3 (x − 1)(x + 2)² (x² + 1)³
        let f = qpoly(&[-1, 1]).mul(&qpoly(&[2, 1]).pow(2)).mul(&qpoly(&[1, 0, 1]).pow(3)).scale(&rat(3));
        let parts = f.squarefree_decomposition().unwrap();
        assert_eq!(parts, [qpoly(&[-1, 1]), qpoly(&[2, 1]), qpoly(&[1, 0, 1])]);
        assert_eq!(qpoly(&[5]).squarefree_decomposition().unwrap(), Vec::<QPoly>::new());
    }

    #[test]
    fn rational_roots_found() {
        // (2x − 3)(x + 5)(x² + 1)(x − 7)²
        let f = qpoly(&[-3, 2])
            .mul(&qpoly(&[5, 1]))
            .mul(&qpoly(&[1, 0, 1]))
            .mul(&qpoly(&[-7, 1]).pow(2));
        assert_eq!(
            rational_roots(&f).unwrap(),
            vec![Rational::from_integer((-5).into()), ratio(3, 2), Rational::from_integer(7.into())]
        );
        assert_eq!(rational_roots(&qpoly(&[0, 0, 1])).unwrap(), vec![Rational::zero()]);
        assert!(rational_roots(&qpoly(&[-2, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn division_and_gcd() {
        let a = qpoly(&[-1, 0, 1]);
        let b = qpoly(&[1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, qpoly(&[-1, 1]));
        assert!(r.is_zero_elem());
        assert_eq!(a.gcd(&qpoly(&[-1, 0, 0, 1])).unwrap(), qpoly(&[-1, 1]));
    }
}
