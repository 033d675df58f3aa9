//! Orders given by a Z-basis inside a finite-dimensional commutative
//! Q-algebra, and Round-2 enlargement to p-maximality.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::FiniteAlgebra;
use crate::arith::int::{bigint_mod_u64, primes_up_to};
use crate::arith::matrix::{det_bareiss, hnf};
use crate::arith::{Fp, Integer, Matrix, QMatrix, Rational};
use crate::{Error, Result};

/// A Z-basis of an order, as coordinate vectors in the algebra's basis.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderBasis {
    elements: Vec<Vec<Rational>>,
    inverse: QMatrix,
    discriminant: Integer,
    pub is_maximal_attempted: bool,
    pub maximality_prime_bound: u64,
    /// Primes at which the order was made p-maximal.
    pub refined_primes: Vec<u64>,
}

impl OrderBasis {
    /// Order spanned by `elements`; fails if they are dependent or do not
    /// span a ring containing 1.
    pub fn new<A: FiniteAlgebra + ?Sized>(alg: &A, elements: Vec<Vec<Rational>>) -> Result<Self> {
        let n = alg.dim();
        if elements.len() != n || elements.iter().any(|e| e.len() != n) {
            return Err(Error::InvalidArgument("order basis has the wrong shape".into()));
        }
        let inverse = QMatrix::from_cols(&elements, &Rational::zero())
            .inverse()
            .map_err(|_| Error::InvalidArgument("order basis is linearly dependent".into()))?;
        let mut basis = OrderBasis {
            elements,
            inverse,
            discriminant: Integer::zero(),
            is_maximal_attempted: false,
            maximality_prime_bound: 0,
            refined_primes: Vec::new(),
        };
        let one = basis.coords_of(&alg.one_coords());
        if one.iter().any(|q| !q.is_integer()) {
            return Err(Error::InvalidArgument("order basis does not contain 1".into()));
        }
        structure_constants(alg, &basis)?;
        basis.discriminant = discriminant(alg, &basis.elements)?;
        Ok(basis)
    }

    /// The order spanned by the algebra's own basis.
    pub fn standard<A: FiniteAlgebra + ?Sized>(alg: &A) -> Result<Self> {
        let n = alg.dim();
        let elements = (0..n)
            .map(|i| {
                let mut v = vec![Rational::zero(); n];
                v[i] = Rational::one();
                v
            })
            .collect();
        Self::new(alg, elements)
    }

    pub fn elements(&self) -> &[Vec<Rational>] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn discriminant(&self) -> &Integer {
        &self.discriminant
    }

    /// Matrix whose columns are the basis elements.
    pub fn matrix(&self) -> QMatrix {
        QMatrix::from_cols(&self.elements, &Rational::zero())
    }

    /// Inverse of [`Self::matrix`].
    pub fn inverse_matrix(&self) -> &QMatrix {
        &self.inverse
    }

    /// Coordinates of an algebra element in this basis.
    pub fn coords_of(&self, x: &[Rational]) -> Vec<Rational> {
        self.inverse.mul_vec(x)
    }

    /// Algebra element with the given coordinates in this basis.
    pub fn element_from(&self, c: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (ci, e) in c.iter().zip(&self.elements) {
            if Zero::is_zero(ci) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(e) {
                *o += ci * x;
            }
        }
        out
    }
}

/// `T[i][j]` = coordinates of `wᵢ·wⱼ` in the basis `w`; fails if some
/// coordinate is not an integer.
pub fn structure_constants<A: FiniteAlgebra + ?Sized>(alg: &A, basis: &OrderBasis) -> Result<Vec<Vec<Vec<Integer>>>> {
    let n = basis.dim();
    let mut t = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in i..n {
            let prod = alg.mul_coords(&basis.elements[i], &basis.elements[j]);
            let c = basis.coords_of(&prod);
            if c.iter().any(|q| !q.is_integer()) {
                return Err(Error::InvalidArgument("basis is not closed under multiplication".into()));
            }
            let c: Vec<Integer> = c.into_iter().map(|q| q.to_integer()).collect();
            t[j][i] = c.clone();
            t[i][j] = c;
        }
    }
    Ok(t)
}

/// `det(Tr(wᵢwⱼ))`.
pub fn discriminant<A: FiniteAlgebra + ?Sized>(alg: &A, elements: &[Vec<Rational>]) -> Result<Integer> {
    let tv = alg.trace_vector();
    let tr = |x: &[Rational]| x.iter().zip(&tv).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
    let n = elements.len();
    let mut m = QMatrix::zeros(n, n, &Rational::zero());
    for i in 0..n {
        for j in i..n {
            let v = tr(&alg.mul_coords(&elements[i], &elements[j]));
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    let d = m.det_exact();
    if !d.is_integer() {
        return Err(Error::InvalidArgument("basis is not integral".into()));
    }
    Ok(d.to_integer())
}

fn mul_mod(t: &[Vec<Vec<u64>>], x: &[u64], y: &[u64], p: u64) -> Vec<u64> {
    let n = x.len();
    let mut out = vec![0u128; n];
    for i in 0..n {
        if x[i] == 0 {
            continue;
        }
        for j in 0..n {
            if y[j] == 0 {
                continue;
            }
            let s = (x[i] as u128 * y[j] as u128) % p as u128;
            for (o, c) in out.iter_mut().zip(&t[i][j]) {
                *o = (*o + s * *c as u128) % p as u128;
            }
        }
    }
    out.into_iter().map(|v| v as u64).collect()
}

fn pow_mod_elem(t: &[Vec<Vec<u64>>], x: &[u64], mut e: u64, one: &[u64], p: u64) -> Vec<u64> {
    let mut acc = one.to_vec();
    let mut base = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(t, &acc, &base, p);
        }
        e >>= 1;
        if e > 0 {
            base = mul_mod(t, &base, &base, p);
        }
    }
    acc
}

/// Right kernel over `F_p` of a matrix given by rows.
fn kernel_mod_p(rows: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let proto = Fp::new(0, p);
    let m = Matrix::from_rows(
        rows.into_iter().map(|r| r.into_iter().map(|v| Fp::new(v, p)).collect()).collect(),
        &proto,
    );
    let m = if m.rows() == 0 { Matrix::zeros(1, cols, &proto) } else { m };
    m.kernel_gauss()
        .expect("F_p is a field")
        .into_iter()
        .map(|v| v.into_iter().map(|x| x.value()).collect())
        .collect()
}

/// Lattice spanned by lifts of `vecs` together with `p·Zⁿ`, in HNF.
fn lift_with_p(vecs: &[Vec<u64>], n: usize, p: u64) -> Vec<Vec<Integer>> {
    let mut gens: Vec<Vec<Integer>> = vecs.iter().map(|v| v.iter().map(|&x| Integer::from(x)).collect()).collect();
    for i in 0..n {
        let mut e = vec![Integer::zero(); n];
        e[i] = Integer::from(p);
        gens.push(e);
    }
    hnf(gens, n)
}

/// Coordinates of `v` in the basis given by the rows of the upper-triangular
/// full-rank integer matrix `h`.
fn coords_in_hnf(h: &[Vec<Integer>], v: &[Integer]) -> Vec<Rational> {
    let n = v.len();
    let mut rest: Vec<Rational> = v.iter().map(|x| Rational::from_integer(x.clone())).collect();
    let mut c = vec![Rational::zero(); n];
    for r in 0..n {
        c[r] = &rest[r] / Rational::from_integer(h[r][r].clone());
        if Zero::is_zero(&c[r]) {
            continue;
        }
        for j in r..n {
            rest[j] -= &c[r] * Rational::from_integer(h[r][j].clone());
        }
    }
    c
}

/// One Round-2 enlargement at `p`: returns the multiplier ring of the
/// p-radical (in coordinates of the current basis), or `None` if the order
/// is already p-maximal.
fn round2_step(t: &[Vec<Vec<Integer>>], one: &[Integer], p: u64) -> Option<Vec<Vec<Rational>>> {
    let n = one.len();
    let tp: Vec<Vec<Vec<u64>>> = t
        .iter()
        .map(|row| row.iter().map(|c| c.iter().map(|x| bigint_mod_u64(x, p)).collect()).collect())
        .collect();
    let one_p: Vec<u64> = one.iter().map(|x| bigint_mod_u64(x, p)).collect();
    let mut q = p;
    while (q as usize) < n {
        q *= p;
    }
    // Frobenius power is F_p-linear on O/pO; its kernel is the radical.
    let frob_cols: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut e = vec![0u64; n];
            e[i] = 1;
            pow_mod_elem(&tp, &e, q, &one_p, p)
        })
        .collect();
    let frob_rows: Vec<Vec<u64>> = (0..n).map(|r| frob_cols.iter().map(|c| c[r]).collect()).collect();
    let rad = kernel_mod_p(frob_rows, n, p);
    if rad.is_empty() {
        return None;
    }
    let ideal = lift_with_p(&rad, n, p);

    // U/pO = kernel of x ↦ (β ↦ xβ mod p·I).
    let mut rows: Vec<Vec<u64>> = vec![Vec::with_capacity(n); n * n];
    for i in 0..n {
        for (jb, beta) in ideal.iter().enumerate() {
            let mut prod = vec![Integer::zero(); n];
            for (k, bk) in beta.iter().enumerate() {
                if Zero::is_zero(bk) {
                    continue;
                }
                for (o, c) in prod.iter_mut().zip(&t[i][k]) {
                    *o += bk * c;
                }
            }
            let c = coords_in_hnf(&ideal, &prod);
            for (l, cl) in c.iter().enumerate() {
                debug_assert!(cl.is_integer(), "radical is an ideal");
                rows[jb * n + l].push(bigint_mod_u64(&cl.to_integer(), p));
            }
        }
    }
    let ker = kernel_mod_p(rows, n, p);
    let u = lift_with_p(&ker, n, p);
    let det = u.iter().enumerate().fold(Integer::one(), |acc, (i, r)| acc * &r[i]);
    if det == Integer::from(p).pow(n as u32) {
        return None;
    }
    let pr = Rational::from_integer(Integer::from(p));
    Some(u.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone()) / &pr).collect()).collect())
}

/// Enlarges `basis` to an order that is p-maximal at the prime `p`.
pub fn p_maximal_refine<A: FiniteAlgebra + ?Sized>(alg: &A, basis: &OrderBasis, p: u64) -> Result<OrderBasis> {
    let mut current = basis.clone();
    loop {
        let t = structure_constants(alg, &current)?;
        let one: Vec<Integer> = current.coords_of(&alg.one_coords()).into_iter().map(|q| q.to_integer()).collect();
        let Some(new_coords) = round2_step(&t, &one, p) else {
            break;
        };
        let elements = new_coords.iter().map(|c| current.element_from(c)).collect();
        let mut next = OrderBasis::new(alg, elements)?;
        next.is_maximal_attempted = current.is_maximal_attempted;
        next.maximality_prime_bound = current.maximality_prime_bound;
        next.refined_primes = current.refined_primes.clone();
        current = next;
    }
    if !current.refined_primes.contains(&p) {
        current.refined_primes.push(p);
    }
    Ok(current)
}

/// Applies [`p_maximal_refine`] at every prime `p ≤ bound` with `p²`
/// dividing the discriminant.
pub fn refine_up_to<A: FiniteAlgebra + ?Sized>(alg: &A, basis: &OrderBasis, bound: u64) -> Result<OrderBasis> {
    let mut current = basis.clone();
    for p in primes_up_to(bound) {
        let p2 = Integer::from(p * p);
        if Zero::is_zero(&(current.discriminant() % &p2)) {
            current = p_maximal_refine(alg, &current, p)?;
        }
    }
    current.is_maximal_attempted = true;
    current.maximality_prime_bound = bound;
    Ok(current)
}

/// Index `[O' : O]` of `basis` in `larger` (both orders of the same algebra).
pub fn index_in(basis: &OrderBasis, larger: &OrderBasis) -> Result<Integer> {
    let rows: Vec<Vec<Rational>> = basis.elements().iter().map(|e| larger.coords_of(e)).collect();
    if rows.iter().flatten().any(|q| !q.is_integer()) {
        return Err(Error::InvalidArgument("not a suborder".into()));
    }
    let int_rows = rows.into_iter().map(|r| r.into_iter().map(|q| q.to_integer()).collect()).collect();
    Ok(num_traits::Signed::abs(&det_bareiss(int_rows)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::zpoly;
    use crate::arith::ratio;
    use crate::numberfield::NumberField;

    #[test]
    fn golden_ratio_order() {
        let k = NumberField::new(zpoly(&[-5, 0, 1])).unwrap();
        let o = OrderBasis::standard(&*k).unwrap();
        assert_eq!(*o.discriminant(), Integer::from(20));
        let r = p_maximal_refine(&*k, &o, 2).unwrap();
        assert_eq!(*r.discriminant(), Integer::from(5));
        let half = vec![ratio(1, 2), ratio(1, 2)];
        assert!(r.coords_of(&half).iter().all(|q| q.is_integer()));
        assert_eq!(p_maximal_refine(&*k, &r, 2).unwrap().elements(), r.elements());
    }

    #[test]
    fn eisenstein_order() {
        let k = NumberField::new(zpoly(&[3, 0, 1])).unwrap();
        let o = OrderBasis::standard(&*k).unwrap();
        let r = p_maximal_refine(&*k, &o, 2).unwrap();
        assert_eq!(*r.discriminant(), Integer::from(-3));
        assert_eq!(index_in(&o, &r).unwrap(), Integer::from(2));
    }
}
