//! LLL reduction of integer lattices with exact rational Gram-Schmidt data.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::ring::{Integer, Rational};

fn dot(a: &[Integer], b: &[Integer]) -> Integer {
    a.iter().zip(b).fold(Integer::zero(), |acc, (x, y)| acc + x * y)
}

fn round(q: &Rational) -> Integer {
    (q + Rational::new(Integer::one(), Integer::from(2))).floor().to_integer()
}

/// LLL-reduces linearly independent integer row vectors in place
/// (Lovász constant 3/4). The result spans the same lattice and is
/// deterministic for a given input order.
pub fn lll_reduce(basis: &mut [Vec<Integer>]) {
    let n = basis.len();
    if n < 2 {
        return;
    }
    let delta = Rational::new(Integer::from(3), Integer::from(4));
    // Gram-Schmidt coefficients and squared norms, recomputed from scratch
    // after every change: the bases reduced here have at most a handful of
    // vectors, so clarity wins over the incremental update formulas.
    let gso = |b: &[Vec<Integer>]| -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let mut mu = vec![vec![Rational::zero(); n]; n];
        let mut bstar: Vec<Vec<Rational>> = Vec::with_capacity(n);
        let mut norms = Vec::with_capacity(n);
        for i in 0..n {
            let mut v: Vec<Rational> = b[i].iter().map(|x| Rational::from_integer(x.clone())).collect();
            for j in 0..i {
                if norms[j] == Rational::zero() {
                    continue;
                }
                let num = b[i]
                    .iter()
                    .zip(&bstar[j])
                    .fold(Rational::zero(), |acc, (x, y): (&Integer, &Rational)| acc + Rational::from_integer(x.clone()) * y);
                let m = num / &norms[j];
                for (vk, bk) in v.iter_mut().zip(&bstar[j]) {
                    *vk -= &m * bk;
                }
                mu[i][j] = m;
            }
            norms.push(v.iter().fold(Rational::zero(), |acc, x| acc + x * x));
            bstar.push(v);
        }
        (mu, norms)
    };
    let (mut mu, mut norms) = gso(basis);
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let q = round(&mu[k][j]);
            if !q.is_zero() {
                let bj = basis[j].clone();
                for (x, y) in basis[k].iter_mut().zip(&bj) {
                    *x -= &q * y;
                }
                (mu, norms) = gso(basis);
            }
        }
        let lhs = &norms[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            (mu, norms) = gso(basis);
            k = (k - 1).max(1);
        }
    }
}

/// Squared Euclidean norm.
pub fn norm2(v: &[Integer]) -> Integer {
    dot(v, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_short_vector() {
        // Lattice {(m, 0), (0, m), (a, 1)} with a ≡ 3·5⁻¹: the point (3 : 5) is recognised.
        let m = Integer::from(1_000_003);
        let a = Integer::from(3) * crate::arith::int::mod_inverse(&Integer::from(5), &m).unwrap() % &m;
        let mut b = vec![
            vec![m.clone(), Integer::zero()],
            vec![a, Integer::one()],
        ];
        lll_reduce(&mut b);
        let v = &b[0];
        assert!(v == &vec![Integer::from(3), Integer::from(5)] || v == &vec![Integer::from(-3), Integer::from(-5)]);
    }
}
