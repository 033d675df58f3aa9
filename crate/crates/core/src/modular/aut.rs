//! Group-theoretic checks on the automorphism table and the `s`-matrices.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::constants::{realify, AutMatrixSet, ModularData};
use crate::arith::{QMatrix, Rational, Ring};
use crate::numberfield::Eisenstein;

pub type EisMatrix = [[Eisenstein; 3]; 3];

pub fn eis_mul(a: &EisMatrix, b: &EisMatrix) -> EisMatrix {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| (0..3).fold(eis_zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
    })
}

pub fn eis_identity() -> EisMatrix {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| if i == j { eis_one() } else { eis_zero() })
    })
}

/// Entrywise `√−3 ↦ −√−3`.
pub fn eis_conj(a: &EisMatrix) -> EisMatrix {
    core::array::from_fn(|i| core::array::from_fn(|j| a[i][j].conj_nu()))
}

fn eis_zero() -> Eisenstein {
    Eisenstein::from_base(Rational::zero())
}

fn eis_one() -> Eisenstein {
    Eisenstein::from_base(num_traits::One::one())
}

/// All products of the generators, or `None` once more than `limit`
/// elements have appeared.
pub fn closure<T: Clone + PartialEq>(gens: &[T], identity: T, mul: impl Fn(&T, &T) -> T, limit: usize) -> Option<Vec<T>> {
    let mut elems = vec![identity];
    let mut frontier = elems.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = mul(x, g);
                if !elems.contains(&y) {
                    if elems.len() >= limit {
                        return None;
                    }
                    elems.push(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Some(elems)
}

/// Order of `⟨w₅, w₉, S⟩` (bounded search; `None` above 1000).
pub fn aut_group_order(table: &AutMatrixSet) -> Option<usize> {
    closure(&[table.w5.clone(), table.w9.clone(), table.s.clone()], eis_identity(), eis_mul, 1000).map(|g| g.len())
}

/// `^ν S = S²`.
pub fn s_is_nu_semilinear(table: &AutMatrixSet) -> bool {
    eis_conj(&table.s) == eis_mul(&table.s, &table.s)
}

/// Order of `⟨s₁, s₂, s₃, s₄⟩` (bounded search; `None` above 1000).
pub fn s_group_order(md: &ModularData) -> Option<usize> {
    let s = md.s_matrices();
    closure(&s, QMatrix::identity(6, &Rational::zero()), |a, b| a.mul(b), 1000).map(|g| g.len())
}

/// The `s`-matrices predicted from the automorphism table: `σ₁ ↦ S`,
/// `σ₂ ↦ w₉`, `σ₃ ↦ w₅` realified, and `ν` acting as `w₅` composed with
/// complex conjugation of the scalars.
pub fn s_matrices_from_table(table: &AutMatrixSet) -> [QMatrix; 4] {
    let conj = QMatrix::from_rows(
        (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| {
                        if i != j {
                            Rational::zero()
                        } else if i < 3 {
                            num_traits::One::one()
                        } else {
                            -Rational::from_integer(1.into())
                        }
                    })
                    .collect()
            })
            .collect(),
        &Rational::zero(),
    );
    let w5 = realify(&table.w5);
    [realify(&table.s), realify(&table.w9), w5.clone(), conj.mul(&w5)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn automorphism_group() {
        let md = ModularData::builtin();
        let t = md.aut_table();
        assert_eq!(aut_group_order(&t), Some(24));
        assert!(s_is_nu_semilinear(&t));
        let s3 = eis_mul(&t.s, &eis_mul(&t.s, &t.s));
        assert_eq!(s3, eis_identity());
        assert_eq!(eis_mul(&t.w5, &t.w5), eis_identity());
        assert_eq!(eis_mul(&t.w9, &t.w9), eis_identity());
    }

    #[test]
    fn s_matrices_match_table() {
        let md = ModularData::builtin();
        let s = md.s_matrices();
        assert_eq!(s_matrices_from_table(&md.aut_table()), s);
        assert_eq!(s_group_order(&md), Some(48));
        for i in 0..3 {
            assert_eq!(s[3].mul(&s[i]), s[i].mul(&s[3]));
        }
        assert!(s[0].pow(3).is_identity());
        for m in &s[1..] {
            assert!(m.pow(2).is_identity());
        }
    }
}
