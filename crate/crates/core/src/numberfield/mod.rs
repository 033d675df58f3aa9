//! Number fields: absolute fields, the splitting field of an `S₄` quartic
//! with its Galois action, `K = L(√−3)`, and orders.

pub mod field;
pub mod order;
pub mod quadext;
pub mod quadratic;
pub mod splitting;
pub mod tower;

pub use field::{NfElem, NumberField};
pub use order::{p_maximal_refine, OrderBasis};
pub use quadext::{Eisenstein, QuadExt};
pub use quadratic::QuadraticNumber;
pub use splitting::{validate_quartic, Automorphism, QuarticInfo, SplittingContext};
pub use tower::{RootTower, TowerElem};

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::Rational;

/// `L(√−3)` with `L` the splitting field in tower form.
pub type KElem = QuadExt<TowerElem>;

/// A commutative Q-algebra of finite dimension with a fixed Q-basis.
pub trait FiniteAlgebra {
    fn dim(&self) -> usize;
    fn mul_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational>;
    fn one_coords(&self) -> Vec<Rational>;

    /// Traces of the basis elements.
    fn trace_vector(&self) -> Vec<Rational> {
        let n = self.dim();
        let unit = |i: usize| {
            let mut v = vec![Rational::zero(); n];
            v[i] = num_traits::One::one();
            v
        };
        (0..n)
            .map(|m| (0..n).fold(Rational::zero(), |acc, k| acc + &self.mul_coords(&unit(m), &unit(k))[k]))
            .collect()
    }
}
