//! Exact arithmetic: integers, rationals, finite rings, polynomials,
//! matrices, lattices and truncated Laurent series.

pub mod int;
pub mod jet;
pub mod lattice;
pub mod matrix;
pub mod modular;
pub mod mpoly;
pub mod poly;
pub mod ring;
pub mod series;

pub use jet::Jet;
pub use matrix::{Matrix, QMatrix};
pub use modular::{Fp, Zn};
pub use mpoly::MultiPoly;
pub use poly::UniPoly;
pub use ring::{rat, ratio, Integer, Rational, Ring};
pub use series::TruncSeries;

use alloc::vec::Vec;

/// Elements of a finite-dimensional Q-algebra with a fixed Q-basis.
pub trait QCoords: Ring {
    /// Coordinates with respect to the algebra's fixed Q-basis.
    fn q_coords(&self) -> Vec<Rational>;
}

impl QCoords for Rational {
    fn q_coords(&self) -> Vec<Rational> {
        alloc::vec![self.clone()]
    }
}

/// `Some(r)` with `x = r·y` and `r ∈ Q`, `None` if no such rational exists.
/// `y` must be nonzero.
pub fn rational_ratio<R: QCoords>(x: &R, y: &R) -> Option<Rational> {
    let xs = x.q_coords();
    let ys = y.q_coords();
    let pivot = ys.iter().position(|c| !Ring::is_zero_elem(c))?;
    let r = &xs[pivot] / &ys[pivot];
    xs.iter()
        .zip(&ys)
        .all(|(a, b)| *a == &r * b)
        .then_some(r)
}
