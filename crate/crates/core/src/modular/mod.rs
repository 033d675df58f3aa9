//! The fixed modular geometry of `X₀(45) ≅ X(5,3)`: the canonical quartic,
//! the automorphism table, the `s`-matrices of the twisted Galois action and
//! the chain of coverings down to `X⁺(5)` with the `j`–`t` relation.

pub mod aut;
pub mod chain;
pub mod constants;

pub use chain::{downstairs_chain, j_from_t, projective_chain, t_from_j, uv_from_xy, x015_coordinates, Downstairs, JPair, WeightedChain};
pub use constants::{realify, AutMatrixSet, ModularData, Poly2};
