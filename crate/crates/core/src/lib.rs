//! Exact computation of plane quartic models for the twists `X(5,3)_ρ` of the
//! modular curve `X(5,3) ≅ X₀(45)` attached to surjective representations
//! `ρ: G_Q → PGL₂(F₃)`, given by an `S₄` quartic.
//!
//! The crate is `no_std` (it needs `alloc`) and purely algorithmic. File
//! formats, the command line and threading live in the `twist53` crate.
//!
//! Layout:
//! - [`arith`]: rationals, polynomials, matrices, lattices, truncated series.
//! - [`numberfield`]: absolute fields, the splitting algebra of a quartic,
//!   quadratic extensions and order refinement.
//! - [`modular`]: the fixed modular data of `X₀(45)` and the covering maps
//!   down to `X⁺(5)`.
//! - [`oracle`]: independent q-expansion checks of every stored constant.
//! - [`twist`]: the fixed-space construction and the twisted quartic.
//! - [`moduli`]: rational points, the moduli map and fibres over `t`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
mod error;
pub mod moduli;
pub mod modular;
pub mod numberfield;
pub mod oracle;
pub mod twist;

pub use error::{Error, Result};
