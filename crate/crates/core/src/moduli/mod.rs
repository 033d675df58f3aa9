//! Rational points on a twisted model and their moduli: the value `t` on
//! `X⁺(5)` and the conjugate pair of `j`-invariants over `k`.
//!
//! Complex multiplication is not detected; callers compare the returned
//! `j`-invariants with CM lists themselves.

pub mod fiber;
pub mod point;
pub mod search;

pub use fiber::{fiber_over_t, FiberConfig, PadicEmbedding};
pub use point::{moduli_point, Classification, ModuliPoint};
pub use search::{search_points, search_points_range, ProjPoint, Sieve};
