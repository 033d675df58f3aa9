//! The twisting construction: fixed differentials of the twisted Galois
//! action and the resulting plane quartic over `Q`.

pub mod engine;

pub use engine::{
    basis_forms, build_w, compute_theta, fixed_space, sigma_matrices, twist_basis, ThetaMatrix, TwistBasis, TWIST_DIM,
};
pub mod quartic;

pub use quartic::{substitute_theta, twisted_model, PlaneQuartic, TwistedModel};
