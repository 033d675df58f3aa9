//! The moduli map: a rational point of the twist, its image on `X⁺(5)` and
//! the pair of conjugate `j`-invariants above it.

use crate::arith::{rational_ratio, Integer, Rational};
use crate::modular::{j_from_t, projective_chain, JPair, ModularData};
use crate::twist::ThetaMatrix;
use crate::{Error, Result};

use super::search::ProjPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Ordinary,
    /// Some stage of the chain degenerates; the point is not covered by
    /// the moduli interpretation.
    CuspOrExceptional,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Ordinary => "ordinary",
            Classification::CuspOrExceptional => "cusp_or_exceptional",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuliPoint {
    pub point: ProjPoint,
    pub classification: Classification,
    /// Present for ordinary points.
    pub t: Option<Rational>,
    pub j_pair: Option<JPair>,
    /// The chain stage that degenerated, for exceptional points.
    pub stage: Option<&'static str>,
}

/// Sends `P` to `(ω̄₁ : ω̄₂ : ω̄₃) = P·Θ` and runs the covering chain down to
/// `t`, which must be rational. `radicand` (the radicand of `k`) is tried
/// first when splitting the `j`-pair.
pub fn moduli_point(
    p: &ProjPoint,
    theta: &ThetaMatrix,
    md: &ModularData,
    radicand: Option<&Integer>,
) -> Result<ModuliPoint> {
    let omega = theta.omega_at(&p.as_rationals());
    let exceptional = |stage| ModuliPoint {
        point: p.clone(),
        classification: Classification::CuspOrExceptional,
        t: None,
        j_pair: None,
        stage: Some(stage),
    };
    if omega.iter().all(crate::arith::Ring::is_zero_elem) {
        return Err(Error::SingularTheta);
    }
    let chain = match projective_chain(md, &omega) {
        Ok(c) => c,
        Err(Error::ZeroDenominator(stage)) => return Ok(exceptional(stage)),
        Err(e) => return Err(e),
    };
    let t = rational_ratio(&chain.t_num, &chain.t_den).ok_or(Error::TNotRational)?;
    let j_pair = j_from_t(md, &t, radicand)?;
    Ok(ModuliPoint {
        point: p.clone(),
        classification: Classification::Ordinary,
        t: Some(t),
        j_pair: Some(j_pair),
        stage: None,
    })
}
