//! Independent re-derivation of the stored modular data from q-expansions:
//! eta quotients, newforms from point counts, the coordinates `u, v` of
//! `X₀(15)` and the modular invariant `j`.

pub mod eta;
pub mod identities;
pub mod newform;
pub mod uvseries;

pub use eta::{eta_quotient_series, j_series, EtaQuotientSpec, QSeries};
pub use identities::{check_with, owning_identity, verify_identities, verify_identity, Identity, IdentityReport, OracleSeries};
pub use newform::{ap_by_counting, newform_series, EllipticCurveW, Newform, NewformSeries};
pub use uvseries::uv_series;
