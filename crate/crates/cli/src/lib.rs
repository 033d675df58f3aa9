//! Command-line front end for the `twist53-core` pipeline: validation,
//! model construction, artifact IO, point search, moduli and fibres.

pub mod artifact;
pub mod commands;
pub mod error;
pub mod parse;

pub use artifact::{LoadedModel, ModelArtifact};
pub use commands::{CommandConfig, FiberTarget, Report};
pub use error::{CliError, CliResult};
