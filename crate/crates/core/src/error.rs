use alloc::string::String;

/// Errors raised by the exact pipeline.
///
/// Variants fall into two groups: rejected input (`NotIrreducible`, `NotS4`,
/// `CyclotomicDeterminant`, ...) and internal inconsistencies that can only be
/// caused by a bug or a corrupted constant (`DimensionMismatch`,
/// `TwistInconsistent`, `TNotRational`, ...). [`Error::is_input_error`] tells
/// them apart.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial is not a quartic with nonzero leading coefficient")]
    NotQuartic,
    #[error("polynomial is reducible over Q")]
    NotIrreducible,
    #[error("Galois group is not S4 ({0})")]
    NotS4(&'static str),
    #[error("squarefree part of the discriminant is -3 (cyclotomic determinant)")]
    CyclotomicDeterminant,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("division by a non-unit")]
    DivisionByZero,
    #[error("zero denominator at stage `{0}`")]
    ZeroDenominator(&'static str),
    #[error("fixed space has dimension {0}, expected 3")]
    DimensionMismatch(usize),
    #[error("basis-change matrix is singular")]
    SingularTheta,
    #[error("substituted quartic is not a scalar multiple of a rational quartic")]
    TwistInconsistent,
    #[error("output quartic is singular")]
    SingularModel,
    #[error("moduli value t is not rational")]
    TNotRational,
    #[error("point does not lie on the quartic")]
    NotOnCurve,
    #[error("t-value is a pole of the covering chain")]
    ChainPole,
    #[error("elimination degenerated: {0}")]
    DegenerateElimination(&'static str),
    #[error("no primitive element found among the candidates")]
    NoPrimitiveElement,
    #[error("resource limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid data: {0}")]
    InvalidData(String),
}

impl Error {
    /// True for errors caused by unacceptable input rather than by an
    /// internal inconsistency.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NotQuartic
                | Error::NotIrreducible
                | Error::NotS4(_)
                | Error::CyclotomicDeterminant
                | Error::ZeroPolynomial
                | Error::InvalidArgument(_)
                | Error::NotOnCurve
                | Error::ChainPole
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;
