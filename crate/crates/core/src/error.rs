use thiserror::Error;

use crate::algebra::LaurentPoly;

/// Errors raised by the engine.
///
/// Most variants signal a transcription error in a closed form (a division
/// that does not close, a negative multiplicity, a failed two-route
/// comparison) rather than bad user input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot combine a polynomial in q with a polynomial in u, v")]
    MixedAlias,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("division is not exact, remainder {remainder}")]
    NonExactDivision { remainder: Box<LaurentPoly> },

    #[error("t^2 -> q requested on a polynomial with odd powers of t")]
    OddTSubstitution,

    #[error("negative power of {var} requires a monomial image, got {image}")]
    NonMonomialInverse { var: char, image: Box<LaurentPoly> },

    #[error("reciprocal of a series with zero constant term")]
    NonUnitConstantTerm,

    #[error("cannot expand as a power series: {0}")]
    NotASeries(String),

    #[error("series variables differ ({0} vs {1})")]
    SeriesVariableMismatch(char, char),

    #[error("genus must be at least {min}, got {genus}")]
    InvalidGenus { genus: u32, min: u32 },

    #[error("unsupported group {0} for this operation")]
    UnsupportedGroup(&'static str),

    #[error("unsupported invariant kind {0} for this operation")]
    UnsupportedKind(&'static str),

    #[error("{0} requires a side (betti or dolbeault)")]
    MissingSide(&'static str),

    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),

    #[error("primitive part would be negative in degree {degree}")]
    NegativePrimitive { degree: usize },

    #[error("negative multiplicity {value} at index {index}")]
    NegativeMultiplicity { index: i64, value: String },

    #[error("non-integer coefficient in {0}")]
    NonIntegerCoefficient(String),

    #[error("negative coefficient in {0}")]
    NegativeCoefficient(String),

    #[error("{0} is not palindromic")]
    PalindromyFailure(String),

    #[error("identity mismatch: {0}")]
    IdentityMismatch(String),

    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),

    #[error("expansion mismatch: {0}")]
    ExpansionMismatch(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
