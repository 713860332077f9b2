//! Error type shared by all library layers.
//!
//! Contract violations that cannot be triggered by external input (series
//! order mismatches, inverting a non-unit, a genus that should be an integer
//! coming out non-integral) panic instead: they always indicate a bug, never
//! bad data.

use std::fmt;

/// Errors reachable from user-supplied data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Complex dimension must be at least 1.
    InvalidDimension(i64),
    /// Hypersurface degrees must be at least 1.
    InvalidDegree(i64),
    /// The signature is only defined for even complex dimension
    /// (real dimension divisible by 4).
    OddComplexDimension(u32),
    /// A genus query needs the characteristic series to at least the
    /// complex dimension of the target.
    InsufficientSeriesOrder { required: usize, actual: usize },
    /// A Betti vector failed validation (length, duality, connectivity).
    InvalidBettiProfile(String),
    /// A fixed component failed validation.
    InvalidFixedComponent(String),
    /// A fixed point set must contain at least one component.
    EmptyFixedPointSet,
    /// An index is out of range for the target it is checked against.
    IndexOutOfRange(String),
    /// A document failed to parse; the message carries line and field
    /// diagnostics from the parser.
    ParseError(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDimension(n) => {
                write!(f, "invalid complex dimension {}: must be at least 1", n)
            }
            Error::InvalidDegree(d) => {
                write!(f, "invalid degree {}: must be at least 1", d)
            }
            Error::OddComplexDimension(n) => write!(
                f,
                "signature undefined for complex dimension {}: real dimension {} is not divisible by 4",
                n,
                2 * n
            ),
            Error::InsufficientSeriesOrder { required, actual } => write!(
                f,
                "characteristic series order {} is below the required order {}",
                actual, required
            ),
            Error::InvalidBettiProfile(msg) => write!(f, "invalid Betti profile: {}", msg),
            Error::InvalidFixedComponent(msg) => write!(f, "invalid fixed component: {}", msg),
            Error::EmptyFixedPointSet => {
                write!(f, "fixed point set is empty: a Hamiltonian on a closed manifold has critical points")
            }
            Error::IndexOutOfRange(msg) => write!(f, "index out of range: {}", msg),
            Error::ParseError(msg) => write!(f, "parse error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
