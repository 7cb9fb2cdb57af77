//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Vector or matrix dimensions do not match.
    DimensionMismatch { expected: usize, got: usize },
    /// Basis index outside 0..dim.
    IndexOutOfRange { index: usize, dim: usize },
    /// Metric needs 2p + k ≥ 3.
    DimensionTooSmall,
    SingularMatrix,
    NotNilpotent,
    /// The structure constants violate the Jacobi identity.
    NotLieAlgebra,
    NotSolvable,
    /// The chain construction needs an ad-eigenvalue the exact rational
    /// engine cannot represent (irrational real or complex); reported,
    /// never approximated.
    IrrationalEigenvalue(String),
    /// A full ideal flag exists but no ordering satisfied the refinement
    /// conditions within the search budget.
    FrameSearchFailed(String),
    /// boost_act with numeric λ requires an integral exponent on every
    /// support element.
    NonIntegralExponent,
    NegativeWeight,
    InvalidCertificate(String),
    PreconditionFailed(String),
    UnknownName(String),
    MissingParameter(String),
    InvalidStructureConstant(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::IndexOutOfRange { index, dim } => {
                write!(f, "index {index} out of range for dimension {dim}")
            }
            Error::DimensionTooSmall => write!(f, "metric needs 2p + k >= 3"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::NotNilpotent => write!(f, "operator is not nilpotent"),
            Error::NotLieAlgebra => {
                write!(f, "structure constants violate the Jacobi identity")
            }
            Error::NotSolvable => write!(f, "Lie algebra is not solvable"),
            Error::IrrationalEigenvalue(d) => {
                write!(f, "no rational ad-eigenvalue available ({d}); not completely solvable over the rationals")
            }
            Error::FrameSearchFailed(d) => write!(f, "frame search failed: {d}"),
            Error::NonIntegralExponent => {
                write!(f, "non-integral boost exponent with numeric scale factor")
            }
            Error::NegativeWeight => write!(f, "weight vector entries must be nonnegative"),
            Error::InvalidCertificate(d) => write!(f, "invalid certificate: {d}"),
            Error::PreconditionFailed(d) => write!(f, "precondition failed: {d}"),
            Error::UnknownName(n) => write!(f, "unknown catalog entry: {n}"),
            Error::MissingParameter(n) => write!(f, "missing or unknown parameter: {n}"),
            Error::InvalidStructureConstant(d) => {
                write!(f, "invalid structure constant: {d}")
            }
        }
    }
}

impl core::error::Error for Error {}
