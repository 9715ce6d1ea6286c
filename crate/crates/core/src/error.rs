//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors for spinor, transformation and quantifier computations.
#[derive(Debug, Error)]
pub enum Error {
    /// An index or argument outside its documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A vector that must be unit length is not.
    #[error("expected a unit 3-vector, got |v| = {norm}")]
    NonUnitVector { norm: f64 },

    /// A density-matrix routine received the convention it does not define.
    #[error("operation is not defined for the {0} convention")]
    UnsupportedConvention(&'static str),

    /// Terms of a mixture carry different conventions.
    #[error("cannot mix densities with different normalization conventions")]
    ConventionMismatch,

    /// A constructed density matrix missed the trace-1 requirement.
    #[error("trace deviates from 1 by {deviation} (tolerance {tolerance})")]
    TraceDeviation { deviation: f64, tolerance: f64 },

    /// A Hermitian-tagged matrix failed the Hermiticity or positivity check.
    #[error("matrix is not a valid hermitian-convention density: {0}")]
    NotHermitianDensity(String),

    /// A quantity that must be real carries an imaginary residue.
    #[error("{what}: imaginary residue {residual} exceeds tolerance")]
    NumericConsistency { what: &'static str, residual: f64 },

    /// Two construction routes that must agree do not.
    #[error("internal consistency failure in {what}: max deviation {deviation}")]
    InternalConsistency { what: &'static str, deviation: f64 },

    /// An operation precondition (purity, rank, parallelism, ...) is violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The magnetic field vanishes where a field direction is required.
    #[error("magnetic field has zero magnitude; field direction is undefined")]
    DegenerateField,

    /// Non-finite value encountered where finite data is required.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
