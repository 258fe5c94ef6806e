//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An integer grew past the configured bit budget.
    #[error("size limit exceeded: integer of {bits} bits exceeds budget of {budget} bits")]
    SizeLimitExceeded { bits: u64, budget: u64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("expected a nonzero homogeneous form in 2 variables: {reason}")]
    NotBinaryForm { reason: String },

    /// Forward/inverse composition failed to be the identity.
    /// `coordinate` is 1-based.
    #[error("not an automorphism: {direction} composition differs from identity at coordinate {coordinate}")]
    NotAutomorphism {
        direction: &'static str,
        coordinate: usize,
    },

    #[error("invalid parameter for catalog map `{family}`: {reason}")]
    InvalidParams { family: String, reason: String },

    #[error("unknown catalog map `{0}`")]
    UnknownFamily(String),

    #[error("point is periodic with period {period}; orbit counting is undefined")]
    PeriodicInput { period: u32 },

    /// Window stopping is unsound when the dynamical degree is 1.
    #[error("map has dynamical degree 1: an explicit horizon is required for orbit counting")]
    HorizonRequired,

    #[error("enumeration refused: about {estimate} points exceed the cap of {cap}")]
    EnumerationTooLarge { estimate: String, cap: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    /// delta-one is undefined when exactly one of the two dynamical degrees is 1.
    #[error("mixed dynamical degrees (one equal to 1, the other > 1) are rejected")]
    MixedDynamicalDegrees,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid resolution data: {0}")]
    ConeData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
