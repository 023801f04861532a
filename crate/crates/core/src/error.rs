use thiserror::Error;

use crate::signature::Signature;

/// Errors raised by constructions and exact arithmetic in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("dimension {n} exceeds the cap of {cap}")]
    DimensionCap { n: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("value is not representable as a dyadic rational: {0}")]
    NotDyadic(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("quadratic norm is not a scalar: {0}")]
    NonScalarNorm(String),

    #[error("element does not stabilize the vector space: {0}")]
    NotInCliffordGroup(String),

    #[error("generating set invariant violated for {sig}: {detail}")]
    GeneratingSet { sig: Signature, detail: String },

    #[error("internal inconsistency for {sig}: {detail}")]
    Inconsistent { sig: Signature, detail: String },

    #[error("basis is linearly dependent for {sig}: {detail}")]
    Dependent { sig: Signature, detail: String },

    #[error("element is not in the left ideal: {0}")]
    NotInIdeal(String),

    #[error("element lies outside the span of the basis: {0}")]
    NoSolution(String),

    #[error("relation violated: {0}")]
    RelationViolation(String),

    #[error("coordinates do not fold into ring scalars: {0}")]
    FoldFailure(String),

    #[error("ring tag mismatch: {0}")]
    TagMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("unknown fixture: {0}")]
    UnknownFixture(String),

    #[error("octonion flavour mismatch")]
    SplitMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
