use thiserror::Error;

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring order {order} exceeds the configured maximum {max}")]
    OrderOverflow { order: u128, max: usize },

    #[error("malformed ring expression: {0}")]
    MalformedExpr(String),

    #[error("unknown {kind} '{name}'")]
    UnknownName { kind: &'static str, name: String },

    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),

    #[error("corner element {0} is not idempotent")]
    NotIdempotent(String),

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("literal out of range at position {pos}: {message}")]
    OutOfRange { pos: usize, message: String },

    #[error("element literal does not resolve in {ring}: {message}")]
    BadElement { ring: String, message: String },

    #[error("set is not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("{what} needs order <= {guard}, ring has order {order}")]
    SizeGuard { what: &'static str, order: usize, guard: usize },

    #[error("the trivial ring is not a valid argument")]
    DegenerateRing,

    #[error("element belongs to a different ring")]
    ForeignElement,

    #[error("generated subring has no multiplicative identity")]
    NoIdentity,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("classification contradiction: {0}")]
    ClassificationContradiction(String),

    #[error("no witness found: {0}")]
    WitnessNotFound(String),
}

impl AlgebraError {
    /// Guard and size errors are expected at scale and recorded as skips.
    pub fn is_skip(&self) -> bool {
        matches!(self, AlgebraError::SizeGuard { .. } | AlgebraError::OrderOverflow { .. })
    }
}
