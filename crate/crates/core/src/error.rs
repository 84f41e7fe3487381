use thiserror::Error;

/// Errors surfaced by instance validation, policy execution, and the
/// collaboration transforms.
#[derive(Debug, Error)]
pub enum Error {
    #[error("hypothesis {0} has non-positive prior mass")]
    NonPositiveMass(usize),
    #[error("prior does not sum to 1 (sum = {0})")]
    PriorNotNormalized(String),
    #[error("hypothesis rows {0} and {1} are identical labelings")]
    DuplicateHypothesis(usize, usize),
    #[error("point {0} is owned by no agent")]
    UncoveredPoint(usize),
    #[error("restricting by label {label} on point {point} empties the version space")]
    EmptyResult { point: usize, label: bool },
    #[error("evidence is inconsistent with every hypothesis")]
    InconsistentEvidence,
    #[error("policy violation: {0}")]
    PolicyViolation(String),
    #[error("version space of {size} hypotheses exceeds the exhaustive-search cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("point {0} is owned by no participating agent")]
    NoOwner(usize),
    #[error("mixture weights must be positive and sum to exactly 1")]
    WeightsNotNormalized,
    #[error("epsilon must satisfy 0 < epsilon < {pool_size} (got {epsilon})")]
    InvalidEpsilon { epsilon: String, pool_size: usize },
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error("threshold grid is empty")]
    EmptyGrid,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
