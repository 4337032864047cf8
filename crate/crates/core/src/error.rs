use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("bead count {beads} too small for a partition of size {size} with {parts} parts")]
    BeadCountTooSmall { beads: usize, size: usize, parts: usize },
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("delta is not invertible in the active field")]
    DeltaNotInvertible,
    #[error("diagrams live in different sets")]
    IncomparableDomain,
    #[error("label {label} is larger than n = {n}")]
    LabelTooLarge { label: String, n: usize },
    #[error("modules have different generator lists")]
    GeneratorMismatch,
    #[error("no split or simplicity certificate after {0} attempts")]
    ChopBudgetExceeded(usize),
    #[error("could not identify factor of dimension {dim}: candidates {candidates:?}")]
    IdentificationFailed { dim: usize, candidates: Vec<String> },
    #[error("partition {0} is p-singular")]
    PSingularLabel(String),
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("dimension {dim} exceeds bound {bound}")]
    DeskScaleExceeded { dim: usize, bound: usize },
    #[error("two parameter pairs start at the same label: {0}")]
    AmbiguousPair(String),
    #[error("block is not a chain of consecutive pairs: {0}")]
    ChainShapeViolation(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
