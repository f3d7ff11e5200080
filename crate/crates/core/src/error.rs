use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quantum characteristic must be at least 2, got {0}")]
    InvalidCharacteristic(usize),
    #[error("multicharge must have at least one entry")]
    EmptyMulticharge,
    #[error("residue {residue} is outside [0, {e})")]
    ResidueOutOfRange { residue: usize, e: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("residue count for {residue} is negative ({count})")]
    NegativeCount { residue: usize, count: i64 },
    #[error("alpha_({i},{j};{n}) is not a positive root")]
    InvalidRoot { i: usize, j: usize, n: i64 },
    #[error("coordinate index {index} is outside [1, {e}]")]
    CoordinateOutOfRange { index: usize, e: usize },
    #[error("block {0} is not in the support of V(Lambda)")]
    OutOfSupport(String),
    #[error("block {0} is not dominant")]
    NotDominant(String),
    #[error("multipartition has {found} components but the level is {expected}")]
    ComponentCountMismatch { expected: usize, found: usize },
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("runner {runner} would carry {count} beads; increase the shift")]
    NegativeBeadCount { runner: usize, count: i64 },
    #[error("component {component} needs more beads than the shift provides")]
    NegativeBeta { component: usize },
    #[error("point {0} lies on a wall")]
    OnWall(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("bead would leave the abacus: {0}")]
    AbacusBoundary(String),
    #[error("runner swap precondition fails for residue {residue}: beads move both ways")]
    SwapPrecondition { residue: usize },
    #[error("malformed abacus diagram: {0}")]
    AbacusParse(String),
}
