use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("unbalanced configuration: {positives} particles on the positive half-line, {holes} holes on the negative half-line")]
    Unbalanced { positives: usize, holes: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("Bessel recurrence did not converge below depth {depth}")]
    NonConvergence { depth: usize },
    #[error("insufficient specialization data: need h_{needed}, have {available}")]
    InsufficientSpecialization { needed: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
