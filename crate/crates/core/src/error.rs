use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {n} outside supported range {min}..={max}")]
    DimensionOutOfRange { n: usize, min: usize, max: usize },

    #[error("index ({i}, {j}) out of range for a {n}x{n} matrix")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("assignment does not respect the matrix family: {0}")]
    SpecViolation(String),

    #[error("diagonal entry ({0}, {0}) is not fixed at 1")]
    DiagonalNotFixed(usize),

    #[error("series constant term must be 1")]
    NonUnitLeadingTerm,

    #[error("r = {0} lies outside [0, 1]")]
    Domain(String),

    #[error("enumeration needs {needed} assignments, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid value set: {0}")]
    InvalidValueSet(String),

    #[error("coefficient table does not belong to this matrix family")]
    SpecMismatch,

    #[error("invalid coefficient table: {0}")]
    InvalidTable(String),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
