use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot mix series variables and matrix-entry variables in one polynomial")]
    MixedVariables,
    #[error("denominator factor must have constant term 1")]
    BadSeriesFactor,
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("partition {lambda} has more than {d} rows")]
    TooManyRows { lambda: String, d: usize },
    #[error("polynomial is not symmetric in t1..t{0}")]
    NotSymmetric(usize),
    #[error("negative or fractional Schur multiplicity for {0}")]
    NotSchurPositive(String),
    #[error("number of matrices must be at least 2 (got {0})")]
    TooFewMatrices(usize),
    #[error("matrix index {index} out of range 1..={d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("standard polynomial degree {0} outside 2..=5")]
    StandardPolyDegree(usize),
    #[error("expected multidegree {expected}, found {found}")]
    Multidegree { expected: String, found: String },
    #[error("not a highest weight vector")]
    NotHighestWeight,
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("negative coefficient in {0}")]
    NegativeCoefficient(String),
    #[error("no catalog entries for degree {degree}, lambda {lambda}")]
    MissingCatalog { degree: usize, lambda: String },
    #[error("coefficient vector has length {found}, expected {expected}")]
    CoefficientLength { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
