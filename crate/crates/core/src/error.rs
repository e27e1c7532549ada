use thiserror::Error;

/// Errors raised by field, matrix, subspace, flag, and construction routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {0} exceeds the supported size")]
    FieldTooLarge(u64),
    #[error("modulus is reducible over the prime field")]
    ReducibleModulus,
    #[error("expected degree {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {0} is not an element of the field")]
    NotAnElement(u64),
    #[error("polynomial is not monic")]
    NonMonic,
    #[error("polynomial is reducible")]
    Reducible,
    #[error("cannot factor {0} within the trial-division budget")]
    FactorizationTooLarge(u128),

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("row slice {0} out of range for a matrix with {1} rows")]
    SliceOutOfRange(String, usize),
    #[error("block dimensions inconsistent: {0}")]
    BlockDimMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix order exceeds the cap of {0}")]
    OrderCapExceeded(u64),

    #[error("generator has rank zero")]
    ZeroRank,
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("code needs at least two words")]
    TooFewWords,
    #[error("code is not of constant dimension")]
    NotConstantDim,
    #[error("bound not applicable: {0}")]
    HypothesisUnmet(String),

    #[error("invalid type vector: {0}")]
    InvalidType(String),
    #[error("prefix of length {0} is rank deficient")]
    RankDeficientPrefix(usize),
    #[error("matrix has {rows} rows, type needs {needed}")]
    TooFewRows { rows: usize, needed: usize },
    #[error("components are not strictly nested")]
    NotNested,
    #[error("type vectors differ")]
    TypeMismatch,
    #[error("flag code needs at least two flags")]
    TooFewFlags,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("type is not a subsequence of the code type")]
    NotASubsequence,
    #[error("ell = {0} is outside the admissible range")]
    EllOutOfRange(usize),

    #[error("invalid construction parameters: {0}")]
    InvalidParams(String),
    #[error("constructed {found} distinct subspaces, expected {expected}")]
    CardinalityMismatch { expected: u64, found: u64 },
    #[error("internal consistency check failed: {0}")]
    TheoremViolated(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures caused by a configured resource budget.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::FactorizationTooLarge(_) | Error::OrderCapExceeded(_) | Error::FieldTooLarge(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
