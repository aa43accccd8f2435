use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("exponent {k} is not coprime to cyclotomic order {order}")]
    NotCoprime { k: i64, order: u32 },

    #[error("invalid cyclotomic order {0}")]
    InvalidOrder(u32),

    #[error("permutation images are not a bijection of 0..{0}")]
    NotABijection(usize),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("cannot parse cycle notation {input:?}: {reason}")]
    CycleParse { input: String, reason: String },

    #[error("group order exceeds the enumeration guard of {0} elements")]
    OrderGuard(usize),

    #[error("generator set is empty and no degree was supplied")]
    EmptyGenerators,

    #[error("subgroup is not contained in the ambient group")]
    NotASubgroup,

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("quotient is not elementary abelian of order 4")]
    NotKleinQuotient,

    #[error("group has {classes} classes and order {order}; character table guard exceeded")]
    TableGuard { classes: usize, order: usize },

    #[error("eigenspace splitting did not diagonalise the class algebra modulo {prime}")]
    SplitFailure { prime: u64 },

    #[error("lifted multiplicity {value} outside [0, {degree}] for class {class}")]
    LiftOutOfRange { class: usize, value: u64, degree: u64 },

    #[error("character table fails orthogonality: {0}")]
    Orthogonality(String),

    #[error("no fixed-point count recorded for element order {0}")]
    MissingOrder(usize),

    #[error("extension precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
