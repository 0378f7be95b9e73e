use thiserror::Error;

use crate::exactla::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("malformed scalar {0:?}")]
    MalformedScalar(String),

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("scalar {value} is not defined over {field}")]
    NotInField { value: String, field: Field },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("duplicate structure constant for e{left}*e{right} -> e{out}")]
    DuplicateProduct { left: usize, right: usize, out: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("word leaf x{0} has no assigned vector")]
    UnassignedLeaf(usize),

    #[error("generating set spans a subspace of dimension {dim} of {ambient}")]
    NotGenerating {
        dim: usize,
        ambient: usize,
        /// Characteristic-sequence prefix of the spanned subalgebra.
        partial: Vec<usize>,
    },

    #[error("evaluation budget exceeded: {needed} evaluations needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("unknown identity set {0:?}")]
    UnknownIdentity(String),

    #[error("unknown algebra family {0:?}")]
    UnknownFamily(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
