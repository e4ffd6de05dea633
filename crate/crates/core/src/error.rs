use num_bigint::BigUint;
use thiserror::Error;

/// Two `t`-subsets of points that lie in a different number of blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountWitness {
    pub first: Vec<usize>,
    pub first_count: u64,
    pub second: Vec<usize>,
    pub second_count: u64,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "not a design: {:?} lies in {} blocks but {:?} lies in {}",
        .0.first, .0.first_count, .0.second, .0.second_count
    )]
    NotADesign(CountWitness),

    #[error("the block family is empty")]
    EmptyFamily,

    #[error("strength {t} is out of range for block size {k}")]
    InvalidStrength { t: usize, k: usize },

    #[error("r_{s} = {numerator}/{denominator} is not an integer")]
    NonIntegral {
        s: usize,
        numerator: BigUint,
        denominator: BigUint,
    },

    #[error("point {0} lies in no block")]
    IsolatedPoint(usize),

    #[error("malformed design: {0}")]
    MalformedDesign(String),

    #[error("audit failed ({check}): {detail}")]
    AuditFailed { check: String, detail: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("enumeration needs {required} candidates, budget is {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },

    #[error("invalid design spec: {0}")]
    SpecInvalid(String),

    #[error("{0:?} is not a zero-sum block of distinct nonzero vectors")]
    NotAZeroSumBlock(Vec<u32>),

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn audit(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::AuditFailed {
            check: check.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
