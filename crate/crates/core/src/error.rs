use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cycle notation parse error: {0}")]
    Parse(String),
    #[error("group closure exceeded cap of {cap} elements")]
    ClosureCap { cap: usize },
    #[error("degree {degree} too large for brute force (limit {limit})")]
    DegreeTooLarge { degree: usize, limit: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("pair invariant is not stable under the group: {0}")]
    UnstableInvariant(String),
    #[error("matrix does not commute with the group action")]
    NonCommuting,
    #[error("enumeration bound exceeded: 2^{dim} > 2^{limit}")]
    EnumerationBound { dim: usize, limit: usize },
    #[error("subgroup order {order} exceeds cap {cap}")]
    SubgroupCap { order: usize, cap: usize },
    #[error("not an idempotent")]
    NotIdempotent,
    #[error("precision 2^{bits} too small for values up to {bound}")]
    PrecisionTooSmall { bits: u32, bound: u64 },
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
