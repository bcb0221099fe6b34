use thiserror::Error;

/// Errors surfaced by the library.
///
/// Everything here is a contract violation by the caller or a configured
/// resource limit; no operation in this crate can fail for numeric reasons
/// (all arithmetic is exact and unbounded).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generator count: N must be at least 1")]
    InvalidGeneratorCount,

    #[error("invalid expansion: {0}")]
    InvalidExpansion(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size too large: {size} exceeds limit {limit}")]
    SizeTooLarge { size: usize, limit: usize },

    #[error("parity error: {0} is odd")]
    ParityError(usize),

    #[error("invalid block type: {0}")]
    InvalidBlockType(String),

    #[error("type/size mismatch: block sizes sum to {type_sum}, ground set has {size}")]
    BlockTypeMismatch { type_sum: usize, size: usize },

    #[error("incompatible partitions: ground sets of size {left} and {right}")]
    IncompatiblePartitions { left: usize, right: usize },

    #[error("insufficient moments: need index {needed}, sequence has length {available}")]
    InsufficientMoments { needed: usize, available: usize },

    #[error("order not computed: index {requested} beyond max order {max_order}")]
    OrderNotComputed { requested: usize, max_order: usize },

    #[error("oracle budget: needs {required} states, budget is {budget}")]
    OracleBudget { required: u128, budget: usize },

    #[error("invalid letter: generator index out of range 1..=N")]
    InvalidLetter,
}

pub type Result<T> = std::result::Result<T, Error>;
