use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors from sequence construction, alignment, scoring, and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("sequence must have n >= 1 and d >= 1, got n={n}, d={d}")]
    EmptySequence { n: usize, d: usize },

    #[error("data length {len} does not match n*d = {n}*{d}")]
    ShapeMismatch { len: usize, n: usize, d: usize },

    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRow { row: usize, got: usize, expected: usize },

    #[error("non-finite entry at row {row}, column {col}")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("embedding dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid partition boundaries: {reason}")]
    InvalidBoundaries { reason: String },

    #[error("chunk range [{i}, {j}) is empty")]
    EmptyRange { i: usize, j: usize },

    #[error("chunk range [{i}, {j}) out of bounds for sequence of length {n}")]
    RangeOutOfBounds { i: usize, j: usize, n: usize },

    #[error("partition has {chunks} chunks but text has {tokens} tokens")]
    ChunkCountMismatch { chunks: usize, tokens: usize },

    #[error("cannot split length-{n} sequence into {m} nonempty chunks")]
    SequenceTooShort { n: usize, m: usize },

    #[error("{combinations} partitions exceed the enumeration cap of {cap}")]
    EnumerationCapExceeded { combinations: u128, cap: u64 },

    #[error("label must be 0 or 1, got {value}")]
    InvalidLabel { value: u64 },

    #[error("margins must satisfy 0 <= m_pos < m_neg, got m_pos={m_pos}, m_neg={m_neg}")]
    InvalidMargins { m_pos: f64, m_neg: f64 },

    #[error("distance must be finite and nonnegative, got {z}")]
    InvalidDistance { z: f64 },

    #[error("batch has {zs} distances but {labels} labels")]
    BatchLengthMismatch { zs: usize, labels: usize },

    #[error("batch is empty")]
    EmptyBatch,

    #[error("need at least one positive and one negative, got {n_pos} positives and {n_neg} negatives")]
    SingleClass { n_pos: usize, n_neg: usize },

    #[error("non-finite cost for scored pair {id:?}")]
    NonFiniteCost { id: String },

    #[error("invalid generator config: {reason}")]
    InvalidConfig { reason: String },
}
