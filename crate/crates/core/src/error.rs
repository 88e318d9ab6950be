use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by the word, code, channel, decoder and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A 1-indexed position fell outside the word.
    #[error("position {pos} out of range 1..={len}")]
    Position { pos: usize, len: usize },

    /// An invalid subword range.
    #[error("invalid subword range [{i1},{i2}] for a word of length {len}")]
    Range { i1: usize, i2: usize, len: usize },

    /// Period outside 1..=len.
    #[error("period {period} invalid for a word of length {len}")]
    Period { period: usize, len: usize },

    /// A deletion position was given twice.
    #[error("duplicate deletion position {pos}")]
    Duplicate { pos: usize },

    /// A deletion burst runs past the end of the word.
    #[error("burst of {len} starting at {pos} exceeds word length {word_len}")]
    Burst {
        pos: usize,
        len: usize,
        word_len: usize,
    },

    /// A word had a different length than the operation requires.
    #[error("length mismatch: expected {expected}, got {actual}")]
    Length { expected: usize, actual: usize },

    /// Invalid code parameters or unparsable code spec.
    #[error("invalid code spec: {0}")]
    Spec(String),

    /// Unparsable word, layout or class text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Rank/unrank index outside the codebook.
    #[error("index out of range: {0}")]
    IndexRange(String),

    /// A word that was required to be a codeword is not.
    #[error("not a codeword: {0}")]
    Membership(String),

    /// The code is empty, so redundancy is undefined.
    #[error("code is empty")]
    EmptyCode,

    /// An error pattern violates its structural or in-range invariants.
    #[error("invalid error pattern: {0}")]
    Pattern(String),

    /// No pattern of the requested class exists for these parameters.
    #[error("unsatisfiable error class: {0}")]
    Unsatisfiable(String),

    /// Decoder inputs violate a guarantee of the code construction.
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    /// The decoder could not produce a consistent codeword.
    #[error("decode failure: {0}")]
    DecodeFailure(String),

    /// No preimage matches the requested syndrome.
    #[error("syndrome error: {0}")]
    Syndrome(String),

    /// An exhaustive check would exceed its trial budget.
    #[error("verification budget exceeded: {required} trials > budget {limit}")]
    Budget { required: u128, limit: u128 },

    /// A rank/unrank table would exceed its memory budget.
    #[error("codebook index too large: {nodes} nodes > budget {limit}")]
    TableBudget { nodes: u128, limit: u128 },
}
