use thiserror::Error;

/// Errors produced by braid constructions and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("generator index {letter} out of range for {strands} strands (expect 1..={})", strands.saturating_sub(1))]
    LetterOutOfRange { letter: i64, strands: usize },

    #[error("generator index 0 is not allowed")]
    ZeroLetter,

    #[error("malformed token {0:?} in braid word")]
    MalformedToken(String),

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("position {pos} out of range for {strands} strands")]
    PositionOutOfRange { pos: usize, strands: usize },

    #[error("strand {pos} is not pure (the induced permutation moves it)")]
    NotPure { pos: usize },

    #[error("image table is not a bijection on {{1..{size}}}")]
    InvalidPermutation { size: usize },

    #[error("composition has {found} blocks, expected {expected}")]
    BlockCountMismatch { expected: usize, found: usize },

    #[error("direct sum part {index} has {found} strands, block requires {expected}")]
    PartSizeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("factored braids are not composable: source {left:?} vs target {right:?}")]
    NotComposable { left: Vec<usize>, right: Vec<usize> },

    #[error("factored braid source does not match the expected composition")]
    SourceMismatch,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("cannot rewrite word over the generators sigma_1^2, sigma_2, ..: {0}")]
    RewriteFailure(String),

    #[error("generator image table failed validation: {0}")]
    TableValidation(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
