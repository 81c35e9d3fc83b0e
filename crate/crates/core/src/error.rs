use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("non-canonical input: {0}")]
    NonCanonical(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid rank {0}: need 2 <= rank <= 26")]
    InvalidRank(usize),
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("the zero vector has no least support element")]
    ZeroVector,
    #[error("empty set")]
    EmptySet,
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("duplicate basis element {0}")]
    DuplicateBasisElement(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
