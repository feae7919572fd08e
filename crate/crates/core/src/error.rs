use thiserror::Error;

/// Errors from building or parsing braids and from the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,

    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("parse error at line {line}, column {column}: unexpected token `{token}`")]
    Parse {
        line: usize,
        column: usize,
        token: String,
    },

    #[error("block violation: strand {strand} ends at position {end}")]
    BlockViolation { strand: usize, end: usize },

    #[error("word is not in the kernel of the strand-forgetting map: {0}")]
    NotInKernel(String),

    #[error("{what} requires at least {min} strands, got {got}")]
    TooFewStrands {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
