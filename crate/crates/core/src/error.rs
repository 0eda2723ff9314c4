use thiserror::Error;

/// Errors produced by column construction, tableau validation and the
/// sliding algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {0} is out of range for rank {1}")]
    LetterOutOfRange(i32, usize),

    #[error("column is not admissible: {0}")]
    NotAdmissible(String),

    #[error("spin column requires disjoint letter sets covering [1..n], got sizes {0} + {1} for rank {2}")]
    BadSpinColumn(usize, usize, usize),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid skew tableau: {0}")]
    InvalidSkew(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("slide error: {0}")]
    Slide(String),

    #[error("shapes are not comparable: {0}")]
    ShapeNotDominated(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
