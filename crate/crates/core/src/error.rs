use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the engine.
///
/// `Parse` is kept apart from the rest so front ends can map malformed input
/// and domain violations to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a partition: {0:?} (parts must be weakly decreasing)")]
    NotPartition(Vec<usize>),
    #[error("not a composition: {0:?} (parts must be positive)")]
    NotComposition(Vec<usize>),
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("shape has {0} boxes, above the limit of {max}", max = crate::shape::MAX_BOXES)]
    TooLarge(usize),
    #[error("box set is not a skew diagram: {0}")]
    NotSkew(String),
    #[error("depth {depth} exceeds a joining column (lengths {left} and {right})")]
    Depth {
        depth: usize,
        left: usize,
        right: usize,
    },
    #[error("foundation overlap {overlap} is infeasible against a last row of length {last_row}")]
    Overlap { overlap: i64, last_row: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("coefficient overflow")]
    Overflow,
    #[error("cannot combine expansions of degree {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("{0} is not a sum of fat staircases")]
    NotFatSum(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
