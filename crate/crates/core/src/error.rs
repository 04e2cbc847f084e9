use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank n must be at least 2, got {0}")]
    InvalidRank(usize),

    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("malformed partition literal {0:?}")]
    BadLiteral(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("{0} is not a proper wall")]
    NotProper(Partition),

    #[error("{0} is already reduced")]
    AlreadyReduced(Partition),

    #[error("{0} is not reduced")]
    NotReduced(Partition),

    #[error("{0} is already strict")]
    AlreadyStrict(Partition),

    #[error("{0} is not strict")]
    NotStrict(Partition),

    #[error("hat partition must have positive size")]
    EmptyHat,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
