use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("position {index} is outside 1..={len}")]
    InvalidPosition { index: usize, len: usize },

    #[error("not a permutation of 1..n: {0}")]
    InvalidPermutation(String),

    #[error("word has repeated entry {0}")]
    DuplicateEntry(i64),

    #[error("invalid pattern {0:?}: expected four comma-separated entries, each a natural number or 'e'")]
    InvalidPattern(String),

    #[error("n = {n} exceeds the enumeration cap {cap}; raise the cap to enumerate S_{n}(132)")]
    CapExceeded { n: usize, cap: usize },

    #[error("series constant term is not a unit")]
    NonUnitConstant,

    #[error("series constant term must be 1")]
    ConstantNotOne,

    #[error("series precondition failed: {0}")]
    SeriesPrecondition(&'static str),

    #[error("coefficient of t^{n} requested from a series of order {order}")]
    OrderExceeded { n: usize, order: usize },

    #[error("inexact division by {0}")]
    InexactDivision(i64),

    #[error("unsupported pattern {pattern}: {reason}")]
    UnsupportedPattern {
        pattern: String,
        reason: &'static str,
    },

    #[error("no registered formula covers {0}")]
    NotCovered(String),

    #[error("formula {id} needs n >= {min_n}, got {n}")]
    BelowThreshold {
        id: &'static str,
        n: usize,
        min_n: usize,
    },
}
