use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),

    #[error("{0} is not a flat")]
    NotAFlat(Subset),

    #[error("loopless required: element {0} is a loop")]
    LoopPresent(usize),

    #[error("operation requires a central arrangement")]
    NonCentral,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {prime} is inadmissible: {subset} drops rank modulo {prime}")]
    Inadmissible { prime: u64, subset: Subset },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
