use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime in [2, 65536)")]
    InvalidPrime(u64),

    #[error("module spec syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A Jordan block of size n > p has order at least p^2, so it is not a
    /// representation of Z/p.
    #[error("block V{n} is too large for p = {p}: a Jordan block of size n > p does not give a representation of Z/p")]
    BlockTooLarge { n: usize, p: u32 },

    #[error("polynomials live in different ambient rings")]
    AmbientMismatch,

    #[error("the zero polynomial has no lead term")]
    NoLeadTerm,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size budget exceeded: block {block:?} has {cols} columns (cap {cap})")]
    SizeBudget {
        block: Vec<u32>,
        cols: usize,
        cap: usize,
    },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
