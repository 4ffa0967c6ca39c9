use thiserror::Error;

use crate::predicates::NonMembership;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus d = {0} is not supported (need d >= 2)")]
    ModulusTooSmall(u64),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("genus g = {0} is not supported (need g >= 2)")]
    GenusTooSmall(usize),

    #[error("{0} is not a real element of Z[zeta]")]
    NotReal(String),

    #[error("{dividend} is not divisible by {divisor} in Z[zeta]")]
    InexactDivision { dividend: String, divisor: String },

    #[error("no integer solution: {0}")]
    NoIntegerSolution(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not invertible over Z[zeta] (determinant {0})")]
    NotInvertible(String),

    #[error("index error: {0}")]
    Index(String),

    #[error("matrix is not self-adjoint")]
    NotSelfAdjoint,

    #[error("not a member of {group}: {reason}")]
    NotMember {
        group: &'static str,
        reason: NonMembership,
    },

    #[error("lower-right block of the witness word does not match the target")]
    BlockMismatch,

    #[error("projection requires odd d, got d = {0}")]
    EvenModulus(u32),

    #[error("not an element of Gamma_(X,C): {0}")]
    NotInGamma(String),

    #[error("word does not lift to a closed loop: x_g exponent sum {0} is not divisible by d")]
    NonClosingWord(i64),

    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// Syntax error with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        Self {
            pos,
            msg: msg.into(),
        }
    }
}
