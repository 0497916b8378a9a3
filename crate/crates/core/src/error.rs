use thiserror::Error;

/// Errors raised by field construction, polynomial handling and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field order {p}^{n} exceeds the 2^32 encoding limit")]
    FieldTooLarge { p: u64, n: u32 },

    #[error("modulus {modulus:?} is reducible over GF({p}); factor {factor:?}")]
    ReducibleModulus {
        p: u64,
        modulus: Vec<u64>,
        factor: Vec<u64>,
    },

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("defining polynomial is reducible over the base field: root {root}")]
    ReducibleExtension { root: u32 },

    #[error("element encoding {enc} is out of range for a field of order {q}")]
    OutOfRange { enc: u64, q: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("exponent denominator {den} is not invertible modulo {modulus}")]
    NonInvertibleExponent { den: u64, modulus: u64 },

    #[error("field has no tower link to a subfield")]
    NoTowerLink,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} needs q = {q}, above the configured cap {cap}")]
    CapExceeded { what: &'static str, q: u64, cap: u64 },

    #[error("not a permutation: f({x1}) = f({x2}) = {value}")]
    NotPermutation { x1: u32, x2: u32, value: u32 },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
