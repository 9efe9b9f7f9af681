use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoopRejected(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("permutation domains differ ({0} vs {1})")]
    DomainMismatch(usize, usize),
    #[error("search bound exceeded: group order {order} > {bound}")]
    SearchBoundExceeded { order: BigUint, bound: u64 },
    #[error("capacity exceeded: subgroup order reached at least {reached}, cap is {cap}")]
    CapacityExceeded { reached: BigUint, cap: BigUint },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("parse error at token `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorFamily {
    Input,
    Capacity,
    Internal,
}

impl Error {
    pub fn family(&self) -> ErrorFamily {
        match self {
            Error::CapacityExceeded { .. }
            | Error::SearchBoundExceeded { .. }
            | Error::LimitExceeded(_) => ErrorFamily::Capacity,
            Error::Internal(_) => ErrorFamily::Internal,
            _ => ErrorFamily::Input,
        }
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
