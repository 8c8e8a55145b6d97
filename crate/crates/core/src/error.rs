use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: left operand has degree {left}, right operand has degree {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity exceeded: {what} (limit {limit}, reached {reached})")]
    Capacity {
        what: &'static str,
        limit: u128,
        reached: u128,
    },

    #[error("table is not associative: ({i}·{j})·{k} != {i}·({j}·{k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    #[error("element {element} is not a two-sided identity: {detail}")]
    NotIdentity { element: usize, detail: String },

    #[error("malformed monoid table: {0}")]
    MalformedTable(String),

    #[error("action is not by monoid endomorphisms: axiom `{axiom}` fails at {witness}")]
    InvalidAction { axiom: &'static str, witness: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("malformed presentation: {0}")]
    MalformedPresentation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn capacity(what: &'static str, limit: u128, reached: u128) -> Self {
        Error::Capacity { what, limit, reached }
    }
}
