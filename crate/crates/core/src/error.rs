use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{{{u},{v}}} is not an edge of the base graph")]
    InvalidEdge { u: usize, v: usize },

    #[error("vertex set {0:?} is not a clique")]
    InvalidClique(Vec<usize>),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} is {value}, above the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    InvalidColor { vertex: usize, color: usize, k: usize },

    #[error("improper coloring: adjacent vertices {u} and {v} both have color {color}")]
    ImproperInput { u: usize, v: usize, color: usize },

    #[error("the partial coloring has no proper extension")]
    NotExtendable,

    #[error("the partial coloring has more than one proper extension")]
    NotUnique,

    #[error("k = {k} is below the chromatic number {chromatic}")]
    ChromaticViolation { k: usize, chromatic: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
