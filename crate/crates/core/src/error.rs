use thiserror::Error;

use crate::graph::MAX_ORDER;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },

    #[error("loop edge ({v}, {v}) is not allowed")]
    LoopEdge { v: usize },

    #[error("order {0} exceeds the cap of {MAX_ORDER} vertices")]
    OrderCap(usize),

    #[error("vertex {vertex} is outside 0..{order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("vertex set over {found} vertices used with a graph of order {expected}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams {
        family: &'static str,
        reason: String,
    },

    #[error("{format}: line {line}, column {column}: {message}")]
    Parse {
        format: &'static str,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("property spec: byte {offset}: {message}")]
    SpecParse { offset: usize, message: String },

    #[error("oracle size limit: {what} on {size} exceeds the gate of {gate}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        gate: usize,
    },

    #[error("unbounded {0}")]
    Unbounded(&'static str),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

impl Error {
    pub(crate) fn parse(
        format: &'static str,
        line: usize,
        column: usize,
        message: impl Into<String>,
    ) -> Self {
        Error::Parse {
            format,
            line,
            column,
            message: message.into(),
        }
    }
}
