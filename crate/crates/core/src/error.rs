use thiserror::Error;

use crate::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("vertex {vertex} out of range for graph on {count} vertices")]
    VertexOutOfRange { vertex: VertexId, count: usize },

    #[error("invalid edge {0}-{1}: {2}")]
    InvalidEdge(VertexId, VertexId, &'static str),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {what} (budget {budget})")]
    BudgetExceeded { what: &'static str, budget: usize },

    #[error("illegal move: {player} tried vertex {vertex}\n{log}")]
    IllegalMove {
        player: &'static str,
        vertex: VertexId,
        log: String,
    },

    #[error("graph has {0} vertices; this operation supports at most {1}")]
    TooLarge(usize, usize),
}
