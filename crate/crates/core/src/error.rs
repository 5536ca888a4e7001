use std::fmt;

use thiserror::Error;

use crate::graph::VertexId;

/// A concrete reason a graph fails to certify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The transversal does not have exactly one vertex in every part.
    NotTransversal(String),
    /// Two transversal vertices are adjacent.
    TransversalEdge(VertexId, VertexId),
    /// The graph contains a clique of the forbidden size.
    Clique(Vec<VertexId>),
    /// An admissible non-edge whose addition creates no forbidden clique.
    UnsaturatedNonEdge(VertexId, VertexId),
    /// Deleting these parts destroys every clique of the required size.
    PartsDestroyCliques(Vec<usize>),
    /// A structural count did not match what the construction promises.
    Mismatch(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotTransversal(msg) => write!(f, "not a transversal: {msg}"),
            Violation::TransversalEdge(u, v) => {
                write!(f, "transversal vertices {u} and {v} are adjacent")
            }
            Violation::Clique(vs) => write!(f, "forbidden clique on vertices {vs:?}"),
            Violation::UnsaturatedNonEdge(u, v) => {
                write!(f, "admissible non-edge {u}-{v} is not saturated")
            }
            Violation::PartsDestroyCliques(parts) => {
                write!(f, "deleting parts {parts:?} leaves no clique of the required size")
            }
            Violation::Mismatch(msg) => write!(f, "{msg}"),
        }
    }
}

/// Progress made by a search before it ran out of budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partial {
    pub nodes_explored: u64,
    /// Largest vertex count (or size class) fully exhausted, if any.
    pub exhausted_through: Option<usize>,
    /// Best value seen so far, if any.
    pub best_value: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Partial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} after {} nodes", self.detail, self.nodes_explored)?;
        if let Some(n) = self.exhausted_through {
            write!(f, ", exhausted through {n}")?;
        }
        if let Some(b) = self.best_value {
            write!(f, ", best so far {b}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("witness rejected: {0}")]
    Witness(Violation),
    #[error("resource limit reached: {0}")]
    Resource(Partial),
    #[error("malformed graph file: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
