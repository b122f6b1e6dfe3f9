use crate::graph::Vertex;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("cannot identify vertex {0} with itself")]
    SameVertex(Vertex),
    #[error("identification step {index} failed: {source}")]
    Step {
        index: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("malformed witness structure: {0}")]
    MalformedWitness(String),
    #[error("diameter of an empty vertex set")]
    EmptyComponent,
    #[error("input graph must be connected")]
    DisconnectedInput,
    #[error("target graph is not a tree")]
    TargetNotTree,
    #[error("target graph is not a forest")]
    TargetNotForest,
    #[error("graph minus S is not a clique")]
    NotACliqueOutsideS,
    #[error("item sizes sum to {total}, expected bins * capacity = {expected}")]
    CapacityMismatch { total: usize, expected: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("oracle cap exceeded: {0}")]
    BudgetExceeded(String),
    #[error("exhaustive search needs {needed} vertices, the limit is {limit}")]
    TooLarge { needed: usize, limit: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
