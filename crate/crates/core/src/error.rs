use thiserror::Error;

use crate::certificates::{BipartitePairWitness, Violation};

#[derive(Debug, Error)]
pub enum Error {
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("pattern on {size} vertices exceeds the brute-force limit of {limit}")]
    PatternTooLarge { size: usize, limit: usize },
    #[error("universality check limited to k <= {limit}, got {k}")]
    UniversalityTooLarge { k: usize, limit: usize },
    #[error("exact strategy limited to n <= {limit}, got {n}")]
    ExactTooLarge { n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {vertex} has closed degree {closed_degree} > bound {bound}")]
    DegreeBound {
        vertex: usize,
        closed_degree: usize,
        bound: usize,
    },
    #[error("cannot split components of total size {total} into two sides of at least {target}")]
    Unsplittable { total: usize, target: usize },

    #[error("oracle returned an invalid witness ({violation}): {witness:?}")]
    InvalidOracleWitness {
        witness: Box<BipartitePairWitness>,
        violation: Violation,
    },
    #[error("oracle found no pair with sides >= {side} on {n} vertices")]
    OracleNotTotal { n: usize, side: usize },

    #[error("graph6: {reason} at byte {offset}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("witness json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("no certified graph after {draws} draws")]
    BudgetExhausted { draws: u64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
