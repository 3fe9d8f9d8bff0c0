use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, FasError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FasError {
    #[error("loop arc at vertex {0}")]
    LoopArc(VertexId),
    #[error("arc {0}->{1} would close a 2-cycle")]
    TwoCycle(VertexId, VertexId),
    #[error("vertex {0} is not active")]
    InactiveVertex(VertexId),
    #[error("arc {tail}->{head} is not present with multiplicity {needed}")]
    MissingArc {
        tail: VertexId,
        head: VertexId,
        needed: u32,
    },
    #[error("ordering does not match the vertex set: {0}")]
    OrderingMismatch(String),
    #[error("reduction precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph still admits a reduction")]
    NotIrreducible,
    #[error("internal invariant failed: {0}")]
    InternalInvariant(String),
    #[error("maximum degree {0} exceeds 5")]
    DegreeTooHigh(u32),
    #[error("irreducible degree-4 component with {size} vertices exceeds the oracle cap {cap}")]
    BaseCaseTooLarge { size: usize, cap: usize },
    #[error("graph is not degree-5 (vertex {0} has degree {1})")]
    NotRegular5(VertexId, u32),
    #[error("Q-sets of {0} and {1} intersect or are joined by an arc")]
    QSetConflict(VertexId, VertexId),
    #[error("component with {size} vertices exceeds the exact oracle cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("not a directed cycle: {0}")]
    NotACycle(String),
    #[error("maximum degree {degree} exceeds k = {k}")]
    DegreeExceedsK { degree: u32, k: u32 },
    #[error("generator failed: {0}")]
    Infeasible(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
