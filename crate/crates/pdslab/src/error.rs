use thiserror::Error;

/// Errors reported by solvers, verifiers and gadget generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is not a member of the candidate set")]
    VertexNotInSet(usize),

    #[error("candidate set size {size} is outside [{min}, {max}]")]
    SetSizeOutOfRange { size: usize, min: usize, max: usize },

    #[error("graph has {n} vertices, need at least {min}")]
    TooFewVertices { n: usize, min: usize },

    #[error("h-index is {found}, solver requires h <= {max}")]
    HIndexTooLarge { found: usize, max: usize },

    #[error("complement h-index is {found}, solver requires h <= {max}")]
    CoHIndexTooLarge { found: usize, max: usize },

    #[error("vertex {vertex} has degree {degree} > 2 outside the chosen hubs")]
    NonHubDegreeTooLarge { vertex: usize, degree: usize },

    #[error("instance has {n} vertices, exceeding the exhaustive-search cap {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("k = {k} is outside the valid range [{min}, {max}]")]
    KOutOfRange { k: usize, min: usize, max: usize },

    #[error("input graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("input set is not independent: {u} and {v} are adjacent")]
    NotIndependent { u: usize, v: usize },

    #[error("input set has size {size}, expected {expected}")]
    WrongSetSize { size: usize, expected: usize },

    #[error("input set is not a proportionally dense subgraph")]
    NotAPds,

    #[error("gadget parameter audit failed: {0}")]
    ParamAudit(String),

    #[error("structural audit failed: {0}")]
    StructureAudit(String),

    #[error("internal search failed: {0}")]
    SearchFailed(String),

    #[error(
        "no polynomial case applies: h = {h}, complement h = {co_h}, n = {n} exceeds cap {cap}"
    )]
    NoPolynomialCase {
        h: usize,
        co_h: usize,
        n: usize,
        cap: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
