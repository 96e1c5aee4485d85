use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("endpoints must be distinct (got `{0}` twice)")]
    SameVertex(String),
    #[error("oracle budget exceeded: {vertices} vertices, budget {budget}")]
    OracleBudget { vertices: usize, budget: usize },
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
