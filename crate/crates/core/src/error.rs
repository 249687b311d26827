use thiserror::Error;

/// Every failure the toolkit reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{x} is not a unit modulo {m}")]
    NotAUnit { x: u64, m: u64 },
    #[error("source vectors have rank {rank}, expected {dim}")]
    SourcesDoNotSpan { rank: usize, dim: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("seed permutation is not an element of the group")]
    SeedNotInGroup,
    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },
    #[error("group elements belong to different groups")]
    SpecMismatch,
    #[error("object too large: {what} has size {size}, limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("connection set does not generate the group")]
    NotGenerating,
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex sequence is not a path without backtracking")]
    NotAPath,
    #[error("partition has an edge inside a cell ({0}, {1})")]
    IntraCellEdge(usize, usize),
    #[error("partition is not a partition of the vertex set")]
    InvalidPartition,
    #[error("connection set contains the identity")]
    IdentityInS,
    #[error("connection set is not closed under inverses")]
    NotSymmetricSet,
    #[error("no element of multiplicative order 5 modulo {0}")]
    NoOrder5Element(u64),
    #[error("5 is not a square modulo {0}")]
    NoSquareRootOf5(u64),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("cotree voltages do not span the voltage group")]
    NotSpanning,
    #[error("voltage assignment has repeated voltages (derived graph is not simple)")]
    ParallelEdges,
    #[error("matrix does not satisfy the lifting equations")]
    NotALift,
    #[error("graph is not vertex-transitive")]
    NotVertexTransitive,
    #[error("graph is not pentavalent")]
    NotPentavalent,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("group is not semiregular")]
    NotSemiregular,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group orbits are not the bipartition classes")]
    OrbitsNotParts,
    #[error("invalid permutation")]
    InvalidPermutation,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
