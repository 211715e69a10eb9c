use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exponent overflow")]
    Overflow,

    #[error("colon by the zero ideal is undefined")]
    ZeroColon,

    #[error("ideal is not squarefree: generator {0} has an exponent above 1")]
    NotSquarefree(String),

    #[error("facet {facet} is empty")]
    EmptyFacet { facet: usize },

    #[error("facet {facet} contains vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { facet: usize, vertex: usize, n: usize },

    #[error("facet {facet} lists vertex {vertex} twice")]
    RepeatedVertex { facet: usize, vertex: usize },

    #[error("facets {first} and {second} are comparable under inclusion")]
    ComparableFacets { first: usize, second: usize },

    #[error("facet {facet} has weight 0; weights must be positive")]
    ZeroWeight { facet: usize },

    #[error("{weights} weights given for {facets} facets")]
    WeightCount { facets: usize, weights: usize },

    #[error("complex has no facets")]
    NoFacets,

    #[error("skeleton dimension j={j} out of range 0..={max} for n={n}", max = n.saturating_sub(2))]
    SkeletonRange { n: usize, j: usize },

    #[error("cone is not full-dimensional")]
    DegenerateCone,

    #[error("rays span a cone of rank {rank}, need {dim}")]
    RankDeficient { rank: usize, dim: usize },

    #[error("{0} is not a vertex cover of order {1}")]
    NotACover(String, u64),

    #[error("order must be at least {min}, got {got}")]
    OrderTooSmall { min: u64, got: u64 },

    #[error("graph is not bipartite; odd cycle {0:?}")]
    NotBipartite(Vec<usize>),

    #[error("operation requires canonical weights (all equal to 1)")]
    NotCanonical,

    #[error("complex is not a graph: facet {facet} has {size} vertices")]
    NotAGraph { facet: usize, size: usize },

    #[error("graph has a loop at vertex {0}")]
    Loop(usize),

    #[error("edge {{{0},{1}}} listed twice")]
    MultipleEdge(usize, usize),

    #[error("search space {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("odd-cycle enumeration is limited to n <= {max}, got n={n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("presentation is truncated at degree {cap}; maximal degree is unknown")]
    Truncated { cap: u64 },

    #[error("family parameters must satisfy m >= 2 and k >= 2, got m={m}, k={k}")]
    FamilyRange { m: usize, k: usize },

    #[error("every facet is zero-dimensional; nothing remains after stripping")]
    AllSingletonFacets,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
