use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set size {0} is outside 1..=40")]
    GroundSetTooLarge(usize),
    #[error("element {element} is not in 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("subset has {found} elements, expected {expected}")]
    WrongSubsetSize { expected: usize, found: usize },
    #[error("rank {index} out of range for {count} subsets")]
    RankOutOfRange { index: u64, count: u64 },
    #[error("ground sets differ ({0} vs {1})")]
    GroundSetMismatch(usize, usize),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("transposition index {i} out of range 1..={max}")]
    TranspositionOutOfRange { i: usize, max: usize },
    #[error("cannot parse cycle notation: {0}")]
    CycleSyntax(String),

    #[error("empty index set I")]
    EmptyIndexSet,
    #[error("index {index} in I exceeds {max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
    #[error("graph would have {vertices} vertices, over the budget of {budget}")]
    VertexBudget { vertices: u64, budget: u64 },
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("search exceeded its node budget of {0}")]
    NodeBudget(u64),

    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not a determining set")]
    NotDetermining,
    #[error("the coloring of the set is not set-distinguishing")]
    NotSetDistinguishing,
    #[error("no construction covers this family: {0}")]
    UncoveredFamily(String),
    #[error("{colors} colors give {pairs} color pairs for {components} components")]
    TooFewColors { colors: usize, pairs: u64, components: u64 },
    #[error("no distinguishing coloring found after {0} attempts")]
    AttemptsExhausted(usize),
    #[error("no distinguishing coloring with at most {0} colors")]
    NoColoringWithin(usize),
    #[error("enumeration of {0} colorings is over budget")]
    EnumerationBudget(String),
    #[error("construction failed its own check: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
