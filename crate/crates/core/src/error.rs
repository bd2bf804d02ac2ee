use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the range 1..={n}")]
    OutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("arcs ({0}, {1}) and ({1}, {0}) are both present")]
    NotAntisymmetric(usize, usize),

    #[error("invalid degree sequence: {0}")]
    InvalidSequence(String),

    #[error("degree sequence is already complete, no increment possible")]
    CompleteSequence,

    #[error("degree sequence violates the realization hypotheses: {0}")]
    Infeasible(String),

    #[error("order {n} is too small, need at least {min}")]
    OrderTooSmall { n: usize, min: usize },

    #[error("size {m} exceeds the bound {max} for order {n}")]
    SizeOutOfRange { n: usize, m: usize, max: usize },

    #[error("label {0} appears more than once")]
    DuplicateValue(String),

    #[error("label {0} is not a positive integer")]
    NonPositiveValue(String),

    #[error("labels of edge {{{0}, {1}}} do not divide each other")]
    NotComparable(usize, usize),

    #[error("orientation is not transitive")]
    NotTransitive,

    #[error("labelling covers {labels} vertices but the graph has {n}")]
    CoverageMismatch { n: usize, labels: usize },

    #[error("graph has {m} edges, exhaustive search is limited to {max}")]
    TooLarge { m: usize, max: usize },

    /// A fact the construction guarantees did not hold. Always a bug.
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}
