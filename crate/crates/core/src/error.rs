use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The operation is undefined on a graph without vertices.
    EmptyGraph,
    VertexOutOfRange {
        vertex: usize,
        order: usize,
    },
    Loop {
        vertex: usize,
    },
    DuplicateEdge {
        u: usize,
        v: usize,
    },
    /// Two vertex sets that must be disjoint share a vertex.
    OverlappingSets,
    /// A vertex set was built over a different universe than the graph.
    UniverseMismatch {
        expected: usize,
        found: usize,
    },
    /// `X = V(G)` was passed where a proper subset is required.
    FullVertexSet,
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    InvalidParameter(&'static str),
    /// Input is larger than an exact routine accepts.
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    /// An exact search ran out of its budget before finishing.
    BudgetExceeded {
        what: &'static str,
        limit: u64,
    },
    GeneratorExhausted {
        attempts: u32,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGraph => f.write_str("undefined on order 0"),
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            Error::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
            Error::OverlappingSets => f.write_str("vertex sets overlap"),
            Error::UniverseMismatch { expected, found } => {
                write!(f, "vertex set over {found} vertices used with a graph of order {expected}")
            }
            Error::FullVertexSet => f.write_str("set is the whole vertex set"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected a {}x{} bipartite graph, found {}x{}", expected.0, expected.1, found.0, found.1)
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::TooLarge { what, size, limit } => {
                write!(f, "{what}: size {size} exceeds exact limit {limit}")
            }
            Error::BudgetExceeded { what, limit } => {
                write!(f, "exact budget exceeded in {what} (limit {limit})")
            }
            Error::GeneratorExhausted { attempts } => {
                write!(f, "generator exhausted retries after {attempts} attempts")
            }
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    /// True for errors meaning "could not decide within budget" rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::TooLarge { .. })
    }
}
