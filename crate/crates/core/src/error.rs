use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("order {n} exceeds the supported maximum of {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("malformed graph6: {0}")]
    Graph6(Graph6Error),

    #[error("graph is disconnected; distances are undefined")]
    Disconnected,

    #[error(
        "power iteration did not converge after {iterations} iterations \
         (best estimate {lambda1}, residual {residual:e})"
    )]
    MaxIterations {
        lambda1: f64,
        residual: f64,
        iterations: usize,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid family: {0}")]
    InvalidSpec(String),

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("parity mismatch: {0}")]
    Parity(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("search budget of {budget} states exceeded")]
    BudgetExceeded { budget: usize },

    #[error("source yields a graph of order {found}, expected {expected}")]
    SourceOrderMismatch { expected: usize, found: usize },

    #[error("no connected graph of order {n} lacks the property")]
    EmptyCandidateSet { n: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty line")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("expected {expected} data bytes for n = {n}, found {found}")]
    Length {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("{extra} unexpected byte(s) after the adjacency data")]
    TrailingGarbage { extra: usize },
    #[error("nonzero padding bits in the last data byte")]
    NonzeroPadding,
}

impl From<Graph6Error> for Error {
    fn from(e: Graph6Error) -> Self {
        Error::Graph6(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
