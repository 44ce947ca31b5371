use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("edge cardinality m must be at least 2, got {0}")]
    BadUniformity(usize),
    #[error("edge {edge} has {size} vertices, expected {m}")]
    EdgeSize { edge: usize, size: usize, m: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("vertex id {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edges {0} and {1} share {2} vertices (not linear)")]
    NotLinear(usize, usize, usize),
    #[error("edges {0} and {1} are identical")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} lies in no edge")]
    IsolatedVertex(usize),
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("hypergraph has no edges")]
    Empty,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("size cap exceeded: {what} = {got} > {cap}")]
    SizeCap {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("invalid transformation: {0}")]
    Transform(String),
    #[error("not a partition: {0}")]
    NotPartition(String),
    #[error("partition is not equitable: vertices {i} and {j} send {si} vs {sj} into part {part}")]
    NotEquitable {
        i: usize,
        j: usize,
        part: usize,
        si: u64,
        sj: u64,
    },
    #[error("eigenvalue {re} has imaginary part {im:e}")]
    ComplexEigenvalue { re: f64, im: f64 },
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
