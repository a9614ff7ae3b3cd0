use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on node '{label}'")]
    SelfLoop { line: usize, label: String },

    #[error("line {line}: duplicate edge '{a}' -- '{b}'")]
    DuplicateEdge { line: usize, a: String, b: String },

    #[error("graph is disconnected ({components} components); pass allow_disconnected to admit it")]
    Disconnected { components: usize },

    #[error("index {requested} out of bounds for length {len}")]
    OutOfBounds { requested: usize, len: usize },

    #[error("density is undefined for graphs with fewer than 2 nodes (N = {nodes})")]
    UndefinedDensity { nodes: usize },

    #[error("degree at position {position} is negative ({value})")]
    NegativeDegree { position: usize, value: i64 },

    #[error("{ratio} is undefined: expected count is zero")]
    UndefinedRatio { ratio: &'static str },

    #[error("double-edge swap needs at least 2 edges, graph has {edges}")]
    NotSwappable { edges: usize },

    #[error("invalid k grid: {0}")]
    InvalidGrid(String),

    #[error("ensemble is empty")]
    EmptyEnsemble,

    #[error("invalid ensemble configuration: {0}")]
    InvalidConfig(String),

    #[error("characteristic covers {got} nodes, graph has {expected}")]
    CharacteristicSize { expected: usize, got: usize },

    #[error("attribute file: {0}")]
    Attribute(String),

    #[error("replicate {replicate}: no connected realization found after {tries} resamples")]
    ConnectedNullExhausted { replicate: u64, tries: usize },
}
