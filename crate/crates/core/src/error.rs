use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },

    #[error("vertex id overflow: {0}")]
    IdOverflow(String),

    #[error("invalid generator argument: {0}")]
    InvalidGenerator(String),

    #[error("invalid thorn spec: {0}")]
    InvalidSpec(String),

    #[error("thorn vector has length {got}, base graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("formula {id} is not applicable: {reason}")]
    Inapplicable { id: String, reason: String },

    #[error("unknown {what}: {value}")]
    Unknown { what: &'static str, value: String },

    #[error("exact integer capacity exceeded")]
    Overflow,

    #[error("invalid audit config: {0}")]
    Config(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
