use thiserror::Error;

use crate::quiver::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("loop at vertex {0}")]
    Loop(Vertex),

    #[error("2-cycle between vertices {0} and {1}")]
    TwoCycle(Vertex, Vertex),

    #[error("parallel arrows from {0} to {1}")]
    ParallelArrows(Vertex, Vertex),

    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),

    #[error("duplicate vertex {0}")]
    DuplicateVertex(Vertex),

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("quiver is not connected")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("mutation class exceeds {0} isomorphism classes")]
    ClassLimit(usize),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("quotient did not stabilise up to path length {0}")]
    NotStabilised(usize),

    #[error("ideal is not admissible: no power of the arrow ideal vanishes up to length {0}")]
    NotAdmissible(usize),

    #[error("quiver could not be classified and no explicit relations were given")]
    Unclassified,

    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("classification label does not match the quiver: {0}")]
    LabelMismatch(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
