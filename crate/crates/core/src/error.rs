use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex set sized for {found} vertices used with a graph on {expected}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("vertex {0} is not a member of the set")]
    NotInSet(Vertex),
    #[error("vertex {0} is a member of the set")]
    InSet(Vertex),
    #[error("set is not dominating (vertex {0} undominated)")]
    NotDominating(Vertex),

    #[error("graph is not in class {class}: {reason}")]
    ClassValidation { class: String, reason: String },
    #[error("structural check failed: {0}")]
    Structure(String),
    #[error("construction produced a set that is not secure dominating (vertex {vertex} fails)")]
    Certification { vertex: Vertex },
    #[error("unknown graph class `{0}`")]
    UnknownClass(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}
