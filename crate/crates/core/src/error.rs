use thiserror::Error;

use crate::cover::CoverViolation;
use crate::io::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what} has size {size}, above the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is outside the solver's class: {0}")]
    NotInClass(String),
    #[error(
        "{n} vertices exceed the bound {bound} for K_1,{r}-free graphs of this kind; \
         the finiteness bound would be falsified"
    )]
    SizeBound { n: usize, bound: usize, r: usize },
    #[error("invalid exact cover instance: {0}")]
    InvalidCover(CoverViolation),
    #[error("invalid triple system: {0}")]
    InvalidTriples(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
