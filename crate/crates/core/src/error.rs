use thiserror::Error;

use crate::scalar::Domain;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gain must be nonzero")]
    ZeroGain,
    #[error("anti-involution `{involution}` is not admissible over the {domain} domain")]
    DomainMismatch {
        involution: &'static str,
        domain: Domain,
    },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("expected {expected} gains, got {got}")]
    BadGainCount { expected: usize, got: usize },
    #[error("family too small: {0}")]
    FamilyTooSmall(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("block shapes do not conform: {0}")]
    ShapeMismatch(String),
    #[error("blocks C and D do not commute")]
    NotCommuting,
    #[error("designated block is singular")]
    SingularBlock,
    #[error("underlying graph is not a path")]
    NotAPath,
    #[error("underlying graph is not a cycle")]
    NotACycle,
    #[error("underlying graph is not bipartite")]
    NotBipartite,
    #[error("underlying graph is not unicyclic")]
    NotUnicyclic,
    #[error("underlying graph is not a star")]
    NotAStar,
    #[error("underlying graph is not a double star")]
    NotADoubleStar,
    #[error("underlying graph is not complete bipartite")]
    NotCompleteBipartite,
    #[error("root finder did not converge after {0} iterations")]
    ConvergenceFailure(usize),
    #[error("invalid literal `{literal}` for the {domain} domain")]
    BadLiteral { literal: String, domain: Domain },
    #[error("unknown anti-involution `{0}`")]
    UnknownInvolution(String),
    #[error("unknown domain `{0}`")]
    UnknownDomain(String),
}
