//! Constructive search for monochromatic loose paths and loose cycles in
//! red/blue colorings of complete k-uniform hypergraphs (k = 5 for all the
//! structural machinery, k parametric in the core types).
//!
//! The crate is organized around total, certificate-producing operations:
//! every claimed witness (path, cycle, configuration) can be re-verified
//! from scratch against the coloring it was extracted from.

pub mod binom;
pub mod certificate;
pub mod colorings;
pub mod driver;
pub mod hypergraph;
pub mod lemma;
pub mod oracle;
pub mod transfer;

pub use hypergraph::{Color, Coloring, Edge, LooseCycle, LoosePath, Vertex};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A structure (edge, path, cycle, configuration) violates its invariants.
    #[error("structural error: {0}")]
    Structure(String),
    /// An operation was called outside its documented preconditions.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Text format (LRC1 / CERT) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal consistency check failed; indicates a bug, never silent.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
