//! Root systems of simple type, compact real forms built from a Chevalley
//! basis, explicit `su(n)` and `sp(n)` matrix models, and the combinatorial
//! Joyce recursion driven by highest roots.

pub mod chevalley;
pub mod diagram;
pub mod models;
pub mod rooted;
pub mod rootsystem;

pub use chevalley::{chevalley_compact_form, ChevalleyConstants};
pub use diagram::{diagram_joyce_decomposition, joyce_root_layers, DiagramDecomposition, DiagramLayer, RootLayer};
pub use models::{sp_model, su_model, MatrixModel};
pub use rooted::RootedAlgebra;
pub use rootsystem::{expected_positive_count, RootSystem, TypeLetter};

use hypercx_core::CoreError;

/// Errors raised by root-system constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    /// The requested type and rank do not name a simple root system.
    #[error("invalid simple type {0}{1}")]
    InvalidType(String, usize),
    /// A linear-algebra failure in the kernel.
    #[error(transparent)]
    Core(#[from] CoreError),
    /// A constructed object failed an internal consistency check.
    #[error("inconsistent construction: {0}")]
    Inconsistent(String),
}
