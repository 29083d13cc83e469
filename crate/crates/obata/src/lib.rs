//! The Obata connection of a left-invariant hypercomplex structure, its
//! curvature and covariant derivatives, holonomy algebras by span closure
//! and detection of parallel subbundles.

pub mod connection;
pub mod curvature;
pub mod holonomy;
pub mod parallel;
pub mod rep;

pub use connection::{joyce_connection, obata_connection, obata_unchecked, Connection};
pub use curvature::{covariant_derivative, covariant_derivative_along, curvature, CurvatureTensor, EndTensor};
pub use holonomy::{holonomy_algebra, BlockReport, HolonomyResult, Method, DEFAULT_MAX_DEPTH};
pub use parallel::{
    find_parallel_subspaces, has_proper_parallel, invariant_closure, is_parallel, reduction_consistent, verify_euler,
    verify_nabla_e1, InvariantSubspace,
};
pub use rep::Rep;

use hypercx_joyce::JoyceError;

/// Errors raised while building connections.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ObataError {
    /// Sizes of the algebra and structure disagree.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// The triple is not an integrable hypercomplex structure.
    #[error("structure is not hypercomplex: {0}")]
    NotHypercomplex(String),
    /// Error from the decomposition layer.
    #[error(transparent)]
    Joyce(#[from] JoyceError),
}
