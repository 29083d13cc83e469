//! Joyce decompositions of compact Lie algebras, the parametrized Joyce
//! hypercomplex structures they carry, and verifiers for their structural
//! properties.

pub mod catalog;
pub mod decomposition;
pub mod explicit;
pub mod report;
pub mod structure;
pub mod verify;

pub use catalog::{su_odd_b_basis, Family, GroupSpec};
pub use explicit::{sp2_quaternionic_algebra, SP2_FRAME_LABELS};
pub use decomposition::{joyce_decompose, JoyceDecomposition, JoyceLayer, Role};
pub use report::{Check, Report};
pub use structure::{hypercomplex_structure, HypercomplexTriple, JoyceStructure, ParameterMatrix};
pub use verify::{
    hyperholomorphic_check, is_hyperholomorphic, nijenhuis_defects, verify_bracket_inclusions, verify_integrability,
    verify_joyce_relations,
};

use hypercx_core::CoreError;
use hypercx_rootsys::RootError;

/// Errors raised while building decompositions and structures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JoyceError {
    /// The Killing form is not negative definite.
    #[error("algebra is not compact: Killing form is not definite")]
    NotCompact,
    /// Invalid parameter matrix.
    #[error("invalid parameter matrix: {0}")]
    BadParameter(String),
    /// Unknown or unsupported group.
    #[error("unsupported group: {0}")]
    UnknownFamily(String),
    /// Torus dimension differs from `2m - r`.
    #[error("torus dimension must be {expected}, got {given}")]
    TorusMismatch {
        /// `2m - r`.
        expected: usize,
        /// Requested value.
        given: usize,
    },
    /// Internal consistency failure.
    #[error("inconsistent construction: {0}")]
    Inconsistent(String),
    /// Kernel error.
    #[error(transparent)]
    Core(#[from] CoreError),
    /// Root-system error.
    #[error(transparent)]
    Root(#[from] RootError),
}
