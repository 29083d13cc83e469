//! Exact linear algebra kernel: rational and quadratic-field scalars, dense
//! matrices, reduced span bases, quaternionic matrices and Lie algebras by
//! structure constants.

pub mod lie;
pub mod matrix;
pub mod quaternion;
pub mod scalar;
pub mod span;

pub use lie::{JacobiReport, LieAlgebraData, SparseVec};
pub use matrix::ExactMatrix;
pub use quaternion::{compress_right, standard_structure, QuatMatrix, Quaternion};
pub use scalar::{q, qi, Field, Quad, Rational};
pub use span::SpanBasis;

/// Errors raised by the core kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    /// A vector or matrix had the wrong size.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch {
        /// Expected length.
        expected: usize,
        /// Actual length.
        found: usize,
    },
    /// Structure constants given for `(i,j)` and `(j,i)` disagree.
    #[error("brackets of basis pair ({0},{1}) are not antisymmetric")]
    NotAntisymmetric(usize, usize),
    /// A matrix that must be invertible is singular.
    #[error("singular matrix")]
    Singular,
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}
