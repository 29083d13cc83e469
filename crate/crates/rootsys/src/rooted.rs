//! Compact simple Lie algebras with root metadata.

use crate::models::MatrixModel;
use crate::rootsystem::RootSystem;
use hypercx_core::{LieAlgebraData, Rational};
use num_traits::Zero;

/// A compact simple Lie algebra in a root-adapted basis.
///
/// The basis is laid out as `H_1..H_r` (compact simple coroots) followed by
/// one pair `(A_alpha, B_alpha)` per positive root in canonical order, with
/// `[H_alpha, A_alpha] = 2 B_alpha`, `[A_alpha, B_alpha] = 2 H_alpha` and
/// `[B_alpha, H_alpha] = 2 A_alpha` where `H_alpha` is the compact coroot.
#[derive(Clone, Debug)]
pub struct RootedAlgebra {
    /// Human-readable name such as `su(5)` or `E8`.
    pub name: String,
    /// Root system.
    pub root_system: RootSystem,
    /// Structure constants in the root-adapted basis.
    pub algebra: LieAlgebraData,
    /// Matrix realization, when one exists.
    pub model: Option<MatrixModel>,
}

impl RootedAlgebra {
    /// Dimension.
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.root_system.rank()
    }

    /// Basis indices of `H_1..H_r`.
    pub fn cartan_index(&self) -> Vec<usize> {
        (0..self.rank()).collect()
    }

    /// Basis indices `(A_alpha, B_alpha)` of positive root number `p`.
    pub fn root_space_index(&self, p: usize) -> (usize, usize) {
        let r = self.rank();
        (r + 2 * p, r + 2 * p + 1)
    }

    /// Unit coordinate vector.
    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::from(1);
        v
    }

    /// Coordinates of the compact coroot `H_alpha` of a root given in
    /// simple-root coordinates.
    pub fn coroot_vector(&self, alpha: &[i64]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (j, c) in self.root_system.coroot_coefficients(alpha).into_iter().enumerate() {
            v[j] = c;
        }
        v
    }
}

/// Basis labels `H1.., A(..), B(..)` for a root system.
pub(crate) fn root_labels(rs: &RootSystem) -> Vec<String> {
    let mut labels: Vec<String> = (1..=rs.rank()).map(|j| format!("H{j}")).collect();
    for alpha in rs.positive_roots() {
        let s: Vec<String> = alpha.iter().map(|x| x.to_string()).collect();
        let s = s.join("");
        labels.push(format!("A{s}"));
        labels.push(format!("B{s}"));
    }
    labels
}
