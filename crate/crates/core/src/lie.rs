//! Finite-dimensional real Lie algebras given by structure constants.

use crate::matrix::ExactMatrix;
use crate::scalar::{Field, Rational};
use crate::CoreError;
use std::collections::BTreeMap;

/// Sparse vector: sorted `(index, nonzero coefficient)` pairs.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Lie algebra `[e_i, e_j] = sum_k c_ij^k e_k` stored sparsely for all
/// ordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraData<F = Rational> {
    dim: usize,
    labels: Vec<String>,
    consts: Vec<SparseVec<F>>,
}

/// Outcome of a Jacobi check.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct JacobiReport {
    /// Number of unordered triples checked.
    pub triples_checked: usize,
    /// Offending basis triples `(i, j, k)` with `i < j < k`.
    pub violations: Vec<(usize, usize, usize)>,
}

impl JacobiReport {
    /// True when no violation was found.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn to_sparse<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

impl<F: Field> LieAlgebraData<F> {
    /// Builds an algebra from brackets of basis pairs.
    ///
    /// Only one of `(i,j)` and `(j,i)` needs to be given; if both are, they
    /// must be negatives of each other. Diagonal entries must vanish.
    pub fn from_brackets(
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<F>)>,
    ) -> Result<Self, CoreError> {
        let dim = labels.len();
        let mut table: BTreeMap<(usize, usize), SparseVec<F>> = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= dim || j >= dim || v.len() != dim {
                return Err(CoreError::DimensionMismatch {
                    expected: dim,
                    found: v.len().max(i.max(j) + 1),
                });
            }
            let sv = to_sparse(&v);
            if i == j {
                if !sv.is_empty() {
                    return Err(CoreError::NotAntisymmetric(i, j));
                }
                continue;
            }
            let neg: SparseVec<F> = sv.iter().map(|(k, c)| (*k, -c.clone())).collect();
            for (key, val) in [((i, j), sv), ((j, i), neg)] {
                if let Some(old) = table.get(&key) {
                    if *old != val {
                        return Err(CoreError::NotAntisymmetric(i, j));
                    }
                }
                table.insert(key, val);
            }
        }
        let mut consts = vec![Vec::new(); dim * dim];
        for ((i, j), v) in table {
            consts[i * dim + j] = v;
        }
        Ok(LieAlgebraData {
            dim,
            labels,
            consts,
        })
    }

    /// The abelian algebra of dimension `k` with the given labels.
    pub fn abelian(labels: Vec<String>) -> Self {
        let dim = labels.len();
        LieAlgebraData {
            dim,
            labels,
            consts: vec![Vec::new(); dim * dim],
        }
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis labels.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Replaces the basis labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    /// `[e_i, e_j]` as a sparse vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.consts[i * self.dim + j]
    }

    /// Structure constant `c_ij^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> F {
        self.bracket_basis(i, j)
            .iter()
            .find(|(t, _)| *t == k)
            .map_or_else(F::zero, |(_, c)| c.clone())
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>, CoreError> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(CoreError::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let mut out = vec![F::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul_ref(b);
                for (k, c) in self.bracket_basis(i, j) {
                    out[*k].add_mul(&ab, c);
                }
            }
        }
        Ok(out)
    }

    /// Bracket of a basis vector with a coordinate vector.
    pub fn bracket_with_basis(&self, i: usize, y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in self.bracket_basis(i, j) {
                out[*k].add_mul(b, c);
            }
        }
        out
    }

    /// Adjoint matrix of `e_i`: column `j` is `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> ExactMatrix<F> {
        let mut m = ExactMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.bracket_basis(i, j) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Adjoint matrix of an arbitrary vector.
    pub fn ad(&self, x: &[F]) -> ExactMatrix<F> {
        let mut m: ExactMatrix<F> = ExactMatrix::zeros(self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.bracket_basis(i, j) {
                    m[(*k, j)].add_mul(a, c);
                }
            }
        }
        m
    }

    /// Negative Killing form `B(x, y) = -tr(ad_x ad_y)` on basis pairs.
    pub fn killing_form(&self) -> ExactMatrix<F> {
        let n = self.dim;
        let mut b = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                // tr(ad_i ad_j) = sum_{k,l} c_{i,l}^k c_{j,k}^l
                let mut t = F::zero();
                for k in 0..n {
                    for (l, c1) in self.bracket_basis(j, k) {
                        for (kk, c2) in self.bracket_basis(i, *l) {
                            if *kk == k {
                                t.add_mul(c1, c2);
                            }
                        }
                    }
                }
                let v = -t;
                b[(j, i)] = v.clone();
                b[(i, j)] = v;
            }
        }
        b
    }

    /// Checks the Jacobi identity on all basis triples.
    pub fn verify_jacobi(&self) -> JacobiReport {
        let n = self.dim;
        let mut rep = JacobiReport::default();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    rep.triples_checked += 1;
                    let mut acc = vec![F::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, x) in self.bracket_basis(a, b) {
                            for (m, y) in self.bracket_basis(*l, c) {
                                acc[*m].add_mul(x, y);
                            }
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        rep.violations.push((i, j, k));
                    }
                }
            }
        }
        rep
    }

    /// Direct sum `self ⊕ other`, with `self` first.
    pub fn direct_sum(&self, other: &LieAlgebraData<F>) -> LieAlgebraData<F> {
        let n = self.dim + other.dim;
        let mut consts = vec![Vec::new(); n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                consts[i * n + j] = self.bracket_basis(i, j).clone();
            }
        }
        let o = self.dim;
        for i in 0..other.dim {
            for j in 0..other.dim {
                consts[(o + i) * n + o + j] = other
                    .bracket_basis(i, j)
                    .iter()
                    .map(|(k, c)| (k + o, c.clone()))
                    .collect();
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        LieAlgebraData {
            dim: n,
            labels,
            consts,
        }
    }

    /// The same algebra written in a new basis given by the columns of `p`.
    pub fn change_basis(
        &self,
        p: &ExactMatrix<F>,
        labels: Vec<String>,
    ) -> Result<LieAlgebraData<F>, CoreError> {
        if p.rows() != self.dim || p.cols() != self.dim || labels.len() != self.dim {
            return Err(CoreError::DimensionMismatch {
                expected: self.dim,
                found: p.cols(),
            });
        }
        let pinv = p.inverse().ok_or(CoreError::Singular)?;
        let cols = p.columns();
        let mut brackets = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let z = self.bracket(&cols[a], &cols[b])?;
                brackets.push(((a, b), pinv.mul_vec(&z)));
            }
        }
        Self::from_brackets(labels, brackets)
    }

    /// Maps every structure constant into another field.
    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> LieAlgebraData<G> {
        LieAlgebraData {
            dim: self.dim,
            labels: self.labels.clone(),
            consts: self
                .consts
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|(k, c)| (*k, f(c)))
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    /// True when all brackets vanish.
    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(|v| v.is_empty())
    }

    /// Returns a copy with one structure constant overwritten (both orders),
    /// for negative-control tests.
    pub fn with_constant(&self, i: usize, j: usize, k: usize, c: F) -> LieAlgebraData<F> {
        let mut out = self.clone();
        let n = self.dim;
        for (a, b, v) in [(i, j, c.clone()), (j, i, -c)] {
            let entry = &mut out.consts[a * n + b];
            entry.retain(|(t, _)| *t != k);
            if !v.is_zero() {
                entry.push((k, v));
                entry.sort_by_key(|(t, _)| *t);
            }
        }
        out
    }
}
