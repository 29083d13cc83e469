//! Explicit matrix models of `su(n)` and `sp(n)` inside quaternionic
//! matrices, in the root-adapted basis of [`RootedAlgebra`].
//!
//! For `su(n)` the complex unit is the quaternion `i` and diagonal
//! positions are visited in the order `1, 3, 5, ..., 6, 4, 2`, so that every
//! highest root in the recursion occupies a consecutive `2 x 2` diagonal
//! block.

use crate::rooted::{root_labels, RootedAlgebra};
use crate::rootsystem::{RootSystem, TypeLetter};
use crate::RootError;
use hypercx_core::{ExactMatrix, LieAlgebraData, QuatMatrix, Quaternion, Rational, SpanBasis};

/// A basis of matrices together with a coordinate solver.
#[derive(Clone, Debug)]
pub struct MatrixModel {
    n: usize,
    basis: Vec<QuatMatrix>,
    pivot_rows: Vec<usize>,
    solver: ExactMatrix,
}

impl MatrixModel {
    /// Wraps a linearly independent family of `n x n` quaternionic matrices.
    pub fn new(n: usize, basis: Vec<QuatMatrix>) -> Result<Self, RootError> {
        let cols: Vec<Vec<Rational>> = basis.iter().map(|b| b.coords()).collect();
        let span = SpanBasis::spanned_by(4 * n * n, cols.iter())?;
        if span.dim() != basis.len() {
            return Err(RootError::Inconsistent("model basis is dependent".into()));
        }
        // Pivot columns of the row space of the coordinate matrix give an
        // invertible square subsystem.
        let pivot_rows = span.pivots().to_vec();
        let square = ExactMatrix::from_fn(basis.len(), basis.len(), |a, b| cols[b][pivot_rows[a]].clone());
        let solver = square.inverse().ok_or(hypercx_core::CoreError::Singular)?;
        Ok(MatrixModel {
            n,
            basis,
            pivot_rows,
            solver,
        })
    }

    /// Matrix size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Basis matrices.
    pub fn basis(&self) -> &[QuatMatrix] {
        &self.basis
    }

    /// Matrix of a coordinate vector.
    pub fn matrix_of(&self, v: &[Rational]) -> QuatMatrix {
        let mut m = QuatMatrix::zeros(self.n);
        for (c, b) in v.iter().zip(&self.basis) {
            if !num_traits::Zero::is_zero(c) {
                m.add_scaled(c, b);
            }
        }
        m
    }

    /// Coordinates of a matrix, or `None` outside the span.
    pub fn coords_of(&self, x: &QuatMatrix) -> Option<Vec<Rational>> {
        let flat = x.coords();
        let rhs: Vec<Rational> = self.pivot_rows.iter().map(|&p| flat[p].clone()).collect();
        let c = self.solver.mul_vec(&rhs);
        (self.matrix_of(&c) == *x).then_some(c)
    }

    /// Structure constants from matrix commutators.
    pub fn lie_algebra(&self, labels: Vec<String>) -> Result<LieAlgebraData, RootError> {
        let d = self.basis.len();
        let mut brackets = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let z = self.basis[a].commutator(&self.basis[b]);
                let c = self
                    .coords_of(&z)
                    .ok_or_else(|| RootError::Inconsistent("model not closed under brackets".into()))?;
                brackets.push(((a, b), c));
            }
        }
        Ok(LieAlgebraData::from_brackets(labels, brackets)?)
    }
}

fn quat(t: usize) -> Quaternion {
    Quaternion::basis(t)
}

fn sym_pair(n: usize, a: usize, b: usize, q: Quaternion, sign: i64) -> QuatMatrix {
    // q E_ab + sign * q E_ba
    let mut m = QuatMatrix::unit(n, a, b, q.clone());
    let s = Rational::from(sign);
    *m.get_mut(b, a) = m.get(b, a) + &q.scale(&s);
    m
}

/// Diagonal order `0, 2, 4, ..., 5, 3, 1` of matrix indices.
pub fn su_position_order(n: usize) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..n).step_by(2).collect();
    let odd: Vec<usize> = (1..n).step_by(2).collect();
    sigma.extend(odd.into_iter().rev());
    sigma
}

/// `su(n)` for `n >= 2` in the root-adapted basis.
pub fn su_model(n: usize) -> Result<RootedAlgebra, RootError> {
    if n < 2 {
        return Err(RootError::InvalidType("A".into(), n.saturating_sub(1)));
    }
    let rs = RootSystem::new(TypeLetter::A, n - 1)?;
    let sigma = su_position_order(n);
    let mut basis = Vec::new();
    for p in 0..n - 1 {
        let (a, b) = (sigma[p], sigma[p + 1]);
        let mut h = QuatMatrix::unit(n, a, a, quat(1));
        *h.get_mut(b, b) = -&quat(1);
        basis.push(h);
    }
    for alpha in rs.positive_roots() {
        let p = alpha.iter().position(|x| *x != 0).expect("nonzero root");
        let q = p + alpha.iter().filter(|x| **x != 0).count();
        let (a, b) = (sigma[p], sigma[q]);
        basis.push(sym_pair(n, a, b, quat(0), -1));
        basis.push(sym_pair(n, a, b, quat(1), 1));
    }
    let model = MatrixModel::new(n, basis)?;
    let algebra = model.lie_algebra(root_labels(&rs))?;
    Ok(RootedAlgebra {
        name: format!("su({n})"),
        root_system: rs,
        algebra,
        model: Some(model),
    })
}

/// Simple-root coordinates of `v` given in the orthonormal basis of `C_n`.
fn c_simple_coords(v: &[i64]) -> Vec<i64> {
    let n = v.len();
    let mut k = Vec::with_capacity(n);
    let mut acc = 0;
    for t in 0..n - 1 {
        acc += v[t];
        k.push(acc);
    }
    acc += v[n - 1];
    k.push(acc / 2);
    k
}

/// `sp(n)` for `n >= 2` as quaternionic skew-Hermitian matrices.
pub fn sp_model(n: usize) -> Result<RootedAlgebra, RootError> {
    let rs = RootSystem::new(TypeLetter::C, n)?;
    let mut basis = Vec::new();
    for a in 0..n {
        let mut h = QuatMatrix::unit(n, a, a, quat(1));
        if a + 1 < n {
            *h.get_mut(a + 1, a + 1) = -&quat(1);
        }
        basis.push(h);
    }
    let np = rs.positive_roots().len();
    let mut pairs: Vec<Option<(QuatMatrix, QuatMatrix)>> = vec![None; np];
    let mut place = |eps: Vec<i64>, pair: (QuatMatrix, QuatMatrix)| {
        let idx = rs.positive_index(&c_simple_coords(&eps)).expect("root of C_n");
        pairs[idx] = Some(pair);
    };
    for a in 0..n {
        for b in a + 1..n {
            let mut minus = vec![0; n];
            minus[a] = 1;
            minus[b] = -1;
            place(minus, (sym_pair(n, a, b, quat(0), -1), sym_pair(n, a, b, quat(1), 1)));
            let mut plus = vec![0; n];
            plus[a] = 1;
            plus[b] = 1;
            place(plus, (sym_pair(n, a, b, quat(2), 1), sym_pair(n, a, b, quat(3), 1)));
        }
        let mut long = vec![0; n];
        long[a] = 2;
        place(long, (QuatMatrix::unit(n, a, a, quat(2)), QuatMatrix::unit(n, a, a, quat(3))));
    }
    for (x, y) in pairs.into_iter().map(|p| p.expect("every root placed")) {
        basis.push(x);
        basis.push(y);
    }
    let model = MatrixModel::new(n, basis)?;
    let algebra = model.lie_algebra(root_labels(&rs))?;
    Ok(RootedAlgebra {
        name: format!("sp({n})"),
        root_system: rs,
        algebra,
        model: Some(model),
    })
}
