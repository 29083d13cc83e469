//! Incrementally grown subspaces kept in fully reduced row-echelon form.

use crate::scalar::Field;
use crate::CoreError;

/// A linear subspace of `F^n` stored as a fully reduced row-echelon basis.
///
/// Every basis row has a leading 1 at its pivot column and zeros at every
/// other pivot column; rows are sorted by pivot. The basis is therefore a
/// canonical function of the span, independent of insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanBasis<F> {
    ambient_dim: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> SpanBasis<F> {
    /// The zero subspace of `F^ambient_dim`.
    pub fn new(ambient_dim: usize) -> Self {
        SpanBasis {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Span of the given vectors.
    pub fn spanned_by<'a>(
        ambient_dim: usize,
        vs: impl IntoIterator<Item = &'a Vec<F>>,
    ) -> Result<Self, CoreError> {
        let mut s = Self::new(ambient_dim);
        for v in vs {
            s.insert(v)?;
        }
        Ok(s)
    }

    /// Dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduced basis vectors, sorted by pivot.
    pub fn vectors(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Pivot columns, one per basis vector.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &[F]) -> Result<(), CoreError> {
        if v.len() != self.ambient_dim {
            return Err(CoreError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Residual of `v` after elimination against the basis. Zero iff `v` is
    /// in the span.
    pub fn reduce(&self, v: &[F]) -> Result<Vec<F>, CoreError> {
        self.check_len(v)?;
        let mut r = v.to_vec();
        self.reduce_in_place(&mut r);
        Ok(r)
    }

    fn reduce_in_place(&self, r: &mut [F]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r[p..].iter_mut().zip(&row[p..]) {
                if !y.is_zero() {
                    x.sub_mul(&c, y);
                }
            }
        }
    }

    /// True when `v` lies in the span.
    pub fn contains(&self, v: &[F]) -> Result<bool, CoreError> {
        Ok(self.reduce(v)?.iter().all(|x| x.is_zero()))
    }

    /// Inserts `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F]) -> Result<bool, CoreError> {
        let r = self.reduce(v)?;
        Ok(self.insert_residual(r))
    }

    /// Inserts a vector already reduced against the current basis. Returns
    /// false for the zero residual.
    ///
    /// Callers that reduce candidates in bulk must re-reduce if the basis
    /// changed since the residual was computed; [`SpanBasis::insert`] does
    /// that automatically.
    pub fn insert_residual(&mut self, mut r: Vec<F>) -> bool {
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv();
        for x in r[p..].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row[p..].iter_mut().zip(&r[p..]) {
                if !y.is_zero() {
                    x.sub_mul(&c, y);
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    /// Coordinates of `v` in the reduced basis, or `None` if not in span.
    pub fn coordinates(&self, v: &[F]) -> Result<Option<Vec<F>>, CoreError> {
        self.check_len(v)?;
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.sub_mul(c, y);
                }
            }
        }
        Ok(r.iter().all(|x| x.is_zero()).then_some(coords))
    }

    /// True when `other` is contained in `self`.
    pub fn contains_span(&self, other: &SpanBasis<F>) -> Result<bool, CoreError> {
        for v in other.vectors() {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
