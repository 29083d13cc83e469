//! Dense matrices over an exact field.

use crate::scalar::{Field, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Dense row-major matrix with exact entries.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<F = Rational> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> ExactMatrix<F> {
    /// The `rows x cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    /// The `n x n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from a row-major vector. Panics on length mismatch.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        ExactMatrix { rows, cols, data }
    }

    /// Builds a matrix from nested rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        ExactMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    /// Builds a matrix entrywise.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Builds an integer matrix.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| F::from_i64(x)).collect())
                .collect(),
        )
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True for square matrices.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn data(&self) -> &[F] {
        &self.data
    }

    /// Consumes the matrix and returns its row-major entries.
    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    /// Copy of row `i`.
    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    /// Copy of column `j`.
    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Overwrites column `j`.
    pub fn set_column(&mut self, j: usize, v: &[F]) {
        assert_eq!(v.len(), self.rows, "column length mismatch");
        for (i, x) in v.iter().enumerate() {
            self[(i, j)] = x.clone();
        }
    }

    /// All columns as vectors.
    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Entrywise scalar multiple.
    pub fn scale(&self, c: &F) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            if !y.is_zero() {
                x.add_mul(c, y);
            }
        }
    }

    /// Matrix product.
    pub fn matmul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let orow = &o.data[k * o.cols..(k + 1) * o.cols];
                let outrow = &mut out.data[i * o.cols..(i + 1) * o.cols];
                for (x, b) in outrow.iter_mut().zip(orow) {
                    if !b.is_zero() {
                        x.add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        let mut out = vec![F::zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.data[i * self.cols..(i + 1) * self.cols].iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    o.add_mul(a, b);
                }
            }
        }
        out
    }

    /// Commutator `self * o - o * self`.
    pub fn commutator(&self, o: &Self) -> Self {
        &self.matmul(o) - &o.matmul(self)
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> F {
        assert!(self.is_square(), "trace of non-square matrix");
        let mut t = F::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// Applies a map entrywise, possibly changing the field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> ExactMatrix<G> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Submatrix with the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Exact rank over `F` (fraction-free for rationals).
    pub fn rank(&self) -> usize {
        F::rank_of(self)
    }

    /// Rank by Gaussian elimination over the field.
    pub fn rank_by_elimination(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !m[(r, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, rank);
            let inv = m[(rank, c)].inv();
            for r in rank + 1..m.rows {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let f = m[(r, c)].mul_ref(&inv);
                for k in c..m.cols {
                    let t = m[(rank, k)].clone();
                    if !t.is_zero() {
                        m[(r, k)].sub_mul(&f, &t);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Swaps two rows.
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    /// Determinant by elimination.
    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[(r, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            let inv = piv.inv();
            for r in c + 1..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let f = m[(r, c)].mul_ref(&inv);
                for k in c..n {
                    let t = m[(c, k)].clone();
                    if !t.is_zero() {
                        m[(r, k)].sub_mul(&f, &t);
                    }
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a[(r, c)].is_zero())?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let s = a[(c, c)].inv();
            for k in 0..n {
                a[(c, k)] *= &s;
                inv[(c, k)] *= &s;
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for k in 0..n {
                    let t = a[(c, k)].clone();
                    if !t.is_zero() {
                        a[(r, k)].sub_mul(&f, &t);
                    }
                    let t = inv[(c, k)].clone();
                    if !t.is_zero() {
                        inv[(r, k)].sub_mul(&f, &t);
                    }
                }
            }
        }
        Some(inv)
    }

    /// Basis of the right kernel `{x : self * x = 0}`, one vector per free
    /// column of the reduced row-echelon form.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut s = crate::span::SpanBasis::new(self.cols);
        for i in 0..self.rows {
            let _ = s.insert(&self.row(i));
        }
        let pivots = s.pivots().to_vec();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut x = vec![F::zero(); self.cols];
            x[free] = F::one();
            for (row, &p) in s.vectors().iter().zip(&pivots) {
                x[p] = -row[free].clone();
            }
            out.push(x);
        }
        out
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        Some(self.inverse()?.mul_vec(b))
    }

    /// Block-diagonal direct sum.
    pub fn block_diag(blocks: &[Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// True when symmetric.
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// True when all leading principal minors are positive.
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        // Symmetric elimination without pivoting: pivots are ratios of
        // consecutive leading minors, so all must be positive.
        let n = self.rows;
        let mut m = self.clone();
        for c in 0..n {
            if m[(c, c)].signum() <= 0 {
                return false;
            }
            let inv = m[(c, c)].inv();
            for r in c + 1..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let f = m[(r, c)].mul_ref(&inv);
                for k in c..n {
                    let t = m[(c, k)].clone();
                    if !t.is_zero() {
                        m[(r, k)].sub_mul(&f, &t);
                    }
                }
            }
        }
        true
    }
}

impl ExactMatrix<Rational> {
    /// Parses "a,b;c,d" style rational matrices (rows separated by `;`).
    pub fn parse(s: &str) -> Result<Self, crate::CoreError> {
        let mut rows = Vec::new();
        for row in s.split(';') {
            let mut r = Vec::new();
            for e in row.split(',') {
                r.push(
                    e.trim()
                        .parse::<Rational>()
                        .map_err(|e| crate::CoreError::Parse(e.to_string()))?,
                );
            }
            rows.push(r);
        }
        let c = rows[0].len();
        if rows.iter().any(|r| r.len() != c) {
            return Err(crate::CoreError::Parse(format!("ragged matrix {s:?}")));
        }
        Ok(Self::from_rows(rows))
    }

    /// Exact rank by fraction-free (Bareiss) elimination over the integers
    /// after clearing denominators row by row.
    pub fn rank_bareiss(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(p, rank);
            let piv = m[rank][c].clone();
            for r in rank + 1..rows {
                let a = m[r][c].clone();
                for k in c..cols {
                    let v = &piv * &m[r][k] - &a * &m[rank][k];
                    // Exact by Sylvester's identity.
                    m[r][k] = v / &prev;
                }
            }
            prev = piv;
            rank += 1;
        }
        rank
    }
}

impl<F> Index<(usize, usize)> for ExactMatrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for ExactMatrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Add for &ExactMatrix<F> {
    type Output = ExactMatrix<F>;
    fn add(self, o: &ExactMatrix<F>) -> ExactMatrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }
}

impl<F: Field> Sub for &ExactMatrix<F> {
    type Output = ExactMatrix<F>;
    fn sub(self, o: &ExactMatrix<F>) -> ExactMatrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        }
    }
}

impl<F: Field> Neg for &ExactMatrix<F> {
    type Output = ExactMatrix<F>;
    fn neg(self) -> ExactMatrix<F> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<F: Field> Mul for &ExactMatrix<F> {
    type Output = ExactMatrix<F>;
    fn mul(self, o: &ExactMatrix<F>) -> ExactMatrix<F> {
        self.matmul(o)
    }
}

impl<F: Field> fmt::Display for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let w = cells.iter().map(|s| s.len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>w$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

impl<F: Field> Serialize for ExactMatrix<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
