//! Quaternions over an exact field, quaternionic matrices, and the embedding
//! of `gl(n,H)` into real `4n x 4n` matrices.
//!
//! Real coordinates of a quaternion are ordered `(1, i, j, k)`. The fixed
//! hypercomplex structure on `H^n = R^{4n}` is left multiplication by
//! `i, j, k` on every 4-block; endomorphisms commuting with it are exactly
//! the block matrices whose blocks are right multiplications `x -> x q`.

use crate::matrix::ExactMatrix;
use crate::scalar::{Field, Rational};
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Quaternion `a + b i + c j + d k`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Quaternion<F = Rational>(pub [F; 4]);

impl<F: Field> Quaternion<F> {
    /// Zero quaternion.
    pub fn zero() -> Self {
        Quaternion([F::zero(), F::zero(), F::zero(), F::zero()])
    }

    /// Real unit.
    pub fn one() -> Self {
        Self::basis(0)
    }

    /// Basis element: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
    pub fn basis(t: usize) -> Self {
        let mut q = Self::zero();
        q.0[t] = F::one();
        q
    }

    /// Builds a quaternion from integer coordinates.
    pub fn from_i64(c: [i64; 4]) -> Self {
        Quaternion(c.map(F::from_i64))
    }

    /// True when zero.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// Real part.
    pub fn re(&self) -> &F {
        &self.0[0]
    }

    /// Quaternionic conjugate.
    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Quaternion([a.clone(), -b.clone(), -c.clone(), -d.clone()])
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &F) -> Self {
        Quaternion([
            self.0[0].mul_ref(s),
            self.0[1].mul_ref(s),
            self.0[2].mul_ref(s),
            self.0[3].mul_ref(s),
        ])
    }

    /// Hamilton product `self * o`.
    pub fn mul_q(&self, o: &Self) -> Self {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &o.0;
        let mut r = Self::zero();
        r.0[0].add_mul(a0, b0);
        r.0[0].sub_mul(a1, b1);
        r.0[0].sub_mul(a2, b2);
        r.0[0].sub_mul(a3, b3);
        r.0[1].add_mul(a0, b1);
        r.0[1].add_mul(a1, b0);
        r.0[1].add_mul(a2, b3);
        r.0[1].sub_mul(a3, b2);
        r.0[2].add_mul(a0, b2);
        r.0[2].sub_mul(a1, b3);
        r.0[2].add_mul(a2, b0);
        r.0[2].add_mul(a3, b1);
        r.0[3].add_mul(a0, b3);
        r.0[3].add_mul(a1, b2);
        r.0[3].sub_mul(a2, b1);
        r.0[3].add_mul(a3, b0);
        r
    }

    /// `self += a * b` (Hamilton product).
    pub fn add_mul_q(&mut self, a: &Self, b: &Self) {
        let p = a.mul_q(b);
        for t in 0..4 {
            self.0[t] += &p.0[t];
        }
    }

    /// Real 4x4 matrix of left multiplication `x -> self * x`.
    pub fn left_matrix(&self) -> ExactMatrix<F> {
        ExactMatrix::from_columns(
            4,
            &(0..4)
                .map(|t| self.mul_q(&Self::basis(t)).0.to_vec())
                .collect::<Vec<_>>(),
        )
    }

    /// Real 4x4 matrix of right multiplication `x -> x * self`.
    pub fn right_matrix(&self) -> ExactMatrix<F> {
        ExactMatrix::from_columns(
            4,
            &(0..4)
                .map(|t| Self::basis(t).mul_q(self).0.to_vec())
                .collect::<Vec<_>>(),
        )
    }
}

impl<F: Field> Add for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn add(self, o: &Quaternion<F>) -> Quaternion<F> {
        Quaternion(std::array::from_fn(|t| self.0[t].clone() + &o.0[t]))
    }
}

impl<F: Field> Sub for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn sub(self, o: &Quaternion<F>) -> Quaternion<F> {
        Quaternion(std::array::from_fn(|t| self.0[t].clone() - &o.0[t]))
    }
}

impl<F: Field> Neg for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn neg(self) -> Quaternion<F> {
        Quaternion(std::array::from_fn(|t| -self.0[t].clone()))
    }
}

impl<F: Field> Mul for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn mul(self, o: &Quaternion<F>) -> Quaternion<F> {
        self.mul_q(o)
    }
}

impl<F: Field> fmt::Display for Quaternion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let units = ["", "i", "j", "k"];
        let mut parts = Vec::new();
        for (x, u) in self.0.iter().zip(units) {
            if x.is_zero() {
                continue;
            }
            let s = x.to_string();
            parts.push(if u.is_empty() {
                s
            } else if s == "1" {
                u.to_string()
            } else if s == "-1" {
                format!("-{u}")
            } else {
                format!("{s}{u}")
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+").replace("+-", "-"))
        }
    }
}

impl<F: Field> fmt::Debug for Quaternion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Square quaternionic matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct QuatMatrix<F = Rational> {
    n: usize,
    data: Vec<Quaternion<F>>,
}

impl<F: Field> QuatMatrix<F> {
    /// Zero `n x n` matrix.
    pub fn zeros(n: usize) -> Self {
        QuatMatrix {
            n,
            data: vec![Quaternion::zero(); n * n],
        }
    }

    /// Matrix with a single nonzero entry `q` at `(a, b)`.
    pub fn unit(n: usize, a: usize, b: usize, q: Quaternion<F>) -> Self {
        let mut m = Self::zeros(n);
        m.data[a * n + b] = q;
        m
    }

    /// Size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(a, b)`.
    pub fn get(&self, a: usize, b: usize) -> &Quaternion<F> {
        &self.data[a * self.n + b]
    }

    /// Mutable entry `(a, b)`.
    pub fn get_mut(&mut self, a: usize, b: usize) -> &mut Quaternion<F> {
        &mut self.data[a * self.n + b]
    }

    /// True when zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|q| q.is_zero())
    }

    /// Sum.
    pub fn add(&self, o: &Self) -> Self {
        QuatMatrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Difference.
    pub fn sub(&self, o: &Self) -> Self {
        QuatMatrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Real scalar multiple.
    pub fn scale(&self, s: &F) -> Self {
        QuatMatrix {
            n: self.n,
            data: self.data.iter().map(|q| q.scale(s)).collect(),
        }
    }

    /// `self += s * o`.
    pub fn add_scaled(&mut self, s: &F, o: &Self) {
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            for t in 0..4 {
                if !b.0[t].is_zero() {
                    a.0[t].add_mul(s, &b.0[t]);
                }
            }
        }
    }

    /// Ordinary quaternionic matrix product `self * o`.
    pub fn matmul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for a in 0..n {
            for b in 0..n {
                let x = self.get(a, b);
                if x.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let y = o.get(b, c);
                    if !y.is_zero() {
                        out.data[a * n + c].add_mul_q(x, y);
                    }
                }
            }
        }
        out
    }

    /// Commutator for the ordinary product.
    pub fn commutator(&self, o: &Self) -> Self {
        self.matmul(o).sub(&o.matmul(self))
    }

    /// Product in the right-multiplication picture: if `self` and `o`
    /// represent the real endomorphisms with blocks `R_{x_ab}` and
    /// `R_{y_ab}`, the result represents their composition `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for a in 0..n {
            for b in 0..n {
                let x = self.get(a, b);
                if x.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let y = o.get(b, c);
                    if !y.is_zero() {
                        // R_x R_y = R_{y x}
                        out.data[a * n + c].add_mul_q(y, x);
                    }
                }
            }
        }
        out
    }

    /// Commutator for [`QuatMatrix::compose`].
    pub fn compose_commutator(&self, o: &Self) -> Self {
        self.compose(o).sub(&o.compose(self))
    }

    /// Flattened real coordinates `(a, b, component)` of length `4 n^2`.
    pub fn coords(&self) -> Vec<F> {
        self.data.iter().flat_map(|q| q.0.iter().cloned()).collect()
    }

    /// Inverse of [`QuatMatrix::coords`].
    pub fn from_coords(n: usize, v: &[F]) -> Self {
        assert_eq!(v.len(), 4 * n * n, "coordinate length mismatch");
        QuatMatrix {
            n,
            data: v
                .chunks(4)
                .map(|c| Quaternion([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]))
                .collect(),
        }
    }

    /// Real `4n x 4n` matrix with blocks `R_{q_ab}`.
    pub fn expand_right(&self) -> ExactMatrix<F> {
        let n = self.n;
        let mut m = ExactMatrix::zeros(4 * n, 4 * n);
        for a in 0..n {
            for b in 0..n {
                let q = self.get(a, b);
                if q.is_zero() {
                    continue;
                }
                let r = q.right_matrix();
                for s in 0..4 {
                    for t in 0..4 {
                        m[(4 * a + s, 4 * b + t)] = r[(s, t)].clone();
                    }
                }
            }
        }
        m
    }

    /// Real `4n x 4n` matrix of `x -> self * x` on column vectors `H^n`.
    pub fn expand_left(&self) -> ExactMatrix<F> {
        let n = self.n;
        let mut m = ExactMatrix::zeros(4 * n, 4 * n);
        for a in 0..n {
            for b in 0..n {
                let q = self.get(a, b);
                if q.is_zero() {
                    continue;
                }
                let l = q.left_matrix();
                for s in 0..4 {
                    for t in 0..4 {
                        m[(4 * a + s, 4 * b + t)] = l[(s, t)].clone();
                    }
                }
            }
        }
        m
    }

    /// Sum of the real parts of the diagonal.
    pub fn real_trace(&self) -> F {
        let mut t = F::zero();
        for a in 0..self.n {
            t += self.get(a, a).re();
        }
        t
    }

    /// Quaternionic conjugate transpose.
    pub fn conj_transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zeros(n);
        for a in 0..n {
            for b in 0..n {
                m.data[b * n + a] = self.get(a, b).conj();
            }
        }
        m
    }
}

impl<F: Field> fmt::Display for QuatMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|b| self.get(a, b).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for QuatMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Block-diagonal left multiplications by `i`, `j`, `k` on `H^n`.
pub fn standard_structure<F: Field>(n: usize) -> [ExactMatrix<F>; 3] {
    [1, 2, 3].map(|t| {
        let l = Quaternion::<F>::basis(t).left_matrix();
        ExactMatrix::block_diag(&vec![l; n])
    })
}

/// Reads a real `4n x 4n` matrix as a quaternionic matrix in the
/// right-multiplication picture. Returns `None` unless every 4-block is a
/// right multiplication, i.e. unless the matrix commutes with the standard
/// structure.
pub fn compress_right<F: Field>(m: &ExactMatrix<F>) -> Option<QuatMatrix<F>> {
    if !m.is_square() || m.rows() % 4 != 0 {
        return None;
    }
    let n = m.rows() / 4;
    let mut out = QuatMatrix::zeros(n);
    for a in 0..n {
        for b in 0..n {
            let q = Quaternion(std::array::from_fn(|s| m[(4 * a + s, 4 * b)].clone()));
            let r = q.right_matrix();
            for s in 0..4 {
                for t in 0..4 {
                    if r[(s, t)] != m[(4 * a + s, 4 * b + t)] {
                        return None;
                    }
                }
            }
            *out.get_mut(a, b) = q;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Quaternion<Rational>;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Q::basis(1), Q::basis(2), Q::basis(3));
        assert_eq!(i.mul_q(&j), k);
        assert_eq!(j.mul_q(&k), i);
        assert_eq!(k.mul_q(&i), j);
        assert_eq!(i.mul_q(&i), -&Q::one());
    }

    #[test]
    fn standard_structure_matches_frame_convention() {
        let [i, j, k] = standard_structure::<Rational>(1);
        // I e1 = e2, I e3 = e4, J e1 = e3, J e2 = -e4, K e1 = e4, K e2 = e3.
        assert_eq!(i.column(0), vec![0, 1, 0, 0].into_iter().map(Rational::from).collect::<Vec<_>>());
        assert_eq!(i.column(2), vec![0, 0, 0, 1].into_iter().map(Rational::from).collect::<Vec<_>>());
        assert_eq!(j.column(1), vec![0, 0, 0, -1].into_iter().map(Rational::from).collect::<Vec<_>>());
        assert_eq!(k.column(1), vec![0, 0, 1, 0].into_iter().map(Rational::from).collect::<Vec<_>>());
        assert_eq!(&i * &j, k);
    }

    #[test]
    fn compose_matches_real_product() {
        let x = QuatMatrix::from_coords(2, &(0..16).map(|t| Rational::from(t as i64 - 5)).collect::<Vec<_>>());
        let y = QuatMatrix::from_coords(2, &(0..16).map(|t| Rational::from((t * t) as i64 % 7 - 3)).collect::<Vec<_>>());
        let real = &x.expand_right() * &y.expand_right();
        assert_eq!(x.compose(&y).expand_right(), real);
        assert_eq!(compress_right(&real).unwrap(), x.compose(&y));
        let [i, _, _] = standard_structure::<Rational>(2);
        assert_eq!(&real * &i, &i * &real);
    }
}
