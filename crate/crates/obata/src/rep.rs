//! Flat coordinate representations of endomorphisms.
//!
//! Endomorphisms are stored as coordinate vectors so that spans can be grown
//! with [`SpanBasis`](hypercx_core::SpanBasis). Two encodings exist: dense
//! real `d x d` matrices in row-major order, and `n x n` quaternionic
//! matrices in the right-multiplication picture, valid for endomorphisms
//! commuting with the standard structure.

use hypercx_core::{compress_right, ExactMatrix, QuatMatrix, Quaternion, Rational};
use num_traits::Zero;
use serde::Serialize;

/// Encoding of endomorphisms as flat coordinate vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "size", rename_all = "lowercase")]
pub enum Rep {
    /// Real `d x d` matrices, row-major, `d^2` coordinates.
    Real(usize),
    /// Quaternionic `n x n` matrices acting by right multiplication on
    /// `H^n`, `4 n^2` coordinates.
    Quat(usize),
}

impl Rep {
    /// Real dimension of the space acted on.
    pub fn space_dim(&self) -> usize {
        match *self {
            Rep::Real(d) => d,
            Rep::Quat(n) => 4 * n,
        }
    }

    /// Number of coordinates.
    pub fn coord_dim(&self) -> usize {
        match *self {
            Rep::Real(d) => d * d,
            Rep::Quat(n) => 4 * n * n,
        }
    }

    /// Coordinates of a real matrix, or `None` when it is not representable.
    pub fn encode(&self, m: &ExactMatrix) -> Option<Vec<Rational>> {
        match *self {
            Rep::Real(d) => (m.rows() == d && m.cols() == d).then(|| m.data().to_vec()),
            Rep::Quat(n) => compress_right(m).filter(|q| q.n() == n).map(|q| q.coords()),
        }
    }

    /// The real matrix with these coordinates.
    pub fn decode(&self, a: &[Rational]) -> ExactMatrix {
        match *self {
            Rep::Real(d) => ExactMatrix::from_vec(d, d, a.to_vec()),
            Rep::Quat(n) => QuatMatrix::from_coords(n, a).expand_right(),
        }
    }

    /// Quaternionic matrix, available in the quaternionic encoding only.
    pub fn quat(&self, a: &[Rational]) -> Option<QuatMatrix> {
        match *self {
            Rep::Real(_) => None,
            Rep::Quat(n) => Some(QuatMatrix::from_coords(n, a)),
        }
    }

    /// Composition `a ∘ b`.
    pub fn compose(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        match *self {
            Rep::Real(d) => {
                let x = ExactMatrix::from_vec(d, d, a.to_vec());
                let y = ExactMatrix::from_vec(d, d, b.to_vec());
                x.matmul(&y).into_data()
            }
            Rep::Quat(n) => QuatMatrix::from_coords(n, a)
                .compose(&QuatMatrix::from_coords(n, b))
                .coords(),
        }
    }

    /// Commutator `a ∘ b - b ∘ a`.
    pub fn commutator(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        match *self {
            Rep::Real(d) => {
                let x = ExactMatrix::from_vec(d, d, a.to_vec());
                let y = ExactMatrix::from_vec(d, d, b.to_vec());
                x.commutator(&y).into_data()
            }
            Rep::Quat(n) => QuatMatrix::from_coords(n, a)
                .compose_commutator(&QuatMatrix::from_coords(n, b))
                .coords(),
        }
    }

    /// Image of the real vector `v`.
    pub fn apply(&self, a: &[Rational], v: &[Rational]) -> Vec<Rational> {
        match *self {
            Rep::Real(d) => ExactMatrix::from_vec(d, d, a.to_vec()).mul_vec(v),
            Rep::Quat(n) => {
                let m = QuatMatrix::from_coords(n, a);
                let mut out = vec![Rational::zero(); 4 * n];
                for r in 0..n {
                    let mut acc = Quaternion::zero();
                    for c in 0..n {
                        let q = m.get(r, c);
                        if q.is_zero() {
                            continue;
                        }
                        let x = Quaternion(std::array::from_fn(|s| v[4 * c + s].clone()));
                        // Block R_q sends x to x q.
                        acc.add_mul_q(&x, q);
                    }
                    for s in 0..4 {
                        out[4 * r + s] = acc.0[s].clone();
                    }
                }
                out
            }
        }
    }

    /// Trace of the real endomorphism.
    pub fn real_trace(&self, a: &[Rational]) -> Rational {
        match *self {
            Rep::Real(d) => (0..d).map(|i| a[i * d + i].clone()).sum(),
            Rep::Quat(n) => QuatMatrix::from_coords(n, a).real_trace() * Rational::from(4),
        }
    }
}

/// `a - b`.
pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `a += c * b`.
pub(crate) fn axpy(a: &mut [Rational], c: &Rational, b: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += &(c * y);
        }
    }
}

pub(crate) fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(|x| x.is_zero())
}
