//! Curvature of a left-invariant connection and covariant derivatives of
//! endomorphism-valued tensors.

use crate::connection::Connection;
use crate::rep::{axpy, is_zero, sub, Rep};
use hypercx_core::{LieAlgebraData, Rational, SpanBasis};
use num_traits::Zero;
use std::collections::BTreeMap;

/// `R(e_i, e_j) = [∇_{e_i}, ∇_{e_j}] − ∇_{[e_i, e_j]}` for `i < j`.
#[derive(Clone, Debug)]
pub struct CurvatureTensor {
    /// Encoding of the values.
    pub rep: Rep,
    /// Dimension of the algebra.
    pub dim: usize,
    /// Values indexed by `(i, j)` with `i < j`.
    pub r: BTreeMap<(usize, usize), Vec<Rational>>,
}

/// Computes the curvature from commutators of the connection operators.
pub fn curvature(c: &Connection, g: &LieAlgebraData) -> CurvatureTensor {
    let d = c.dim();
    let mut r = BTreeMap::new();
    for i in 0..d {
        for j in i + 1..d {
            let mut v = c.rep.commutator(&c.coords[i], &c.coords[j]);
            for (k, s) in g.bracket_basis(i, j) {
                axpy(&mut v, &-s.clone(), &c.coords[*k]);
            }
            r.insert((i, j), v);
        }
    }
    CurvatureTensor { rep: c.rep, dim: d, r }
}

impl CurvatureTensor {
    /// `R(e_i, e_j)` for any ordered pair.
    pub fn get(&self, i: usize, j: usize) -> Vec<Rational> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.r[&(i, j)].clone(),
            std::cmp::Ordering::Greater => self.r[&(j, i)].iter().map(|x| -x.clone()).collect(),
            std::cmp::Ordering::Equal => vec![Rational::zero(); self.rep.coord_dim()],
        }
    }

    /// True when every value vanishes.
    pub fn is_flat(&self) -> bool {
        self.r.values().all(|v| is_zero(v))
    }

    /// Span of all values.
    pub fn span(&self) -> SpanBasis<Rational> {
        let mut s = SpanBasis::new(self.rep.coord_dim());
        for v in self.r.values() {
            s.insert(v).expect("curvature coordinates");
        }
        s
    }

    /// Basis triples `i < j < k` violating `R(x,y)z + R(y,z)x + R(z,x)y = 0`.
    pub fn bianchi_defects(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim;
        let unit = |t: usize| {
            let mut v = vec![Rational::zero(); d];
            v[t] = Rational::from(1);
            v
        };
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let a = self.rep.apply(&self.get(i, j), &unit(k));
                    let b = self.rep.apply(&self.get(j, k), &unit(i));
                    let c = self.rep.apply(&self.get(k, i), &unit(j));
                    let s: Vec<Rational> = a.iter().zip(&b).zip(&c).map(|((x, y), z)| x + y + z).collect();
                    if !is_zero(&s) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// As a tensor with two vector slots.
    pub fn to_tensor(&self) -> EndTensor {
        let mut values = BTreeMap::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                values.insert(vec![i, j], self.get(i, j));
            }
        }
        EndTensor {
            rep: self.rep,
            dim: self.dim,
            slots: 2,
            values,
        }
    }
}

/// Endomorphism-valued tensor `T(y_1, .., y_k)` stored on basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndTensor {
    /// Encoding of the values.
    pub rep: Rep,
    /// Dimension of the algebra.
    pub dim: usize,
    /// Number of vector slots.
    pub slots: usize,
    /// Value on every basis tuple.
    pub values: BTreeMap<Vec<usize>, Vec<Rational>>,
}

impl EndTensor {
    /// A single endomorphism, viewed as a tensor without slots.
    pub fn constant(rep: Rep, dim: usize, value: Vec<Rational>) -> EndTensor {
        EndTensor {
            rep,
            dim,
            slots: 0,
            values: BTreeMap::from([(Vec::new(), value)]),
        }
    }

    /// Value of a tensor without slots.
    pub fn value(&self) -> &[Rational] {
        &self.values[&Vec::new()]
    }

    /// True when every value vanishes.
    pub fn is_zero(&self) -> bool {
        self.values.values().all(|v| is_zero(v))
    }
}

/// `(∇_x T)(y_1..y_k) = [∇_x, T(y_1..y_k)] − Σ_i T(y_1, .., ∇_x y_i, .., y_k)`,
/// with the new slot `x` placed first.
pub fn covariant_derivative(c: &Connection, t: &EndTensor) -> EndTensor {
    let mut values = BTreeMap::new();
    for x in 0..c.dim() {
        for (ys, v) in &t.values {
            let mut out = c.rep.commutator(&c.coords[x], v);
            for i in 0..ys.len() {
                let col = c.nabla[x].column(ys[i]);
                for (z, s) in col.iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    let mut tuple = ys.clone();
                    tuple[i] = z;
                    out = sub(&out, &t.values[&tuple].iter().map(|w| w * s).collect::<Vec<_>>());
                }
            }
            let mut key = vec![x];
            key.extend_from_slice(ys);
            values.insert(key, out);
        }
    }
    EndTensor {
        rep: t.rep,
        dim: t.dim,
        slots: t.slots + 1,
        values,
    }
}

/// `∇_x T` for a single direction `x`, without the new slot.
pub fn covariant_derivative_along(c: &Connection, x: &[Rational], t: &EndTensor) -> EndTensor {
    let full = covariant_derivative(c, t);
    let mut values = BTreeMap::new();
    for ys in t.values.keys() {
        let mut out = vec![Rational::zero(); t.rep.coord_dim()];
        for (k, s) in x.iter().enumerate() {
            let mut key = vec![k];
            key.extend_from_slice(ys);
            axpy(&mut out, s, &full.values[&key]);
        }
        values.insert(ys.clone(), out);
    }
    EndTensor {
        rep: t.rep,
        dim: t.dim,
        slots: t.slots,
        values,
    }
}
