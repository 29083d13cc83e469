//! Explicit Joyce decomposition of a root-adapted compact algebra.
//!
//! The ambient algebra is `R^ell ⊕ g` with the abelian summand first. All
//! vectors below are ambient coordinates.

use crate::JoyceError;
use hypercx_core::{ExactMatrix, LieAlgebraData, Rational, SpanBasis};
use hypercx_rootsys::{joyce_root_layers, RootedAlgebra};
use num_traits::{One, Zero};
use serde::Serialize;

/// Role of a basis vector inside a layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// Vector of the abelian part `R^ell ⊕ b`.
    E1,
    /// `H_theta`.
    E2,
    /// `A_theta`.
    E3,
    /// `B_theta`.
    E4,
    /// Member of an `f` quadruple.
    F,
}

/// One `su(2)` layer with its `f` summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoyceLayer {
    /// Highest root in simple-root coordinates.
    pub theta: Vec<i64>,
    /// `e_2`, with `[e_2,e_3] = 2 e_4` cyclically.
    pub e2: Vec<Rational>,
    /// `e_3`.
    pub e3: Vec<Rational>,
    /// `e_4`.
    pub e4: Vec<Rational>,
    /// Quadruples `(f, [e_2,f], [e_3,f], [e_4,f])` spanning `f`.
    pub f_quads: Vec<[Vec<Rational>; 4]>,
}

impl JoyceLayer {
    /// `(e_2, e_3, e_4)`.
    pub fn triple(&self) -> [&Vec<Rational>; 3] {
        [&self.e2, &self.e3, &self.e4]
    }

    /// All vectors of `f`, quadruple by quadruple.
    pub fn f_vectors(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.f_quads.iter().flat_map(|q| q.iter())
    }
}

/// The decomposition `R^ell ⊕ g = (R^ell ⊕ b) ⊕ ⊕_i (d_i ⊕ f_i)`.
#[derive(Clone, Debug)]
pub struct JoyceDecomposition {
    /// Name of the group, e.g. `T^2 x sp(2)`.
    pub name: String,
    /// The simple factor with root data.
    pub rooted: RootedAlgebra,
    /// `R^ell ⊕ g`.
    pub ambient: LieAlgebraData,
    /// Torus dimension.
    pub ell: usize,
    /// Number of layers.
    pub m: usize,
    /// Rank of `g`.
    pub rank: usize,
    /// Layers in recursion order.
    pub layers: Vec<JoyceLayer>,
    /// Basis `c_1..c_m` of `R^ell ⊕ b`: torus vectors, then `b`.
    pub centre: Vec<Vec<Rational>>,
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Joyce decomposition of a root-adapted compact simple algebra.
///
/// `b_basis`, when given, replaces the default basis of `b` (the Killing
/// complement of the layer coroots inside the Cartan subalgebra) and is
/// expressed in coordinates of `g`.
pub fn joyce_decompose(
    rooted: &RootedAlgebra,
    b_basis: Option<Vec<Vec<Rational>>>,
) -> Result<JoyceDecomposition, JoyceError> {
    let g = &rooted.algebra;
    let dim = g.dim();
    let rs = &rooted.root_system;
    let r = rs.rank();
    let killing = g.killing_form();
    if !killing.is_positive_definite() {
        return Err(JoyceError::NotCompact);
    }
    let root_layers = joyce_root_layers(rs);
    let m = root_layers.len();
    let ell = 2 * m - r;

    let mut layers = Vec::with_capacity(m);
    for rl in &root_layers {
        let theta = rs.positive_roots()[rl.theta].clone();
        let e2 = rooted.coroot_vector(&theta);
        let (ia, ib) = rooted.root_space_index(rl.theta);
        let (e3, e4) = (unit(dim, ia), unit(dim, ib));
        let mut span = SpanBasis::new(dim);
        let mut quads = Vec::new();
        for &p in &rl.f_roots {
            let (xa, xb) = rooted.root_space_index(p);
            for seed in [unit(dim, xa), unit(dim, xb)] {
                if span.contains(&seed)? {
                    continue;
                }
                let quad = [
                    seed.clone(),
                    g.bracket(&e2, &seed)?,
                    g.bracket(&e3, &seed)?,
                    g.bracket(&e4, &seed)?,
                ];
                for v in &quad {
                    span.insert(v)?;
                }
                quads.push(quad);
            }
        }
        if span.dim() != 2 * rl.f_roots.len() || quads.len() * 4 != span.dim() {
            return Err(JoyceError::Inconsistent(format!(
                "f summand of layer with highest root {theta:?} is not quaternionic"
            )));
        }
        layers.push(JoyceLayer {
            theta,
            e2,
            e3,
            e4,
            f_quads: quads,
        });
    }

    let b = match b_basis {
        Some(b) => {
            if b.len() != r - m || b.iter().any(|v| v.len() != dim) {
                return Err(JoyceError::Inconsistent("b basis has the wrong shape".into()));
            }
            b
        }
        None => {
            // Cartan elements x = sum_j x_j H_j with B(x, e2^i) = 0 for all i.
            let rows: Vec<Vec<Rational>> = layers
                .iter()
                .map(|l| killing.mul_vec(&l.e2)[..r].to_vec())
                .collect();
            let kernel = if rows.is_empty() {
                (0..r).map(|j| unit(r, j)).collect()
            } else {
                ExactMatrix::from_rows(rows).kernel()
            };
            kernel
                .into_iter()
                .map(|x| {
                    let mut v = vec![Rational::zero(); dim];
                    v[..r].clone_from_slice(&x);
                    v
                })
                .collect()
        }
    };

    let lift = |v: &Vec<Rational>| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); ell];
        out.extend(v.iter().cloned());
        out
    };
    let layers: Vec<JoyceLayer> = layers
        .into_iter()
        .map(|l| JoyceLayer {
            theta: l.theta,
            e2: lift(&l.e2),
            e3: lift(&l.e3),
            e4: lift(&l.e4),
            f_quads: l.f_quads.iter().map(|q| q.clone().map(|v| lift(&v))).collect(),
        })
        .collect();
    let mut centre: Vec<Vec<Rational>> = (0..ell).map(|t| unit(ell + dim, t)).collect();
    centre.extend(b.iter().map(lift));

    let torus = LieAlgebraData::abelian((1..=ell).map(|t| format!("t{t}")).collect());
    let ambient = torus.direct_sum(g);
    let name = if ell == 0 {
        rooted.name.clone()
    } else if ell == 1 {
        format!("S1 x {}", rooted.name)
    } else {
        format!("T{ell} x {}", rooted.name)
    };
    let d = JoyceDecomposition {
        name,
        rooted: rooted.clone(),
        ambient,
        ell,
        m,
        rank: r,
        layers,
        centre,
    };
    if SpanBasis::spanned_by(d.dim(), d.adapted_basis().columns().iter())?.dim() != d.dim() {
        return Err(JoyceError::Inconsistent("adapted basis is not a basis".into()));
    }
    Ok(d)
}

impl JoyceDecomposition {
    /// Real dimension of the ambient algebra.
    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    /// Quaternionic dimension.
    pub fn quaternionic_dim(&self) -> usize {
        self.dim() / 4
    }

    /// Dimension of `b`.
    pub fn b_dim(&self) -> usize {
        self.rank - self.m
    }

    /// Quaternionic dimensions of the `f_i`.
    pub fn f_hdims(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.f_quads.len()).collect()
    }

    /// Adapted basis as columns: `c_1..c_m`, then `(e_2,e_3,e_4)` per layer,
    /// then the `f` quadruples per layer.
    pub fn adapted_basis(&self) -> ExactMatrix {
        let mut cols: Vec<Vec<Rational>> = self.centre.clone();
        for l in &self.layers {
            cols.extend(l.triple().into_iter().cloned());
        }
        for l in &self.layers {
            cols.extend(l.f_vectors().cloned());
        }
        ExactMatrix::from_columns(self.dim(), &cols)
    }

    /// Layer and role of every column of [`JoyceDecomposition::adapted_basis`].
    /// The centre vector `c_j` is attributed to layer `j`.
    pub fn layer_index(&self) -> Vec<(usize, Role)> {
        let mut out: Vec<(usize, Role)> = (0..self.m).map(|j| (j, Role::E1)).collect();
        for (i, _) in self.layers.iter().enumerate() {
            out.extend([(i, Role::E2), (i, Role::E3), (i, Role::E4)]);
        }
        for (i, l) in self.layers.iter().enumerate() {
            out.extend(std::iter::repeat((i, Role::F)).take(4 * l.f_quads.len()));
        }
        out
    }

    /// `sum_j a_{j,i} c_j`, the `e_1` of layer `i` for parameter matrix `a`.
    pub fn e1(&self, a: &ExactMatrix, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (j, c) in self.centre.iter().enumerate() {
            let s = &a[(j, i)];
            if s.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(c) {
                *x += &(s * y);
            }
        }
        v
    }

    /// Frame for parameter matrix `a`: per layer `e_1, e_2, e_3, e_4` and
    /// then the `f` quadruples, so that `I, J, K` act as left
    /// multiplication by `i, j, k` on every block of four.
    pub fn frame(&self, a: &ExactMatrix) -> ExactMatrix {
        let mut cols = Vec::with_capacity(self.dim());
        for (i, l) in self.layers.iter().enumerate() {
            cols.push(self.e1(a, i));
            cols.extend(l.triple().into_iter().cloned());
            cols.extend(l.f_vectors().cloned());
        }
        ExactMatrix::from_columns(self.dim(), &cols)
    }

    /// Layer and role of every frame column.
    pub fn frame_roles(&self) -> Vec<(usize, Role)> {
        let mut out = Vec::with_capacity(self.dim());
        for (i, l) in self.layers.iter().enumerate() {
            out.extend([(i, Role::E1), (i, Role::E2), (i, Role::E3), (i, Role::E4)]);
            out.extend(std::iter::repeat((i, Role::F)).take(4 * l.f_quads.len()));
        }
        out
    }

    /// Labels `e^i_1..e^i_4, f^i_1..` of the frame columns.
    pub fn frame_labels(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.dim());
        for (i, l) in self.layers.iter().enumerate() {
            for t in 1..=4 {
                out.push(format!("e^{}_{}", i + 1, t));
            }
            for t in 1..=4 * l.f_quads.len() {
                out.push(format!("f^{}_{}", i + 1, t));
            }
        }
        out
    }

    /// First frame column of each layer.
    pub fn layer_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.m);
        let mut o = 0;
        for l in &self.layers {
            out.push(o);
            o += 4 + 4 * l.f_quads.len();
        }
        out
    }

    /// Span of `d_i`.
    pub fn span_d(&self, i: usize) -> SpanBasis<Rational> {
        SpanBasis::spanned_by(self.dim(), self.layers[i].triple()).expect("ambient vectors")
    }

    /// Span of `f_i`.
    pub fn span_f(&self, i: usize) -> SpanBasis<Rational> {
        SpanBasis::spanned_by(self.dim(), self.layers[i].f_vectors()).expect("ambient vectors")
    }

    /// Span of `R^ell ⊕ b`.
    pub fn span_centre(&self) -> SpanBasis<Rational> {
        SpanBasis::spanned_by(self.dim(), self.centre.iter()).expect("ambient vectors")
    }

    /// Basis of `b` alone.
    pub fn b_vectors(&self) -> &[Vec<Rational>] {
        &self.centre[self.ell..]
    }

    /// Copy with two layers exchanged, for negative controls.
    pub fn with_layers_swapped(&self, i: usize, j: usize) -> JoyceDecomposition {
        let mut d = self.clone();
        d.layers.swap(i, j);
        d
    }

    /// Killing form of `g` extended by the identity on the torus.
    pub fn extended_killing(&self) -> ExactMatrix {
        let k = self.rooted.algebra.killing_form();
        ExactMatrix::block_diag(&[ExactMatrix::identity(self.ell), k])
    }
}
