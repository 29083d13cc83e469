//! Bi-invariant hyperhermitian metrics extending the negative Killing form.

use crate::GeometryError;
use hypercx_core::{standard_structure, ExactMatrix, Field, LieAlgebraData, Rational};
use hypercx_joyce::JoyceDecomposition;
use num_traits::Zero;

/// A Lie algebra with a hypercomplex triple and a compatible metric, all in
/// one basis.
#[derive(Clone, Debug)]
pub struct HyperhermitianData<F: Field> {
    /// Structure constants.
    pub algebra: LieAlgebraData<F>,
    /// `(I, J, K)` as matrices acting on column vectors.
    pub triple: [ExactMatrix<F>; 3],
    /// Gram matrix of the metric.
    pub gram: ExactMatrix<F>,
}

impl<F: Field> HyperhermitianData<F> {
    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Quaternionic dimension.
    pub fn quaternionic_dim(&self) -> usize {
        self.dim() / 4
    }

    /// `g(L·, L·) = g` for `L = I, J, K`.
    pub fn is_hyperhermitian(&self) -> bool {
        self.triple
            .iter()
            .all(|l| (&(&l.transpose() * &self.gram) * l) == self.gram)
    }

    /// `g([x,y],z) + g(y,[x,z]) = 0` on basis triples.
    pub fn is_bi_invariant(&self) -> bool {
        is_ad_invariant(&self.algebra, &self.gram)
    }

    /// Vanishing Nijenhuis tensor for each of `I, J, K`.
    pub fn is_integrable(&self) -> bool {
        self.triple.iter().all(|l| is_integrable(&self.algebra, l))
    }

    /// Quaternion relations `I² = J² = −1`, `IJ = K`.
    pub fn quaternion_relations(&self) -> bool {
        let [i, j, k] = &self.triple;
        let minus = ExactMatrix::identity(self.dim()).scale(&-F::one());
        (i * i) == minus && (j * j) == minus && &(i * j) == k
    }
}

/// `ad_xᵀ G + G ad_x = 0` for every basis vector `x`.
pub fn is_ad_invariant<F: Field>(g: &LieAlgebraData<F>, gram: &ExactMatrix<F>) -> bool {
    (0..g.dim()).all(|x| {
        let ad = g.ad_basis(x);
        (&(&ad.transpose() * gram) + &(gram * &ad)).is_zero()
    })
}

/// `[LX,LY] − L[LX,Y] − L[X,LY] − [X,Y] = 0` on basis pairs.
pub fn is_integrable<F: Field>(g: &LieAlgebraData<F>, l: &ExactMatrix<F>) -> bool {
    let n = g.dim();
    let lc = l.columns();
    let unit = |t: usize| {
        let mut v = vec![F::zero(); n];
        v[t] = F::one();
        v
    };
    for a in 0..n {
        for b in a + 1..n {
            let br = |x: &[F], y: &[F]| g.bracket(x, y).expect("basis vectors");
            let mut v = br(&lc[a], &lc[b]);
            let t1 = l.mul_vec(&br(&lc[a], &unit(b)));
            let t2 = l.mul_vec(&br(&unit(a), &lc[b]));
            let t3 = br(&unit(a), &unit(b));
            for (((x, p), q), r) in v.iter_mut().zip(t1).zip(t2).zip(t3) {
                *x -= &p;
                *x -= &q;
                *x -= &r;
            }
            if v.iter().any(|x| !x.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// Killing extension of a Joyce hypercomplex structure.
#[derive(Clone, Debug)]
pub struct InvariantMetric<F: Field> {
    /// Gram matrix in ambient coordinates (torus first, then `g`).
    pub gram_ambient: ExactMatrix<F>,
    /// `λ_j²` for every layer.
    pub lambdas: Vec<Rational>,
    /// Parameter matrix used for the `e_1` vectors.
    pub parameter: ExactMatrix<F>,
    /// Frame columns in ambient coordinates.
    pub frame: ExactMatrix<F>,
    /// Algebra, standard triple and Gram matrix in the frame.
    pub data: HyperhermitianData<F>,
    /// First frame index of every layer.
    pub offsets: Vec<usize>,
    /// Quaternionic dimension of every `f_j`.
    pub f_hdims: Vec<usize>,
}

/// `λ_j² = B(e_2^j, e_2^j)` for every layer.
pub fn layer_lambdas(d: &JoyceDecomposition) -> Vec<Rational> {
    let k = d.extended_killing();
    d.layers
        .iter()
        .map(|l| {
            let w = k.mul_vec(&l.e2);
            w.iter().zip(&l.e2).map(|(x, y)| x * y).sum()
        })
        .collect()
}

fn lift<F: Field>(v: &[Rational]) -> Vec<F> {
    v.iter().map(|x| F::from_rational(x.clone())).collect()
}

fn lift_matrix<F: Field>(m: &ExactMatrix) -> ExactMatrix<F> {
    m.map(|x| F::from_rational(x.clone()))
}

fn bilinear<F: Field>(g: &ExactMatrix<F>, x: &[F], y: &[F]) -> F {
    let gy = g.mul_vec(y);
    let mut acc = F::zero();
    for (a, b) in x.iter().zip(&gy) {
        acc.add_mul(a, b);
    }
    acc
}

/// `Σ_i a[i][j] c_i`, the `e_1` of layer `j`.
fn e1_vectors<F: Field>(d: &JoyceDecomposition, a: &ExactMatrix<F>) -> Vec<Vec<F>> {
    let centre: Vec<Vec<F>> = d.centre.iter().map(|c| lift(c)).collect();
    (0..d.m)
        .map(|j| {
            let mut v = vec![F::zero(); d.dim()];
            for (i, c) in centre.iter().enumerate() {
                if a[(i, j)].is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(c) {
                    x.add_mul(&a[(i, j)], y);
                }
            }
            v
        })
        .collect()
}

/// Extends the negative Killing form to a hyperhermitian metric.
///
/// The parameter matrix must keep the first `ell` vectors `e_1^j` in the
/// torus and the others in `b`, the latter `B`-orthogonal with
/// `B(e_1^j, e_1^j) = λ_j²`. The torus metric is chosen to make the torus
/// `e_1^j` orthogonal with the same norms. Since every `e_2^j` lies in `g`,
/// hyperhermitian compatibility fixes `λ_j² = B(e_2^j, e_2^j)`; supplied
/// torus values are checked against it.
pub fn extend_killing_metric<F: Field>(
    d: &JoyceDecomposition,
    a: &ExactMatrix<F>,
    torus_lambdas: Option<&[Rational]>,
) -> Result<InvariantMetric<F>, GeometryError> {
    let (m, ell, n) = (d.m, d.ell, d.dim());
    if a.rows() != m || a.cols() != m {
        return Err(GeometryError::Incompatible(format!(
            "parameter matrix is {}x{}, expected {m}x{m}",
            a.rows(),
            a.cols()
        )));
    }
    if a.determinant().is_zero() {
        return Err(GeometryError::Incompatible("parameter matrix is singular".into()));
    }
    let lambdas = layer_lambdas(d);
    if let Some(t) = torus_lambdas {
        if t.len() != ell {
            return Err(GeometryError::Incompatible(format!(
                "{} torus values given, torus has dimension {ell}",
                t.len()
            )));
        }
        for (j, v) in t.iter().enumerate() {
            if *v <= Rational::zero() {
                return Err(GeometryError::Incompatible(format!("λ_{}² must be positive", j + 1)));
            }
            if *v != lambdas[j] {
                return Err(GeometryError::Incompatible(format!(
                    "λ_{}² = {v} conflicts with B(e_2, e_2) = {}",
                    j + 1,
                    lambdas[j]
                )));
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            if (i < ell) != (j < ell) && !a[(i, j)].is_zero() {
                return Err(GeometryError::Incompatible(format!(
                    "e_1^{} mixes the torus with b",
                    j + 1
                )));
            }
        }
    }
    let kill: ExactMatrix<F> = lift_matrix(&d.extended_killing());
    let e1 = e1_vectors(d, a);
    for j in ell..m {
        for k in j..m {
            let got = bilinear(&kill, &e1[j], &e1[k]);
            let want = if j == k {
                F::from_rational(lambdas[j].clone())
            } else {
                F::zero()
            };
            if got != want {
                return Err(GeometryError::Incompatible(format!(
                    "B(e_1^{}, e_1^{}) = {got}, expected {want}",
                    j + 1,
                    k + 1
                )));
            }
        }
    }
    // Torus block: G_T = T^{-T} diag(λ²) T^{-1}, T the torus e_1 columns.
    let mut gram_ambient = kill;
    if ell > 0 {
        let t = ExactMatrix::from_fn(ell, ell, |r, c| e1[c][r].clone());
        let tinv = t.inverse().ok_or(GeometryError::Incompatible("torus block is singular".into()))?;
        let diag = ExactMatrix::from_fn(ell, ell, |r, c| {
            if r == c {
                F::from_rational(lambdas[r].clone())
            } else {
                F::zero()
            }
        });
        let gt = &(&tinv.transpose() * &diag) * &tinv;
        for r in 0..ell {
            for c in 0..ell {
                gram_ambient[(r, c)] = gt[(r, c)].clone();
            }
        }
    }
    let mut cols = Vec::with_capacity(n);
    for (j, l) in d.layers.iter().enumerate() {
        cols.push(e1[j].clone());
        cols.extend(l.triple().into_iter().map(|v| lift(v)));
        cols.extend(l.f_vectors().map(|v| lift(v)));
    }
    let frame = ExactMatrix::from_columns(n, &cols);
    let algebra = d
        .ambient
        .map_field(|x| F::from_rational(x.clone()))
        .change_basis(&frame, d.frame_labels())?;
    let gram = &(&frame.transpose() * &gram_ambient) * &frame;
    let data = HyperhermitianData {
        algebra,
        triple: standard_structure(n / 4),
        gram,
    };
    if !data.is_hyperhermitian() {
        return Err(GeometryError::Incompatible("metric is not hyperhermitian".into()));
    }
    Ok(InvariantMetric {
        gram_ambient,
        lambdas,
        parameter: a.clone(),
        frame,
        data,
        offsets: d.layer_offsets(),
        f_hdims: d.f_hdims(),
    })
}

/// A parameter matrix compatible with the Killing extension over `F`:
/// identity on the torus block and a `B`-orthogonalized, rescaled basis of
/// `b`. `None` when a required square root is missing from `F`.
pub fn compatible_parameter<F: Field>(d: &JoyceDecomposition) -> Option<ExactMatrix<F>> {
    let (m, ell) = (d.m, d.ell);
    let kill = d.extended_killing();
    let lambdas = layer_lambdas(d);
    let mut a = ExactMatrix::<F>::zeros(m, m);
    for t in 0..ell {
        a[(t, t)] = F::one();
    }
    // Gram-Schmidt over Q in centre coordinates.
    let cb = &d.centre[ell..];
    let mut ws: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
    for (s, c) in cb.iter().enumerate() {
        let mut coeffs = vec![Rational::zero(); cb.len()];
        coeffs[s] = Rational::from(1);
        let mut v = c.clone();
        for (wc, w) in &ws {
            let ww = bilinear(&kill, w, w);
            let p = &bilinear(&kill, &v, w) / &ww;
            for (x, y) in v.iter_mut().zip(w) {
                *x -= &(&p * y);
            }
            for (x, y) in coeffs.iter_mut().zip(wc) {
                *x -= &(&p * y);
            }
        }
        ws.push((coeffs, v));
    }
    for (s, (coeffs, w)) in ws.iter().enumerate() {
        let j = ell + s;
        let ratio = &lambdas[j] / &bilinear(&kill, w, w);
        let scale = F::sqrt_of_rational(&ratio)?;
        for (i, c) in coeffs.iter().enumerate() {
            a[(ell + i, j)] = F::from_rational(c.clone()) * &scale;
        }
    }
    Some(a)
}
