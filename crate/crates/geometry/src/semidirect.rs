//! Semidirect products `g ⋉_ρ H^r` of a hyperhermitian Lie algebra.

use crate::metric::HyperhermitianData;
use crate::GeometryError;
use hypercx_core::{standard_structure, ExactMatrix, Field, LieAlgebraData, Quaternion};

/// Extends `base` by `H^r` with brackets `[(X,0),(0,v)] = (0, ρ(X)v)`, the
/// triple `(I ⊕ i, J ⊕ j, K ⊕ k)` acting by left multiplication on `H^r`
/// and the metric `g ⊕ standard`.
///
/// Every `ρ(X)` must be antisymmetric and commute with left
/// multiplication by `i, j, k`, and `ρ` must be a homomorphism.
pub fn semidirect_hkt<F: Field>(
    base: &HyperhermitianData<F>,
    rho: &[ExactMatrix<F>],
    r: usize,
) -> Result<HyperhermitianData<F>, GeometryError> {
    let n = base.dim();
    let q = 4 * r;
    if rho.len() != n {
        return Err(GeometryError::InvalidRho(format!("{} matrices given for dimension {n}", rho.len())));
    }
    let quat = standard_structure::<F>(r);
    for (x, m) in rho.iter().enumerate() {
        if m.rows() != q || m.cols() != q {
            return Err(GeometryError::InvalidRho(format!("rho(e_{}) is not {q}x{q}", x + 1)));
        }
        if !(m + &m.transpose()).is_zero() {
            return Err(GeometryError::InvalidRho(format!("rho(e_{}) is not antisymmetric", x + 1)));
        }
        if quat.iter().any(|l| !m.commutator(l).is_zero()) {
            return Err(GeometryError::InvalidRho(format!(
                "rho(e_{}) does not commute with the quaternionic structure",
                x + 1
            )));
        }
    }
    let g = &base.algebra;
    for a in 0..n {
        for b in a + 1..n {
            let mut want = ExactMatrix::zeros(q, q);
            for (k, c) in g.bracket_basis(a, b) {
                want.add_scaled(c, &rho[*k]);
            }
            if rho[a].commutator(&rho[b]) != want {
                return Err(GeometryError::InvalidRho(format!(
                    "rho is not a homomorphism on (e_{}, e_{})",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    let total = n + q;
    let mut labels: Vec<String> = g.labels().to_vec();
    labels.extend((1..=q).map(|t| format!("q_{t}")));
    let mut brackets = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut v = vec![F::zero(); total];
            for (k, c) in g.bracket_basis(a, b) {
                v[*k] = c.clone();
            }
            brackets.push(((a, b), v));
        }
        for t in 0..q {
            let mut v = vec![F::zero(); total];
            for s in 0..q {
                v[n + s] = rho[a][(s, t)].clone();
            }
            brackets.push(((a, n + t), v));
        }
    }
    let algebra = LieAlgebraData::from_brackets(labels, brackets)?;
    let triple = std::array::from_fn(|t| ExactMatrix::block_diag(&[base.triple[t].clone(), quat[t].clone()]));
    let gram = ExactMatrix::block_diag(&[base.gram.clone(), ExactMatrix::identity(q)]);
    Ok(HyperhermitianData { algebra, triple, gram })
}

/// `ρ(e_1) = 0` and `ρ(e_{2,3,4}) = R_{−i}, R_{−j}, R_{−k}` on `H`, the
/// standard action of `su(2) ≅ sp(1)` on a frame `e_1..e_4` with
/// `[e_2, e_3] = 2 e_4` cyclically.
pub fn standard_sp1_rho<F: Field>() -> Vec<ExactMatrix<F>> {
    let mut out = vec![ExactMatrix::zeros(4, 4)];
    for t in 1..4 {
        out.push(Quaternion::<F>::basis(t).right_matrix().scale(&-F::one()));
    }
    out
}
