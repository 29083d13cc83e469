//! Parallel subbundles and lemma checks in the adapted frame of a Joyce
//! decomposition.
//!
//! The connection passed to these functions must be expressed in the frame
//! of [`JoyceDecomposition::frame`], as produced by
//! [`joyce_connection`](crate::joyce_connection).

use crate::connection::Connection;
use crate::holonomy::HolonomyResult;
use hypercx_core::{Rational, SpanBasis};
use hypercx_joyce::{JoyceDecomposition, Report};
use num_traits::{One, Zero};
use serde::Serialize;

/// A candidate subspace and its invariance under every `∇_{e_k}`.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantSubspace {
    /// Description, e.g. `h[2]` or `tail[2]`.
    pub name: String,
    /// Real dimension.
    pub dim: usize,
    /// `∇_{e_k} V ⊆ V` for every `k`.
    pub parallel: bool,
    /// Neither zero nor the whole space.
    pub proper: bool,
    /// Basis vectors in frame coordinates.
    #[serde(skip)]
    pub basis: SpanBasis<Rational>,
}

fn unit(d: usize, t: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d];
    v[t] = Rational::one();
    v
}

fn frame_span(d: usize, cols: impl IntoIterator<Item = usize>) -> SpanBasis<Rational> {
    let mut s = SpanBasis::new(d);
    for t in cols {
        s.insert(&unit(d, t)).expect("frame coordinates");
    }
    s
}

/// True when every `∇_{e_k}` maps `v` into itself.
pub fn is_parallel(c: &Connection, v: &SpanBasis<Rational>) -> bool {
    c.nabla.iter().all(|m| {
        v.vectors()
            .iter()
            .all(|x| v.contains(&m.mul_vec(x)).expect("frame coordinates"))
    })
}

/// Smallest subspace containing `seed` and invariant under every `∇_{e_k}`.
pub fn invariant_closure(c: &Connection, seed: &SpanBasis<Rational>) -> SpanBasis<Rational> {
    let mut s = seed.clone();
    let mut fresh: Vec<Vec<Rational>> = seed.vectors().to_vec();
    while !fresh.is_empty() {
        let mut next = Vec::new();
        for x in &fresh {
            for m in &c.nabla {
                let y = m.mul_vec(x);
                if s.insert(&y).expect("frame coordinates") {
                    next.push(y);
                }
            }
        }
        fresh = next;
    }
    s
}

fn candidate(c: &Connection, name: String, basis: SpanBasis<Rational>) -> InvariantSubspace {
    let dim = basis.dim();
    InvariantSubspace {
        name,
        dim,
        parallel: is_parallel(c, &basis),
        proper: dim > 0 && dim < c.dim(),
        basis,
    }
}

/// Tests the catalog of candidate parallel subspaces: every `h_i` with
/// `f_i = 0`, every tail `⊕_{i≥k}(h_i ⊕ f_i)` with `k ≥ 2`, and the
/// invariant closure of every `h_i`.
pub fn find_parallel_subspaces(c: &Connection, d: &JoyceDecomposition) -> Vec<InvariantSubspace> {
    let n = c.dim();
    let offs = d.layer_offsets();
    let mut out = Vec::new();
    for (i, l) in d.layers.iter().enumerate() {
        if l.f_quads.is_empty() {
            out.push(candidate(c, format!("h[{}]", i + 1), frame_span(n, offs[i]..offs[i] + 4)));
        }
    }
    for k in 1..d.m {
        out.push(candidate(c, format!("tail[{}]", k + 1), frame_span(n, offs[k]..n)));
    }
    for i in 0..d.m {
        let closure = invariant_closure(c, &frame_span(n, offs[i]..offs[i] + 4));
        out.push(candidate(c, format!("closure(h[{}])", i + 1), closure));
    }
    out
}

/// True when some proper candidate is parallel.
pub fn has_proper_parallel(subs: &[InvariantSubspace]) -> bool {
    subs.iter().any(|s| s.parallel && s.proper)
}

/// Every holonomy element maps the subspace into itself, i.e. is block
/// triangular in a basis adapted to it.
pub fn reduction_consistent(h: &HolonomyResult, v: &SpanBasis<Rational>) -> bool {
    h.basis.vectors().iter().all(|a| {
        v.vectors()
            .iter()
            .all(|x| v.contains(&h.rep.apply(a, x)).expect("frame coordinates"))
    })
}

/// `∇_X e_1^i = −X` for `X ∈ h_i ⊕ f_i` and `0` otherwise.
pub fn verify_nabla_e1(c: &Connection, d: &JoyceDecomposition) -> Report {
    let n = c.dim();
    let offs = d.layer_offsets();
    let roles = d.frame_roles();
    let mut r = Report::new();
    for (i, &o) in offs.iter().enumerate() {
        let mut bad = Vec::new();
        for (x, m) in c.nabla.iter().enumerate() {
            let got = m.column(o);
            let want = if roles[x].0 == i {
                unit(n, x).into_iter().map(|v| -v).collect()
            } else {
                vec![Rational::zero(); n]
            };
            if got != want {
                bad.push(x);
            }
        }
        r.push(
            format!("nabla e1[{}]", i + 1),
            bad.is_empty(),
            format!("fails for {} directions, first {:?}", bad.len(), bad.first()),
        );
    }
    r
}

/// The Euler field `E = −Σ_j e_1^j` satisfies `∇E = Id`.
pub fn verify_euler(c: &Connection, d: &JoyceDecomposition) -> Report {
    let n = c.dim();
    let mut e = vec![Rational::zero(); n];
    for &o in &d.layer_offsets() {
        e[o] = -Rational::one();
    }
    let bad: Vec<usize> = (0..n).filter(|&x| c.nabla[x].mul_vec(&e) != unit(n, x)).collect();
    let mut r = Report::new();
    r.push(
        "euler",
        bad.is_empty(),
        format!("fails for {} directions, first {:?}", bad.len(), bad.first()),
    );
    r
}
