//! Holonomy algebras of left-invariant connections by span closure.

use crate::connection::Connection;
use crate::curvature::CurvatureTensor;
use crate::rep::Rep;
use hypercx_core::{Rational, SpanBasis};
use num_traits::Zero;
use serde::{Serialize, Serializer};
use std::str::FromStr;

/// Default bound on the number of closure steps.
pub const DEFAULT_MAX_DEPTH: usize = 6;

/// Closure strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Spans of `R, ∇R, ∇²R, ...` until two consecutive spans agree.
    Filtration,
    /// Smallest subspace containing `R`, closed under `[∇_{e_k}, ·]` and
    /// under commutators.
    Alekseevskii,
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "filtration" => Ok(Method::Filtration),
            "alekseevskii" => Ok(Method::Alekseevskii),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// Shape of a holonomy algebra in quaternionic block form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    /// Number of quaternionic rows and columns.
    pub n: usize,
    /// Real dimension of the projection onto each block.
    pub block_dims: Vec<Vec<usize>>,
    /// Rows with some nonzero block.
    pub nonzero_rows: Vec<usize>,
    /// Per diagonal block: real part vanishes on the whole algebra.
    pub diagonal_imaginary: Vec<bool>,
    /// Every element has vanishing real trace.
    pub traceless: bool,
}

/// Outcome of a holonomy computation.
#[derive(Clone, Debug)]
pub struct HolonomyResult {
    /// Method used.
    pub method: Method,
    /// Final dimension.
    pub dim: usize,
    /// Span dimension after each step.
    pub filtration: Vec<usize>,
    /// Closure reached within the depth bound.
    pub stabilized: bool,
    /// Index of the last step performed.
    pub depth: usize,
    /// Closed under commutators, when checked.
    pub lie_closed: Option<bool>,
    /// Encoding of the elements.
    pub rep: Rep,
    /// Reduced basis of the algebra.
    pub basis: SpanBasis<Rational>,
    /// Block structure, in the quaternionic encoding.
    pub blocks: Option<BlockReport>,
    /// Every element has vanishing real trace.
    pub traceless: bool,
}

impl Serialize for HolonomyResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("dim", &self.dim)?;
        m.serialize_entry("filtration", &self.filtration)?;
        m.serialize_entry("stabilized", &self.stabilized)?;
        m.serialize_entry("depth", &self.depth)?;
        m.serialize_entry("blocks", &self.blocks)?;
        m.serialize_entry("method", &self.method)?;
        m.serialize_entry("lie_closed", &self.lie_closed)?;
        m.serialize_entry("traceless", &self.traceless)?;
        m.end()
    }
}

/// Computes the holonomy algebra of `c` from its curvature.
///
/// Only elements inserted at the previous step are differentiated, which
/// spans the same space as differentiating every value of `∇^k R`. The
/// loop also stops once the span fills the whole encoding space.
pub fn holonomy_algebra(c: &Connection, r: &CurvatureTensor, method: Method, max_depth: usize) -> HolonomyResult {
    let rep = c.rep;
    let full = rep.coord_dim();
    let mut span = SpanBasis::new(full);
    let mut fresh: Vec<Vec<Rational>> = Vec::new();
    for v in r.r.values() {
        if span.insert(v).expect("curvature coordinates") {
            fresh.push(v.clone());
        }
    }
    let mut gens = fresh.clone();
    let mut filtration = vec![span.dim()];
    let mut step = 0;
    while step < max_depth.max(1) && !fresh.is_empty() && span.dim() < full {
        step += 1;
        let mut next = Vec::new();
        for a in &fresh {
            for k in 0..c.dim() {
                let v = rep.commutator(&c.coords[k], a);
                if span.insert(&v).expect("coordinates") {
                    next.push(v);
                }
            }
        }
        if method == Method::Alekseevskii {
            let snapshot = gens.len();
            for a in &fresh {
                for b in &gens[..snapshot] {
                    if span.dim() == full {
                        break;
                    }
                    let v = rep.commutator(a, b);
                    if span.insert(&v).expect("coordinates") {
                        next.push(v);
                    }
                }
            }
        }
        gens.extend(next.iter().cloned());
        filtration.push(span.dim());
        fresh = next;
    }
    let stabilized = fresh.is_empty() || span.dim() == full;
    let lie_closed = if span.dim() == full {
        Some(true)
    } else if stabilized {
        Some(is_lie_closed(rep, &span))
    } else {
        None
    };
    let traceless = span.vectors().iter().all(|v| rep.real_trace(v).is_zero());
    let blocks = match rep {
        Rep::Quat(n) => Some(block_report(n, &span, traceless)),
        Rep::Real(_) => None,
    };
    HolonomyResult {
        method,
        dim: span.dim(),
        depth: filtration.len() - 1,
        filtration,
        stabilized,
        lie_closed,
        rep,
        basis: span,
        blocks,
        traceless,
    }
}

fn is_lie_closed(rep: Rep, span: &SpanBasis<Rational>) -> bool {
    let vs = span.vectors();
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            if !span.contains(&rep.commutator(&vs[a], &vs[b])).expect("coordinates") {
                return false;
            }
        }
    }
    true
}

fn block_report(n: usize, span: &SpanBasis<Rational>, traceless: bool) -> BlockReport {
    let mut block_dims = vec![vec![0; n]; n];
    for (a, row) in block_dims.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            let off = 4 * (a * n + b);
            let proj: Vec<Vec<Rational>> = span.vectors().iter().map(|v| v[off..off + 4].to_vec()).collect();
            *cell = SpanBasis::spanned_by(4, &proj).expect("block coordinates").dim();
        }
    }
    let nonzero_rows = (0..n).filter(|&a| block_dims[a].iter().any(|&x| x > 0)).collect();
    let diagonal_imaginary = (0..n)
        .map(|a| span.vectors().iter().all(|v| v[4 * (a * n + a)].is_zero()))
        .collect();
    BlockReport {
        n,
        block_dims,
        nonzero_rows,
        diagonal_imaginary,
        traceless,
    }
}

impl HolonomyResult {
    /// Basis elements as real matrices in the connection's basis.
    pub fn real_basis(&self) -> Vec<hypercx_core::ExactMatrix> {
        self.basis.vectors().iter().map(|v| self.rep.decode(v)).collect()
    }
}
