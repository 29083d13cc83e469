//! Highest-root recursion on root systems.
//!
//! Each step takes an irreducible component, records its highest root
//! `theta` and the roots not orthogonal to it, and recurses on the roots
//! orthogonal to `theta`. Components of a subsystem are visited in order of
//! their smallest positive-root index; since simple roots carry the smallest
//! indices this is the order of the smallest contained simple root whenever
//! one exists. The traversal is depth first.

use crate::rootsystem::{RootSystem, TypeLetter};
use crate::RootError;
use serde::Serialize;

/// One recursion step: highest root and the positive roots feeding `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootLayer {
    /// Index of the highest root of the component.
    pub theta: usize,
    /// Positive roots `alpha != theta` with `(alpha, theta) != 0`, sorted.
    pub f_roots: Vec<usize>,
}

impl RootLayer {
    /// Quaternionic dimension of the `f` summand.
    pub fn f_hdim(&self) -> usize {
        self.f_roots.len() / 2
    }
}

/// Layer record in a diagram-level decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramLayer {
    /// One-based layer index.
    #[serde(rename = "d")]
    pub d_index: usize,
    /// Quaternionic dimension of `f_i`.
    #[serde(rename = "f_hdim")]
    pub f_quaternionic_dim: usize,
}

/// Layer structure of the Joyce decomposition computed from roots alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramDecomposition {
    /// Type letter.
    #[serde(rename = "type")]
    pub letter: TypeLetter,
    /// Rank.
    pub rank: usize,
    /// Layers in recursion order.
    pub layers: Vec<DiagramLayer>,
    /// Dimension of the abelian summand `b`, equal to `rank - m`.
    pub b_dim: usize,
    /// Number of layers.
    #[serde(skip)]
    pub m: usize,
    /// Torus dimension `2m - rank`.
    pub ell: usize,
    /// Number of layers with `f_i = 0`.
    #[serde(rename = "trivial_f")]
    pub trivial_f_count: usize,
}

impl DiagramDecomposition {
    /// Dimension of the simple algebra reconstructed from the layers.
    pub fn algebra_dim(&self) -> usize {
        self.b_dim + 3 * self.m + 4 * self.layers.iter().map(|l| l.f_quaternionic_dim).sum::<usize>()
    }
}

/// Splits a set of positive roots into irreducible components, ordered by
/// smallest member index. Each component is sorted.
fn components(rs: &RootSystem, set: &[usize]) -> Vec<Vec<usize>> {
    let roots = rs.positive_roots();
    let mut parent: Vec<usize> = (0..set.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for a in 0..set.len() {
        for b in a + 1..set.len() {
            if rs.inner(&roots[set[a]], &roots[set[b]]) != 0 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for a in 0..set.len() {
        let r = find(&mut parent, a);
        groups.entry(r).or_default().push(set[a]);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    for g in out.iter_mut() {
        g.sort_unstable();
    }
    out.sort_by_key(|g| g[0]);
    out
}

fn recurse(rs: &RootSystem, set: &[usize], out: &mut Vec<RootLayer>) {
    let roots = rs.positive_roots();
    for comp in components(rs, set) {
        // Maximal height within the component is attained only by its highest root.
        let theta = *comp.last().expect("nonempty component");
        let mut f_roots = Vec::new();
        let mut rest = Vec::new();
        for &a in &comp {
            if a == theta {
                continue;
            }
            if rs.inner(&roots[a], &roots[theta]) != 0 {
                f_roots.push(a);
            } else {
                rest.push(a);
            }
        }
        out.push(RootLayer { theta, f_roots });
        recurse(rs, &rest, out);
    }
}

/// Highest-root layers of the full recursion.
pub fn joyce_root_layers(rs: &RootSystem) -> Vec<RootLayer> {
    let all: Vec<usize> = (0..rs.positive_roots().len()).collect();
    let mut out = Vec::new();
    recurse(rs, &all, &mut out);
    out
}

/// Diagram-level Joyce decomposition of the simple type `letter_rank`.
pub fn diagram_joyce_decomposition(letter: TypeLetter, rank: usize) -> Result<DiagramDecomposition, RootError> {
    let rs = RootSystem::new(letter, rank)?;
    Ok(decomposition_of(&rs))
}

/// Diagram-level decomposition of an already built root system.
pub fn decomposition_of(rs: &RootSystem) -> DiagramDecomposition {
    let layers = joyce_root_layers(rs);
    let m = layers.len();
    let rank = rs.rank();
    DiagramDecomposition {
        letter: rs.letter(),
        rank,
        layers: layers
            .iter()
            .enumerate()
            .map(|(t, l)| DiagramLayer {
                d_index: t + 1,
                f_quaternionic_dim: l.f_hdim(),
            })
            .collect(),
        b_dim: rank - m,
        m,
        ell: 2 * m - rank,
        trivial_f_count: layers.iter().filter(|l| l.f_roots.is_empty()).count(),
    }
}
