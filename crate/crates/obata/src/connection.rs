//! The Obata connection of a left-invariant hypercomplex structure.

use crate::rep::{is_zero, sub, Rep};
use crate::ObataError;
use hypercx_core::{standard_structure, ExactMatrix, LieAlgebraData, Rational};
use hypercx_joyce::{verify_integrability, HypercomplexTriple, JoyceStructure, Report};
use num_traits::Zero;

/// A left-invariant connection given by the operators `∇_{e_k}`.
#[derive(Clone, Debug)]
pub struct Connection {
    /// `nabla[k]` is the matrix of `Y -> ∇_{e_k} Y`.
    pub nabla: Vec<ExactMatrix>,
    /// Encoding used for holonomy computations.
    pub rep: Rep,
    /// Coordinates of every `∇_{e_k}` in `rep`.
    pub coords: Vec<Vec<Rational>>,
    /// The structure the connection preserves.
    pub triple: HypercomplexTriple,
}

fn half() -> Rational {
    Rational::new(1, 2)
}

/// `∇_X Y = ½([X,Y] + I[IX,Y] − J[X,JY] + K[IX,JY])` on basis pairs.
///
/// Refuses structures whose Nijenhuis tensors do not vanish, since the
/// formula only yields the Obata connection for integrable triples.
pub fn obata_connection(g: &LieAlgebraData, h: &HypercomplexTriple) -> Result<Connection, ObataError> {
    let d = g.dim();
    if h.i.rows() != d || d % 4 != 0 {
        return Err(ObataError::Dimension(format!("structure of size {} on algebra of dimension {d}", h.i.rows())));
    }
    let q = h.quaternion_relations();
    if !q.passed() {
        return Err(ObataError::NotHypercomplex(q.failures().join(", ")));
    }
    let integ = verify_integrability(h, g);
    if !integ.passed() {
        return Err(ObataError::NotHypercomplex(integ.failures().join(", ")));
    }
    Ok(obata_unchecked(g, h))
}

/// The formula without the integrability check.
pub fn obata_unchecked(g: &LieAlgebraData, h: &HypercomplexTriple) -> Connection {
    let d = g.dim();
    let lj = &h.j;
    let mut nabla = Vec::with_capacity(d);
    for k in 0..d {
        let ad_x = g.ad_basis(k);
        let ad_ix = g.ad(&h.i.column(k));
        // Y -> [X,Y] + I[IX,Y] - J[X,JY] + K[IX,JY]
        let mut m = ad_x.clone();
        m = &m + &(&h.i * &ad_ix);
        m = &m - &(&(lj * &ad_x) * lj);
        m = &m + &(&(&h.k * &ad_ix) * lj);
        nabla.push(m.scale(&half()));
    }
    Connection::from_matrices(nabla, h.clone())
}

/// Obata connection of a Joyce structure, computed in its adapted frame,
/// where the structure is standard and operators are quaternionic.
pub fn joyce_connection(js: &JoyceStructure) -> Result<Connection, ObataError> {
    obata_connection(&js.frame_algebra, &js.frame_triple())
}

impl Connection {
    /// Wraps operator matrices, choosing the quaternionic encoding when the
    /// triple is standard and every operator commutes with it.
    pub fn from_matrices(nabla: Vec<ExactMatrix>, triple: HypercomplexTriple) -> Connection {
        let d = nabla.len();
        let std = standard_structure::<Rational>(d / 4);
        let standard = d % 4 == 0 && triple.i == std[0] && triple.j == std[1] && triple.k == std[2];
        let quat: Option<Vec<Vec<Rational>>> = if standard {
            nabla.iter().map(|m| Rep::Quat(d / 4).encode(m)).collect()
        } else {
            None
        };
        let (rep, coords) = match quat {
            Some(c) => (Rep::Quat(d / 4), c),
            None => (Rep::Real(d), nabla.iter().map(|m| m.data().to_vec()).collect()),
        };
        Connection {
            nabla,
            rep,
            coords,
            triple,
        }
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.nabla.len()
    }

    /// `∇_x y` for arbitrary vectors.
    pub fn covariant(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                crate::rep::axpy(&mut out, c, &self.nabla[k].mul_vec(y));
            }
        }
        out
    }

    /// Operator `∇_x` as coordinates in `rep`.
    pub fn operator_coords(&self, x: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rep.coord_dim()];
        for (k, c) in x.iter().enumerate() {
            crate::rep::axpy(&mut out, c, &self.coords[k]);
        }
        out
    }

    /// Copy with entry `(row, col)` of `∇_{e_k}` changed by `delta`.
    pub fn perturbed(&self, k: usize, row: usize, col: usize, delta: Rational) -> Connection {
        let mut nabla = self.nabla.clone();
        nabla[k][(row, col)] += &delta;
        Connection::from_matrices(nabla, self.triple.clone())
    }

    /// Basis pairs where `∇_x y − ∇_y x − [x,y]` does not vanish.
    pub fn torsion_defects(&self, g: &LieAlgebraData) -> Vec<(usize, usize)> {
        let d = self.dim();
        let mut out = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let mut t = sub(&self.nabla[a].column(b), &self.nabla[b].column(a));
                for (k, c) in g.bracket_basis(a, b) {
                    t[*k] -= c;
                }
                if !is_zero(&t) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Torsion-freeness and `∇I = ∇J = ∇K = 0`.
    pub fn verify(&self, g: &LieAlgebraData) -> Report {
        let mut r = Report::new();
        let bad = self.torsion_defects(g);
        r.push("torsion-free", bad.is_empty(), format!("{} pairs, first {:?}", bad.len(), bad.first()));
        for (name, l) in [("nabla I", &self.triple.i), ("nabla J", &self.triple.j), ("nabla K", &self.triple.k)] {
            let bad: Vec<usize> = (0..self.dim()).filter(|&k| !self.nabla[k].commutator(l).is_zero()).collect();
            r.push(
                format!("{name}=0"),
                bad.is_empty(),
                format!("fails for {} directions, first {:?}", bad.len(), bad.first()),
            );
        }
        r
    }

    /// Connection form `Θ` with `Θ[a][b] = Σ_x ∇_{e_x}[a][b] φ^x`, each entry
    /// given as the coefficient vector over the dual basis.
    pub fn connection_form(&self) -> Vec<Vec<Vec<Rational>>> {
        let d = self.dim();
        (0..d)
            .map(|a| (0..d).map(|b| (0..d).map(|x| self.nabla[x][(a, b)].clone()).collect()).collect())
            .collect()
    }
}
