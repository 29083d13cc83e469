//! Parametrized Joyce hypercomplex structures.

use crate::decomposition::JoyceDecomposition;
use crate::report::Report;
use crate::JoyceError;
use hypercx_core::{standard_structure, ExactMatrix, LieAlgebraData, Rational};
use serde::Serialize;

/// Invertible `m x m` matrix whose columns give the `e_1` vectors of the
/// layers in the basis `c_1..c_m` of `R^ell ⊕ b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ParameterMatrix(ExactMatrix);

impl ParameterMatrix {
    /// Wraps a square invertible matrix.
    pub fn new(a: ExactMatrix) -> Result<Self, JoyceError> {
        if !a.is_square() {
            return Err(JoyceError::BadParameter(format!("{}x{} matrix is not square", a.rows(), a.cols())));
        }
        if num_traits::Zero::is_zero(&a.determinant()) {
            return Err(JoyceError::BadParameter("singular parameter matrix".into()));
        }
        Ok(ParameterMatrix(a))
    }

    /// Parses `"a,b;c,d"`.
    pub fn parse(s: &str) -> Result<Self, JoyceError> {
        Self::new(ExactMatrix::parse(s)?)
    }

    /// Identity of size `m`.
    pub fn identity(m: usize) -> Self {
        ParameterMatrix(ExactMatrix::identity(m))
    }

    /// Size.
    pub fn size(&self) -> usize {
        self.0.rows()
    }

    /// Underlying matrix.
    pub fn matrix(&self) -> &ExactMatrix {
        &self.0
    }
}

/// Three complex structures on the ambient algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypercomplexTriple {
    /// `I`.
    pub i: ExactMatrix,
    /// `J`.
    pub j: ExactMatrix,
    /// `K`.
    pub k: ExactMatrix,
}

impl HypercomplexTriple {
    /// `[I, J, K]`.
    pub fn all(&self) -> [&ExactMatrix; 3] {
        [&self.i, &self.j, &self.k]
    }

    /// Checks `I^2 = J^2 = K^2 = IJK = -Id`, `IJ = K = -JI` and unit
    /// determinants.
    pub fn quaternion_relations(&self) -> Report {
        let n = self.i.rows();
        let minus = ExactMatrix::identity(n).scale(&Rational::from(-1));
        let mut r = Report::new();
        for (name, l) in [("I", &self.i), ("J", &self.j), ("K", &self.k)] {
            r.push(format!("{name}^2=-Id"), (l * l) == minus, "square is not -Id");
            r.push(format!("det {name}=1"), l.determinant() == Rational::from(1), "determinant is not 1");
        }
        let ij = &self.i * &self.j;
        r.push("IJ=K", ij == self.k, "IJ differs from K");
        r.push("JI=-K", &self.j * &self.i == -&self.k, "JI differs from -K");
        r.push("IJK=-Id", &ij * &self.k == minus, "IJK differs from -Id");
        r
    }
}

/// A Joyce hypercomplex structure: decomposition, parameters, adapted frame
/// and the resulting triple.
#[derive(Clone, Debug)]
pub struct JoyceStructure {
    /// Underlying decomposition.
    pub decomposition: JoyceDecomposition,
    /// Parameter matrix.
    pub a: ParameterMatrix,
    /// Frame columns in ambient coordinates.
    pub frame: ExactMatrix,
    /// Inverse of the frame.
    pub frame_inverse: ExactMatrix,
    /// The ambient algebra rewritten in the frame.
    pub frame_algebra: LieAlgebraData,
    /// The triple in ambient coordinates.
    pub triple: HypercomplexTriple,
}

/// Builds the Joyce hypercomplex structure with parameter matrix `a`.
///
/// In the frame `(e_1^i, e_2^i, e_3^i, e_4^i, f-quadruples)` the structures
/// are left multiplication by `i, j, k` on every block of four, so that
/// `I e_1 = e_2`, `I e_3 = e_4` and `I f = [e_2, f]`, `J f = [e_3, f]`,
/// `K f = [e_4, f]`.
pub fn hypercomplex_structure(d: &JoyceDecomposition, a: &ParameterMatrix) -> Result<JoyceStructure, JoyceError> {
    if a.size() != d.m {
        return Err(JoyceError::BadParameter(format!(
            "parameter matrix has size {}, expected {}",
            a.size(),
            d.m
        )));
    }
    let frame = d.frame(a.matrix());
    let frame_inverse = frame.inverse().ok_or(JoyceError::BadParameter("frame is singular".into()))?;
    let frame_algebra = d.ambient.change_basis(&frame, d.frame_labels())?;
    let [li, lj, lk] = standard_structure::<Rational>(d.quaternionic_dim());
    let conj = |l: &ExactMatrix| &(&frame * l) * &frame_inverse;
    let triple = HypercomplexTriple {
        i: conj(&li),
        j: conj(&lj),
        k: conj(&lk),
    };
    Ok(JoyceStructure {
        decomposition: d.clone(),
        a: a.clone(),
        frame,
        frame_inverse,
        frame_algebra,
        triple,
    })
}

impl JoyceStructure {
    /// Quaternionic dimension.
    pub fn quaternionic_dim(&self) -> usize {
        self.decomposition.quaternionic_dim()
    }

    /// Ambient coordinates of a frame vector.
    pub fn to_ambient(&self, v: &[Rational]) -> Vec<Rational> {
        self.frame.mul_vec(v)
    }

    /// Frame coordinates of an ambient vector.
    pub fn to_frame(&self, v: &[Rational]) -> Vec<Rational> {
        self.frame_inverse.mul_vec(v)
    }

    /// The triple in frame coordinates (the standard structure).
    pub fn frame_triple(&self) -> HypercomplexTriple {
        let [i, j, k] = standard_structure::<Rational>(self.quaternionic_dim());
        HypercomplexTriple { i, j, k }
    }
}
