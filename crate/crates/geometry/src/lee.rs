//! Obata 1-form, Obata–Ricci tensor and the Lee form.

use crate::forms::{ce_differential, LeftInvariantForm};
use crate::metric::{HyperhermitianData, InvariantMetric};
use hypercx_core::{ExactMatrix, Field, LieAlgebraData, Rational};
use serde::Serialize;

fn half<F: Field>() -> F {
    F::from_rational(Rational::new(1, 2))
}

/// `η(X) = −½ tr(ad_X) − ½ tr(L ad_{LX})` for one complex structure `L`.
pub fn obata_one_form_with<F: Field>(g: &LieAlgebraData<F>, l: &ExactMatrix<F>) -> LeftInvariantForm<F> {
    let n = g.dim();
    let v: Vec<F> = (0..n)
        .map(|x| {
            let t = g.ad_basis(x).trace() + (l * &g.ad(&l.column(x))).trace();
            -(t * &half())
        })
        .collect();
    LeftInvariantForm::from_covector(&v)
}

/// Obata 1-form computed with `I`.
pub fn obata_one_form<F: Field>(g: &LieAlgebraData<F>, triple: &[ExactMatrix<F>; 3]) -> LeftInvariantForm<F> {
    obata_one_form_with(g, &triple[0])
}

/// The 1-form is the same for `I`, `J` and `K`.
pub fn obata_one_form_consistent<F: Field>(g: &LieAlgebraData<F>, triple: &[ExactMatrix<F>; 3]) -> bool {
    let e = obata_one_form_with(g, &triple[0]);
    triple[1..].iter().all(|l| obata_one_form_with(g, l) == e)
}

/// Obata–Ricci tensor on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RicciForm<F: Field> {
    /// `Ric(e_a, e_b)`.
    pub bilinear: ExactMatrix<F>,
}

impl<F: Field> RicciForm<F> {
    /// True when identically zero.
    pub fn is_zero(&self) -> bool {
        self.bilinear.is_zero()
    }

    /// `Ric(x, y) = −Ric(y, x)`.
    pub fn is_antisymmetric(&self) -> bool {
        (&self.bilinear + &self.bilinear.transpose()).is_zero()
    }

    /// As a 2-form.
    pub fn to_form(&self) -> LeftInvariantForm<F> {
        LeftInvariantForm::from_antisymmetric(&self.bilinear)
    }
}

/// `Ric(X,Y) = ½ tr(ad_{[X,Y]}) + ½ tr(L ad_{L[X,Y]})` for one `L`.
pub fn obata_ricci_with<F: Field>(g: &LieAlgebraData<F>, l: &ExactMatrix<F>) -> RicciForm<F> {
    let n = g.dim();
    let mut m = ExactMatrix::zeros(n, n);
    for a in 0..n {
        for b in a + 1..n {
            let mut z = vec![F::zero(); n];
            for (k, c) in g.bracket_basis(a, b) {
                z[*k] = c.clone();
            }
            let v = (g.ad(&z).trace() + (l * &g.ad(&l.mul_vec(&z))).trace()) * &half();
            m[(b, a)] = -v.clone();
            m[(a, b)] = v;
        }
    }
    RicciForm { bilinear: m }
}

/// Obata–Ricci tensor computed with `I`.
pub fn obata_ricci<F: Field>(g: &LieAlgebraData<F>, triple: &[ExactMatrix<F>; 3]) -> RicciForm<F> {
    obata_ricci_with(g, &triple[0])
}

/// `Ric = dη` as 2-forms, for each of `I, J, K`.
pub fn ricci_is_d_eta<F: Field>(g: &LieAlgebraData<F>, triple: &[ExactMatrix<F>; 3]) -> bool {
    triple
        .iter()
        .all(|l| obata_ricci_with(g, l).to_form() == ce_differential(g, &obata_one_form_with(g, l)))
}

/// `θ = 2 Σ_j (1/λ_j²)(1 + dim_H f_j) g(e_1^j, ·)` in the frame.
pub fn lee_form<F: Field>(metric: &InvariantMetric<F>) -> LeftInvariantForm<F> {
    let g = &metric.data.gram;
    let n = g.rows();
    let mut v = vec![F::zero(); n];
    for (j, &o) in metric.offsets.iter().enumerate() {
        let c = F::from_rational(Rational::from(2 * (1 + metric.f_hdims[j] as i64)) / metric.lambdas[j].clone());
        for (b, x) in v.iter_mut().enumerate() {
            x.add_mul(&c, &g[(o, b)]);
        }
    }
    LeftInvariantForm::from_covector(&v)
}

/// Fundamental 2-form `ω_L(x, y) = g(Lx, y)`.
pub fn fundamental_form<F: Field>(h: &HyperhermitianData<F>, l: &ExactMatrix<F>) -> LeftInvariantForm<F> {
    LeftInvariantForm::from_antisymmetric(&(&l.transpose() * &h.gram))
}

/// Lee form from its definition `dω^{m−1} = θ ∧ ω^{m−1}`, where `ω = ω_I`
/// and `m = dim/2`. `None` when no such `θ` exists.
pub fn lee_form_from_definition<F: Field>(h: &HyperhermitianData<F>) -> Option<LeftInvariantForm<F>> {
    let n = h.dim();
    let w = fundamental_form(h, &h.triple[0]).power(n / 2 - 1);
    let dw = ce_differential(&h.algebra, &w);
    // Columns e^a ∧ w in the basis of (n−1)-forms, keyed by the missing index.
    let key = |skip: usize| -> Vec<u16> { (0..n as u16).filter(|&t| t as usize != skip).collect() };
    let mut m = ExactMatrix::<F>::zeros(n, n);
    for a in 0..n {
        let col = LeftInvariantForm::basis(n, a).wedge(&w);
        for r in 0..n {
            m[(r, a)] = col.coefficient(&key(r));
        }
    }
    let rhs: Vec<F> = (0..n).map(|r| dw.coefficient(&key(r))).collect();
    let theta = m.solve(&rhs)?;
    Some(LeftInvariantForm::from_covector(&theta))
}

/// Summary of the invariant forms of a hyperhermitian Joyce structure.
#[derive(Clone, Debug, Serialize)]
pub struct FormSummary {
    /// `η` does not depend on the choice of `L`.
    pub eta_independent_of_l: bool,
    /// `Ric = dη` for every `L`.
    pub ricci_is_d_eta: bool,
    /// `Ric ≡ 0`.
    pub ricci_zero: bool,
    /// `dη = 0`.
    pub d_eta_zero: bool,
}

/// Metric-free quantities of a hypercomplex Lie algebra.
pub fn form_summary<F: Field>(g: &LieAlgebraData<F>, triple: &[ExactMatrix<F>; 3]) -> FormSummary {
    let eta = obata_one_form(g, triple);
    FormSummary {
        eta_independent_of_l: obata_one_form_consistent(g, triple),
        ricci_is_d_eta: ricci_is_d_eta(g, triple),
        ricci_zero: obata_ricci(g, triple).is_zero(),
        d_eta_zero: ce_differential(g, &eta).is_zero(),
    }
}
