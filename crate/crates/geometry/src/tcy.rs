//! HKT conditions and the twisted Calabi–Yau system.

use crate::forms::{ce_differential, ComplexForm, LeftInvariantForm};
use crate::lee::fundamental_form;
use crate::metric::HyperhermitianData;
use crate::GeometryError;
use hypercx_core::{ExactMatrix, Field, LieAlgebraData, Rational};
use serde::Serialize;

/// Default bound on the quaternionic dimension for `Ψ = Ωⁿ`.
pub const DEFAULT_PSI_CAP: usize = 4;

/// Per-equation verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwistedCyReport {
    /// `d^c_I ω_I = d^c_J ω_J = d^c_K ω_K`.
    pub hkt: bool,
    /// `dd^c_I ω_I = 0`.
    pub strong: bool,
    /// `dΨ = θ ∧ Ψ`.
    #[serde(rename = "dPsi_eq_theta_wedge_Psi")]
    pub d_psi: bool,
    /// `dθ = 0`.
    pub dtheta_zero: bool,
}

impl TwistedCyReport {
    /// Every equation holds.
    pub fn passed(&self) -> bool {
        self.hkt && self.strong && self.d_psi && self.dtheta_zero
    }
}

/// `L⁻¹ d L` on forms, where `L` acts by `α ↦ α(L⁻¹·, .., L⁻¹·)`.
pub fn dc<F: Field>(g: &LieAlgebraData<F>, l: &ExactMatrix<F>, form: &LeftInvariantForm<F>) -> LeftInvariantForm<F> {
    let linv = l.scale(&-F::one());
    let lifted = form.pullback(&linv);
    ce_differential(g, &lifted).pullback(l)
}

/// `Ω = (ω_J + i ω_K) / 2`.
pub fn holomorphic_two_form<F: Field>(h: &HyperhermitianData<F>) -> ComplexForm<F> {
    let half = F::from_rational(Rational::new(1, 2));
    ComplexForm {
        re: fundamental_form(h, &h.triple[1]).scale(&half),
        im: fundamental_form(h, &h.triple[2]).scale(&half),
    }
}

/// Checks the HKT, strong HKT and twisted Calabi–Yau equations for the
/// given Lee form.
pub fn verify_twisted_cy<F: Field>(
    h: &HyperhermitianData<F>,
    theta: &LeftInvariantForm<F>,
    cap: usize,
) -> Result<TwistedCyReport, GeometryError> {
    let n = h.quaternionic_dim();
    if n > cap {
        return Err(GeometryError::CapExceeded { n, cap });
    }
    let g = &h.algebra;
    let dcs: Vec<LeftInvariantForm<F>> = h
        .triple
        .iter()
        .map(|l| dc(g, l, &fundamental_form(h, l)))
        .collect();
    let hkt = dcs[1..].iter().all(|x| *x == dcs[0]);
    let strong = ce_differential(g, &dcs[0]).is_zero();
    let psi = holomorphic_two_form(h).power(n);
    let d_psi = psi.d(g) == psi.wedge_real_left(theta);
    let dtheta_zero = ce_differential(g, theta).is_zero();
    Ok(TwistedCyReport {
        hkt,
        strong,
        d_psi,
        dtheta_zero,
    })
}
