//! End-to-end geometric analysis of a Joyce decomposition.

use crate::forms::{ce_differential, FormJson};
use crate::lee::{form_summary, lee_form, lee_form_from_definition, obata_one_form, FormSummary};
use crate::metric::{compatible_parameter, extend_killing_metric};
use crate::tcy::{verify_twisted_cy, TwistedCyReport, DEFAULT_PSI_CAP};
use crate::GeometryError;
use hypercx_core::{ExactMatrix, Field, Quad, Rational};
use hypercx_joyce::JoyceDecomposition;
use serde::Serialize;

/// Options for [`analyze`].
#[derive(Clone, Debug)]
pub struct GeometryOptions {
    /// Run the twisted Calabi–Yau checks.
    pub twisted_cy: bool,
    /// Cap on the quaternionic dimension for `Ψ`.
    pub psi_cap: usize,
    /// Optional `λ_j²` for the torus layers, validated against the metric.
    pub torus_lambdas: Option<Vec<Rational>>,
    /// Cap on the quaternionic dimension for solving `θ` from `ω^{m−1}`.
    pub definition_cap: usize,
}

/// Default cap for the definitional Lee form check.
pub const DEFAULT_DEFINITION_CAP: usize = 6;

impl Default for GeometryOptions {
    fn default() -> Self {
        GeometryOptions {
            twisted_cy: false,
            psi_cap: DEFAULT_PSI_CAP,
            torus_lambdas: None,
            definition_cap: DEFAULT_DEFINITION_CAP,
        }
    }
}

/// Outcome of [`analyze`].
#[derive(Clone, Debug, Serialize)]
pub struct GeometryReport {
    /// Scalar field of the computation.
    pub field: String,
    /// Parameter matrix, row by row.
    pub parameter: Vec<Vec<String>>,
    /// `λ_j²` per layer.
    pub lambdas: Vec<String>,
    /// Dimension of `b`.
    pub b_dim: usize,
    /// Metric is `ad`-invariant.
    pub bi_invariant: bool,
    /// Metric is hyperhermitian.
    pub hyperhermitian: bool,
    /// Metric-free identities and the Ricci verdict.
    #[serde(flatten)]
    pub summary: FormSummary,
    /// Obata 1-form in the frame.
    pub eta: FormJson,
    /// Lee form from the closed formula.
    pub lee: FormJson,
    /// The closed formula agrees with the Obata 1-form.
    pub lee_eq_eta: bool,
    /// The closed formula agrees with `dω^{m−1} = θ ∧ ω^{m−1}`; `None`
    /// above the definition cap.
    pub lee_eq_definition: Option<bool>,
    /// `dθ = 0`.
    pub dtheta_zero: bool,
    /// Twisted Calabi–Yau verdicts, when requested.
    pub twisted_cy: Option<TwistedCyReport>,
}

impl GeometryReport {
    /// Every consistency check holds, and every requested equation.
    pub fn passed(&self) -> bool {
        self.bi_invariant
            && self.hyperhermitian
            && self.summary.eta_independent_of_l
            && self.summary.ricci_is_d_eta
            && self.lee_eq_eta
            && self.lee_eq_definition != Some(false)
            && self.twisted_cy.map_or(true, |t| t.passed())
    }
}

/// Analyzes the Killing extension for the parameter matrix `a` over `F`.
pub fn analyze<F: Field>(
    d: &JoyceDecomposition,
    a: &ExactMatrix<F>,
    opts: &GeometryOptions,
) -> Result<GeometryReport, GeometryError> {
    let metric = extend_killing_metric(d, a, opts.torus_lambdas.as_deref())?;
    let h = &metric.data;
    let g = &h.algebra;
    let eta = obata_one_form(g, &h.triple);
    let lee = lee_form(&metric);
    let lee_eq_definition =
        (h.quaternionic_dim() <= opts.definition_cap).then(|| lee_form_from_definition(h).is_some_and(|t| t == lee));
    let twisted_cy = if opts.twisted_cy {
        Some(verify_twisted_cy(h, &lee, opts.psi_cap)?)
    } else {
        None
    };
    Ok(GeometryReport {
        field: F::field_name(),
        parameter: (0..a.rows())
            .map(|r| a.row(r).iter().map(|x| x.to_string()).collect())
            .collect(),
        lambdas: metric.lambdas.iter().map(|x| x.to_string()).collect(),
        b_dim: d.b_dim(),
        bi_invariant: h.is_bi_invariant(),
        hyperhermitian: h.is_hyperhermitian(),
        summary: form_summary(g, &h.triple),
        eta: FormJson::from(&eta),
        lee: FormJson::from(&lee),
        lee_eq_eta: lee == eta,
        lee_eq_definition,
        dtheta_zero: ce_differential(g, &lee).is_zero(),
        twisted_cy,
    })
}

fn attempt<F: Field>(d: &JoyceDecomposition, opts: &GeometryOptions) -> Option<Result<GeometryReport, GeometryError>> {
    compatible_parameter::<F>(d).map(|a| analyze(d, &a, opts))
}

/// Runs [`analyze`] over the first field among `Q` and `Q(√D)` for small
/// square-free `D` that holds a compatible parameter matrix.
pub fn analyze_auto(d: &JoyceDecomposition, opts: &GeometryOptions) -> Result<GeometryReport, GeometryError> {
    attempt::<Rational>(d, opts)
        .or_else(|| attempt::<Quad<2>>(d, opts))
        .or_else(|| attempt::<Quad<3>>(d, opts))
        .or_else(|| attempt::<Quad<5>>(d, opts))
        .or_else(|| attempt::<Quad<6>>(d, opts))
        .or_else(|| attempt::<Quad<7>>(d, opts))
        .or_else(|| attempt::<Quad<10>>(d, opts))
        .or_else(|| attempt::<Quad<11>>(d, opts))
        .or_else(|| attempt::<Quad<13>>(d, opts))
        .or_else(|| attempt::<Quad<14>>(d, opts))
        .or_else(|| attempt::<Quad<15>>(d, opts))
        .unwrap_or_else(|| {
            Err(GeometryError::NoField(format!(
                "the norms of b in {} need more than one square root",
                d.name
            )))
        })
}
