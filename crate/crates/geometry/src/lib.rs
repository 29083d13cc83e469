//! Left-invariant form calculus and the geometry of Joyce hypercomplex
//! structures: Killing-extension HKT metrics, the Obata 1-form and Ricci
//! tensor, the Lee form, the twisted Calabi–Yau equations and semidirect
//! products.

pub mod forms;
pub mod lee;
pub mod metric;
pub mod report;
pub mod semidirect;
pub mod tcy;

pub use forms::{ce_differential, ComplexForm, FormJson, LeftInvariantForm};
pub use lee::{
    form_summary, fundamental_form, lee_form, lee_form_from_definition, obata_one_form, obata_one_form_consistent,
    obata_one_form_with, obata_ricci, obata_ricci_with, ricci_is_d_eta, FormSummary, RicciForm,
};
pub use metric::{
    compatible_parameter, extend_killing_metric, is_ad_invariant, is_integrable, layer_lambdas, HyperhermitianData,
    InvariantMetric,
};
pub use report::{analyze, analyze_auto, GeometryOptions, GeometryReport, DEFAULT_DEFINITION_CAP};
pub use semidirect::{semidirect_hkt, standard_sp1_rho};
pub use tcy::{dc, holomorphic_two_form, verify_twisted_cy, TwistedCyReport, DEFAULT_PSI_CAP};

use hypercx_core::CoreError;

/// Errors raised by the geometric constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    /// The parameter matrix or metric data violate compatibility.
    #[error("incompatible parameter matrix: {0}")]
    Incompatible(String),
    /// No supported scalar field contains the required square roots.
    #[error("no supported quadratic field realizes a compatible parameter matrix: {0}")]
    NoField(String),
    /// The quaternionic dimension exceeds the cap for `Ψ = Ωⁿ`.
    #[error("quaternionic dimension {n} exceeds the cap {cap}")]
    CapExceeded {
        /// Quaternionic dimension.
        n: usize,
        /// Cap.
        cap: usize,
    },
    /// Invalid representation for a semidirect product.
    #[error("invalid representation: {0}")]
    InvalidRho(String),
    /// Kernel error.
    #[error(transparent)]
    Core(#[from] CoreError),
}
