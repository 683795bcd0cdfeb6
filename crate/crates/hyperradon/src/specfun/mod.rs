//! Special-function kernel.
//!
//! Every function here follows the dual-route policy: an implementation
//! path (series, integral representation, or asymptotic form) plus an
//! independent route used for cross-validation, either inside the module
//! (Bessel K) or in the test suites (ODE shooting, contour quadrature).

pub mod bessel_j;
pub mod bessel_k;
pub mod conical;
pub mod eo;
pub mod fgz;
pub mod gamma;
pub mod quad;

pub use bessel_j::bessel_j;
pub use bessel_k::{bessel_k_imag, bessel_k_imag_basset};
pub use conical::{conical_p, conical_p_asymptotic};
pub use eo::{eo_asymptotic, modified_conical_eo};
pub use fgz::fgz_functions;
pub use gamma::{gamma, gamma_complex, gamma_real, ln_gamma};

use num_complex::Complex64;

/// Evaluation scheme that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    IntegralQuadrature,
    Asymptotic,
}

/// A numeric value with an absolute-error upper-bound estimate.
#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: Complex64,
    /// Upper-bound estimate from the scheme (quadrature remainder or
    /// series truncation bound).
    pub abs_error: f64,
    pub method: Method,
}

impl EvalResult {
    pub fn re(&self) -> f64 {
        self.value.re
    }
}

/// Spectral label for conical functions: kappa > 0, integer azimuthal order m.
#[derive(Debug, Clone, Copy)]
pub struct ConicalOrder {
    pub kappa: f64,
    pub m: i32,
}
