//! Conical (Mehler) associated Legendre functions P^m_{i kappa - 1/2}(x)
//! for x >= 1, with the branch chosen so the values are real.
//!
//! Primary route: adaptive quadrature of the circular integral
//! representation
//!   P^m_alpha(cosh rho) = Gamma(alpha+m+1) / (2 pi Gamma(alpha+1))
//!                         * int_0^{2pi} (sinh rho cos t + cosh rho)^alpha e^{imt} dt
//! with alpha = i kappa - 1/2.  The base is >= e^{-rho} > 0 so the
//! complex power is single-valued; reality follows from evenness in
//! kappa and the imaginary residual is folded into the error estimate.

use super::gamma::gamma;
use super::quad;
use super::{ConicalOrder, EvalResult, Method};
use crate::error::Error;
use num_complex::Complex64;
use std::f64::consts::PI;

/// P^m_{i kappa - 1/2}(x) for x >= 1 via the circular integral.
pub fn conical_p(order: ConicalOrder, x: f64) -> Result<EvalResult, Error> {
    if x < 1.0 {
        return Err(Error::InvalidParameter(format!("conical_p: x must be >= 1, got {x}")));
    }
    let kappa = order.kappa.abs(); // even in kappa
    let m = order.m;
    let alpha = Complex64::new(-0.5, kappa);
    let sh = (x * x - 1.0).sqrt();
    // Integrand is even about t = pi, so fold to [0, pi] and keep cos(mt).
    let mut f = |t: f64| {
        let base = sh * t.cos() + x;
        (alpha * base.ln()).exp() * (m as f64 * t).cos()
    };
    let rho = x.acosh();
    let panels = (100.0 + 20.0 * (kappa * rho + m.unsigned_abs() as f64)) as usize;
    let q = quad::adaptive(&mut f, 0.0, PI, 1e-15, 1e-13, panels);
    let pref = gamma(alpha + (m + 1) as f64) / (PI * gamma(alpha + 1.0));
    let value = pref * q.value;
    Ok(EvalResult {
        value: Complex64::new(value.re, 0.0),
        abs_error: pref.norm() * q.error + value.im.abs() + 1e-16 * value.norm(),
        method: Method::IntegralQuadrature,
    })
}

/// Two-term large-x form
///   P^m_{i kappa - 1/2}(x) ~ (2/sqrt(2 pi x)) Re[ Gamma(i kappa)
///       (2x)^{i kappa} / Gamma(1/2 + i kappa - m) ].
pub fn conical_p_asymptotic(order: ConicalOrder, x: f64) -> Result<EvalResult, Error> {
    if x < 1.0 {
        return Err(Error::InvalidParameter(format!(
            "conical_p_asymptotic: x must be >= 1, got {x}"
        )));
    }
    let kappa = order.kappa.abs();
    if kappa == 0.0 {
        return Err(Error::Pole { function: "conical_p_asymptotic (Gamma(i kappa))", argument: "kappa = 0".into() });
    }
    let ik = Complex64::new(0.0, kappa);
    let term = gamma(ik) / gamma(Complex64::new(0.5 - order.m as f64, kappa))
        * (ik * (2.0 * x).ln()).exp();
    let value = 2.0 * term.re / (2.0 * PI * x).sqrt();
    Ok(EvalResult {
        value: Complex64::new(value, 0.0),
        // next correction is O(1/x) relative
        abs_error: value.abs() / x + 2.0 * term.norm() / ((2.0 * PI * x).sqrt() * x),
        method: Method::Asymptotic,
    })
}
