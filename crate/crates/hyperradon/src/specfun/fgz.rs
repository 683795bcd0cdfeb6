//! Even/odd real combinations F, G and the companion combination Z of
//! Bessel functions of order nu and -nu.
//!
//! F_nu = (1/2) sec(nu pi/2) (J_nu + J_{-nu}),
//! G_nu = (1/2) csc(nu pi/2) (J_nu - J_{-nu}),
//! Z_nu = J_nu + ((tan(nu pi/2) + 1)/(tan(nu pi/2) - 1)) J_{-nu}.
//!
//! For purely imaginary nu = i kappa both F and G are real.

use super::bessel_j::bessel_j;
use super::EvalResult;
use crate::error::Error;
use num_complex::Complex64;
use std::f64::consts::PI;

const TRIG_POLE_EPS: f64 = 1e-12;

/// Evaluate (F_nu(x), G_nu(x), Z_nu(x)) together.
///
/// F has a trigonometric pole at odd integer nu, G at even integer nu,
/// and Z where tan(nu pi/2) = 1; all three are reported as pole errors.
/// Integer nu is rejected outright because J_{-nu} is then not an
/// independent solution.
pub fn fgz_functions(nu: Complex64, x: f64) -> Result<(EvalResult, EvalResult, EvalResult), Error> {
    let half = nu * (PI / 2.0);
    let (c, s) = (half.cos(), half.sin());
    if c.norm() < TRIG_POLE_EPS {
        return Err(Error::Pole { function: "fgz_functions (sec factor of F)", argument: format!("{nu}") });
    }
    if s.norm() < TRIG_POLE_EPS {
        return Err(Error::Pole { function: "fgz_functions (csc factor of G)", argument: format!("{nu}") });
    }
    let t = half.tan();
    if (t - 1.0).norm() < TRIG_POLE_EPS {
        return Err(Error::Pole { function: "fgz_functions (Z denominator)", argument: format!("{nu}") });
    }
    let jp = bessel_j(nu, x)?;
    let jm = bessel_j(-nu, x)?;
    let err = jp.abs_error + jm.abs_error;
    let f = EvalResult {
        value: 0.5 * (jp.value + jm.value) / c,
        abs_error: 0.5 * err / c.norm(),
        method: jp.method,
    };
    let g = EvalResult {
        value: 0.5 * (jp.value - jm.value) / s,
        abs_error: 0.5 * err / s.norm(),
        method: jp.method,
    };
    let zc = (t + 1.0) / (t - 1.0);
    let z = EvalResult {
        value: jp.value + zc * jm.value,
        abs_error: jp.abs_error + zc.norm() * jm.abs_error,
        method: jp.method,
    };
    Ok((f, g, z))
}
