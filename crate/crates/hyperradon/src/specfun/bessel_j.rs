//! Bessel function of the first kind for complex order and positive
//! real argument.
//!
//! Three routes: the power series for x <= 8 (kept short of the range
//! where term cancellation erodes accuracy), the Hankel asymptotic
//! expansion whenever its smallest-term truncation bound is good enough
//! (it terminates exactly for half-integer orders), and an integral
//! representation for the remaining mid range.

use super::gamma::gamma;
use super::{quad, EvalResult, Method};
use crate::error::Error;
use num_complex::Complex64;
use std::f64::consts::PI;

const SERIES_X_MAX: f64 = 8.0;
const MAX_ABS_NU: f64 = 20.0;

/// J_nu(x) for complex order nu and x > 0.
pub fn bessel_j(nu: Complex64, x: f64) -> Result<EvalResult, Error> {
    if x <= 0.0 {
        return Err(Error::InvalidParameter(format!("bessel_j: x must be positive, got {x}")));
    }
    if nu.norm() > MAX_ABS_NU {
        return Err(Error::OutsideValidatedRange {
            function: "bessel_j",
            reason: format!("|nu| = {:.3} exceeds {MAX_ABS_NU}", nu.norm()),
        });
    }
    if nu.im == 0.0 && nu.re < 0.0 && (nu.re - nu.re.round()).abs() < 1e-14 {
        return Err(Error::Pole { function: "bessel_j (negative integer order)", argument: format!("{nu}") });
    }
    if x <= SERIES_X_MAX {
        return Ok(series(nu, x));
    }
    let a = asymptotic(nu, x);
    if a.abs_error <= (1e-11 * a.value.norm()).max(1e-13) {
        Ok(a)
    } else {
        Ok(integral(nu, x))
    }
}

fn series(nu: Complex64, x: f64) -> EvalResult {
    let half = 0.5 * x;
    // t_0 = (x/2)^nu / Gamma(nu + 1)
    let mut term = (nu * half.ln()).exp() / gamma(nu + 1.0);
    let mut sum = term;
    let q = -half * half;
    let mut cancel = term.norm();
    for m in 1..400 {
        term = term * q / (m as f64 * (nu + m as f64));
        sum += term;
        cancel = cancel.max(term.norm());
        if term.norm() < 1e-17 * (1.0 + sum.norm()) {
            break;
        }
    }
    EvalResult {
        value: sum,
        abs_error: 1e-15 * cancel + 1e-17,
        method: Method::Series,
    }
}

/// Hankel expansion: J_nu(x) = sqrt(2/pi x) [P cos w - Q sin w],
/// w = x - nu pi/2 - pi/4.  Truncated at the smallest term.
fn asymptotic(nu: Complex64, x: f64) -> EvalResult {
    let mu = 4.0 * nu * nu;
    let mut p = Complex64::new(1.0, 0.0);
    let mut q = Complex64::new(0.0, 0.0);
    // a_k = prod_{j=1..k} (mu - (2j-1)^2) / (k! (8x)^k); terms alternate
    // between Q (odd k) and P (even k) with signs (-1)^{floor(k/2)}.
    let mut a = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    let mut trunc = 0.0;
    for k in 1..40 {
        let j = (2 * k - 1) as f64;
        let next = a * (mu - j * j) / (k as f64 * 8.0 * x);
        let mag = next.norm();
        if mag > last {
            // Divergent regime: previous (smallest) term bounds the tail.
            trunc = last;
            break;
        }
        a = next;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 1 {
            q += a * sign;
        } else {
            p += a * sign;
        }
        trunc = mag;
        if mag < 1e-18 {
            break;
        }
        last = mag;
    }
    let w = Complex64::new(x - PI / 4.0, 0.0) - nu * (PI / 2.0);
    let amp = (2.0 / (PI * x)).sqrt();
    let value = amp * (p * w.cos() - q * w.sin());
    // cos/sin of complex w are exponentially large for Im(nu) != 0.
    let scale = w.cos().norm().max(w.sin().norm());
    EvalResult {
        value,
        abs_error: amp * trunc * scale + 1e-15 * value.norm(),
        method: Method::Asymptotic,
    }
}

/// Mid-range route: quadrature of
/// J_nu(x) = (1/pi) int_0^pi cos(nu t - x sin t) dt
///         - (sin(nu pi)/pi) int_0^inf e^{-nu t - x sinh t} dt.
fn integral(nu: Complex64, x: f64) -> EvalResult {
    let panels = 200 + x as usize;
    let osc = quad::adaptive(
        &mut |t: f64| (nu * t - Complex64::new(x * t.sin(), 0.0)).cos(),
        0.0,
        PI,
        1e-15,
        1e-13,
        panels,
    );
    // x sinh t dominates Re(nu) t well before t = 6 for x > 8.
    let tail = quad::adaptive(
        &mut |t: f64| (-nu * t - Complex64::new(x * t.sinh(), 0.0)).exp(),
        0.0,
        6.0,
        1e-15,
        1e-13,
        200,
    );
    let value = (osc.value - (nu * PI).sin() * tail.value) / PI;
    EvalResult {
        value,
        abs_error: (osc.error + (nu * PI).sin().norm() * tail.error) / PI + 1e-15 * value.norm(),
        method: Method::IntegralQuadrature,
    }
}
