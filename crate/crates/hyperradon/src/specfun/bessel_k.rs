//! Modified Bessel function K of purely imaginary order.
//!
//! Primary route: adaptive quadrature of
//! `K_{i kappa}(y) = int_0^inf exp(-y cosh t) cos(kappa t) dt`.
//! For small argument the quadrature must resolve ~kappa ln(1/y)
//! oscillations, so y <= 1 switches to the ascending series through
//! `K_nu = pi (I_{-nu} - I_nu) / (2 sin(pi nu))`, which for nu = i kappa
//! collapses to -pi Im[I_{i kappa}(y)] / sinh(pi kappa).
//! Cross-validation route: the Gamma-integral form recovered from Basset's
//! expression, `K_nu(y) = (1/2)(y/2)^{-nu} int_0^inf e^{-s - y^2/4s} s^{nu-1} ds`
//! with `nu = i kappa`, evaluated after the substitution `s = e^w`.

use super::gamma::gamma;
use super::quad;
use super::{EvalResult, Method};
use crate::error::Error;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Ascending series of I_{i kappa}(y) folded into K; kappa bounded away
/// from zero keeps the sinh denominator regular.
fn bessel_k_imag_series(kappa: f64, y: f64) -> EvalResult {
    let q = 0.25 * y * y;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for j in 1..60 {
        term = term * q * (1.0 / j as f64) / Complex64::new(j as f64, kappa);
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    let z = (Complex64::new(0.0, kappa) * (0.5 * y).ln()).exp()
        / gamma(Complex64::new(1.0, kappa))
        * sum;
    let scale = PI / (PI * kappa).sinh();
    EvalResult {
        value: Complex64::new(-scale * z.im, 0.0),
        abs_error: 1e-14 * scale * z.norm() + 1e-300,
        method: Method::Series,
    }
}

/// K_{i kappa}(y) via the cosh-integral representation.  Real-valued.
pub fn bessel_k_imag(kappa: f64, y: f64) -> Result<EvalResult, Error> {
    if y <= 0.0 {
        return Err(Error::InvalidParameter(format!("bessel_k_imag: y must be positive, got {y}")));
    }
    let kappa = kappa.abs(); // K_{i kappa} = K_{-i kappa}
    if y > 700.0 {
        // exp(-y) < 1e-304: indistinguishable from zero at working precision.
        return Ok(EvalResult {
            value: Complex64::new(0.0, 0.0),
            abs_error: 1e-300,
            method: Method::IntegralQuadrature,
        });
    }
    if y <= 1.0 && kappa >= 0.05 {
        return Ok(bessel_k_imag_series(kappa, y));
    }
    // Truncate where exp(-y cosh t) < e^{-45} relative to the t = 0 scale.
    let t_max = (1.0 + 45.0 / y).acosh().max(1.0);
    // Budget panels with the oscillation count kappa * t_max / pi.
    let panels = (200.0 + 30.0 * kappa * t_max / std::f64::consts::PI) as usize;
    // The e^{-y} scale is factored out so the quadrature tolerance is
    // relative to the integrand peak, not absolute.
    let q = quad::adaptive(
        &mut |t: f64| (-y * (t.cosh() - 1.0)).exp() * (kappa * t).cos(),
        0.0,
        t_max,
        1e-15,
        1e-13,
        panels,
    );
    let scale = (-y).exp();
    Ok(EvalResult {
        value: Complex64::new(scale * q.value, 0.0),
        abs_error: scale * q.error + 1e-300,
        method: Method::IntegralQuadrature,
    })
}

/// K_{i kappa}(y) via the Basset-derived Gamma-integral form.
pub fn bessel_k_imag_basset(kappa: f64, y: f64) -> Result<EvalResult, Error> {
    if y <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "bessel_k_imag_basset: y must be positive, got {y}"
        )));
    }
    let kappa = kappa.abs();
    if y > 700.0 {
        return Ok(EvalResult {
            value: Complex64::new(0.0, 0.0),
            abs_error: 1e-300,
            method: Method::IntegralQuadrature,
        });
    }
    // s = e^w: integrand exp(-e^w - (y^2/4) e^{-w}) e^{i kappa w}; the
    // exponent peaks at -y (w = ln(y/2)), which is factored out.
    let w_lo = (y * y / (4.0 * (45.0 + y))).ln().min(-3.0) - 3.0;
    let w_hi = (45.0 + y).ln() + 1.0;
    let panels = (200.0 + 30.0 * kappa * (w_hi - w_lo) / std::f64::consts::PI) as usize;
    let q = quad::adaptive(
        &mut |w: f64| {
            let mag = (y - w.exp() - 0.25 * y * y * (-w).exp()).exp();
            Complex64::from_polar(mag, kappa * w)
        },
        w_lo,
        w_hi,
        1e-15,
        1e-13,
        panels,
    );
    // (y/2)^{-i kappa} = exp(-i kappa ln(y/2))
    let phase = Complex64::from_polar(1.0, -kappa * (0.5 * y).ln());
    let value = 0.5 * (-y).exp() * phase * q.value;
    Ok(EvalResult {
        value: Complex64::new(value.re, 0.0),
        abs_error: 0.5 * (-y).exp() * q.error + value.im.abs() + 1e-300,
        method: Method::IntegralQuadrature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn symmetry_in_kappa() {
        let a = bessel_k_imag(3.0, 0.5).unwrap().re();
        let b = bessel_k_imag(-3.0, 0.5).unwrap().re();
        assert_eq!(a, b);
    }

    #[test]
    fn matches_real_order_k0() {
        // kappa = 0 reduces to K_0; K_0(1) = 0.42102443824070834
        let v = bessel_k_imag(0.0, 1.0).unwrap().re();
        assert!((v - 0.421_024_438_240_708_34).abs() < 1e-12);
    }

    #[test]
    fn large_argument_asymptotics() {
        // K_{i kappa}(y) -> sqrt(pi/2y) e^{-y} for y >> kappa.  The 1/y
        // correction is (1/8 - kappa^2/2)/y = -4.1e-2 at y = 50, so the
        // leading order is only good to ~5e-2 there and ~1e-2 at y = 500.
        let v = bessel_k_imag(2.0, 50.0).unwrap().re();
        let lead = (PI / 100.0).sqrt() * (-50.0_f64).exp();
        assert!((v / lead - 1.0).abs() < 5e-2);
        let v = bessel_k_imag(2.0, 500.0).unwrap().re();
        let lead = (PI / 1000.0).sqrt() * (-500.0_f64).exp();
        assert!((v / lead - 1.0).abs() < 1e-2);
    }

    #[test]
    fn cosh_route_agrees_with_basset_route() {
        for &(k, y) in &[(1.0, 1.0), (0.7, 0.2), (3.0, 0.5), (5.0, 2.0), (2.0, 10.0)] {
            let a = bessel_k_imag(k, y).unwrap().re();
            let b = bessel_k_imag_basset(k, y).unwrap().re();
            assert!((a - b).abs() < 1e-10, "k={k} y={y}: {a} vs {b}");
        }
    }

    #[test]
    fn series_route_agrees_with_quadrature_routes() {
        // Continuity across the y = 1 route switch (series below, cosh
        // quadrature above) and against the Basset route deep in the
        // oscillatory small-y region.
        for &k in &[0.7, 3.0, 12.0] {
            let lo = bessel_k_imag(k, 1.0 - 1e-12).unwrap().re();
            let hi = bessel_k_imag(k, 1.0 + 1e-12).unwrap().re();
            // the routes are independent, so agreement is limited by the
            // quadrature route's relative accuracy, not by the step size
            let scale = (PI / (k * (PI * k).sinh())).sqrt();
            assert!((lo - hi).abs() < 1e-8 * scale, "k={k}: {lo} vs {hi}");
        }
        for &(k, y) in &[(0.7, 1e-4), (3.0, 1e-4), (5.0, 1e-2)] {
            let a = bessel_k_imag(k, y).unwrap().re();
            let b = bessel_k_imag_basset(k, y).unwrap().re();
            assert!((a - b).abs() < 1e-9, "k={k} y={y}: {a} vs {b}");
        }
    }

    #[test]
    fn underflow_to_zero() {
        let r = bessel_k_imag(2.0, 800.0).unwrap();
        assert_eq!(r.re(), 0.0);
        assert!(r.abs_error > 0.0);
    }

    #[test]
    fn oscillation_count_for_kappa20() {
        // For kappa = 20 the function has many sign changes on (0.01, 20)
        // and none beyond y = kappa + 5.
        let mut signs = 0;
        let mut last = bessel_k_imag(20.0, 0.01).unwrap().re();
        let n = 400;
        for i in 1..=n {
            let y = 0.01 * (20.0f64 / 0.01).powf(i as f64 / n as f64);
            let v = bessel_k_imag(20.0, y).unwrap().re();
            if v * last < 0.0 {
                signs += 1;
            }
            last = v;
        }
        assert!(signs >= 5, "only {signs} sign changes");
        let mut tail_signs = 0;
        let mut last = bessel_k_imag(20.0, 25.0).unwrap().re();
        for i in 1..=60 {
            let y = 25.0 + i as f64;
            let v = bessel_k_imag(20.0, y).unwrap().re();
            if v * last < 0.0 && v.abs() > 1e-280 {
                tail_signs += 1;
            }
            last = v;
        }
        assert_eq!(tail_signs, 0);
    }
}
