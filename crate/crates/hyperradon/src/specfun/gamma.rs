//! Complex Gamma function via the Lanczos approximation (g = 7, n = 9).

use super::{EvalResult, Method};
use crate::error::Error;
use num_complex::Complex64;
use std::f64::consts::PI;

const G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma(z) for complex z, using reflection for Re(z) < 1/2.
pub fn gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        PI / ((PI * z).sin() * gamma(Complex64::new(1.0, 0.0) - z))
    } else {
        let z = z - 1.0;
        let mut x = Complex64::new(LANCZOS[0], 0.0);
        for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
            x += c / (z + i as f64);
        }
        let t = z + G + 0.5;
        (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
    }
}

/// log Gamma(z), principal branch for Re(z) > 0.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    assert!(z.re > 0.0, "ln_gamma requires Re(z) > 0");
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// Gamma(x) for real x (poles give NaN).
pub fn gamma_real(x: f64) -> f64 {
    gamma(Complex64::new(x, 0.0)).re
}

/// `gamma` wrapped with pole detection and an error estimate.
pub fn gamma_complex(z: Complex64) -> Result<EvalResult, Error> {
    let near_int = (z.re - z.re.round()).abs() < 1e-14 && z.im.abs() < 1e-14;
    if near_int && z.re.round() <= 0.0 {
        return Err(Error::Pole { function: "gamma", argument: format!("{z}") });
    }
    let value = gamma(z);
    Ok(EvalResult {
        value,
        abs_error: 2e-13 * value.norm(),
        method: Method::Series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    #[test]
    fn integer_values() {
        assert!((gamma_real(1.0) - 1.0).abs() < 1e-14);
        assert!((gamma_real(5.0) - 24.0).abs() < 1e-12);
        assert!((gamma_real(0.5) - PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn imaginary_axis_products() {
        // Gamma(1+ik) Gamma(1-ik) = pi k / sinh(pi k)
        for &k in &[0.5, 1.0, 2.0, 5.0] {
            let p = gamma(C::new(1.0, k)) * gamma(C::new(1.0, -k));
            let exact = PI * k / (PI * k).sinh();
            assert!(
                (p.re - exact).abs() / exact < 1e-12 && p.im.abs() < 1e-12 * exact,
                "k={k}"
            );
        }
        // Gamma(1/2+ik) Gamma(1/2-ik) = pi sech(pi k)
        for &k in &[0.5, 1.0, 2.0, 5.0] {
            let p = gamma(C::new(0.5, k)) * gamma(C::new(0.5, -k));
            let exact = PI / (PI * k).cosh();
            assert!((p.re - exact).abs() / exact < 1e-12, "k={k}");
        }
    }

    #[test]
    fn pole_reported() {
        assert!(gamma_complex(C::new(0.0, 0.0)).is_err());
        assert!(gamma_complex(C::new(-3.0, 0.0)).is_err());
        assert!(gamma_complex(C::new(0.5, 0.0)).is_ok());
    }

    #[test]
    fn ln_gamma_consistent() {
        let z = C::new(3.7, 1.2);
        let d = (ln_gamma(z).exp() - gamma(z)).norm() / gamma(z).norm();
        assert!(d < 1e-13);
    }
}
