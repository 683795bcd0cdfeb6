//! Normalized Laplacian eigenfunctions on both models of the hyperbolic
//! plane, the Kontorovich-Lebedev and Mehler-Fock transform pairs, and
//! the self-adjoint extensions of the exponential-potential Liouville
//! operator with their scattering and bound states.

pub mod liouville;
pub mod transforms;

pub use liouville::{
    liouville_bound, liouville_scattering, poschl_teller_parity_filtered,
    poschl_teller_spectrum, scattering_norm, LiouvilleExtension,
};
pub use transforms::{kontorovich_lebedev, mehler_fock, Direction, SpectralFn};

use crate::error::Error;
use crate::specfun::{bessel_k::bessel_k_imag, conical::conical_p, gamma::gamma, ConicalOrder};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Plane-wave eigenmode of the half-plane Laplacian, eigenvalue
/// kappa^2 + 1/4.
#[derive(Debug, Clone, Copy)]
pub struct HalfPlaneMode {
    pub k: f64,
    pub kappa: f64,
}

/// chi_{k,kappa}(x, y) = (1/pi) sqrt(2 kappa sinh(pi kappa))
/// e^{ikx} sqrt(y) K_{i kappa}(|k| y), delta-normalized so that
/// <chi, chi'> = 2 pi delta(k - k') delta(kappa - kappa').
pub fn chi_mode(mode: &HalfPlaneMode, x: f64, y: f64) -> Result<Complex64, Error> {
    if mode.k == 0.0 || mode.kappa <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "chi_mode needs k != 0 and kappa > 0, got k = {}, kappa = {}",
            mode.k, mode.kappa
        )));
    }
    if y <= 0.0 {
        return Err(Error::InvalidPoint {
            chart: "HalfPlane",
            reason: format!("y = {y} must be positive"),
        });
    }
    let kk = bessel_k_imag(mode.kappa, mode.k.abs() * y)?;
    let norm = (2.0 * mode.kappa * (PI * mode.kappa).sinh()).sqrt() / PI;
    Ok(Complex64::from_polar(1.0, mode.k * x) * (norm * y.sqrt() * kk.re()))
}

/// Angular-momentum eigenmode of the polar-coordinate Laplacian.
#[derive(Debug, Clone, Copy)]
pub struct PolarMode {
    pub m: i32,
    pub kappa: f64,
}

/// Unnormalized eigenfunction e^{i m phi} P^m_{i kappa - 1/2}(cosh rho);
/// the normalization constant is exposed by [`polar_mode_norm_sq`].
pub fn polar_mode(mode: &PolarMode, rho: f64, phi: f64) -> Result<Complex64, Error> {
    if rho < 0.0 {
        return Err(Error::InvalidPoint {
            chart: "Polar",
            reason: format!("rho = {rho} must be >= 0"),
        });
    }
    let p = conical_p(ConicalOrder { kappa: mode.kappa, m: mode.m }, rho.cosh())?;
    Ok(Complex64::from_polar(1.0, mode.m as f64 * phi) * p.re())
}

/// N^2 with <phi_{m,kappa}, phi_{m',kappa'}> = delta_{mm'}
/// delta(kappa - kappa') / N^2, i.e.
/// N^2 = kappa sinh(pi kappa) |Gamma(1/2 - m + i kappa)|^2 / (2 pi^2).
pub fn polar_mode_norm_sq(m: i32, kappa: f64) -> f64 {
    let g = gamma(Complex64::new(0.5 - m as f64, kappa));
    kappa * (PI * kappa).sinh() * g.norm_sqr() / (2.0 * PI * PI)
}
