//! Runtime-tunable tolerances and discretization parameters.
//!
//! Every hard-coded default below can be overridden from a plain
//! `key=value` configuration file (one entry per line, `#` comments).

use crate::error::Error;
use std::path::Path;

/// Tolerances and discretization defaults used across the crate.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// Chart round-trip / determinant / circle-equation tolerance.
    pub chart_eps: f64,
    /// Target absolute error for adaptive quadrature.
    pub quad_tol: f64,
    /// Finite-difference step for Casimir and metric checks.
    pub fd_step: f64,
    /// Richardson extrapolation levels for finite differences.
    pub fd_richardson: usize,
    /// |sigma| cutoff for Radon arc-length quadrature.
    pub sigma_cutoff: f64,
    /// Upper limit (in x = e^xi) for Liouville line integrals.
    pub line_cutoff: f64,
    /// Grid step for finite-difference wave-operator residuals.
    pub grid_step: f64,
    /// Tolerance below which the |tr| - 2 classification is parabolic.
    pub parabolic_tol: f64,
    /// Matching-window disagreement threshold for E/O evaluation.
    pub eo_match_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            chart_eps: 1e-12,
            quad_tol: 1e-10,
            fd_step: 1e-4,
            fd_richardson: 1,
            sigma_cutoff: 40.0,
            line_cutoff: 800.0,
            grid_step: 0.01,
            parabolic_tol: 1e-10,
            eo_match_tol: 1e-7,
        }
    }
}

impl Tolerances {
    /// Load overrides from a `key=value` file on top of the defaults.
    ///
    /// Unknown keys and non-positive values are rejected.
    pub fn from_file(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)?;
        let mut t = Tolerances::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidParameter(format!("line {}: expected key=value", lineno + 1))
            })?;
            t.set(key.trim(), value.trim())?;
        }
        Ok(t)
    }

    /// Set a single named tolerance from its string representation.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), Error> {
        let parse = |v: &str| -> Result<f64, Error> {
            let x: f64 = v
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{key}: not a number: {v}")))?;
            if x <= 0.0 || !x.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{key}: tolerances must be positive, got {v}"
                )));
            }
            Ok(x)
        };
        match key {
            "chart_eps" => self.chart_eps = parse(value)?,
            "quad_tol" => self.quad_tol = parse(value)?,
            "fd_step" => self.fd_step = parse(value)?,
            "fd_richardson" => {
                self.fd_richardson = value.parse().map_err(|_| {
                    Error::InvalidParameter(format!("fd_richardson: not an integer: {value}"))
                })?
            }
            "sigma_cutoff" => self.sigma_cutoff = parse(value)?,
            "line_cutoff" => self.line_cutoff = parse(value)?,
            "grid_step" => self.grid_step = parse(value)?,
            "parabolic_tol" => self.parabolic_tol = parse(value)?,
            "eo_match_tol" => self.eo_match_tol = parse(value)?,
            _ => {
                return Err(Error::InvalidParameter(format!("unknown key: {key}")));
            }
        }
        Ok(())
    }
}

/// Number of worker threads to use for grid evaluations.
///
/// Reads `HYPERRADON_THREADS` and caps it at the machine parallelism;
/// defaults to 1 (results never depend on the value).
pub fn thread_cap() -> usize {
    let hw = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    match std::env::var("HYPERRADON_THREADS") {
        Ok(v) => v.parse::<usize>().ok().filter(|&n| n >= 1).map(|n| n.min(hw)).unwrap_or(1),
        Err(_) => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_key_rejected() {
        let mut t = Tolerances::default();
        assert!(t.set("quad_tol", "1e-8").is_ok());
        assert!(t.set("nonsense", "1.0").is_err());
        assert!(t.set("quad_tol", "-1.0").is_err());
    }
}
