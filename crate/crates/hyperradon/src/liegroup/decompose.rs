//! Factorizations of group elements into products of three one-parameter
//! subgroup factors, with closed-form recomposition and extraction.
//!
//! Angle-like parameters live on the half-angle covering, so they are
//! returned in (-2 pi, 2 pi]; this is the smallest interval on which the
//! rotation factors are faithful (the matrix of a rotation by t has
//! period 4 pi in t).

use super::{subgroup_element, Flavor, GroupElement, SubgroupName};
use crate::error::Error;

/// Factorization schemes.  Parameter order matches the factor order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// ntilde(x) t(y) k(theta): params (x, y, theta), y > 0.  Global.
    Iwasawa,
    /// ntilde(t) h(xi) a(phi): params (t, xi, phi).  Covers d > |c|.
    NHA,
    /// ntilde(t) h(xi) k(phi): params (t, xi, phi).  Global.
    NHK,
    /// expL0(phi) expL1(xi) expL0(-theta): params (phi, xi, theta), xi >= 0.
    EulerSU11,
    /// expL0(t) expL1(xi) expL2(-tau): params (t, xi, tau).
    AdSSU11,
    /// h(t) a(rho) h(phi): params (t, rho, phi).  Covers a, d > 0, bc >= 0.
    HAH,
}

impl Scheme {
    pub fn flavor(&self) -> Flavor {
        match self {
            Scheme::EulerSU11 | Scheme::AdSSU11 => Flavor::SU11,
            _ => Flavor::SL2R,
        }
    }

    /// The three subgroup factors with the sign applied to each parameter.
    pub(crate) fn factors(&self) -> [(SubgroupName, f64); 3] {
        use SubgroupName::*;
        match self {
            Scheme::Iwasawa => [(NTilde, 1.0), (T, 1.0), (K, 1.0)],
            Scheme::NHA => [(NTilde, 1.0), (H, 1.0), (A, 1.0)],
            Scheme::NHK => [(NTilde, 1.0), (H, 1.0), (K, 1.0)],
            Scheme::EulerSU11 => [(ExpLambda0, 1.0), (ExpLambda1, 1.0), (ExpLambda0, -1.0)],
            Scheme::AdSSU11 => [(ExpLambda0, 1.0), (ExpLambda1, 1.0), (ExpLambda2, -1.0)],
            Scheme::HAH => [(H, 1.0), (A, 1.0), (H, 1.0)],
        }
    }
}

/// Multiply out the scheme's factors at the given parameters.
pub fn recompose(scheme: Scheme, params: [f64; 3]) -> Result<GroupElement, Error> {
    let fs = scheme.factors();
    let mut g = subgroup_element(fs[0].0, fs[0].1 * params[0])?;
    for i in 1..3 {
        g = g.mul(&subgroup_element(fs[i].0, fs[i].1 * params[i])?);
    }
    Ok(g)
}

fn expect_flavor(g: &GroupElement, scheme: Scheme) -> Result<(), Error> {
    if g.flavor != scheme.flavor() {
        return Err(Error::InvalidParameter(format!(
            "{scheme:?} decomposition expects the {:?} flavor",
            scheme.flavor()
        )));
    }
    g.validate(1e-9)
}

/// Recover the parameter triple of `g` in the given scheme.
///
/// Errors with `OutOfRange` when `g` lies outside the scheme's chart
/// (NHA and HAH are not global parameterizations).
pub fn decompose(g: &GroupElement, scheme: Scheme) -> Result<[f64; 3], Error> {
    expect_flavor(g, scheme)?;
    let [a, b, c, d] = [g.m.e[0][0], g.m.e[0][1], g.m.e[1][0], g.m.e[1][1]];
    match scheme {
        Scheme::Iwasawa => {
            let (a, b, c, d) = (a.re, b.re, c.re, d.re);
            let n = c * c + d * d;
            Ok([(a * c + b * d) / n, 1.0 / n, 2.0 * (-c).atan2(d)])
        }
        Scheme::NHK => {
            let (a, b, c, d) = (a.re, b.re, c.re, d.re);
            // bottom row is e^{-xi/2} (-sin(phi/2), cos(phi/2))
            let xi = -(c * c + d * d).ln();
            let phi = 2.0 * (-c).atan2(d);
            let (s, co) = (0.5 * phi).sin_cos();
            let t = (b * co - a * s) * (0.5 * xi).exp();
            Ok([t, xi, phi])
        }
        Scheme::NHA => {
            let (a, b, c, d) = (a.re, b.re, c.re, d.re);
            // bottom row is e^{-xi/2} (sinh(phi/2), cosh(phi/2))
            if d <= c.abs() {
                return Err(Error::OutOfRange {
                    scheme: "NHA",
                    reason: format!("needs d > |c|, got c = {c}, d = {d}"),
                });
            }
            let xi = -(d * d - c * c).ln();
            let phi = 2.0 * (c / d).atanh();
            let (s, co) = ((0.5 * phi).sinh(), (0.5 * phi).cosh());
            let t = (b * co - a * s) * (0.5 * xi).exp();
            Ok([t, xi, phi])
        }
        Scheme::HAH => {
            let (a, b, c, d) = (a.re, b.re, c.re, d.re);
            if a <= 0.0 || d <= 0.0 {
                return Err(Error::OutOfRange {
                    scheme: "HAH",
                    reason: format!("needs positive diagonal, got a = {a}, d = {d}"),
                });
            }
            if b * c < 0.0 || (b == 0.0) != (c == 0.0) {
                return Err(Error::OutOfRange {
                    scheme: "HAH",
                    reason: format!("needs sinh^2(rho/2) = bc >= 0, got b = {b}, c = {c}"),
                });
            }
            if b == 0.0 {
                // rho = 0 boundary: g = h(t + phi); split as (t, 0, 0)
                return Ok([2.0 * a.ln(), 0.0, 0.0]);
            }
            let s = b.signum() * (b * c).sqrt();
            let rho = 2.0 * s.asinh();
            let cr = (1.0 + b * c).sqrt();
            let sum = 2.0 * (a / cr).ln();
            let diff = 2.0 * (b / s).ln();
            Ok([0.5 * (sum + diff), rho, 0.5 * (sum - diff)])
        }
        Scheme::EulerSU11 => {
            // g = ((l, m), (conj m, conj l)), l = e^{i(phi-theta)/2} cosh(xi/2),
            // m = e^{i(phi+theta)/2} sinh(xi/2), with xi >= 0.
            let (l, m) = (a, b);
            let xi = 2.0 * m.norm().asinh();
            if m.norm() < 1e-14 {
                return Ok([2.0 * l.arg(), xi, 0.0]);
            }
            Ok([l.arg() + m.arg(), xi, m.arg() - l.arg()])
        }
        Scheme::AdSSU11 => {
            // g11 = e^{it/2}(C_xi C_tau + i S_xi S_tau),
            // g12 = e^{it/2}(S_xi C_tau - i C_xi S_tau); the ratio is
            // (p - i q)/(1 + i p q) with p = tanh(xi/2), q = tanh(tau/2).
            let r = b / a;
            let (r1, r2) = (r.re, r.im);
            let u = if (r1 * r2).abs() < 1e-15 {
                0.0
            } else {
                // r1 r2 u^2 + (r2^2 - r1^2 - 1) u - r1 r2 = 0; roots have
                // product -1, take the one inside the unit interval.
                let bq = r2 * r2 - r1 * r1 - 1.0;
                let disc = (bq * bq + 4.0 * r1 * r2 * r1 * r2).sqrt();
                // -bq > 0 always, so this root is the larger in magnitude
                let big = (-bq + disc) / (2.0 * r1 * r2);
                -1.0 / big
            };
            let p = r1 - r2 * u;
            let q = -r2 - r1 * u;
            if p.abs() >= 1.0 || q.abs() >= 1.0 {
                return Err(Error::OutOfRange {
                    scheme: "AdSSU11",
                    reason: format!("extracted tanh values p = {p}, q = {q}"),
                });
            }
            let xi = 2.0 * p.atanh();
            let tau = 2.0 * q.atanh();
            let (cx, sx) = ((0.5 * xi).cosh(), (0.5 * xi).sinh());
            let (ct, st) = ((0.5 * tau).cosh(), (0.5 * tau).sinh());
            let core = num_complex::Complex64::new(cx * ct, sx * st);
            let t = 2.0 * (a * core.conj()).arg();
            Ok([t, xi, tau])
        }
    }
}
