//! Self-adjoint extensions of the exponential-potential Schroedinger
//! operator -d^2/dxi^2 - k^2 e^{2 xi} on the line.
//!
//! The operator is unbounded below and needs a boundary condition at
//! xi -> +infinity; the extensions form a one-parameter family labelled
//! by an angle theta mod pi.  Each extension carries a delta-normalized
//! scattering continuum and an infinite ladder of bound states whose
//! orders step by 2.

use crate::error::Error;
use crate::specfun::bessel_j::bessel_j;
use crate::specfun::fgz::fgz_functions;
use crate::specfun::gamma::gamma_real;
use crate::specfun::quad;
use num_complex::Complex64;
use std::f64::consts::PI;

/// One self-adjoint extension: boundary angle `theta` (mod pi) and the
/// coupling `k` of the potential -k^2 e^{2 xi}.  A general |k| is a
/// translation xi -> xi + ln|k| of the unit-coupling problem, which is
/// how it enters every formula below.
#[derive(Debug, Clone, Copy)]
pub struct LiouvilleExtension {
    pub theta: f64,
    pub k: f64,
}

impl LiouvilleExtension {
    fn check(&self) -> Result<(), Error> {
        if self.k == 0.0 {
            return Err(Error::InvalidParameter(
                "LiouvilleExtension needs a nonzero coupling k".into(),
            ));
        }
        Ok(())
    }

    /// Bound-state order nu_n = 2(n + theta/pi).
    pub fn bound_order(&self, n: i64) -> f64 {
        2.0 * (n as f64 + self.theta / PI)
    }
}

/// Normalization of the scattering state at energy kappa^2:
/// N^{-2} = (1/kappa)(tanh(pi kappa/2) cos^2 theta
///          + coth(pi kappa/2) sin^2 theta).
pub fn scattering_norm(theta: f64, kappa: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let half = PI * kappa / 2.0;
    (kappa / (half.tanh() * c * c + s * s / half.tanh())).sqrt()
}

/// Delta-normalized scattering state
/// Xi_kappa(xi) = N_kappa (F_{i kappa}(x) cos theta + G_{i kappa}(x) sin theta),
/// x = |k| e^xi.
pub fn liouville_scattering(ext: &LiouvilleExtension, kappa: f64, xi: f64) -> Result<f64, Error> {
    ext.check()?;
    if kappa <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "liouville_scattering needs kappa > 0, got {kappa}"
        )));
    }
    let x = ext.k.abs() * xi.exp();
    let (f, g, _) = fgz_functions(Complex64::new(0.0, kappa), x)?;
    Ok(scattering_norm(ext.theta, kappa) * (f.re() * ext.theta.cos() + g.re() * ext.theta.sin()))
}

/// Unit-norm bound state Phi_n(xi) = sqrt(2 nu_n) J_{nu_n}(|k| e^xi)
/// with nu_n = 2(n + theta/pi); the J_{-nu} component is absent, so the
/// state decays like e^{nu_n xi} as xi -> -infinity.
pub fn liouville_bound(ext: &LiouvilleExtension, n: i64, xi: f64) -> Result<f64, Error> {
    ext.check()?;
    let nu = ext.bound_order(n);
    if nu <= 0.0 {
        return Err(Error::InvalidBoundState { n, nu });
    }
    let x = ext.k.abs() * xi.exp();
    let j = bessel_j(Complex64::new(nu, 0.0), x)?;
    Ok((2.0 * nu).sqrt() * j.re())
}

/// Bound-state orders of the Poeschl-Teller well with integer depth
/// parameter k >= 1: the positive zeros of
/// Gamma(nu+1) Gamma(nu) / (Gamma(nu+lambda+1) Gamma(nu-lambda)),
/// lambda = k - 1/2, which sit at nu = 1/2, 3/2, ..., (2k-1)/2.
pub fn poschl_teller_spectrum(k: u32) -> Vec<f64> {
    assert!(k >= 1, "depth parameter must be >= 1");
    let lambda = k as f64 - 0.5;
    // 1/Gamma(nu - lambda) rewritten by reflection so the expression is
    // smooth through the zeros instead of dividing by a near-pole value
    let h = |nu: f64| {
        gamma_real(nu + 1.0) * gamma_real(nu) / gamma_real(nu + lambda + 1.0)
            * gamma_real(1.0 - nu + lambda)
            * (PI * (nu - lambda)).sin()
            / PI
    };
    let mut zeros = Vec::new();
    let hi = lambda + 0.4;
    let steps = (hi / 0.1).ceil() as usize;
    let mut prev_nu = 0.05;
    let mut prev_h = h(prev_nu);
    for i in 1..=steps {
        let nu = 0.05 + (hi - 0.05) * i as f64 / steps as f64;
        let cur = h(nu);
        if prev_h == 0.0 {
            zeros.push(prev_nu);
        } else if prev_h * cur < 0.0 {
            let (mut a, mut b) = (prev_nu, nu);
            let mut fa = prev_h;
            for _ in 0..80 {
                let m = 0.5 * (a + b);
                let fm = h(m);
                if fa * fm <= 0.0 {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            zeros.push(0.5 * (a + b));
        }
        prev_nu = nu;
        prev_h = cur;
    }
    zeros
}

/// The subset of [`poschl_teller_spectrum`] surviving the antipodal
/// parity selection.  The deepest state (largest nu) is parity-even and
/// parity alternates down the ladder; states are kept when their parity
/// matches that of k, which leaves exactly the orders 3/2, 7/2, ...
pub fn poschl_teller_parity_filtered(k: u32) -> Vec<f64> {
    let full = poschl_teller_spectrum(k);
    let n = full.len();
    let mut kept: Vec<f64> = full
        .into_iter()
        .enumerate()
        .filter(|(i, _)| (n - 1 - i) % 2 == (k as usize) % 2)
        .map(|(_, nu)| nu)
        .collect();
    kept.sort_by(|a, b| a.partial_cmp(b).unwrap());
    kept
}

/// A function on the line whose xi -> +infinity tail is the universal
/// oscillation A sqrt(2/(pi x)) [P cos(x - phase) - Q sin(x - phase)]
/// with x = e^xi and the standard amplitude series
/// Q = (mu-1)/(8x) + ..., P = 1 - (mu-1)(mu-9)/(128 x^2) + ...
pub struct LineProfile<'a> {
    pub f: &'a dyn Fn(f64) -> f64,
    pub amp: f64,
    pub phase: f64,
    /// mu = 4 nu^2 of the underlying Bessel order (negative for
    /// imaginary order).
    pub mu: f64,
}

impl LineProfile<'_> {
    fn q_hat(&self) -> f64 {
        (self.mu - 1.0) / 8.0
    }
    fn p2_hat(&self) -> f64 {
        -(self.mu - 1.0) * (self.mu - 9.0) / 128.0
    }
}

/// Inner product int f g dxi over the whole line for profiles that decay
/// as xi -> -infinity.  Numeric up to x = e^xi ~ x_max (one quadrature
/// panel per pi, the oscillation period of the product), then an
/// analytic tail from the amplitude series:
/// f g / x = (Aa Ab / (pi x^2)) [(Pa Pb + Qa Qb) cos D
///           - (Pa Qb - Qa Pb) sin D + oscillatory],  D = phase_a - phase_b.
pub fn line_inner(a: &LineProfile, b: &LineProfile, xi_lo: f64, x_max: f64, tol: f64) -> f64 {
    let mid = 8.0_f64;
    let left = quad::adaptive(
        &mut |xi: f64| (a.f)(xi) * (b.f)(xi),
        xi_lo,
        mid.ln(),
        tol,
        tol * 10.0,
        2000,
    );
    let n = ((x_max - mid) / PI).ceil() as usize;
    let x_end = mid + n as f64 * PI;
    let mut osc = 0.0;
    for j in 0..n {
        let lo = mid + j as f64 * PI;
        let p = quad::adaptive(
            &mut |x: f64| (a.f)(x.ln()) * (b.f)(x.ln()) / x,
            lo,
            lo + PI,
            tol / 10.0,
            0.0,
            4,
        );
        osc += p.value;
    }
    let d = a.phase - b.phase;
    let c2 = a.p2_hat() + b.p2_hat() + a.q_hat() * b.q_hat();
    let xx = x_end * x_end;
    let tail = a.amp * b.amp / PI
        * (d.cos() * (1.0 / x_end + c2 / (3.0 * x_end * xx))
            - (b.q_hat() - a.q_hat()) * d.sin() / (2.0 * xx)
            - (2.0 * x_end - a.phase - b.phase).sin() / (2.0 * xx));
    left.value + osc + tail
}

/// Tail profile of the bound state Phi_n.
pub fn bound_profile<'a>(
    ext: &LiouvilleExtension,
    n: i64,
    f: &'a dyn Fn(f64) -> f64,
) -> LineProfile<'a> {
    let nu = ext.bound_order(n);
    LineProfile {
        f,
        amp: (2.0 * nu).sqrt(),
        phase: nu * PI / 2.0 + PI / 4.0,
        mu: 4.0 * nu * nu,
    }
}

/// Tail profile of the scattering state Xi_kappa.
pub fn scattering_profile<'a>(
    ext: &LiouvilleExtension,
    kappa: f64,
    f: &'a dyn Fn(f64) -> f64,
) -> LineProfile<'a> {
    LineProfile {
        f,
        amp: scattering_norm(ext.theta, kappa),
        phase: ext.theta + PI / 4.0,
        mu: -4.0 * kappa * kappa,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXT34: LiouvilleExtension = LiouvilleExtension { theta: 3.0 * PI / 4.0, k: 1.0 };
    const EXT14: LiouvilleExtension = LiouvilleExtension { theta: PI / 4.0, k: 1.0 };

    #[test]
    fn norm_at_three_quarter_pi() {
        // cos^2 = sin^2 = 1/2 averages tanh and coth of pi kappa / 2
        // into coth(pi kappa), so N^{-2} = coth(pi kappa) / kappa
        for &kappa in &[0.5, 1.0, 2.0] {
            let n = scattering_norm(3.0 * PI / 4.0, kappa);
            let expect = (kappa * (PI * kappa).tanh()).sqrt();
            assert!((n / expect - 1.0).abs() < 1e-12, "kappa={kappa}");
        }
    }

    #[test]
    fn z_combination_weight() {
        // at theta = 3pi/4 the scattering state is N c Z_{i kappa} with
        // c = (csc(nu pi/2) - sec(nu pi/2)) / (2 sqrt 2), so the
        // delta-normalization of Xi fixes the Z self-overlap weight:
        // 1 / (N^2 |c|^2) = 2 sinh(pi kappa) / kappa
        for &kappa in &[0.5, 1.0, 2.0] {
            let half = Complex64::new(0.0, kappa) * (PI / 2.0);
            let c = (1.0 / half.sin() - 1.0 / half.cos()) / (2.0 * 2.0_f64.sqrt());
            let n = scattering_norm(3.0 * PI / 4.0, kappa);
            let lhs = 1.0 / (n * n * c.norm_sqr());
            let rhs = 2.0 * (PI * kappa).sinh() / kappa;
            assert!((lhs / rhs - 1.0).abs() < 1e-12, "kappa={kappa}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn scattering_large_xi_oscillation() {
        // Xi ~ N sqrt(2/pi) e^{-xi/2} cos(e^xi - pi/4 - theta)
        let (kappa, xi) = (0.7, 4.0_f64);
        let got = liouville_scattering(&EXT34, kappa, xi).unwrap();
        let x = xi.exp();
        let lead = scattering_norm(EXT34.theta, kappa)
            * (2.0 / PI).sqrt()
            * (-xi / 2.0).exp()
            * (x - PI / 4.0 - EXT34.theta).cos();
        assert!((got - lead).abs() < 1e-3, "{got} vs {lead}");
    }

    #[test]
    fn bound_state_small_xi_power_law() {
        // pure J_nu component: Phi_0 ~ sqrt(2 nu) (x/2)^nu / Gamma(nu+1)
        let xi = -8.0_f64;
        let nu = EXT34.bound_order(0);
        let got = liouville_bound(&EXT34, 0, xi).unwrap();
        let lead = (2.0 * nu).sqrt() * (xi.exp() / 2.0).powf(nu) / gamma_real(nu + 1.0);
        assert!((got / lead - 1.0).abs() < 1e-6, "{got} vs {lead}");
    }

    #[test]
    fn bound_state_rejects_nonpositive_order() {
        assert!(matches!(
            liouville_bound(&EXT14, -1, 0.0),
            Err(Error::InvalidBoundState { n: -1, .. })
        ));
        assert!(liouville_bound(&LiouvilleExtension { theta: PI / 4.0, k: 0.0 }, 0, 0.0).is_err());
        assert!(liouville_scattering(&EXT34, -1.0, 0.0).is_err());
    }

    #[test]
    fn bound_states_are_orthonormal_tight() {
        // norm 1 and <Phi_0, Phi_1> = 0 resolved to 1e-8 with a long
        // numeric window; the orders are half-integers, so the tail
        // expansion of J terminates and the evaluations stay cheap
        for (n, m) in [(0i64, 0i64), (1, 1), (0, 1)] {
            let fa = |xi: f64| liouville_bound(&EXT34, n, xi).unwrap();
            let fb = |xi: f64| liouville_bound(&EXT34, m, xi).unwrap();
            let pa = bound_profile(&EXT34, n, &fa);
            let pb = bound_profile(&EXT34, m, &fb);
            let got = line_inner(&pa, &pb, -40.0, 4000.0, 1e-13);
            let expect = if n == m { 1.0 } else { 0.0 };
            assert!((got - expect).abs() < 1e-8, "({n},{m}): {got}");
        }
    }

    #[test]
    fn bound_state_ladder_orthogonality() {
        // <Phi_n, Phi_m> = delta_nm for n, m <= 3 in both extensions
        for ext in [EXT14, EXT34] {
            for n in 0i64..4 {
                for m in n..4 {
                    let fa = |xi: f64| liouville_bound(&ext, n, xi).unwrap();
                    let fb = |xi: f64| liouville_bound(&ext, m, xi).unwrap();
                    let got = line_inner(
                        &bound_profile(&ext, n, &fa),
                        &bound_profile(&ext, m, &fb),
                        -40.0,
                        800.0,
                        1e-13,
                    );
                    let expect = if n == m { 1.0 } else { 0.0 };
                    assert!(
                        (got - expect).abs() < 1e-6,
                        "theta={} ({n},{m}): {got}",
                        ext.theta
                    );
                }
            }
        }
    }

    #[test]
    fn scattering_bound_orthogonality() {
        for n in 0i64..3 {
            for &kappa in &[0.5, 2.0] {
                let fb = |xi: f64| liouville_bound(&EXT34, n, xi).unwrap();
                let fs = |xi: f64| liouville_scattering(&EXT34, kappa, xi).unwrap();
                let got = line_inner(
                    &bound_profile(&EXT34, n, &fb),
                    &scattering_profile(&EXT34, kappa, &fs),
                    -40.0,
                    800.0,
                    1e-13,
                );
                assert!(got.abs() < 1e-5, "n={n} kappa={kappa}: {got}");
            }
        }
    }

    #[test]
    fn different_extensions_are_not_orthogonal() {
        // ground states of theta = pi/4 and 3pi/4 have orders 1/2 and
        // 3/2; the cross overlap has the closed form
        // sqrt(2 nu_a) sqrt(2 nu_b) (2/pi) sin(pi (nu_b - nu_a)/2)
        //   / (nu_b^2 - nu_a^2) = sqrt(3) / pi
        let fa = |xi: f64| liouville_bound(&EXT14, 0, xi).unwrap();
        let fb = |xi: f64| liouville_bound(&EXT34, 0, xi).unwrap();
        let got = line_inner(
            &bound_profile(&EXT14, 0, &fa),
            &bound_profile(&EXT34, 0, &fb),
            -40.0,
            800.0,
            1e-13,
        );
        let expect = 3.0_f64.sqrt() / PI;
        assert!((got - expect).abs() < 1e-4, "{got} vs {expect}");
        assert!(got.abs() > 0.1, "overlap should be far from zero");
    }

    #[test]
    fn coupling_translates_the_profile() {
        let scaled = LiouvilleExtension { theta: 3.0 * PI / 4.0, k: 2.5 };
        let shift = 2.5_f64.ln();
        for &xi in &[-1.0, 0.4, 2.0] {
            let a = liouville_bound(&scaled, 1, xi).unwrap();
            let b = liouville_bound(&EXT34, 1, xi + shift).unwrap();
            assert!((a - b).abs() < 1e-13);
            let a = liouville_scattering(&scaled, 1.3, xi).unwrap();
            let b = liouville_scattering(&EXT34, 1.3, xi + shift).unwrap();
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn poschl_teller_half_integer_ladder() {
        let got = poschl_teller_spectrum(3);
        assert_eq!(got.len(), 3);
        for (z, e) in got.iter().zip([0.5, 1.5, 2.5]) {
            assert!((z - e).abs() < 1e-10, "{z} vs {e}");
        }
        let got = poschl_teller_spectrum(1);
        assert_eq!(got.len(), 1);
        assert!((got[0] - 0.5).abs() < 1e-10);
    }

    #[test]
    fn poschl_teller_parity_selection() {
        assert!(poschl_teller_parity_filtered(1).is_empty());
        let got = poschl_teller_parity_filtered(2);
        assert_eq!(got.len(), 1);
        assert!((got[0] - 1.5).abs() < 1e-10);
        let got = poschl_teller_parity_filtered(4);
        assert_eq!(got.len(), 2);
        assert!((got[0] - 1.5).abs() < 1e-10 && (got[1] - 3.5).abs() < 1e-10);
    }
}
