//! Models of the hyperbolic plane, chart conversions, metric tensors and
//! arc-length parametrized geodesic families, plus the Lorentzian charts
//! on the space of oriented geodesics.
//!
//! The hyperboloid chart is the canonical one: conversions route through
//! it and equality testing compares hyperboloid coordinates.  Angles are
//! stored unwrapped; reduction mod 2 pi happens only at comparison.

use crate::error::Error;
use std::f64::consts::PI;

/// Chart tags for [`ModelPoint`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    HalfPlane,
    Disc,
    Polar,
    Hyperboloid,
}

/// A point of the hyperbolic plane in one of four charts.
#[derive(Debug, Clone, Copy)]
pub enum ModelPoint {
    /// Upper half-plane z = x + i y, y > 0.
    HalfPlane { x: f64, y: f64 },
    /// Poincaré disc Z = x + i y, |Z| < 1.
    Disc { x: f64, y: f64 },
    /// Geodesic polar coordinates about the disc centre.
    Polar { rho: f64, phi: f64 },
    /// Upper sheet of T^2 - X^2 - Y^2 = 1.
    Hyperboloid { t: f64, x: f64, y: f64 },
}

impl ModelPoint {
    pub fn chart(&self) -> Chart {
        match self {
            ModelPoint::HalfPlane { .. } => Chart::HalfPlane,
            ModelPoint::Disc { .. } => Chart::Disc,
            ModelPoint::Polar { .. } => Chart::Polar,
            ModelPoint::Hyperboloid { .. } => Chart::Hyperboloid,
        }
    }

    /// Check the chart invariant within `eps`.
    pub fn validate(&self, eps: f64) -> Result<(), Error> {
        match *self {
            ModelPoint::HalfPlane { y, .. } => {
                if y <= 0.0 {
                    return Err(Error::InvalidPoint {
                        chart: "HalfPlane",
                        reason: format!("y = {y} must be positive"),
                    });
                }
            }
            ModelPoint::Disc { x, y } => {
                if x * x + y * y >= 1.0 {
                    return Err(Error::InvalidPoint {
                        chart: "Disc",
                        reason: format!("|Z|^2 = {} must be < 1", x * x + y * y),
                    });
                }
            }
            ModelPoint::Polar { rho, .. } => {
                if rho < 0.0 {
                    return Err(Error::InvalidPoint {
                        chart: "Polar",
                        reason: format!("rho = {rho} must be >= 0"),
                    });
                }
            }
            ModelPoint::Hyperboloid { t, x, y } => {
                let q = t * t - x * x - y * y;
                if (q - 1.0).abs() > eps || t < 1.0 - eps {
                    return Err(Error::InvalidPoint {
                        chart: "Hyperboloid",
                        reason: format!("T^2 - X^2 - Y^2 = {q}, T = {t}"),
                    });
                }
            }
        }
        Ok(())
    }

    /// Canonical coordinates for equality testing.
    pub fn hyperboloid_coords(&self) -> (f64, f64, f64) {
        match to_hyperboloid(*self) {
            ModelPoint::Hyperboloid { t, x, y } => (t, x, y),
            _ => unreachable!(),
        }
    }
}

fn disc_to_hyperboloid(x: f64, y: f64) -> ModelPoint {
    let r2 = x * x + y * y;
    let d = 1.0 - r2;
    ModelPoint::Hyperboloid { t: (1.0 + r2) / d, x: 2.0 * x / d, y: 2.0 * y / d }
}

fn to_disc(p: ModelPoint) -> ModelPoint {
    match p {
        ModelPoint::Disc { .. } => p,
        // Z = (z - i)/(z + i)
        ModelPoint::HalfPlane { x, y } => {
            let den = x * x + (y + 1.0) * (y + 1.0);
            ModelPoint::Disc {
                x: (x * x + y * y - 1.0) / den,
                y: -2.0 * x / den,
            }
        }
        ModelPoint::Polar { rho, phi } => {
            let r = (rho / 2.0).tanh();
            ModelPoint::Disc { x: r * phi.cos(), y: r * phi.sin() }
        }
        ModelPoint::Hyperboloid { t, x, y } => {
            ModelPoint::Disc { x: x / (1.0 + t), y: y / (1.0 + t) }
        }
    }
}

fn to_hyperboloid(p: ModelPoint) -> ModelPoint {
    match p {
        ModelPoint::Hyperboloid { .. } => p,
        ModelPoint::Polar { rho, phi } => ModelPoint::Hyperboloid {
            t: rho.cosh(),
            x: rho.sinh() * phi.cos(),
            y: rho.sinh() * phi.sin(),
        },
        _ => match to_disc(p) {
            ModelPoint::Disc { x, y } => disc_to_hyperboloid(x, y),
            _ => unreachable!(),
        },
    }
}

/// Convert `p` to the `target` chart.
pub fn convert(p: ModelPoint, target: Chart) -> Result<ModelPoint, Error> {
    p.validate(1e-12)?;
    let h = to_hyperboloid(p);
    let (t, hx, hy) = match h {
        ModelPoint::Hyperboloid { t, x, y } => (t, x, y),
        _ => unreachable!(),
    };
    Ok(match target {
        Chart::Hyperboloid => h,
        Chart::Disc => ModelPoint::Disc { x: hx / (1.0 + t), y: hy / (1.0 + t) },
        Chart::Polar => {
            let rho = t.acosh();
            let phi = if hx == 0.0 && hy == 0.0 { 0.0 } else { hy.atan2(hx) };
            ModelPoint::Polar { rho, phi }
        }
        Chart::HalfPlane => {
            // z = i (1 + Z)/(1 - Z) with Z the disc coordinate
            let zx = hx / (1.0 + t);
            let zy = hy / (1.0 + t);
            let den = (1.0 - zx) * (1.0 - zx) + zy * zy;
            ModelPoint::HalfPlane {
                x: -2.0 * zy / den,
                y: (1.0 - zx * zx - zy * zy) / den,
            }
        }
    })
}

/// Metric components g_{mu nu} in the point's own chart.
///
/// Coordinate order: (x, y) for HalfPlane/Disc/Hyperboloid, (rho, phi)
/// for Polar.  Always positive definite for valid points.
pub fn metric_components(p: ModelPoint) -> Result<[[f64; 2]; 2], Error> {
    p.validate(1e-12)?;
    Ok(match p {
        ModelPoint::HalfPlane { y, .. } => {
            let g = 1.0 / (y * y);
            [[g, 0.0], [0.0, g]]
        }
        ModelPoint::Disc { x, y } => {
            let d = 1.0 - x * x - y * y;
            let g = 4.0 / (d * d);
            [[g, 0.0], [0.0, g]]
        }
        ModelPoint::Polar { rho, .. } => [[1.0, 0.0], [0.0, rho.sinh() * rho.sinh()]],
        ModelPoint::Hyperboloid { t, x, y } => {
            // induced from -dT^2 + dX^2 + dY^2 with T = sqrt(1 + X^2 + Y^2)
            let t2 = t * t;
            [
                [1.0 - x * x / t2, -x * y / t2],
                [-x * y / t2, 1.0 - y * y / t2],
            ]
        }
    })
}

/// Oriented half-plane geodesic: the semicircle (x - t)^2 + y^2 = e^{2 xi}.
#[derive(Debug, Clone, Copy)]
pub struct HalfPlaneGeodesic {
    pub t: f64,
    pub xi: f64,
    pub orientation: i8,
}

/// Oriented disc geodesic: for theta = 0 the circle
/// (X - coth xi)^2 + Y^2 = csch^2 xi, rotated by theta; xi = 0 is the
/// diameter from -i to +i, represented exactly.
#[derive(Debug, Clone, Copy)]
pub struct DiscGeodesic {
    pub theta: f64,
    pub xi: f64,
    pub orientation: i8,
}

/// Arc-length point on a half-plane geodesic.
pub fn halfplane_geodesic_point(g: &HalfPlaneGeodesic, sigma: f64) -> ModelPoint {
    let s = g.orientation as f64 * sigma;
    let r = g.xi.exp();
    ModelPoint::HalfPlane { x: r * s.tanh() + g.t, y: r / s.cosh() }
}

/// Arc-length point on a disc geodesic.
pub fn disc_geodesic_point(g: &DiscGeodesic, sigma: f64) -> ModelPoint {
    let s = g.orientation as f64 * sigma;
    let (x0, y0) = if g.xi == 0.0 {
        (0.0, (s / 2.0).tanh())
    } else {
        let d = 1.0 + g.xi.cosh() * s.cosh();
        (g.xi.sinh() * s.cosh() / d, s.sinh() / d)
    };
    let (c, sn) = (g.theta.cos(), g.theta.sin());
    ModelPoint::Disc { x: x0 * c - y0 * sn, y: x0 * sn + y0 * c }
}

/// Polar-parametric form of a disc geodesic point: (rho, phi) with the
/// phi branch unwrapped so it is continuous in sigma.
pub fn disc_geodesic_polar(g: &DiscGeodesic, sigma: f64) -> (f64, f64) {
    let s = g.orientation as f64 * sigma;
    if g.xi == 0.0 {
        (s.abs(), if s >= 0.0 { PI / 2.0 + g.theta } else { -PI / 2.0 + g.theta })
    } else {
        let rho = (g.xi.cosh() * s.cosh()).acosh();
        // atan2 keeps the foot of the perpendicular at angle theta + pi
        // when xi < 0, matching disc_geodesic_point
        let phi = s.tanh().atan2(g.xi.sinh()) + g.theta;
        (rho, phi)
    }
}

/// Charts on the space of oriented geodesics (Lorentzian signature).
#[derive(Debug, Clone, Copy)]
pub enum KinematicPoint {
    /// Coordinates (t, eta), eta > 0.
    PoincarePatch { t: f64, eta: f64 },
    /// Coordinates (theta, alpha), alpha in (0, pi).
    Global { theta: f64, alpha: f64 },
    /// Coordinates (theta, xi); csch xi = tan alpha links to Global.
    GlobalXi { theta: f64, xi: f64 },
}

/// Lorentzian metric in the chart of `p`, signature (-, +).
///
/// Coordinate order: (t, eta) for PoincarePatch, (theta, alpha) for
/// Global, (theta, xi) for GlobalXi.
pub fn kinematic_metric(p: KinematicPoint) -> Result<[[f64; 2]; 2], Error> {
    Ok(match p {
        KinematicPoint::PoincarePatch { eta, .. } => {
            if eta == 0.0 {
                return Err(Error::SingularChart {
                    chart: "PoincarePatch",
                    location: "eta = 0".into(),
                });
            }
            if eta < 0.0 {
                return Err(Error::InvalidPoint {
                    chart: "PoincarePatch",
                    reason: format!("eta = {eta} must be positive"),
                });
            }
            let g = 1.0 / (eta * eta);
            [[-g, 0.0], [0.0, g]]
        }
        KinematicPoint::Global { alpha, .. } => {
            let m = alpha.rem_euclid(PI);
            if m.abs() < 1e-300 || (PI - m).abs() < 1e-300 {
                return Err(Error::SingularChart {
                    chart: "Global",
                    location: format!("alpha = {alpha}"),
                });
            }
            let g = 1.0 / (alpha.sin() * alpha.sin());
            [[-g, 0.0], [0.0, g]]
        }
        KinematicPoint::GlobalXi { xi, .. } => {
            [[-xi.cosh() * xi.cosh(), 0.0], [0.0, 1.0]]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!((a - b).abs() <= tol, "{what}: {a} vs {b}");
    }

    fn coords(p: ModelPoint) -> (f64, f64) {
        match p {
            ModelPoint::HalfPlane { x, y } | ModelPoint::Disc { x, y } => (x, y),
            ModelPoint::Polar { rho, phi } => (rho, phi),
            ModelPoint::Hyperboloid { x, y, .. } => (x, y),
        }
    }

    #[test]
    fn halfplane_i_maps_to_disc_centre() {
        let d = convert(ModelPoint::HalfPlane { x: 0.0, y: 1.0 }, Chart::Disc).unwrap();
        let (x, y) = coords(d);
        assert!(x.abs() < 1e-15 && y.abs() < 1e-15);
    }

    #[test]
    fn halfplane_conversion_matches_complex_arithmetic() {
        // Oracle: evaluate Z = (z - i)/(z + i) with complex arithmetic.
        use num_complex::Complex64 as C;
        let z = C::new(1.0, 2.0);
        let zz = (z - C::i()) / (z + C::i());
        let d = convert(ModelPoint::HalfPlane { x: 1.0, y: 2.0 }, Chart::Disc).unwrap();
        let (x, y) = coords(d);
        assert_close(x, zz.re, 1e-14, "Re Z");
        assert_close(y, zz.im, 1e-14, "Im Z");
    }

    #[test]
    fn polar_to_disc_formula() {
        let (rho, phi) = (1.3, 0.7);
        let d = convert(ModelPoint::Polar { rho, phi }, Chart::Disc).unwrap();
        let (x, y) = coords(d);
        let r = (rho / 2.0_f64).tanh();
        assert_close(x, r * phi.cos(), 1e-14, "X");
        assert_close(y, r * phi.sin(), 1e-14, "Y");
    }

    #[test]
    fn round_trips_on_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let charts = [Chart::HalfPlane, Chart::Disc, Chart::Polar, Chart::Hyperboloid];
        for _ in 0..1000 {
            let p = ModelPoint::HalfPlane {
                x: rng.gen_range(-3.0..3.0),
                y: rng.gen_range(0.05..5.0),
            };
            let (t0, x0, y0) = p.hyperboloid_coords();
            for &c in &charts {
                let q = convert(p, c).unwrap();
                q.validate(1e-9).unwrap();
                let back = convert(q, Chart::HalfPlane).unwrap();
                let (t1, x1, y1) = back.hyperboloid_coords();
                let scale = t0.abs().max(1.0);
                assert!(
                    (t0 - t1).abs() < 1e-12 * scale
                        && (x0 - x1).abs() < 1e-12 * scale
                        && (y0 - y1).abs() < 1e-12 * scale,
                    "round trip through {c:?}"
                );
            }
        }
    }

    #[test]
    fn invalid_points_rejected() {
        assert!(ModelPoint::HalfPlane { x: 0.0, y: -1.0 }.validate(1e-12).is_err());
        assert!(ModelPoint::Disc { x: 0.8, y: 0.7 }.validate(1e-12).is_err());
        assert!(ModelPoint::Hyperboloid { t: 1.0, x: 0.5, y: 0.0 }.validate(1e-12).is_err());
    }

    #[test]
    fn metric_values() {
        let g = metric_components(ModelPoint::HalfPlane { x: 0.3, y: 2.0 }).unwrap();
        assert_eq!(g, [[0.25, 0.0], [0.0, 0.25]]);
        let g = metric_components(ModelPoint::Disc { x: 0.0, y: 0.0 }).unwrap();
        assert_eq!(g, [[4.0, 0.0], [0.0, 4.0]]);
        let g = metric_components(ModelPoint::Polar { rho: 1.0, phi: 0.2 }).unwrap();
        assert_close(g[1][1], 1.0_f64.sinh().powi(2), 1e-15, "g_phiphi");
    }

    #[test]
    fn geodesic_examples() {
        let p = halfplane_geodesic_point(
            &HalfPlaneGeodesic { t: 0.0, xi: 0.0, orientation: 1 },
            0.0,
        );
        let (x, y) = coords(p);
        assert!(x == 0.0 && y == 1.0);

        let g = DiscGeodesic { theta: 0.0, xi: 0.0, orientation: 1 };
        for &s in &[-1.0, 0.3, 2.0] {
            let (x, y) = coords(disc_geodesic_point(&g, s));
            assert!(x.abs() < 1e-15);
            assert_close(y, (s / 2.0_f64).tanh(), 1e-15, "diameter");
        }
    }

    #[test]
    fn disc_geodesic_matches_polar_form() {
        // cosh rho = cosh xi cosh sigma along the geodesic
        let g = DiscGeodesic { theta: 0.0, xi: 1.0, orientation: 1 };
        let p = disc_geodesic_point(&g, 2.0);
        let pol = convert(p, Chart::Polar).unwrap();
        let (rho, phi) = coords(pol);
        assert_close(rho.cosh(), 1.0_f64.cosh() * 2.0_f64.cosh(), 1e-10, "cosh rho");
        let (rho2, phi2) = disc_geodesic_polar(&g, 2.0);
        assert_close(rho, rho2, 1e-12, "rho");
        assert_close(phi, phi2, 1e-12, "phi");
        // negative offsets place the foot at theta + pi; the two
        // parametrizations must still agree up to full turns
        let g = DiscGeodesic { theta: 0.3, xi: -0.8, orientation: 1 };
        for &s in &[-1.5, -0.2, 0.0, 0.7, 2.0] {
            let (rho, phi) = disc_geodesic_polar(&g, s);
            let pol = convert(disc_geodesic_point(&g, s), Chart::Polar).unwrap();
            let (rho2, phi2) = coords(pol);
            assert_close(rho, rho2, 1e-10, "rho, negative xi");
            let dphi = (phi - phi2).rem_euclid(2.0 * PI);
            assert!(dphi.min(2.0 * PI - dphi) < 1e-10, "phi {phi} vs {phi2}");
        }
    }

    #[test]
    fn circle_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let t = rng.gen_range(-2.0..2.0);
            let xi = rng.gen_range(-2.0..2.0);
            let hg = HalfPlaneGeodesic { t, xi, orientation: 1 };
            for &s in &[-2.0, -0.5, 0.0, 1.0, 3.0] {
                let (x, y) = coords(halfplane_geodesic_point(&hg, s));
                assert_close(
                    (x - t) * (x - t) + y * y,
                    (2.0 * xi).exp(),
                    1e-12 * (2.0 * xi).exp().max(1.0),
                    "half-plane circle",
                );
            }
            let xi = if xi.abs() < 0.1 { 0.5 } else { xi };
            let dg = DiscGeodesic { theta: 0.0, xi, orientation: 1 };
            for &s in &[-2.0, 0.0, 1.5] {
                let (x, y) = coords(disc_geodesic_point(&dg, s));
                let coth = 1.0 / xi.tanh();
                let csch = 1.0 / xi.sinh();
                assert_close(
                    (x - coth) * (x - coth) + y * y,
                    csch * csch,
                    1e-10 * (csch * csch).max(1.0),
                    "disc circle",
                );
            }
        }
    }

    #[test]
    fn disc_radius_identity() {
        // X^2 + Y^2 = 1 - 2/(1 + cosh xi cosh sigma)
        let g = DiscGeodesic { theta: 0.9, xi: 1.2, orientation: 1 };
        for &s in &[-3.0, -0.4, 0.0, 2.2] {
            let (x, y) = coords(disc_geodesic_point(&g, s));
            let expect = 1.0 - 2.0 / (1.0 + 1.2_f64.cosh() * (s as f64).cosh());
            assert_close(x * x + y * y, expect, 1e-12, "radius identity");
        }
    }

    #[test]
    fn arc_length_property() {
        // Finite-difference tangent has unit norm in the hyperbolic metric.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let h = 1e-5;
        for _ in 0..200 {
            let sigma = rng.gen_range(-3.0..3.0);
            let orientation = if rng.gen_bool(0.5) { 1 } else { -1 };
            if rng.gen_bool(0.5) {
                let g = HalfPlaneGeodesic {
                    t: rng.gen_range(-2.0..2.0),
                    xi: rng.gen_range(-1.5..1.5),
                    orientation,
                };
                let (x1, y1) = coords(halfplane_geodesic_point(&g, sigma - h));
                let (x2, y2) = coords(halfplane_geodesic_point(&g, sigma + h));
                let (xm, ym) = coords(halfplane_geodesic_point(&g, sigma));
                let (vx, vy) = ((x2 - x1) / (2.0 * h), (y2 - y1) / (2.0 * h));
                let n2 = (vx * vx + vy * vy) / (ym * ym);
                let _ = xm;
                assert_close(n2.sqrt(), 1.0, 1e-6, "half-plane tangent norm");
            } else {
                let g = DiscGeodesic {
                    theta: rng.gen_range(0.0..(2.0 * PI)),
                    xi: rng.gen_range(-1.5..1.5),
                    orientation,
                };
                let (x1, y1) = coords(disc_geodesic_point(&g, sigma - h));
                let (x2, y2) = coords(disc_geodesic_point(&g, sigma + h));
                let (xm, ym) = coords(disc_geodesic_point(&g, sigma));
                let (vx, vy) = ((x2 - x1) / (2.0 * h), (y2 - y1) / (2.0 * h));
                let d = 1.0 - xm * xm - ym * ym;
                let n2 = 4.0 * (vx * vx + vy * vy) / (d * d);
                assert_close(n2.sqrt(), 1.0, 1e-6, "disc tangent norm");
            }
        }
    }

    #[test]
    fn kinematic_metric_values() {
        let g = kinematic_metric(KinematicPoint::PoincarePatch { t: 0.5, eta: 1.0 }).unwrap();
        assert_eq!(g, [[-1.0, 0.0], [0.0, 1.0]]);
        let g = kinematic_metric(KinematicPoint::GlobalXi { theta: 0.3, xi: 0.0 }).unwrap();
        assert_eq!(g, [[-1.0, 0.0], [0.0, 1.0]]);
        assert!(kinematic_metric(KinematicPoint::PoincarePatch { t: 0.0, eta: 0.0 }).is_err());
        assert!(kinematic_metric(KinematicPoint::Global { theta: 0.0, alpha: 0.0 }).is_err());
        assert!(kinematic_metric(KinematicPoint::Global { theta: 0.0, alpha: PI }).is_err());
    }

    #[test]
    fn global_charts_consistent() {
        // csch xi = tan alpha; pull the Global metric back to xi by the
        // chain rule with a finite-difference derivative d alpha/d xi.
        let xi = 0.8_f64;
        let alpha_of = |xi: f64| (1.0 / xi.sinh()).atan();
        let alpha = alpha_of(xi);
        let h = 1e-6;
        let dalpha = (alpha_of(xi + h) - alpha_of(xi - h)) / (2.0 * h);
        let gg = kinematic_metric(KinematicPoint::Global { theta: 0.1, alpha }).unwrap();
        let gx = kinematic_metric(KinematicPoint::GlobalXi { theta: 0.1, xi }).unwrap();
        assert_close(gg[1][1] * dalpha * dalpha, gx[1][1], 1e-8, "g_xixi");
        assert_close(gg[0][0], gx[0][0], 1e-10, "g_thetatheta");
    }
}
