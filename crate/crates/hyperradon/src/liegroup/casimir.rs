//! The quadratic Casimir realized as a differential operator on the
//! factorization charts, applied by central finite differences with one
//! level of Richardson extrapolation.
//!
//! Functions carrying Fourier indices on their ignorable coordinates are
//! reduced to the 1-D radial operator of the chart; otherwise the full
//! chart expression is applied with numeric derivatives in every
//! coordinate.

use crate::error::Error;
use num_complex::Complex64;

/// Coordinate charts for [`ChartedFunction`].  Coordinate order:
/// Euler (phi, xi, theta); Iwasawa (x, y, theta); NHA and NHK
/// (t, xi, phi); AdSSU11 (t, xi, tau).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartName {
    Euler,
    Iwasawa,
    NHA,
    NHK,
    AdSSU11,
}

/// A scalar function on a chart, optionally separable with Fourier
/// indices (lambda, mu) on coordinates 0 and 2.
pub struct ChartedFunction<'a> {
    pub chart: ChartName,
    pub f: &'a dyn Fn([f64; 3]) -> Complex64,
    pub fourier: Option<(f64, f64)>,
}

impl ChartedFunction<'_> {
    fn eval(&self, p: [f64; 3]) -> Complex64 {
        (self.f)(p)
    }

    /// Verify the declared Fourier indices: shifting an ignorable
    /// coordinate by 2 pi multiplies the value by e^{2 pi i index}.
    pub fn check_fourier(&self, point: [f64; 3], tol: f64) -> Result<(), Error> {
        let Some((lam, mu)) = self.fourier else {
            return Ok(());
        };
        let base = self.eval(point);
        for (idx, index) in [(0usize, lam), (2usize, mu)] {
            let mut q = point;
            q[idx] += 2.0 * std::f64::consts::PI;
            let shifted = self.eval(q);
            let expect = base * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * index);
            if (shifted - expect).norm() > tol * (1.0 + base.norm()) {
                return Err(Error::InvalidParameter(format!(
                    "declared Fourier index {index} on coordinate {idx} does not match the function"
                )));
            }
        }
        Ok(())
    }
}

/// One Richardson level on an O(h^2) central-difference functional.
fn richardson(d: &dyn Fn(f64) -> Complex64, h: f64, levels: usize) -> Complex64 {
    if levels == 0 {
        d(h)
    } else {
        let coarse = richardson(d, h, levels - 1);
        let fine = richardson(d, 0.5 * h, levels - 1);
        (4.0 * fine - coarse) / 3.0
    }
}

struct Fd<'a, 'b> {
    cf: &'a ChartedFunction<'b>,
    p: [f64; 3],
    h: f64,
    levels: usize,
}

impl Fd<'_, '_> {
    fn at(&self, i: usize, s: f64) -> Complex64 {
        let mut q = self.p;
        q[i] += s;
        self.cf.eval(q)
    }

    fn d1(&self, i: usize) -> Complex64 {
        richardson(&|h| (self.at(i, h) - self.at(i, -h)) / (2.0 * h), self.h, self.levels)
    }

    fn d2(&self, i: usize) -> Complex64 {
        let f0 = self.cf.eval(self.p);
        richardson(
            &|h| (self.at(i, h) - 2.0 * f0 + self.at(i, -h)) / (h * h),
            self.h,
            self.levels,
        )
    }

    fn d11(&self, i: usize, j: usize) -> Complex64 {
        let at2 = |si: f64, sj: f64| {
            let mut q = self.p;
            q[i] += si;
            q[j] += sj;
            self.cf.eval(q)
        };
        richardson(
            &|h| (at2(h, h) - at2(h, -h) - at2(-h, h) + at2(-h, -h)) / (4.0 * h * h),
            self.h,
            self.levels,
        )
    }
}

/// Apply the chart's Casimir operator to `f` at `point` with step `h`
/// and `levels` Richardson extrapolation levels.
pub fn casimir_apply(
    f: &ChartedFunction,
    point: [f64; 3],
    h: f64,
    levels: usize,
) -> Result<Complex64, Error> {
    let scale = point.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if h <= 0.0 || h < 1e-11 * scale {
        return Err(Error::InvalidParameter(format!(
            "finite-difference step {h} underflows at coordinate scale {scale}"
        )));
    }
    let fd = Fd { cf: f, p: point, h, levels };
    let v = f.eval(point);
    if let (Some((lam, mu)), true) = (f.fourier, f.chart != ChartName::Iwasawa) {
        // reduced radial operator in coordinate 1
        let (d1, d2) = (fd.d1(1), fd.d2(1));
        let xi = point[1];
        return Ok(match f.chart {
            ChartName::Euler => {
                let s = xi.sinh();
                -d2 - (xi.cosh() / s) * d1
                    + (lam * lam + mu * mu + 2.0 * lam * mu * xi.cosh()) / (s * s) * v
            }
            ChartName::AdSSU11 => {
                let c = xi.cosh();
                -d2 - xi.tanh() * d1
                    - (lam * lam - mu * mu + 2.0 * lam * mu * xi.sinh()) / (c * c) * v
            }
            ChartName::NHA => {
                -d2 + d1 + (2.0 * lam * mu * xi.exp() - lam * lam * (2.0 * xi).exp()) * v
            }
            ChartName::NHK => {
                -d2 + d1 + (-2.0 * lam * mu * xi.exp() + lam * lam * (2.0 * xi).exp()) * v
            }
            ChartName::Iwasawa => unreachable!(),
        });
    }
    // full chart expression with numeric derivatives in every coordinate
    Ok(match f.chart {
        ChartName::Iwasawa => {
            let y = point[1];
            -y * y * (fd.d2(0) + fd.d2(1)) - 2.0 * y * fd.d11(0, 2)
        }
        ChartName::Euler => {
            let s = point[1].sinh();
            -fd.d2(1) - (point[1].cosh() / s) * fd.d1(1)
                + (-fd.d2(0) - fd.d2(2) - 2.0 * point[1].cosh() * fd.d11(0, 2)) / (s * s)
        }
        ChartName::AdSSU11 => {
            let c = point[1].cosh();
            -fd.d2(1) - point[1].tanh() * fd.d1(1)
                + (fd.d2(0) - fd.d2(2) + 2.0 * point[1].sinh() * fd.d11(0, 2)) / (c * c)
        }
        ChartName::NHA => {
            let e = point[1].exp();
            -fd.d2(1) + fd.d1(1) - 2.0 * e * fd.d11(0, 2) + e * e * fd.d2(0)
        }
        ChartName::NHK => {
            let e = point[1].exp();
            -fd.d2(1) + fd.d1(1) + 2.0 * e * fd.d11(0, 2) - e * e * fd.d2(0)
        }
    })
}
