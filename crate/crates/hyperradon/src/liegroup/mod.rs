//! SL(2,R) and SU(1,1) matrix machinery: one-parameter subgroups, group
//! decompositions, group and coset metrics, and Casimir differential
//! operators realized by finite differences on charted functions.

pub mod casimir;
pub mod decompose;
pub mod metric;

pub use casimir::{casimir_apply, ChartName, ChartedFunction};
pub use decompose::{decompose, recompose, Scheme};
pub use metric::{coset_metric, group_metric, metric_matrix};

use crate::error::Error;
use crate::geometry::{self, Chart, ModelPoint};
use num_complex::Complex64;

/// Minimal 2x2 complex matrix.  Real-flavored group elements keep zero
/// imaginary parts in every entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub e: [[Complex64; 2]; 2],
}

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Mat2::from_real(1.0, 0.0, 0.0, 1.0)
    }

    pub fn zero() -> Self {
        Mat2::from_real(0.0, 0.0, 0.0, 0.0)
    }

    pub fn det(&self) -> Complex64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.e[0][0] + self.e[1][1]
    }

    /// Inverse assuming det = 1.
    pub fn inv_unimodular(&self) -> Mat2 {
        Mat2::new(self.e[1][1], -self.e[0][1], -self.e[1][0], self.e[0][0])
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let mut r = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] = self.e[i][0] * o.e[0][j] + self.e[i][1] * o.e[1][j];
            }
        }
        r
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] += o.e[i][j];
            }
        }
        r
    }

    pub fn scale(&self, s: Complex64) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] *= s;
            }
        }
        r
    }

    /// Max-entry distance to another matrix.
    pub fn dist(&self, o: &Mat2) -> f64 {
        let mut d = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.e[i][j] - o.e[i][j]).norm());
            }
        }
        d
    }
}

/// Group flavor: real unimodular matrices or the disc-preserving complex
/// form ((lambda, mu), (conj mu, conj lambda)).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    SL2R,
    SU11,
}

/// A group element with its flavor tag.  `validate` checks det = 1 and,
/// for the SU11 flavor, the conjugate-pair structure of the entries.
#[derive(Debug, Clone, Copy)]
pub struct GroupElement {
    pub m: Mat2,
    pub flavor: Flavor,
}

impl GroupElement {
    pub fn new(m: Mat2, flavor: Flavor) -> Result<Self, Error> {
        let g = GroupElement { m, flavor };
        g.validate(1e-12)?;
        Ok(g)
    }

    pub fn validate(&self, eps: f64) -> Result<(), Error> {
        let det = self.m.det();
        if (det - 1.0).norm() > eps {
            return Err(Error::InvalidParameter(format!(
                "group element determinant {det} differs from 1"
            )));
        }
        match self.flavor {
            Flavor::SL2R => {
                for i in 0..2 {
                    for j in 0..2 {
                        if self.m.e[i][j].im.abs() > eps {
                            return Err(Error::InvalidParameter(
                                "SL2R element has a complex entry".into(),
                            ));
                        }
                    }
                }
            }
            Flavor::SU11 => {
                let bad = (self.m.e[1][1] - self.m.e[0][0].conj()).norm()
                    + (self.m.e[1][0] - self.m.e[0][1].conj()).norm();
                if bad > eps {
                    return Err(Error::InvalidParameter(
                        "SU11 element is not of the form ((l, m), (conj m, conj l))".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        debug_assert_eq!(self.flavor, o.flavor);
        GroupElement { m: self.m.mul(&o.m), flavor: self.flavor }
    }

    pub fn inv(&self) -> GroupElement {
        GroupElement { m: self.m.inv_unimodular(), flavor: self.flavor }
    }
}

/// Basis of the real algebra: L_{-1}, L_0, L_1.
pub fn sl2_basis() -> [Mat2; 3] {
    [
        Mat2::from_real(0.0, 1.0, 0.0, 0.0),
        Mat2::from_real(0.5, 0.0, 0.0, -0.5),
        Mat2::from_real(0.0, 0.0, -1.0, 0.0),
    ]
}

/// Basis of the disc-flavor algebra: Lambda_0, Lambda_1, Lambda_2.
pub fn su11_basis() -> [Mat2; 3] {
    let i = Complex64::i();
    [
        Mat2::new(0.5 * i, 0.0.into(), 0.0.into(), -0.5 * i),
        Mat2::from_real(0.0, 0.5, 0.5, 0.0),
        Mat2::new(0.0.into(), 0.5 * i, -0.5 * i, 0.0.into()),
    ]
}

/// An algebra element as real coefficients on the flavor's basis.
#[derive(Debug, Clone, Copy)]
pub struct AlgebraElement {
    pub coeffs: [f64; 3],
    pub flavor: Flavor,
}

impl AlgebraElement {
    pub fn matrix(&self) -> Mat2 {
        let basis = match self.flavor {
            Flavor::SL2R => sl2_basis(),
            Flavor::SU11 => su11_basis(),
        };
        let mut m = Mat2::zero();
        for (c, b) in self.coeffs.iter().zip(basis.iter()) {
            m = m.add(&b.scale((*c).into()));
        }
        m
    }
}

/// Commutator [x, y] = xy - yx on the matrix representation.
pub fn commutator(x: &Mat2, y: &Mat2) -> Mat2 {
    x.mul(y).add(&y.mul(x).scale((-1.0).into()))
}

/// Named one-parameter subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupName {
    /// Lower-triangular unipotent: ((1, 0), (t, 1)).
    N,
    /// Upper-triangular unipotent: ((1, t), (0, 1)).
    NTilde,
    /// Diagonal boosts diag(e^{s/2}, e^{-s/2}).
    H,
    /// Symmetric boosts ((cosh u/2, sinh u/2), (sinh u/2, cosh u/2)).
    A,
    /// Diagonal scaling diag(sqrt y, 1/sqrt y); multiplicative parameter y > 0.
    T,
    /// Rotations ((cos t/2, sin t/2), (-sin t/2, cos t/2)).
    K,
    /// Disc-flavor rotation diag(e^{it/2}, e^{-it/2}).
    ExpLambda0,
    /// Disc-flavor boost ((cosh t/2, sinh t/2), (sinh t/2, cosh t/2)).
    ExpLambda1,
    /// Disc-flavor boost ((cosh t/2, i sinh t/2), (-i sinh t/2, cosh t/2)).
    ExpLambda2,
}

/// Closed-form matrix of a named one-parameter subgroup.
pub fn subgroup_element(name: SubgroupName, p: f64) -> Result<GroupElement, Error> {
    use SubgroupName::*;
    let (m, flavor) = match name {
        N => (Mat2::from_real(1.0, 0.0, p, 1.0), Flavor::SL2R),
        NTilde => (Mat2::from_real(1.0, p, 0.0, 1.0), Flavor::SL2R),
        H => {
            let e = (0.5 * p).exp();
            (Mat2::from_real(e, 0.0, 0.0, 1.0 / e), Flavor::SL2R)
        }
        A => {
            let (c, s) = ((0.5 * p).cosh(), (0.5 * p).sinh());
            (Mat2::from_real(c, s, s, c), Flavor::SL2R)
        }
        T => {
            if p <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "T subgroup needs a positive parameter, got {p}"
                )));
            }
            let r = p.sqrt();
            (Mat2::from_real(r, 0.0, 0.0, 1.0 / r), Flavor::SL2R)
        }
        K => {
            let (s, c) = (0.5 * p).sin_cos();
            (Mat2::from_real(c, s, -s, c), Flavor::SL2R)
        }
        ExpLambda0 => {
            let z = Complex64::from_polar(1.0, 0.5 * p);
            (Mat2::new(z, 0.0.into(), 0.0.into(), z.conj()), Flavor::SU11)
        }
        ExpLambda1 => {
            let (c, s) = ((0.5 * p).cosh(), (0.5 * p).sinh());
            (Mat2::from_real(c, s, s, c), Flavor::SU11)
        }
        ExpLambda2 => {
            let (c, s) = ((0.5 * p).cosh(), (0.5 * p).sinh());
            let i = Complex64::i();
            (Mat2::new(c.into(), i * s, -i * s, c.into()), Flavor::SU11)
        }
    };
    Ok(GroupElement { m, flavor })
}

/// Conjugacy class of a real-flavor element by its trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugacyClass {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// Classify a real-flavor element: elliptic |tr| < 2, parabolic |tr| = 2
/// within `tol`, hyperbolic |tr| > 2.
pub fn classify(g: &GroupElement, tol: f64) -> Result<ConjugacyClass, Error> {
    if g.flavor != Flavor::SL2R {
        return Err(Error::InvalidParameter(
            "classification by trace applies to the real flavor".into(),
        ));
    }
    let t = g.m.trace().re.abs();
    Ok(if (t - 2.0).abs() <= tol {
        ConjugacyClass::Parabolic
    } else if t < 2.0 {
        ConjugacyClass::Elliptic
    } else {
        ConjugacyClass::Hyperbolic
    })
}

/// Fractional-linear action on the hyperbolic plane.
///
/// Real-flavor elements act on the half-plane as z -> (az+b)/(cz+d);
/// disc-flavor elements act on the disc as Z -> (lZ+m)/(conj(m)Z+conj(l)).
/// The point is converted to the natural chart for the flavor and the
/// result is returned in the chart of the input point.
pub fn mobius(g: &GroupElement, p: ModelPoint) -> Result<ModelPoint, Error> {
    p.validate(1e-9)?;
    let home = p.chart();
    let action_chart = match g.flavor {
        Flavor::SL2R => Chart::HalfPlane,
        Flavor::SU11 => Chart::Disc,
    };
    let q = geometry::convert(p, action_chart)?;
    let z = match q {
        ModelPoint::HalfPlane { x, y } | ModelPoint::Disc { x, y } => Complex64::new(x, y),
        _ => unreachable!(),
    };
    let w = (g.m.e[0][0] * z + g.m.e[0][1]) / (g.m.e[1][0] * z + g.m.e[1][1]);
    let moved = match action_chart {
        Chart::HalfPlane => ModelPoint::HalfPlane { x: w.re, y: w.im },
        _ => ModelPoint::Disc { x: w.re, y: w.im },
    };
    geometry::convert(moved, home)
}
