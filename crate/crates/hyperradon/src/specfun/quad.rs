//! Adaptive Gauss–Kronrod quadrature and oscillatory-tail summation.
//!
//! The G7/K15 pair gives a cheap embedded error estimate per panel; the
//! global strategy bisects the panel with the largest estimate.  Slowly
//! decaying oscillatory tails are handled separately by integrating over
//! sign-aligned half-period panels and accelerating the partial sums by
//! iterated averaging.

use num_complex::Complex64;
use std::ops::{Add, Mul};

/// 15-point Kronrod abscissae on [-1, 1] (positive half, ascending weight order).
const XGK: [f64; 8] = [
    0.991_455_371_120_813,
    0.949_107_912_342_759,
    0.864_864_423_359_769,
    0.741_531_185_599_394,
    0.586_087_235_467_691,
    0.405_845_151_377_397,
    0.207_784_955_007_898,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529,
    0.063_092_092_629_979,
    0.104_790_010_322_250,
    0.140_653_259_715_525,
    0.169_004_726_639_267,
    0.190_350_578_064_785,
    0.204_432_940_075_298,
    0.209_482_141_084_728,
];

/// 7-point Gauss weights (for the odd-indexed Kronrod abscissae).
const WG: [f64; 4] = [
    0.129_484_966_168_870,
    0.279_705_391_489_277,
    0.381_830_050_505_119,
    0.417_959_183_673_469,
];

/// Scalar-like values a quadrature can accumulate: `f64` or `Complex64`.
pub trait Accum: Copy + Add<Output = Self> + Mul<f64, Output = Self> {
    const ZERO: Self;
    fn abs(&self) -> f64;
}

impl Accum for f64 {
    const ZERO: f64 = 0.0;
    fn abs(&self) -> f64 {
        f64::abs(*self)
    }
}

impl Accum for Complex64 {
    const ZERO: Complex64 = Complex64::new(0.0, 0.0);
    fn abs(&self) -> f64 {
        self.norm()
    }
}

/// Value and absolute-error estimate of a quadrature.
#[derive(Debug, Clone, Copy)]
pub struct Quad<T> {
    pub value: T,
    pub error: f64,
}

/// One G7/K15 panel on [a, b].
pub fn kronrod15<T: Accum, F: FnMut(f64) -> T>(f: &mut F, a: f64, b: f64) -> Quad<T> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (i, &x) in XGK.iter().enumerate().take(7) {
        let f1 = f(c - h * x);
        let f2 = f(c + h * x);
        let s = f1 + f2;
        kron = kron + s * WGK[i];
        if i % 2 == 1 {
            gauss = gauss + s * WG[i / 2];
        }
    }
    let value = kron * h;
    // The |K15 - G7| difference is a conservative estimate for the K15 value.
    let diff = (kron + gauss * (-1.0)).abs() * h.abs();
    Quad { value, error: diff }
}

/// Globally adaptive integration of `f` over [a, b].
///
/// Bisects the worst panel until the summed error estimate drops below
/// `max(abs_tol, rel_tol * |I|)` or `max_panels` is reached.
pub fn adaptive<T: Accum, F: FnMut(f64) -> T>(
    f: &mut F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> Quad<T> {
    struct Panel<T> {
        a: f64,
        b: f64,
        q: Quad<T>,
    }
    let mut panels = vec![Panel { a, b, q: kronrod15(f, a, b) }];
    loop {
        let mut total = T::ZERO;
        let mut err = 0.0;
        let mut worst = 0;
        let mut worst_err = -1.0;
        for (i, p) in panels.iter().enumerate() {
            total = total + p.q.value;
            err += p.q.error;
            if p.q.error > worst_err {
                worst_err = p.q.error;
                worst = i;
            }
        }
        let tol = abs_tol.max(rel_tol * total.abs());
        if err <= tol || panels.len() >= max_panels || worst_err <= 0.0 {
            return Quad { value: total, error: err };
        }
        let Panel { a, b, .. } = panels[worst];
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            // Interval is at floating-point resolution; give up on it.
            return Quad { value: total, error: err };
        }
        panels[worst] = Panel { a, b: m, q: kronrod15(f, a, m) };
        panels.push(Panel { a: m, b, q: kronrod15(f, m, b) });
    }
}

/// Convenience wrapper with the crate's default budget.
pub fn integrate<T: Accum, F: FnMut(f64) -> T>(f: &mut F, a: f64, b: f64, tol: f64) -> Quad<T> {
    adaptive(f, a, b, tol, tol, 400)
}

/// Iterated pairwise averaging of a sequence of partial sums.
///
/// For partial sums whose residual oscillates with an asymptotically
/// constant half-period this converges like an Euler transformation.
/// Returns the accelerated limit and an error estimate.
pub fn accelerate_partial_sums<T: Accum>(sums: &[T]) -> Quad<T> {
    assert!(!sums.is_empty());
    let mut level: Vec<T> = sums.to_vec();
    let mut best = *level.last().unwrap();
    let mut prev = best;
    while level.len() > 1 {
        let next: Vec<T> = level.windows(2).map(|w| (w[0] + w[1]) * 0.5).collect();
        prev = best;
        best = *next.last().unwrap();
        level = next;
    }
    Quad { value: best, error: (best + prev * (-1.0)).abs() }
}

/// Integrate `f` from `a` to +infinity when `f` oscillates with an
/// asymptotic half-period `half_period` and decays slowly.
///
/// Panels are aligned to the half-period so consecutive panel integrals
/// alternate in sign; the partial sums are then accelerated.
pub fn oscillatory_to_infinity<T: Accum, F: FnMut(f64) -> T>(
    f: &mut F,
    a: f64,
    half_period: f64,
    panel_tol: f64,
    n_panels: usize,
) -> Quad<T> {
    assert!(half_period > 0.0 && n_panels >= 4);
    let mut sums = Vec::with_capacity(n_panels);
    let mut acc = T::ZERO;
    let mut quad_err = 0.0;
    for j in 0..n_panels {
        let lo = a + j as f64 * half_period;
        let hi = lo + half_period;
        let q = adaptive(f, lo, hi, panel_tol, 0.0, 24);
        acc = acc + q.value;
        quad_err += q.error;
        sums.push(acc);
    }
    let q = accelerate_partial_sums(&sums);
    Quad { value: q.value, error: q.error + quad_err }
}
