//! Group metric ds^2 = 2 tr{(g^{-1} dg)^2} on the factorization charts,
//! and the coset metric obtained by minimizing it over one forgotten
//! coordinate differential.

use super::decompose::Scheme;
use super::{sl2_basis, subgroup_element, su11_basis, Mat2, SubgroupName};
use crate::error::Error;

/// Generator of a named subgroup, as d/dp at p = 0.  For the T subgroup
/// the parameter is multiplicative; its derivative at parameter y is
/// (1/y) L0 times the factor, handled separately below.
fn generator(name: SubgroupName) -> Mat2 {
    use SubgroupName::*;
    let [lm1, l0, l1] = sl2_basis();
    let [a0, a1, a2] = su11_basis();
    match name {
        N => l1.scale((-1.0).into()),
        NTilde => lm1,
        H | T => l0,
        A => Mat2::from_real(0.0, 0.5, 0.5, 0.0),
        K => Mat2::from_real(0.0, 0.5, -0.5, 0.0),
        ExpLambda0 => a0,
        ExpLambda1 => a1,
        ExpLambda2 => a2,
    }
}

/// Factor matrices and their exact parameter derivatives at `params`.
fn factor_data(scheme: Scheme, params: [f64; 3]) -> Result<[(Mat2, Mat2); 3], Error> {
    let fs = scheme.factors();
    let mut out = [(Mat2::zero(), Mat2::zero()); 3];
    for i in 0..3 {
        let (name, sign) = fs[i];
        let f = subgroup_element(name, sign * params[i])?.m;
        // d/dp exp(p sign X) = sign X exp(p sign X); for T the chain rule
        // gives d/dy = (1/y) L0 t(y).
        let gen = if name == SubgroupName::T {
            generator(name).scale((1.0 / params[i]).into())
        } else {
            generator(name).scale(sign.into())
        };
        out[i] = (f, gen.mul(&f));
    }
    Ok(out)
}

/// Symmetric coefficient matrix M with ds^2 = sum_ij M_ij dp_i dp_j.
pub fn metric_matrix(scheme: Scheme, params: [f64; 3]) -> Result<[[f64; 3]; 3], Error> {
    let fd = factor_data(scheme, params)?;
    let g = fd[0].0.mul(&fd[1].0).mul(&fd[2].0);
    let ginv = g.inv_unimodular();
    // A_i = g^{-1} dg/dp_i
    let partials = [
        fd[0].1.mul(&fd[1].0).mul(&fd[2].0),
        fd[0].0.mul(&fd[1].1).mul(&fd[2].0),
        fd[0].0.mul(&fd[1].0).mul(&fd[2].1),
    ];
    let a: Vec<Mat2> = partials.iter().map(|p| ginv.mul(p)).collect();
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = 2.0 * a[i].mul(&a[j]).trace().re;
        }
    }
    Ok(m)
}

/// ds^2 at `params` applied to the displacement `dparams`.
pub fn group_metric(scheme: Scheme, params: [f64; 3], dparams: [f64; 3]) -> Result<f64, Error> {
    let m = metric_matrix(scheme, params)?;
    let mut s = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            s += m[i][j] * dparams[i] * dparams[j];
        }
    }
    Ok(s)
}

/// Coset metric: the group metric minimized (made stationary) over the
/// differential of the `forgotten` coordinate.  `dparams[forgotten]` is
/// ignored.  Errors when that direction is null in the group metric.
pub fn coset_metric(
    scheme: Scheme,
    forgotten: usize,
    params: [f64; 3],
    dparams: [f64; 3],
) -> Result<f64, Error> {
    if forgotten > 2 {
        return Err(Error::InvalidParameter(format!(
            "forgotten coordinate index {forgotten} out of 0..3"
        )));
    }
    let m = metric_matrix(scheme, params)?;
    let a = m[forgotten][forgotten];
    if a.abs() < 1e-12 {
        return Err(Error::DegenerateMinimization);
    }
    let mut dp = dparams;
    dp[forgotten] = 0.0;
    let mut b = 0.0;
    let mut c = 0.0;
    for i in 0..3 {
        b += 2.0 * m[forgotten][i] * dp[i];
        for j in 0..3 {
            c += m[i][j] * dp[i] * dp[j];
        }
    }
    Ok(c - b * b / (4.0 * a))
}
