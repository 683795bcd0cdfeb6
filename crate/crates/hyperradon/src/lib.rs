//! Numerics for two-dimensional hyperbolic space and its space of geodesics.
//!
//! The crate provides:
//!
//! * [`geometry`] — models of the hyperbolic plane (upper half-plane, Poincaré
//!   disc, polar and hyperboloid charts), chart conversions, metric tensors and
//!   arc-length parametrized geodesic families;
//! * [`liegroup`] — SL(2,ℝ) and SU(1,1) matrix algebra, one-parameter
//!   subgroups, group decompositions, group/coset metrics and finite-difference
//!   Casimir operators;
//! * [`specfun`] — the special-function kernel: complex Gamma, Bessel J of real
//!   and imaginary order, modified Bessel K of imaginary order, the F/G/Z
//!   combinations, conical Legendre functions and the modified conical
//!   functions E and O;
//! * [`spectral`] — normalized Laplace eigenfunctions, the
//!   Kontorovich–Lebedev and Mehler–Fock transform pairs, and the one-parameter
//!   family of self-adjoint extensions of the unbounded-below Liouville
//!   operator;
//! * [`radon`] — the geodesic Radon transform engine, closed-form transform
//!   identities, singular values, intertwining and antipodal checks;
//! * [`verify`] — the runnable verification suites surfaced by the CLI.

pub mod config;
pub mod error;
pub mod geometry;
pub mod liegroup;
pub mod output;
pub mod radon;
pub mod specfun;
pub mod spectral;
pub mod verify;

pub use config::Tolerances;
pub use error::Error;

/// Crate result alias.
pub type Result<T> = std::result::Result<T, Error>;
