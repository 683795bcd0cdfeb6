use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A point violates the invariant of its chart (y <= 0, |Z| >= 1, ...).
    #[error("invalid point for chart {chart}: {reason}")]
    InvalidPoint { chart: &'static str, reason: String },

    /// A chart is singular at the requested location.
    #[error("chart {chart} is singular at {location}")]
    SingularChart { chart: &'static str, location: String },

    /// A group element lies outside the range of a decomposition scheme.
    #[error("group element outside the range of the {scheme} decomposition: {reason}")]
    OutOfRange { scheme: &'static str, reason: String },

    /// The forgotten direction of a coset metric is null in the group metric.
    #[error("degenerate minimization: forgotten direction is null in the group metric")]
    DegenerateMinimization,

    /// Evaluation at (or too close to) a pole.
    #[error("pole of {function} at {argument}")]
    Pole { function: &'static str, argument: String },

    /// Parameters outside the validated box of an evaluation scheme.
    #[error("{function}: parameters outside validated range: {reason}")]
    OutsideValidatedRange { function: &'static str, reason: String },

    /// A quadrature or series failed to reach the requested tolerance.
    #[error("numerical non-convergence in {context}: estimated error {estimate:.3e} exceeds {tolerance:.3e}")]
    NonConvergence {
        context: &'static str,
        estimate: f64,
        tolerance: f64,
    },

    /// Bound-state index produced a non-positive order.
    #[error("invalid bound-state index n = {n}: order nu = {nu} is not positive")]
    InvalidBoundState { n: i64, nu: f64 },

    /// A least-squares fit window is too narrow to condition the fit.
    #[error("fit window too narrow: {reason}")]
    FitConditioning { reason: String },

    /// Bad CLI / config input.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// I/O while writing tables or reports.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
