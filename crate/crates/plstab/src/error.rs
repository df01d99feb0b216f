use thiserror::Error;

/// Error variants shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Chord slopes of the log-values increase somewhere.
    #[error("log-concavity violated: chord slope increases at knot index {index} ({prev} -> {next})")]
    ConcavityViolated { index: usize, prev: f64, next: f64 },

    /// A tail is missing or its slope has the wrong sign, so the total mass diverges.
    #[error("total mass is not finite: {0}")]
    InfiniteMass(&'static str),

    /// No knots were supplied.
    #[error("empty input")]
    EmptyInput,

    /// Quantile argument outside (0, 1).
    #[error("quantile argument {0} outside (0, 1)")]
    QuantileOutOfRange(f64),

    /// Affine image requires a positive scale factor.
    #[error("scale factor must be positive, got {0}")]
    NonpositiveScale(f64),

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature tolerance {tol} not reached (certified error {achieved})")]
    ToleranceNotReached { tol: f64, achieved: f64 },

    /// The deficit integrand is only defined for positive derivatives.
    #[error("transport derivative must be positive, got {0}")]
    NonpositiveDerivative(f64),

    /// Alignment or certification against a function with no mass.
    #[error("function has zero (or non-finite) mass")]
    ZeroMass,

    /// The midpoint domination hypothesis fails for the triple.
    #[error("m does not dominate the weighted midpoint sup-convolution of f and g")]
    DominationViolated,

    /// Transport-cost bound check requires a deficit in (0, 1/48).
    #[error("deficit integral {0} outside (0, 1/48)")]
    EpsilonOutOfRange(f64),

    /// Localized-cost branch needs g(z) != f(z).
    #[error("g(z) = f(z) = {0} at z = {1}: localized window degenerates")]
    DegenerateAtZ(f64, f64),

    /// Neither localized-cost branch hypothesis holds at z.
    #[error("localized-cost hypotheses not met at z = {0}")]
    HypothesisNotMet(f64),

    /// Poincare-gap test functions are limited to degree <= 4 polynomials
    /// and piecewise-linear functions.
    #[error("test function not integrable against the density: {0}")]
    NonintegrableTestFunction(&'static str),

    /// Example families need eps in (0, 1/2).
    #[error("eps {0} outside (0, 1/2)")]
    EpsOutOfRange(f64),

    /// The scaled-pair example needs an even base density.
    #[error("base density is not even: |mean| = {mean_abs}, |median| = {median_abs} exceed 1e-9")]
    BaseNotEven { mean_abs: f64, median_abs: f64 },

    /// Unknown property-suite name.
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),

    /// File parsing failed; carries location/field diagnostics.
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
