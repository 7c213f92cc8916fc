//! Typed failure modes shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong while evaluating curves, directors or
/// ruled-surface quantities.
#[derive(Error, Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Normalization of a null or zero vector is undefined.
    #[error("cannot normalize a null or zero vector (|<u,u>| = {norm_sq:.3e})")]
    NullOrZeroVector { norm_sq: f64 },

    /// A tolerance field violated its admissible range.
    #[error("tolerance field `{field}` = {value:.3e} outside its admissible range")]
    InvalidTolerance { field: &'static str, value: f64 },

    /// Parameter left the curve or surface domain.
    #[error("parameter {value:.6} outside domain [{lo:.6}, {hi:.6}]")]
    OutOfDomain { value: f64, lo: f64, hi: f64 },

    /// The tangent failed to be timelike somewhere on the validation grid.
    #[error("curve is not timelike at t = {t:.6} (<a',a'> = {norm_sq:.3e})")]
    NotTimelike { t: f64, norm_sq: f64 },

    /// Curvature below threshold: the Frenet frame is undefined.
    #[error("vanishing curvature at s = {s:.6} (k1 = {k1:.3e}): frame undefined")]
    VanishingCurvature { s: f64, k1: f64 },

    /// Frame coefficients do not satisfy -x1^2 + x2^2 + x3^2 = +-1.
    #[error("causal constraint violated: -x1^2 + x2^2 + x3^2 = {value:.9} but expected {expected}")]
    CausalConstraintViolation { value: f64, expected: f64 },

    /// The director direction is lightlike; such rulings are not admitted.
    #[error("null director: -x1^2 + x2^2 + x3^2 = {value:.3e}")]
    NullDirector { value: f64 },

    /// The companion derivative is lightlike; the companion curve must be
    /// spacelike or timelike.
    #[error("null companion: -l1^2 + l2^2 + l3^2 = {value:.3e}")]
    NullCompanion { value: f64 },

    /// The distribution-parameter denominator vanished.
    #[error("distribution parameter undefined (denominator = {denominator:.3e})")]
    UndefinedParameter { denominator: f64 },

    /// The two surface tangents are linearly dependent at this point.
    #[error("singular surface point at (s, v) = ({s:.6}, {v:.6})")]
    SingularPoint { s: f64, v: f64 },

    /// The target ratio of a helix condition has a vanishing denominator.
    #[error("helix-condition ratio degenerate (denominator = {denominator:.3e})")]
    DegenerateRatio { denominator: f64 },

    /// Striction is undefined on a cylinder (the ruling direction is constant).
    #[error("striction undefined at s = {s:.6}: ruling derivative vanishes (cylinder)")]
    CylinderStriction { s: f64 },

    /// The ruling derivative is nonzero but lightlike, so the striction
    /// denominator vanishes.
    #[error("striction undefined at s = {s:.6}: ruling derivative is null (<X',X'> = {norm_sq:.3e})")]
    NullRulingDerivative { s: f64, norm_sq: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
