//! Ruled surfaces over timelike base curves in Minkowski 3-space.
//!
//! The crate builds the full chain from Lorentzian vector algebra up to
//! surface-level verdicts:
//!
//! * [`minkowski`]: the scalar product `u1 v1 + u2 v2 - u3 v3`, causal
//!   classification and the determinant-normalized cross product.
//! * [`curve`]: timelike parametric curves, proper-time reparametrization by
//!   adaptive quadrature, and the Frenet apparatus `{T, N, B, k1, k2}`.
//! * [`director`]: ruling directions `X = x1 T + x2 N + x3 B` with constant
//!   coefficients and unit causal norm.
//! * [`companion`]: curves `beta` sharing the base parameter, prescribed by
//!   `beta' = l1 T + l2 N + l3 B` and recovered by quadrature.
//! * [`ruled`]: distribution parameters (closed form and an independent
//!   finite-difference determinant oracle), developability, cylinder and
//!   helix conditions, striction curves and the special-case catalogue.
//!
//! Everything is pure and deterministic: curves and surfaces are immutable
//! after construction and can be evaluated concurrently.

pub mod companion;
pub mod curve;
pub mod director;
pub mod error;
pub mod minkowski;
pub mod numeric;
pub mod ruled;

pub use companion::{companion_causal_character, integrate_companion, CompanionCurve, CompanionSpec};
pub use curve::{
    circular_timelike_helix, classify_curve, frenet_apparatus, frenet_residual,
    hyperbolic_timelike_helix, planar_timelike_curve, reparametrize_proper_time, timelike_line,
    CurveClass, DerivativeMode, FrenetFrame, ParamCurve, ProperTimeCurve, FRAME_TOL, HELIX_TOL,
};
pub use director::{CausalSign, FrameCoefficients, PlaneClass};
pub use error::{Error, Result};
pub use minkowski::{det3, CausalCharacter, Tolerance, Vec3};
pub use numeric::uniform_grid;
pub use ruled::{
    case_table, closed_form_p, cylinder_check, developability_verdict, helix_condition,
    mannheim_constancy, numerator_coefficients, BaseCurve, BaseFamily, CaseRow,
    DenominatorConvention, DevelopabilityVerdict, DistributionReport, HelixVariant,
    MannheimReport, ParameterValue, RuledSurface, StrictionPoint, SurfaceCausalType, P_VERDICT_TOL,
};
