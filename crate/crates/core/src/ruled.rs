//! Ruled surfaces `Phi(s, v) = base(s) + v X(s)` and their invariants:
//! distribution parameters by closed form and by an independent
//! finite-difference determinant oracle, developability and cylinder
//! verdicts, helix conditions and striction curves.
//!
//! The distribution parameter is
//!
//! ```text
//! P_X = det(base', X, X') / <X', X'>
//! ```
//!
//! and the surface is developable exactly when `P_X` vanishes. Expanding the
//! determinant in frame coefficients with `base' = l1 T + l2 N + l3 B` gives
//!
//! ```text
//! num = l1 ((x2^2 + x3^2) k2 - x1 x3 k1)
//!     - l2 (x1 x2 k2 - x2 x3 k1)
//!     + l3 ((x1^2 - x2^2) k1 - x1 x3 k2)
//! ```
//!
//! Two denominator readings of `<X', X'>` circulate and both are offered:
//! the component expansion `x2^2 k1^2 + (x1 k1 - x3 k2)^2 + x2^2 k2^2` and
//! the literal Lorentzian square of `X'`, which flips the sign of the
//! `x2^2 k1^2` term. They share the numerator, so their zero sets agree.
//!
//! # Adjudicated signs
//!
//! Several printed specializations of the formulas above circulate with sign
//! errors; the determinant fixes each one, and the oracle here confirms the
//! determinant. The forms used by this crate are:
//!
//! * `base' = N` numerator: `x2 x3 k1 - x1 x2 k2` (a common variant prints
//!   `-x2 x3 k1 - x1 x2 k2`).
//! * `base' = N` developability ratio: `k1/k2 = x1/x3` (not `-x1/x3`).
//! * Rectifying-plane director over the base curve: `k1/k2 = x3/x1`
//!   (not `-x3/x1`); only this sign is consistent with the cylinder
//!   construction `x1 k1 = x3 k2`.
//! * Denominator cross term: `(x1 k1 - x3 k2)^2`; the `+` variant that
//!   appears in some expansions contradicts the closed form of `X'`.

use crate::companion::CompanionCurve;
use crate::curve::{frenet_apparatus, FrenetFrame, ProperTimeCurve};
use crate::director::{FrameCoefficients, PlaneClass};
use crate::error::{Error, Result};
use crate::minkowski::{det3, Tolerance, Vec3};
use std::fmt;
use std::sync::Arc;

/// Default absolute tolerance on `P` for developability verdicts.
pub const P_VERDICT_TOL: f64 = 1e-7;

/// Which reading of `<X', X'>` divides the determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DenominatorConvention {
    /// Euclidean square of the frame components of `X'`.
    PaperExpanded,
    /// Literal Lorentzian square of `X'`.
    Lorentzian,
}

impl fmt::Display for DenominatorConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DenominatorConvention::PaperExpanded => f.write_str("paper"),
            DenominatorConvention::Lorentzian => f.write_str("lorentzian"),
        }
    }
}

/// Numerator, denominator and value of a distribution parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterValue {
    pub numerator: f64,
    pub denominator: f64,
    pub value: f64,
}

/// A distribution parameter evaluated at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionReport {
    pub s: f64,
    pub convention: DenominatorConvention,
    pub numerator: f64,
    pub denominator: f64,
    pub value: f64,
}

/// Coefficients `(c1, c2)` with `numerator = c1 k1 + c2 k2`, from expanding
/// `det(base', X, X')` in frame components.
pub fn numerator_coefficients(lambda: [f64; 3], x: &FrameCoefficients) -> (f64, f64) {
    let (l1, l2, l3) = (lambda[0], lambda[1], lambda[2]);
    let (x1, x2, x3) = (x.x1(), x.x2(), x.x3());
    let c1 = -l1 * x1 * x3 + l2 * x2 * x3 + l3 * (x1 * x1 - x2 * x2);
    let c2 = l1 * (x2 * x2 + x3 * x3) - l2 * x1 * x2 - l3 * x1 * x3;
    (c1, c2)
}

fn denominator_parts(x: &FrameCoefficients, k1: f64, k2: f64) -> (f64, f64) {
    let w = x.derivative_frame(k1, k2);
    let euclid = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
    let lorentz = -w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
    (euclid, lorentz)
}

/// Closed-form distribution parameter from frame data alone.
///
/// Fails with [`Error::UndefinedParameter`] when the selected denominator
/// vanishes: always on cylinders (`X' = 0`), and additionally where `X'` is
/// lightlike under the Lorentzian convention.
pub fn closed_form_p(
    lambda: [f64; 3],
    x: &FrameCoefficients,
    k1: f64,
    k2: f64,
    convention: DenominatorConvention,
    tol: &Tolerance,
) -> Result<ParameterValue> {
    let (c1, c2) = numerator_coefficients(lambda, x);
    let numerator = c1 * k1 + c2 * k2;
    let (euclid, lorentz) = denominator_parts(x, k1, k2);
    let denominator = match convention {
        DenominatorConvention::PaperExpanded => euclid,
        DenominatorConvention::Lorentzian => lorentz,
    };
    if denominator.abs() <= tol.zero_tol * euclid.max(tol.zero_tol) {
        return Err(Error::UndefinedParameter { denominator });
    }
    Ok(ParameterValue {
        numerator,
        denominator,
        value: numerator / denominator,
    })
}

/// Surface classification by the sign of the first fundamental form's
/// determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceCausalType {
    /// Induced metric is Lorentzian (determinant negative).
    Timelike,
    /// Induced metric is positive definite (determinant positive).
    Spacelike,
    /// Induced metric degenerates at the point.
    Degenerate,
}

impl fmt::Display for SurfaceCausalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SurfaceCausalType::Timelike => "timelike",
            SurfaceCausalType::Spacelike => "spacelike",
            SurfaceCausalType::Degenerate => "degenerate",
        };
        f.write_str(s)
    }
}

/// Base curve of a ruled surface: the timelike curve itself or a companion
/// integrated in its frame.
#[derive(Clone)]
pub enum BaseCurve {
    Alpha(Arc<ProperTimeCurve>),
    Companion(Arc<CompanionCurve>),
}

/// `Phi(s, v) = base(s) + v X(s)` with `X` carried by the frame of the
/// timelike curve.
#[derive(Clone)]
pub struct RuledSurface {
    base: BaseCurve,
    director: FrameCoefficients,
}

impl fmt::Debug for RuledSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match &self.base {
            BaseCurve::Alpha(_) => "alpha".to_string(),
            BaseCurve::Companion(c) => format!("companion {:?}", c.spec().lambda()),
        };
        write!(
            f,
            "RuledSurface {{ base: {}, director: {:?} }}",
            base,
            self.director.as_array()
        )
    }
}

impl RuledSurface {
    pub fn over_alpha(curve: Arc<ProperTimeCurve>, director: FrameCoefficients) -> Self {
        Self {
            base: BaseCurve::Alpha(curve),
            director,
        }
    }

    pub fn over_companion(companion: Arc<CompanionCurve>, director: FrameCoefficients) -> Self {
        Self {
            base: BaseCurve::Companion(companion),
            director,
        }
    }

    /// The timelike curve whose Frenet frame carries the director.
    pub fn frame_source(&self) -> &Arc<ProperTimeCurve> {
        match &self.base {
            BaseCurve::Alpha(c) => c,
            BaseCurve::Companion(c) => c.base(),
        }
    }

    pub fn director(&self) -> &FrameCoefficients {
        &self.director
    }

    pub fn base(&self) -> &BaseCurve {
        &self.base
    }

    /// Frame coefficients of `base'`: the companion's triple, or `(1, 0, 0)`
    /// since `alpha' = T`.
    pub fn base_lambda(&self) -> [f64; 3] {
        match &self.base {
            BaseCurve::Alpha(_) => [1.0, 0.0, 0.0],
            BaseCurve::Companion(c) => c.spec().lambda(),
        }
    }

    pub fn base_point(&self, s: f64) -> Result<Vec3> {
        match &self.base {
            BaseCurve::Alpha(c) => c.position(s),
            BaseCurve::Companion(c) => c.position(s),
        }
    }

    pub fn base_derivative(&self, s: f64) -> Result<Vec3> {
        match &self.base {
            BaseCurve::Alpha(c) => c.derivative(s, 1),
            BaseCurve::Companion(c) => c.derivative(s),
        }
    }

    pub fn frame(&self, s: f64) -> Result<FrenetFrame> {
        frenet_apparatus(self.frame_source(), s)
    }

    /// Surface point `base(s) + v X(s)`.
    pub fn point(&self, s: f64, v: f64) -> Result<Vec3> {
        let frame = self.frame(s)?;
        Ok(self.base_point(s)? + self.director.ambient(&frame) * v)
    }

    /// Causal type of the induced metric at `(s, v)`.
    ///
    /// Fails with [`Error::SingularPoint`] where the two coordinate tangents
    /// are linearly dependent.
    pub fn causal_type(&self, s: f64, v: f64, tol: &Tolerance) -> Result<SurfaceCausalType> {
        let frame = self.frame(s)?;
        let phi_s = self.base_derivative(s)? + self.director.derivative_ambient(&frame) * v;
        let phi_v = self.director.ambient(&frame);
        let cross = phi_s.lorentz_cross(&phi_v);
        let scale = phi_s.euclid_norm() * phi_v.euclid_norm();
        if cross.euclid_norm() <= tol.zero_tol * scale.max(tol.zero_tol) {
            return Err(Error::SingularPoint { s, v });
        }
        let g11 = phi_s.inner_sq();
        let g12 = phi_s.inner(&phi_v);
        let g22 = phi_v.inner_sq();
        let det = g11 * g22 - g12 * g12;
        let det_scale = phi_s.euclid_norm_sq() * phi_v.euclid_norm_sq();
        Ok(if det.abs() <= tol.zero_tol * det_scale.max(tol.zero_tol) {
            SurfaceCausalType::Degenerate
        } else if det < 0.0 {
            SurfaceCausalType::Timelike
        } else {
            SurfaceCausalType::Spacelike
        })
    }

    /// Closed-form distribution parameter at `s`.
    pub fn closed_form_at(
        &self,
        s: f64,
        convention: DenominatorConvention,
        tol: &Tolerance,
    ) -> Result<DistributionReport> {
        let frame = self.frame(s)?;
        let p = closed_form_p(
            self.base_lambda(),
            &self.director,
            frame.k1,
            frame.k2,
            convention,
            tol,
        )?;
        Ok(DistributionReport {
            s,
            convention,
            numerator: p.numerator,
            denominator: p.denominator,
            value: p.value,
        })
    }

    /// Distribution parameter evaluated literally: the plain component
    /// determinant of `(base', X, X')` in ambient coordinates, with `base'`
    /// and `X'` obtained by finite differences of positions and of the
    /// ambient director field. Independent of every closed form above.
    pub fn oracle_at(
        &self,
        s: f64,
        convention: DenominatorConvention,
        tol: &Tolerance,
    ) -> Result<DistributionReport> {
        let h = tol.fd_step;
        let frame0 = self.frame(s)?;

        let base_vals = [
            self.base_point(s + h)?,
            self.base_point(s - h)?,
            self.base_point(s + 0.5 * h)?,
            self.base_point(s - 0.5 * h)?,
        ];
        let base_prime = richardson4(base_vals, h);

        let x_at = |frame: &FrenetFrame| self.director.ambient(frame);
        let x_vals = [
            x_at(&self.frame(s + h)?),
            x_at(&self.frame(s - h)?),
            x_at(&self.frame(s + 0.5 * h)?),
            x_at(&self.frame(s - 0.5 * h)?),
        ];
        let x_prime = richardson4(x_vals, h);
        let x0 = x_at(&frame0);

        let numerator = det3(&base_prime, &x0, &x_prime);
        let w = frame0.project(&x_prime);
        let euclid = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
        let denominator = match convention {
            DenominatorConvention::PaperExpanded => euclid,
            DenominatorConvention::Lorentzian => x_prime.inner_sq(),
        };
        if denominator.abs() <= tol.zero_tol * euclid.max(tol.zero_tol) {
            return Err(Error::UndefinedParameter { denominator });
        }
        Ok(DistributionReport {
            s,
            convention,
            numerator,
            denominator,
            value: numerator / denominator,
        })
    }

    /// Central point of the ruling at `s` (foot of the common perpendicular
    /// of neighbouring rulings):
    ///
    /// ```text
    /// striction(s) = base(s) - (<base', X'> / <X', X'>) X(s)
    /// ```
    ///
    /// with Lorentzian products throughout. Undefined on cylinders and where
    /// `X'` is lightlike.
    pub fn striction_point(&self, s: f64, tol: &Tolerance) -> Result<StrictionPoint> {
        let frame = self.frame(s)?;
        let w = self.director.derivative_frame(frame.k1, frame.k2);
        let euclid_sq = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
        let k_scale = frame.k1.abs() + frame.k2.abs();
        if euclid_sq.sqrt() <= tol.zero_tol * k_scale.max(1.0) {
            return Err(Error::CylinderStriction { s });
        }
        let lorentz = -w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
        if lorentz.abs() <= tol.zero_tol * euclid_sq {
            return Err(Error::NullRulingDerivative {
                s,
                norm_sq: lorentz,
            });
        }
        let lambda = self.base_lambda();
        // <base', X'> in frame components; the tangent slot carries -1
        let pairing = -lambda[0] * w[0] + lambda[1] * w[1] + lambda[2] * w[2];
        let offset = pairing / lorentz;
        let point = self.base_point(s)? - self.director.ambient(&frame) * offset;
        let lambda_norm = (lambda[0] * lambda[0] + lambda[1] * lambda[1] + lambda[2] * lambda[2])
            .sqrt();
        let coincides = pairing.abs() <= tol.zero_tol * (lambda_norm * euclid_sq.sqrt()).max(tol.zero_tol);
        Ok(StrictionPoint {
            s,
            point,
            offset,
            coincides_with_base: coincides,
        })
    }
}

fn richardson4(vals: [Vec3; 4], h: f64) -> Vec3 {
    let [fp, fm, fph, fmh] = vals;
    let full = (fp - fm) / (2.0 * h);
    let half = (fph - fmh) / h;
    (4.0 * half - full) / 3.0
}

/// One point of the striction curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrictionPoint {
    pub s: f64,
    pub point: Vec3,
    /// `<base', X'> / <X', X'>`, the signed ruling offset to the central point.
    pub offset: f64,
    /// The central point sits on the base curve itself.
    pub coincides_with_base: bool,
}

/// Grid-level developability verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct DevelopabilityVerdict {
    pub developable: bool,
    pub cylinder: bool,
    /// Largest `|P|` over the defined grid points; `None` when `P` is
    /// undefined everywhere (cylinders).
    pub max_abs_p: Option<f64>,
    /// `(s, P)` at the extreme values of `P` over the grid.
    pub witnesses: Vec<(f64, f64)>,
    /// Grid points where the denominator vanished; recorded, not fatal.
    pub undefined_count: usize,
}

/// Decides developability by `max |P| <= p_tol` over the grid, or by the
/// cylinder test. Undefined points are counted and excluded.
pub fn developability_verdict(
    surface: &RuledSurface,
    grid: &[f64],
    convention: DenominatorConvention,
    p_tol: f64,
    tol: &Tolerance,
) -> Result<DevelopabilityVerdict> {
    assert!(grid.len() >= 2, "verdict needs at least two samples");
    let cylinder = cylinder_check(surface, grid, tol)?;
    let mut undefined = 0usize;
    let mut values: Vec<(f64, f64)> = Vec::with_capacity(grid.len());
    for &s in grid {
        match surface.closed_form_at(s, convention, tol) {
            Ok(rep) => values.push((s, rep.value)),
            Err(Error::UndefinedParameter { .. }) => undefined += 1,
            Err(e) => return Err(e),
        }
    }
    let max_abs_p = values
        .iter()
        .map(|&(_, p)| p.abs())
        .fold(None, |m: Option<f64>, v| Some(m.map_or(v, |m| m.max(v))));
    let mut witnesses = Vec::new();
    if !values.is_empty() {
        let hi = values
            .iter()
            .cloned()
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        let lo = values
            .iter()
            .cloned()
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        witnesses.push(hi);
        if lo != hi {
            witnesses.push(lo);
        }
    }
    let developable = cylinder || max_abs_p.is_some_and(|m| m <= p_tol);
    Ok(DevelopabilityVerdict {
        developable,
        cylinder,
        max_abs_p,
        witnesses,
        undefined_count: undefined,
    })
}

/// True when the ruling direction is constant over the grid (`X' = 0`
/// everywhere, i.e. `x2 = 0` and `x1 k1 = x3 k2`).
pub fn cylinder_check(surface: &RuledSurface, grid: &[f64], tol: &Tolerance) -> Result<bool> {
    let mut worst: f64 = 0.0;
    let mut k_scale: f64 = 0.0;
    for &s in grid {
        let frame = surface.frame(s)?;
        let xp = surface.director().derivative_ambient(&frame);
        worst = worst.max(xp.euclid_norm());
        k_scale = k_scale.max(frame.k1.abs() + frame.k2.abs());
    }
    Ok(worst <= tol.zero_tol * k_scale.max(1.0))
}

/// Zero conditions of the distribution parameter, as `h - target` residuals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HelixVariant {
    /// Base curve itself, generic director: `h = (x2^2 + x3^2)/(x1 x3)`.
    AlphaGeneral,
    /// Base curve, rectifying director: `h = x3/x1`.
    RectifyingAlpha,
    /// Companion `beta' = N`: `h = x1/x3`.
    BetaN,
    /// Companion `beta' = B`: `h = x1 x3/(x1^2 - x2^2)`.
    BetaB,
}

/// Residual `h - target(x)` of the developability condition for the chosen
/// configuration. The target ratios are the determinant-validated forms.
pub fn helix_condition(
    x: &FrameCoefficients,
    h: f64,
    variant: HelixVariant,
    tol: &Tolerance,
) -> Result<f64> {
    let (num, den) = match variant {
        HelixVariant::AlphaGeneral => (x.x2() * x.x2() + x.x3() * x.x3(), x.x1() * x.x3()),
        HelixVariant::RectifyingAlpha => (x.x3(), x.x1()),
        HelixVariant::BetaN => (x.x1(), x.x3()),
        HelixVariant::BetaB => (x.x1() * x.x3(), x.x1() * x.x1() - x.x2() * x.x2()),
    };
    if den.abs() <= tol.zero_tol {
        return Err(Error::DegenerateRatio { denominator: den });
    }
    Ok(h - num / den)
}

/// Constancy report for `k1/(k1^2 + k2^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MannheimReport {
    pub constant: bool,
    pub mean: f64,
    pub relative_spread: f64,
}

/// Tests constancy of `k1/(k1^2 + k2^2)` over the grid; constancy of that
/// ratio is the Mannheim condition attached to the normal-director surface
/// of the companion `beta' = B`.
pub fn mannheim_constancy(
    curve: &ProperTimeCurve,
    grid: &[f64],
    spread_tol: f64,
) -> Result<MannheimReport> {
    assert!(grid.len() >= 2, "constancy needs at least two samples");
    let mut vals = Vec::with_capacity(grid.len());
    for &s in grid {
        let f = frenet_apparatus(curve, s)?;
        vals.push(f.k1 / (f.k1 * f.k1 + f.k2 * f.k2));
    }
    let mean = vals.iter().sum::<f64>() / vals.len() as f64;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &v in &vals {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let spread = (hi - lo) / mean.abs().max(f64::MIN_POSITIVE);
    Ok(MannheimReport {
        constant: spread <= spread_tol,
        mean,
        relative_spread: spread,
    })
}

// --- case table ----------------------------------------------------------------

/// Which curve the ruled surface is swept along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseFamily {
    /// The timelike base curve itself.
    Alpha,
    /// Companion with `beta' = T`.
    BetaT,
    /// Companion with `beta' = N`.
    BetaN,
    /// Companion with `beta' = B`.
    BetaB,
}

impl BaseFamily {
    pub const ALL: [BaseFamily; 4] = [
        BaseFamily::Alpha,
        BaseFamily::BetaT,
        BaseFamily::BetaN,
        BaseFamily::BetaB,
    ];

    pub fn lambda(&self) -> [f64; 3] {
        match self {
            BaseFamily::Alpha | BaseFamily::BetaT => [1.0, 0.0, 0.0],
            BaseFamily::BetaN => [0.0, 1.0, 0.0],
            BaseFamily::BetaB => [0.0, 0.0, 1.0],
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            BaseFamily::Alpha => "alpha",
            BaseFamily::BetaT => "beta'=T",
            BaseFamily::BetaN => "beta'=N",
            BaseFamily::BetaB => "beta'=B",
        }
    }
}

/// One row of the case catalogue: a base family crossed with a director case.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseRow {
    pub family: BaseFamily,
    pub case: PlaneClass,
    pub coefficients: [f64; 3],
    /// Numerator as a function of the curvatures: `k1_coeff k1 + k2_coeff k2`.
    pub k1_coeff: f64,
    pub k2_coeff: f64,
    pub max_abs_p: Option<f64>,
    pub mean_p: Option<f64>,
    pub undefined_points: usize,
    /// Largest relative deviation between closed form and determinant oracle
    /// over the sampled subgrid.
    pub oracle_max_rel_dev: f64,
    pub developable: bool,
    pub cylinder: bool,
}

fn case_samples(tol: &Tolerance) -> Vec<(PlaneClass, FrameCoefficients)> {
    let mk = |x1: f64, x2: f64, x3: f64| FrameCoefficients::normalized(x1, x2, x3, tol).unwrap();
    vec![
        (PlaneClass::AxisT, mk(1.0, 0.0, 0.0)),
        (PlaneClass::AxisN, mk(0.0, 1.0, 0.0)),
        (PlaneClass::AxisB, mk(0.0, 0.0, 1.0)),
        (PlaneClass::NormalPlane, mk(0.0, 0.6, 0.8)),
        (PlaneClass::OsculatingPlane, mk(0.5, 1.25f64.sqrt(), 0.0)),
        (PlaneClass::RectifyingPlane, mk(0.5, 0.0, 1.25f64.sqrt())),
    ]
}

/// Evaluates the whole special-case catalogue over a grid: every base family
/// (the curve itself and the three axis companions) against every axis and
/// coordinate-plane director. Each row carries the symbolic numerator
/// coefficients, grid statistics of `P`, an oracle cross-check and the
/// developability verdict.
pub fn case_table(
    alpha: &Arc<ProperTimeCurve>,
    grid: &[f64],
    convention: DenominatorConvention,
    tol: &Tolerance,
) -> Result<Vec<CaseRow>> {
    use crate::companion::{integrate_companion, CompanionSpec};
    assert!(grid.len() >= 2, "case table needs at least two samples");

    let mut rows = Vec::with_capacity(4 * 6);
    for family in BaseFamily::ALL {
        let base = match family {
            BaseFamily::Alpha => BaseCurve::Alpha(Arc::clone(alpha)),
            _ => {
                let start = alpha.position(grid[0])?;
                let spec = CompanionSpec::new(family.lambda(), start, tol)?;
                BaseCurve::Companion(Arc::new(integrate_companion(
                    Arc::clone(alpha),
                    spec,
                    tol,
                )?))
            }
        };
        for (case, x) in case_samples(tol) {
            let surface = RuledSurface {
                base: base.clone(),
                director: x,
            };
            let (c1, c2) = numerator_coefficients(surface.base_lambda(), &x);
            let verdict = developability_verdict(&surface, grid, convention, P_VERDICT_TOL, tol)?;

            let mut mean = 0.0;
            let mut defined = 0usize;
            for &s in grid {
                if let Ok(rep) = surface.closed_form_at(s, convention, tol) {
                    mean += rep.value;
                    defined += 1;
                }
            }
            let mean_p = (defined > 0).then(|| mean / defined as f64);

            // oracle spot checks on interior points
            let (lo, hi) = surface.frame_source().s_domain();
            let margin = 2.0 * tol.fd_step;
            let mut dev: f64 = 0.0;
            for &s in grid.iter().step_by((grid.len() / 8).max(1)) {
                if s - margin <= lo || s + margin >= hi {
                    continue;
                }
                let closed = surface.closed_form_at(s, convention, tol);
                let oracle = surface.oracle_at(s, convention, tol);
                match (closed, oracle) {
                    (Ok(c), Ok(o)) => {
                        let scale = c.value.abs().max(1.0);
                        dev = dev.max((c.value - o.value).abs() / scale);
                    }
                    (Err(Error::UndefinedParameter { .. }), Err(Error::UndefinedParameter { .. })) => {}
                    (Ok(c), Err(Error::UndefinedParameter { .. })) => {
                        // numerator comparison still applies on cylinders
                        dev = dev.max(c.numerator.abs());
                    }
                    (Err(e), _) | (_, Err(e)) => return Err(e),
                }
            }

            rows.push(CaseRow {
                family,
                case,
                coefficients: x.as_array(),
                k1_coeff: c1,
                k2_coeff: c2,
                max_abs_p: verdict.max_abs_p,
                mean_p,
                undefined_points: verdict.undefined_count,
                oracle_max_rel_dev: dev,
                developable: verdict.developable,
                cylinder: verdict.cylinder,
            });
        }
    }
    Ok(rows)
}
