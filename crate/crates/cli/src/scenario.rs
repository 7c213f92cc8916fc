//! Scenario files: the JSON schema, its validation, and construction of the
//! curve, companion and surface objects a scenario describes.
//!
//! Unknown keys are hard errors; every validation message names the field it
//! refers to. The requested arc window `[s_min, s_max]` is embedded into the
//! curve with an interior margin so that finite-difference stencils never
//! leave the domain.

use crate::CliError;
use drall_core::{
    circular_timelike_helix, hyperbolic_timelike_helix, integrate_companion,
    planar_timelike_curve, reparametrize_proper_time, timelike_line, CausalSign, CompanionSpec,
    DenominatorConvention, Error as CoreError, FrameCoefficients, ProperTimeCurve, RuledSurface,
    Tolerance, P_VERDICT_TOL,
};
use serde::Deserialize;
use std::sync::Arc;

/// Interior padding (in arc length) between the requested window and the
/// curve's construction domain.
pub const S_MARGIN: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    CircularHelix,
    HyperbolicHelix,
    Line,
    PlanarFixture,
}

impl CurveKind {
    pub fn label(&self) -> &'static str {
        match self {
            CurveKind::CircularHelix => "circular_helix",
            CurveKind::HyperbolicHelix => "hyperbolic_helix",
            CurveKind::Line => "line",
            CurveKind::PlanarFixture => "planar_fixture",
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveConfig {
    pub kind: CurveKind,
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BaseConfig {
    /// Sweep along the timelike curve itself.
    Alpha,
    /// Sweep along the companion with `beta' = l1 T + l2 N + l3 B`.
    Companion([f64; 3]),
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirectorConfig {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    /// `+1` for a spacelike director, `-1` for a timelike one.
    pub causal_sign: i8,
    /// Scale the coefficients onto the unit constraint before validating.
    #[serde(default)]
    pub normalize: bool,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub s_min: f64,
    pub s_max: f64,
    pub n_s: usize,
    pub v_min: f64,
    pub v_max: f64,
    pub n_v: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionConfig {
    Paper,
    Lorentzian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputKind {
    Report,
    Mesh,
    Sweep,
    Striction,
    CaseTable,
}

/// One analysis scenario as read from disk.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub curve: CurveConfig,
    pub base: BaseConfig,
    pub director: DirectorConfig,
    pub grid: GridConfig,
    pub convention: ConventionConfig,
    pub outputs: Vec<OutputKind>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let scenario: Scenario =
            serde_json::from_str(text).map_err(|e| CliError::Config(format!("scenario: {e}")))?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn wants(&self, kind: OutputKind) -> bool {
        self.outputs.contains(&kind)
    }

    // negated comparisons here also reject NaN, which `>=` would let through
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    fn validate(&self) -> Result<(), CliError> {
        let c = &self.curve;
        match c.kind {
            CurveKind::CircularHelix => {
                if !(c.a > 0.0 && c.b > c.a) {
                    return Err(CliError::Config(format!(
                        "curve.a/curve.b: circular_helix is timelike only for b > a > 0 (got a = {}, b = {})",
                        c.a, c.b
                    )));
                }
            }
            CurveKind::HyperbolicHelix => {
                if !(c.b > 0.0 && c.a > c.b) {
                    return Err(CliError::Config(format!(
                        "curve.a/curve.b: hyperbolic_helix is timelike only for a > b > 0 (got a = {}, b = {})",
                        c.a, c.b
                    )));
                }
            }
            CurveKind::Line | CurveKind::PlanarFixture => {}
        }
        let g = &self.grid;
        if !(g.s_min < g.s_max) {
            return Err(CliError::Config(format!(
                "grid.s_min/grid.s_max: need s_min < s_max (got {} and {})",
                g.s_min, g.s_max
            )));
        }
        if g.n_s < 2 {
            return Err(CliError::Config(format!(
                "grid.n_s: need at least 2 samples (got {})",
                g.n_s
            )));
        }
        if g.n_v < 2 {
            return Err(CliError::Config(format!(
                "grid.n_v: need at least 2 samples (got {})",
                g.n_v
            )));
        }
        if !(g.v_min < g.v_max) {
            return Err(CliError::Config(format!(
                "grid.v_min/grid.v_max: need v_min < v_max (got {} and {})",
                g.v_min, g.v_max
            )));
        }
        if self.director.causal_sign != 1 && self.director.causal_sign != -1 {
            return Err(CliError::Config(format!(
                "director.causal_sign: must be 1 or -1 (got {})",
                self.director.causal_sign
            )));
        }
        Ok(())
    }
}

/// Command-line overrides applied on top of a scenario file.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub convention: Option<DenominatorConvention>,
    pub p_tol: Option<f64>,
    pub grid: Option<(usize, usize)>,
}

/// A scenario with all geometric objects constructed and ready to evaluate.
#[derive(Debug)]
pub struct BuiltScenario {
    pub scenario: Scenario,
    pub alpha: Arc<ProperTimeCurve>,
    pub surface: RuledSurface,
    pub director: FrameCoefficients,
    pub convention: DenominatorConvention,
    pub p_tol: f64,
    pub tol: Tolerance,
    /// Internal arc parameter of the user's `s = s_min`.
    s_base: f64,
    n_s: usize,
    n_v: usize,
}

fn config_error(context: &str, e: CoreError) -> CliError {
    match e {
        CoreError::NullDirector { .. }
        | CoreError::CausalConstraintViolation { .. }
        | CoreError::NullCompanion { .. }
        | CoreError::NotTimelike { .. }
        | CoreError::InvalidTolerance { .. } => CliError::Config(format!("{context}: {e}")),
        other => CliError::Numeric(other),
    }
}

impl BuiltScenario {
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN overrides too
    pub fn build(scenario: Scenario, overrides: &Overrides) -> Result<Self, CliError> {
        let tol = Tolerance::default();
        let convention = overrides.convention.unwrap_or(match scenario.convention {
            ConventionConfig::Paper => DenominatorConvention::PaperExpanded,
            ConventionConfig::Lorentzian => DenominatorConvention::Lorentzian,
        });
        let p_tol = overrides.p_tol.unwrap_or(P_VERDICT_TOL);
        if !(p_tol > 0.0) {
            return Err(CliError::Config(format!(
                "--tol: must be positive (got {p_tol})"
            )));
        }
        let (n_s, n_v) = overrides.grid.unwrap_or((scenario.grid.n_s, scenario.grid.n_v));
        if n_s < 2 || n_v < 2 {
            return Err(CliError::Config(format!(
                "--grid: both sample counts need to be at least 2 (got {n_s}x{n_v})"
            )));
        }

        let c = &scenario.curve;
        let g = &scenario.grid;
        // constant proper speed of each catalogue curve fixes the t window
        let sigma = match c.kind {
            CurveKind::CircularHelix => (c.b * c.b - c.a * c.a).sqrt(),
            CurveKind::HyperbolicHelix => (c.a * c.a - c.b * c.b).sqrt(),
            CurveKind::Line | CurveKind::PlanarFixture => 1.0,
        };
        let t_window = (
            (g.s_min - S_MARGIN) / sigma,
            (g.s_max + S_MARGIN) / sigma,
        );
        let curve = match c.kind {
            CurveKind::CircularHelix => circular_timelike_helix(c.a, c.b, t_window),
            CurveKind::HyperbolicHelix => hyperbolic_timelike_helix(c.a, c.b, t_window),
            CurveKind::Line => timelike_line(t_window),
            CurveKind::PlanarFixture => planar_timelike_curve(t_window),
        };
        let alpha = Arc::new(
            reparametrize_proper_time(curve, &tol).map_err(|e| config_error("curve", e))?,
        );
        let s_base = S_MARGIN;

        let d = &scenario.director;
        let director = if d.normalize {
            let x = FrameCoefficients::normalized(d.x1, d.x2, d.x3, &tol)
                .map_err(|e| config_error("director", e))?;
            let declared = if d.causal_sign == 1 {
                CausalSign::Spacelike
            } else {
                CausalSign::Timelike
            };
            if x.causal_sign() != declared {
                return Err(CliError::Config(format!(
                    "director.causal_sign: {} was declared but the direction is {}",
                    d.causal_sign,
                    match x.causal_sign() {
                        CausalSign::Spacelike => "spacelike (+1)",
                        CausalSign::Timelike => "timelike (-1)",
                    }
                )));
            }
            x
        } else {
            let sign = if d.causal_sign == 1 {
                CausalSign::Spacelike
            } else {
                CausalSign::Timelike
            };
            FrameCoefficients::new(d.x1, d.x2, d.x3, sign, &tol)
                .map_err(|e| config_error("director", e))?
        };

        let surface = match scenario.base {
            BaseConfig::Alpha => RuledSurface::over_alpha(Arc::clone(&alpha), director),
            BaseConfig::Companion(lambda) => {
                let start = alpha
                    .position(s_base)
                    .map_err(CliError::Numeric)?;
                let spec = CompanionSpec::new(lambda, start, &tol)
                    .map_err(|e| config_error("base.companion", e))?;
                let beta = integrate_companion(Arc::clone(&alpha), spec, &tol)
                    .map_err(|e| config_error("base.companion", e))?;
                RuledSurface::over_companion(Arc::new(beta), director)
            }
        };

        Ok(Self {
            scenario,
            alpha,
            surface,
            director,
            convention,
            p_tol,
            tol,
            s_base,
            n_s,
            n_v,
        })
    }

    /// Internal arc parameter corresponding to a user-facing `s`.
    pub fn internal_s(&self, user_s: f64) -> f64 {
        user_s - self.scenario.grid.s_min + self.s_base
    }

    /// User-facing sample values of `s`.
    pub fn s_grid(&self) -> Vec<f64> {
        drall_core::uniform_grid(self.scenario.grid.s_min, self.scenario.grid.s_max, self.n_s)
    }

    /// Internal sample values of `s`, aligned with [`Self::s_grid`].
    pub fn internal_grid(&self) -> Vec<f64> {
        self.s_grid().iter().map(|&s| self.internal_s(s)).collect()
    }

    pub fn v_grid(&self) -> Vec<f64> {
        drall_core::uniform_grid(self.scenario.grid.v_min, self.scenario.grid.v_max, self.n_v)
    }

    pub fn n_s(&self) -> usize {
        self.n_s
    }

    pub fn n_v(&self) -> usize {
        self.n_v
    }

    /// Lambda triple of the swept base (`(1,0,0)` for the curve itself).
    pub fn lambda(&self) -> [f64; 3] {
        self.surface.base_lambda()
    }
}
