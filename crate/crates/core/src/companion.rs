//! Companion curves sharing the base curve's parameter.
//!
//! A companion `beta` is prescribed through its derivative in the base
//! frame, `beta' = l1 T + l2 N + l3 B` with constant coefficients, and is
//! recovered by quadrature. The shared parameter is the base curve's proper
//! time, not the companion's own arc length. Since the frame is orthonormal,
//! `<beta', beta'> = -l1^2 + l2^2 + l3^2` is constant in `s`; the companion
//! may be spacelike or timelike but never null.

use crate::curve::{frenet_apparatus, ProperTimeCurve};
use crate::error::{Error, Result};
use crate::minkowski::{CausalCharacter, Tolerance, Vec3};
use crate::numeric::{adaptive_simpson_vec3, uniform_grid};
use std::fmt;
use std::sync::Arc;

const COMPANION_QUAD_TOL: f64 = 1e-12;
const COMPANION_SEGMENTS: usize = 128;

/// Constant frame coefficients of a companion derivative, plus the anchor
/// point the integrated curve starts from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompanionSpec {
    lambda: [f64; 3],
    start_point: Vec3,
}

impl CompanionSpec {
    /// Rejects lightlike companion derivatives.
    pub fn new(lambda: [f64; 3], start_point: Vec3, tol: &Tolerance) -> Result<Self> {
        let q = Self::norm_sq_of(lambda);
        let scale = lambda.iter().map(|l| l * l).sum::<f64>().max(1.0);
        if q.abs() <= tol.zero_tol * scale {
            return Err(Error::NullCompanion { value: q });
        }
        Ok(Self {
            lambda,
            start_point,
        })
    }

    fn norm_sq_of(lambda: [f64; 3]) -> f64 {
        -lambda[0] * lambda[0] + lambda[1] * lambda[1] + lambda[2] * lambda[2]
    }

    pub fn lambda(&self) -> [f64; 3] {
        self.lambda
    }

    pub fn start_point(&self) -> Vec3 {
        self.start_point
    }

    /// `<beta', beta'>`, constant along the curve.
    pub fn derivative_norm_sq(&self) -> f64 {
        Self::norm_sq_of(self.lambda)
    }

    /// Causal character of the companion derivative.
    pub fn causal_character(&self) -> CausalCharacter {
        if self.derivative_norm_sq() < 0.0 {
            CausalCharacter::Timelike
        } else {
            CausalCharacter::Spacelike
        }
    }
}

/// Causal character of a prospective companion derivative, before any curve
/// is built. Fails for lightlike coefficient triples.
pub fn companion_causal_character(lambda: [f64; 3], tol: &Tolerance) -> Result<CausalCharacter> {
    CompanionSpec::new(lambda, Vec3::ZERO, tol).map(|s| s.causal_character())
}

/// A companion curve integrated over the base curve's proper-time interval.
///
/// Positions come from an eagerly built cumulative quadrature table; the
/// derivative is exact (the defining frame combination).
pub struct CompanionCurve {
    base: Arc<ProperTimeCurve>,
    spec: CompanionSpec,
    s_nodes: Vec<f64>,
    positions: Vec<Vec3>,
}

impl fmt::Debug for CompanionCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CompanionCurve {{ lambda: {:?}, start: {}, length: {} }}",
            self.spec.lambda,
            self.spec.start_point,
            self.base.length()
        )
    }
}

/// Integrates `beta' = l1 T + l2 N + l3 B` from the anchor point across the
/// base curve's full proper-time interval.
///
/// The frame must be defined everywhere the quadrature samples; a vanishing
/// curvature anywhere surfaces as [`Error::VanishingCurvature`].
pub fn integrate_companion(
    base: Arc<ProperTimeCurve>,
    spec: CompanionSpec,
    tol: &Tolerance,
) -> Result<CompanionCurve> {
    let _ = tol;
    let (s_lo, s_hi) = base.s_domain();
    let s_nodes = uniform_grid(s_lo, s_hi, COMPANION_SEGMENTS + 1);
    // probe the frame on the nodes first so frame failures surface as typed
    // errors instead of panics inside the quadrature closure
    for &s in &s_nodes {
        frenet_apparatus(&base, s)?;
    }
    let lambda = spec.lambda;
    let integrand = {
        let base = Arc::clone(&base);
        move |s: f64| {
            frenet_apparatus(&base, s)
                .expect("frame checked on nodes")
                .combine(lambda)
        }
    };
    let mut positions = Vec::with_capacity(s_nodes.len());
    positions.push(spec.start_point);
    for i in 0..COMPANION_SEGMENTS {
        let seg = adaptive_simpson_vec3(&integrand, s_nodes[i], s_nodes[i + 1], COMPANION_QUAD_TOL);
        let prev = *positions.last().unwrap();
        positions.push(prev + seg);
    }
    Ok(CompanionCurve {
        base,
        spec,
        s_nodes,
        positions,
    })
}

impl CompanionCurve {
    pub fn base(&self) -> &Arc<ProperTimeCurve> {
        &self.base
    }

    pub fn spec(&self) -> &CompanionSpec {
        &self.spec
    }

    /// Companion position at the shared parameter `s`.
    pub fn position(&self, s: f64) -> Result<Vec3> {
        let (lo, hi) = self.base.s_domain();
        let slack = 1e-9 * hi.max(1.0);
        if s < lo - slack || s > hi + slack {
            return Err(Error::OutOfDomain { value: s, lo, hi });
        }
        let s = s.clamp(lo, hi);
        let i = match self
            .s_nodes
            .binary_search_by(|n| n.partial_cmp(&s).unwrap())
        {
            Ok(i) => return Ok(self.positions[i]),
            Err(i) => i - 1,
        };
        let lambda = self.spec.lambda;
        let base = &self.base;
        let integrand = move |x: f64| {
            frenet_apparatus(base, x)
                .expect("frame defined on integrated range")
                .combine(lambda)
        };
        let seg = adaptive_simpson_vec3(&integrand, self.s_nodes[i], s, COMPANION_QUAD_TOL);
        Ok(self.positions[i] + seg)
    }

    /// Exact companion derivative `l1 T + l2 N + l3 B` at `s`.
    pub fn derivative(&self, s: f64) -> Result<Vec3> {
        Ok(frenet_apparatus(&self.base, s)?.combine(self.spec.lambda))
    }
}
