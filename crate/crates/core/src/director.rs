//! Ruling directions with constant Frenet-frame coefficients.
//!
//! A director is `X = x1 T + x2 N + x3 B` with fixed coefficients and
//! `<X,X> = -x1^2 + x2^2 + x3^2 = +-1`. Differentiating through the Frenet
//! equations gives the closed form
//!
//! ```text
//! X' = x2 k1 T + (x1 k1 - x3 k2) N + x2 k2 B
//! ```
//!
//! which every distribution-parameter formula builds on.

use crate::curve::FrenetFrame;
use crate::error::{Error, Result};
use crate::minkowski::{Tolerance, Vec3};
use std::fmt;

/// Sign of `<X,X>` for a unit director.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalSign {
    /// `<X,X> = +1`.
    Spacelike,
    /// `<X,X> = -1`.
    Timelike,
}

impl CausalSign {
    pub fn value(self) -> f64 {
        match self {
            CausalSign::Spacelike => 1.0,
            CausalSign::Timelike => -1.0,
        }
    }
}

/// Which axis or coordinate plane of the moving frame the director lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneClass {
    AxisT,
    AxisN,
    AxisB,
    /// Span of `{N, B}` (`x1 = 0`).
    NormalPlane,
    /// Span of `{T, N}` (`x3 = 0`).
    OsculatingPlane,
    /// Span of `{T, B}` (`x2 = 0`).
    RectifyingPlane,
    General,
}

impl fmt::Display for PlaneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PlaneClass::AxisT => "axis T",
            PlaneClass::AxisN => "axis N",
            PlaneClass::AxisB => "axis B",
            PlaneClass::NormalPlane => "normal plane",
            PlaneClass::OsculatingPlane => "osculating plane",
            PlaneClass::RectifyingPlane => "rectifying plane",
            PlaneClass::General => "general",
        };
        f.write_str(s)
    }
}

/// Validated constant frame coefficients of a ruling direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameCoefficients {
    x1: f64,
    x2: f64,
    x3: f64,
    causal_sign: CausalSign,
}

impl FrameCoefficients {
    /// Accepts coefficients iff `-x1^2 + x2^2 + x3^2` equals the requested
    /// sign to within `zero_tol`. Null directors are rejected outright.
    pub fn new(x1: f64, x2: f64, x3: f64, causal_sign: CausalSign, tol: &Tolerance) -> Result<Self> {
        let q = -x1 * x1 + x2 * x2 + x3 * x3;
        if q.abs() <= tol.zero_tol {
            return Err(Error::NullDirector { value: q });
        }
        if (q - causal_sign.value()).abs() > tol.zero_tol {
            return Err(Error::CausalConstraintViolation {
                value: q,
                expected: causal_sign.value(),
            });
        }
        Ok(Self {
            x1,
            x2,
            x3,
            causal_sign,
        })
    }

    /// Scales an arbitrary non-null direction onto the unit constraint and
    /// infers its causal sign.
    pub fn normalized(x1: f64, x2: f64, x3: f64, tol: &Tolerance) -> Result<Self> {
        let q = -x1 * x1 + x2 * x2 + x3 * x3;
        let scale = x1 * x1 + x2 * x2 + x3 * x3;
        if q.abs() <= tol.zero_tol * scale.max(1.0) {
            return Err(Error::NullDirector { value: q });
        }
        let sign = if q > 0.0 {
            CausalSign::Spacelike
        } else {
            CausalSign::Timelike
        };
        let inv = 1.0 / q.abs().sqrt();
        Ok(Self {
            x1: x1 * inv,
            x2: x2 * inv,
            x3: x3 * inv,
            causal_sign: sign,
        })
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }

    pub fn x3(&self) -> f64 {
        self.x3
    }

    pub fn causal_sign(&self) -> CausalSign {
        self.causal_sign
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    /// Axis and plane classification with axis precedence: an axis direction
    /// lies in two coordinate planes, and the axis label wins.
    pub fn classify_case(&self, tol: &Tolerance) -> PlaneClass {
        let z = |v: f64| v.abs() <= tol.zero_tol;
        match (z(self.x1), z(self.x2), z(self.x3)) {
            (false, true, true) => PlaneClass::AxisT,
            (true, false, true) => PlaneClass::AxisN,
            (true, true, false) => PlaneClass::AxisB,
            (true, false, false) => PlaneClass::NormalPlane,
            (false, false, true) => PlaneClass::OsculatingPlane,
            (false, true, false) => PlaneClass::RectifyingPlane,
            (false, false, false) => PlaneClass::General,
            // all three zero cannot pass validation
            (true, true, true) => PlaneClass::General,
        }
    }

    /// Ambient direction `x1 T + x2 N + x3 B` at the given frame.
    pub fn ambient(&self, frame: &FrenetFrame) -> Vec3 {
        frame.combine([self.x1, self.x2, self.x3])
    }

    /// Frame components of `X'`, from the Frenet equations:
    /// `(x2 k1, x1 k1 - x3 k2, x2 k2)`.
    pub fn derivative_frame(&self, k1: f64, k2: f64) -> [f64; 3] {
        [
            self.x2 * k1,
            self.x1 * k1 - self.x3 * k2,
            self.x2 * k2,
        ]
    }

    /// Ambient `X'` at the given frame.
    pub fn derivative_ambient(&self, frame: &FrenetFrame) -> Vec3 {
        frame.combine(self.derivative_frame(frame.k1, frame.k2))
    }
}
