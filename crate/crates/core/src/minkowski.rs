//! Lorentzian vector algebra of Minkowski 3-space.
//!
//! The ambient space is R^3 with the scalar product
//! `<u,v> = u.x*v.x + u.y*v.y - u.z*v.z`; the `z` axis is the timelike one.
//! The cross product is fixed by the identity `<u x v, w> = det(u, v, w)`
//! for all `w`, where `det` is the plain component determinant. That single
//! convention makes the Frenet equations of timelike curves hold with
//! nonnegative curvature downstream.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Numerical thresholds used across the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Relative threshold below which a scalar counts as zero.
    pub zero_tol: f64,
    /// Base step for first-order finite differences. Higher derivative
    /// orders widen the step (see the numeric module) because the `h^k`
    /// divisor amplifies roundoff.
    pub fd_step: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            zero_tol: 1e-9,
            fd_step: 1e-5,
        }
    }
}

impl Tolerance {
    /// Admissible ranges: `0 < zero_tol < 1e-3`, `0 < fd_step < 1e-2`.
    pub fn new(zero_tol: f64, fd_step: f64) -> Result<Self> {
        if !(zero_tol > 0.0 && zero_tol < 1e-3) {
            return Err(Error::InvalidTolerance {
                field: "zero_tol",
                value: zero_tol,
            });
        }
        if !(fd_step > 0.0 && fd_step < 1e-2) {
            return Err(Error::InvalidTolerance {
                field: "fd_step",
                value: fd_step,
            });
        }
        Ok(Self { zero_tol, fd_step })
    }
}

/// Causal class of a vector under the Lorentzian scalar product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalCharacter {
    /// `<u,u> > 0` (or any nonzero vector in the spacelike cone).
    Spacelike,
    /// `<u,u> < 0`.
    Timelike,
    /// Nonzero vector with `<u,u> = 0` to tolerance.
    Null,
    /// The zero vector.
    Zero,
}

impl fmt::Display for CausalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CausalCharacter::Spacelike => "spacelike",
            CausalCharacter::Timelike => "timelike",
            CausalCharacter::Null => "null",
            CausalCharacter::Zero => "zero",
        };
        f.write_str(s)
    }
}

/// A vector of Minkowski 3-space in the fixed ambient basis.
///
/// `z` carries the metric sign -1.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Lorentzian scalar product `u.x*v.x + u.y*v.y - u.z*v.z`.
    pub fn inner(&self, other: &Vec3) -> f64 {
        debug_assert!(self.is_finite() && other.is_finite());
        self.x * other.x + self.y * other.y - self.z * other.z
    }

    /// Lorentzian square `<u,u>`.
    pub fn inner_sq(&self) -> f64 {
        self.inner(self)
    }

    /// Euclidean norm of the component triple (used for scale estimates,
    /// never as a geometric quantity).
    pub fn euclid_norm(&self) -> f64 {
        self.euclid_norm_sq().sqrt()
    }

    pub fn euclid_norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Cross product satisfying `<u x v, w> = det(u, v, w)` for all `w`.
    pub fn lorentz_cross(&self, other: &Vec3) -> Vec3 {
        debug_assert!(self.is_finite() && other.is_finite());
        Vec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: -(self.x * other.y - self.y * other.x),
        }
    }

    /// Causal classification with relative null detection: exact zeros occur
    /// only analytically, so near-null vectors from finite differences are
    /// classified as null.
    pub fn causal_character(&self, tol: &Tolerance) -> CausalCharacter {
        let e2 = self.euclid_norm_sq();
        if e2.sqrt() <= tol.zero_tol {
            return CausalCharacter::Zero;
        }
        let q = self.inner_sq();
        if q.abs() <= tol.zero_tol * e2 {
            CausalCharacter::Null
        } else if q < 0.0 {
            CausalCharacter::Timelike
        } else {
            CausalCharacter::Spacelike
        }
    }

    /// Scales the vector so that `<w,w> = +-1`, reporting its character.
    ///
    /// Null and zero vectors have no Lorentzian unit multiple.
    pub fn normalize(&self, tol: &Tolerance) -> Result<(Vec3, CausalCharacter)> {
        let character = self.causal_character(tol);
        match character {
            CausalCharacter::Null | CausalCharacter::Zero => Err(Error::NullOrZeroVector {
                norm_sq: self.inner_sq(),
            }),
            _ => {
                let scale = self.inner_sq().abs().sqrt();
                Ok((*self / scale, character))
            }
        }
    }
}

/// Plain 3x3 component determinant of three row vectors.
pub fn det3(u: &Vec3, v: &Vec3, w: &Vec3) -> f64 {
    u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) + u.z * (v.x * w.y - v.y * w.x)
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, rhs: f64) -> Vec3 {
        Vec3::new(self.x * rhs, self.y * rhs, self.z * rhs)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, rhs: Vec3) -> Vec3 {
        rhs * self
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    fn div(self, rhs: f64) -> Vec3 {
        Vec3::new(self.x / rhs, self.y / rhs, self.z / rhs)
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}
