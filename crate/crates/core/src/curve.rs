//! Timelike parametric curves, proper-time (arc-length) reparametrization and
//! the Frenet apparatus.
//!
//! A curve enters as a `ParamCurve` in an arbitrary parameter `t`. Passing it
//! through [`reparametrize_proper_time`] yields a [`ProperTimeCurve`] whose
//! parameter `s` satisfies `<a'(s), a'(s)> = -1`, the setting every formula
//! downstream assumes. For a unit-speed timelike curve the frame is
//!
//! ```text
//! T = a',   k1 = |T'|,   N = T'/k1,   B = T x N,   k2 = <N', B>
//! ```
//!
//! with `T` timelike and `N`, `B` spacelike, and the Frenet equations read
//! `T' = k1 N`, `N' = k1 T + k2 B`, `B' = -k2 N`.

use crate::error::{Error, Result};
use crate::minkowski::{Tolerance, Vec3};
use crate::numeric::{
    adaptive_simpson, richardson_central, solve_increasing, stencil_reach, uniform_grid,
};
use std::fmt;
use std::sync::Arc;

/// Curvature below this threshold leaves the frame undefined.
pub const FRAME_TOL: f64 = 1e-9;

/// Relative spread of `k1/k2` below which a curve counts as a helix.
pub const HELIX_TOL: f64 = 1e-6;

type Sampler = Arc<dyn Fn(f64) -> Vec3 + Send + Sync>;

/// How parameter derivatives of a curve are obtained.
#[derive(Clone)]
pub enum DerivativeMode {
    /// Closed-form derivatives supplied up to order 3.
    Analytic {
        d1: Sampler,
        d2: Sampler,
        d3: Sampler,
    },
    /// Richardson-extrapolated central differences on the sampler.
    FiniteDifference { fd_step: f64 },
}

/// A C^3 parametric curve `t -> Vec3` on a closed interval.
#[derive(Clone)]
pub struct ParamCurve {
    sampler: Sampler,
    mode: DerivativeMode,
    domain: (f64, f64),
}

impl fmt::Debug for ParamCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            DerivativeMode::Analytic { .. } => "analytic",
            DerivativeMode::FiniteDifference { .. } => "finite-difference",
        };
        write!(f, "ParamCurve {{ domain: {:?}, mode: {} }}", self.domain, mode)
    }
}

impl ParamCurve {
    pub fn analytic<F, D1, D2, D3>(sampler: F, d1: D1, d2: D2, d3: D3, domain: (f64, f64)) -> Self
    where
        F: Fn(f64) -> Vec3 + Send + Sync + 'static,
        D1: Fn(f64) -> Vec3 + Send + Sync + 'static,
        D2: Fn(f64) -> Vec3 + Send + Sync + 'static,
        D3: Fn(f64) -> Vec3 + Send + Sync + 'static,
    {
        assert!(domain.0 < domain.1, "empty parameter interval");
        Self {
            sampler: Arc::new(sampler),
            mode: DerivativeMode::Analytic {
                d1: Arc::new(d1),
                d2: Arc::new(d2),
                d3: Arc::new(d3),
            },
            domain,
        }
    }

    pub fn finite_difference<F>(sampler: F, domain: (f64, f64), fd_step: f64) -> Self
    where
        F: Fn(f64) -> Vec3 + Send + Sync + 'static,
    {
        assert!(domain.0 < domain.1, "empty parameter interval");
        Self {
            sampler: Arc::new(sampler),
            mode: DerivativeMode::FiniteDifference { fd_step },
            domain,
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn point(&self, t: f64) -> Vec3 {
        (self.sampler)(t)
    }

    /// Derivative of the given order (1, 2 or 3) with respect to `t`.
    ///
    /// In finite-difference mode the sampling stencil must stay inside the
    /// domain, so `t` needs an interior margin of [`stencil_reach`].
    pub fn derive(&self, t: f64, order: usize) -> Result<Vec3> {
        assert!((1..=3).contains(&order), "derivative order must be 1, 2 or 3");
        let (lo, hi) = self.domain;
        match &self.mode {
            DerivativeMode::Analytic { d1, d2, d3 } => {
                if t < lo || t > hi {
                    return Err(Error::OutOfDomain { value: t, lo, hi });
                }
                Ok(match order {
                    1 => d1(t),
                    2 => d2(t),
                    _ => d3(t),
                })
            }
            DerivativeMode::FiniteDifference { fd_step } => {
                let reach = stencil_reach(order, *fd_step);
                if t - reach < lo || t + reach > hi {
                    return Err(Error::OutOfDomain { value: t, lo, hi });
                }
                Ok(richardson_central(self.sampler.as_ref(), t, *fd_step, order))
            }
        }
    }

    /// Largest relative deviation between the supplied analytic derivatives
    /// and central differences, over an `n`-point interior grid and all three
    /// orders. Returns 0 for finite-difference curves.
    pub fn validate_analytic(&self, n: usize, fd_step: f64) -> f64 {
        let DerivativeMode::Analytic { .. } = self.mode else {
            return 0.0;
        };
        let (lo, hi) = self.domain;
        let reach = stencil_reach(3, fd_step) * 1.01;
        let mut worst: f64 = 0.0;
        for t in uniform_grid(lo + reach, hi - reach, n.max(2)) {
            for order in 1..=3 {
                let exact = self.derive(t, order).expect("in domain");
                let fd = richardson_central(self.sampler.as_ref(), t, fd_step, order);
                let scale = exact.euclid_norm().max(1.0);
                worst = worst.max((exact - fd).euclid_norm() / scale);
            }
        }
        worst
    }
}

/// A unit-speed timelike curve together with its reparametrization tables.
///
/// The proper-time parameter runs over `[0, length]`; position and the first
/// three derivatives with respect to it are available everywhere on that
/// interval. The quadrature tables are built once at construction, so all
/// evaluation afterwards is read-only and freely shareable across threads.
pub struct ProperTimeCurve {
    curve: ParamCurve,
    /// Working interval in `t` (shrunk by the stencil reach for
    /// finite-difference curves).
    t_lo: f64,
    t_hi: f64,
    /// `t` nodes of the cumulative arc-length table.
    t_nodes: Vec<f64>,
    /// Arc length accumulated at each node, starting at 0.
    s_nodes: Vec<f64>,
    length: f64,
    seg_tol: f64,
}

impl fmt::Debug for ProperTimeCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ProperTimeCurve {{ t: [{}, {}], length: {} }}",
            self.t_lo, self.t_hi, self.length
        )
    }
}

const TABLE_SEGMENTS: usize = 128;
const ARC_QUAD_TOL: f64 = 1e-10;
const INVERSION_TOL: f64 = 1e-12;

/// Builds the proper-time form of a timelike curve.
///
/// Timelikeness of the tangent is checked on a validation grid; arc length
/// is accumulated by adaptive Simpson quadrature and inverted by bracketed
/// root finding on demand.
pub fn reparametrize_proper_time(curve: ParamCurve, tol: &Tolerance) -> Result<ProperTimeCurve> {
    let (lo, hi) = curve.domain();
    let reach = match &curve.mode {
        DerivativeMode::Analytic { .. } => 0.0,
        DerivativeMode::FiniteDifference { fd_step } => stencil_reach(3, *fd_step),
    };
    let t_lo = lo + reach;
    let t_hi = hi - reach;
    if t_lo >= t_hi {
        return Err(Error::OutOfDomain {
            value: t_lo,
            lo,
            hi,
        });
    }

    for t in uniform_grid(t_lo, t_hi, 129) {
        let d = curve.derive(t, 1)?;
        let q = d.inner_sq();
        if !d.is_finite() || q >= -tol.zero_tol * d.euclid_norm_sq() {
            return Err(Error::NotTimelike { t, norm_sq: q });
        }
    }

    let t_nodes = uniform_grid(t_lo, t_hi, TABLE_SEGMENTS + 1);
    let seg_tol = ARC_QUAD_TOL / TABLE_SEGMENTS as f64;
    let speed = {
        let c = curve.clone();
        move |t: f64| {
            let d = c.derive(t, 1).expect("speed evaluated inside working interval");
            (-d.inner_sq()).max(0.0).sqrt()
        }
    };
    let mut s_nodes = Vec::with_capacity(TABLE_SEGMENTS + 1);
    s_nodes.push(0.0);
    for i in 0..TABLE_SEGMENTS {
        let seg = adaptive_simpson(&speed, t_nodes[i], t_nodes[i + 1], seg_tol);
        let prev = *s_nodes.last().unwrap();
        s_nodes.push(prev + seg);
    }
    let length = *s_nodes.last().unwrap();

    Ok(ProperTimeCurve {
        curve,
        t_lo,
        t_hi,
        t_nodes,
        s_nodes,
        length,
        seg_tol,
    })
}

impl ProperTimeCurve {
    /// Proper-time domain `[0, length]`.
    pub fn s_domain(&self) -> (f64, f64) {
        (0.0, self.length)
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Underlying parameter interval actually used for evaluation.
    pub fn t_domain(&self) -> (f64, f64) {
        (self.t_lo, self.t_hi)
    }

    fn speed(&self, t: f64) -> f64 {
        let d = self.curve.derive(t, 1).expect("inside working interval");
        (-d.inner_sq()).max(0.0).sqrt()
    }

    fn check_s(&self, s: f64) -> Result<f64> {
        let slack = 1e-9 * self.length.max(1.0);
        if s < -slack || s > self.length + slack {
            return Err(Error::OutOfDomain {
                value: s,
                lo: 0.0,
                hi: self.length,
            });
        }
        Ok(s.clamp(0.0, self.length))
    }

    /// Arc length accumulated from the start of the working interval.
    pub fn s_of_t(&self, t: f64) -> Result<f64> {
        if t < self.t_lo || t > self.t_hi {
            return Err(Error::OutOfDomain {
                value: t,
                lo: self.t_lo,
                hi: self.t_hi,
            });
        }
        let i = match self
            .t_nodes
            .binary_search_by(|n| n.partial_cmp(&t).unwrap())
        {
            Ok(i) => return Ok(self.s_nodes[i]),
            Err(i) => i - 1,
        };
        let f = |x: f64| self.speed(x);
        Ok(self.s_nodes[i] + adaptive_simpson(&f, self.t_nodes[i], t, self.seg_tol))
    }

    /// Inverse reparametrization by monotone root finding on the table.
    pub fn t_of_s(&self, s: f64) -> Result<f64> {
        let s = self.check_s(s)?;
        // index of the last node with s_nodes <= s
        let i = match self
            .s_nodes
            .binary_search_by(|n| n.partial_cmp(&s).unwrap())
        {
            Ok(i) => return Ok(self.t_nodes[i]),
            Err(i) => (i - 1).min(TABLE_SEGMENTS - 1),
        };
        let base = self.s_nodes[i];
        let (a, b) = (self.t_nodes[i], self.t_nodes[i + 1]);
        let g = |t: f64| {
            if t <= a {
                base - s
            } else {
                base + adaptive_simpson(&|x: f64| self.speed(x), a, t, self.seg_tol) - s
            }
        };
        Ok(solve_increasing(&g, a, b, INVERSION_TOL))
    }

    pub fn position(&self, s: f64) -> Result<Vec3> {
        Ok(self.curve.point(self.t_of_s(s)?))
    }

    /// Derivative with respect to proper time, orders 1 to 3, by exact chain
    /// rule through the reparametrization.
    pub fn derivative(&self, s: f64, order: usize) -> Result<Vec3> {
        assert!((1..=3).contains(&order), "derivative order must be 1, 2 or 3");
        let t = self.t_of_s(s)?;
        let a1 = self.curve.derive(t, 1)?;
        let sigma = (-a1.inner_sq()).max(0.0).sqrt();
        let tp = 1.0 / sigma;
        if order == 1 {
            return Ok(a1 * tp);
        }
        let a2 = self.curve.derive(t, 2)?;
        let sigma_p = -a2.inner(&a1) / sigma;
        let tpp = -sigma_p / (sigma * sigma * sigma);
        if order == 2 {
            return Ok(a2 * (tp * tp) + a1 * tpp);
        }
        let a3 = self.curve.derive(t, 3)?;
        let sigma_pp =
            (-a3.inner(&a1) - a2.inner(&a2)) / sigma + a2.inner(&a1) * sigma_p / (sigma * sigma);
        let s4 = sigma.powi(4);
        let tppp = -sigma_pp / s4 + 3.0 * sigma_p * sigma_p / (s4 * sigma);
        Ok(a3 * (tp * tp * tp) + a2 * (3.0 * tp * tpp) + a1 * tppp)
    }

    /// Re-wraps the unit-speed curve as a `ParamCurve` in its own proper
    /// time, with chain-rule derivatives as the analytic ones.
    pub fn to_param_curve(self: &Arc<Self>) -> ParamCurve {
        let c0 = Arc::clone(self);
        let c1 = Arc::clone(self);
        let c2 = Arc::clone(self);
        let c3 = Arc::clone(self);
        ParamCurve::analytic(
            move |s| c0.position(s).expect("inside proper-time domain"),
            move |s| c1.derivative(s, 1).expect("inside proper-time domain"),
            move |s| c2.derivative(s, 2).expect("inside proper-time domain"),
            move |s| c3.derivative(s, 3).expect("inside proper-time domain"),
            (0.0, self.length),
        )
    }
}

/// The Frenet trihedron and curvatures of a timelike curve at one parameter
/// value. `tangent` is timelike; `normal` and `binormal` are spacelike.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetFrame {
    pub s: f64,
    pub tangent: Vec3,
    pub normal: Vec3,
    pub binormal: Vec3,
    /// Curvature, nonnegative by convention.
    pub k1: f64,
    /// Torsion, signed.
    pub k2: f64,
}

impl FrenetFrame {
    /// Ambient vector of the frame combination `c[0] T + c[1] N + c[2] B`.
    pub fn combine(&self, c: [f64; 3]) -> Vec3 {
        self.tangent * c[0] + self.normal * c[1] + self.binormal * c[2]
    }

    /// Frame components of an ambient vector; the tangent component picks up
    /// a sign because `<T,T> = -1`.
    pub fn project(&self, v: &Vec3) -> [f64; 3] {
        [
            -v.inner(&self.tangent),
            v.inner(&self.normal),
            v.inner(&self.binormal),
        ]
    }

    /// Largest deviation of the six pairwise products from orthonormality.
    pub fn orthonormality_residual(&self) -> f64 {
        let t = &self.tangent;
        let n = &self.normal;
        let b = &self.binormal;
        [
            (t.inner(t) + 1.0).abs(),
            (n.inner(n) - 1.0).abs(),
            (b.inner(b) - 1.0).abs(),
            t.inner(n).abs(),
            t.inner(b).abs(),
            n.inner(b).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Frenet apparatus of a unit-speed timelike curve at `s`.
///
/// Fails with [`Error::VanishingCurvature`] where `k1 <= FRAME_TOL` (straight
/// stretches have no principal normal).
pub fn frenet_apparatus(curve: &ProperTimeCurve, s: f64) -> Result<FrenetFrame> {
    let tangent = curve.derivative(s, 1)?;
    let acc = curve.derivative(s, 2)?;
    // the acceleration of a unit-speed timelike curve is spacelike
    let k1 = acc.inner_sq().max(0.0).sqrt();
    if k1 <= FRAME_TOL {
        return Err(Error::VanishingCurvature { s, k1 });
    }
    let normal = acc / k1;
    let binormal = tangent.lorentz_cross(&normal);
    let jerk = curve.derivative(s, 3)?;
    // <N', B> with N = a''/k1; the component of N' along N drops out
    let k2 = jerk.inner(&binormal) / k1;
    Ok(FrenetFrame {
        s,
        tangent,
        normal,
        binormal,
        k1,
        k2,
    })
}

/// Largest Frenet-equation residual at `s`, with frame derivatives taken by
/// central differences of the frame fields themselves.
pub fn frenet_residual(curve: &ProperTimeCurve, s: f64, tol: &Tolerance) -> Result<f64> {
    let h = tol.fd_step;
    let f0 = frenet_apparatus(curve, s)?;
    let fp = frenet_apparatus(curve, s + h)?;
    let fm = frenet_apparatus(curve, s - h)?;
    let fph = frenet_apparatus(curve, s + 0.5 * h)?;
    let fmh = frenet_apparatus(curve, s - 0.5 * h)?;
    let diff = |sel: fn(&FrenetFrame) -> Vec3| {
        let full = (sel(&fp) - sel(&fm)) / (2.0 * h);
        let half = (sel(&fph) - sel(&fmh)) / h;
        (4.0 * half - full) / 3.0
    };
    let dt = diff(|f| f.tangent) - f0.normal * f0.k1;
    let dn = diff(|f| f.normal) - (f0.tangent * f0.k1 + f0.binormal * f0.k2);
    let db = diff(|f| f.binormal) + f0.normal * f0.k2;
    Ok(dt
        .euclid_norm()
        .max(dn.euclid_norm())
        .max(db.euclid_norm()))
}

/// Planarity and helix classification over a sample grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveClass {
    /// Torsion vanishes identically on the grid.
    pub planar: bool,
    /// `k1/k2` is constant on the grid (meaningless for planar curves).
    pub helix: bool,
    /// Mean harmonic curvature `k1/k2`; `None` when planar or ill-defined.
    pub h_mean: Option<f64>,
    /// `(max - min)/|mean|` of `k1/k2` over the grid.
    pub h_relative_spread: Option<f64>,
}

/// Classifies a curve as planar and/or a helix from curvature samples.
pub fn classify_curve(curve: &ProperTimeCurve, grid: &[f64], tol: &Tolerance) -> Result<CurveClass> {
    assert!(grid.len() >= 2, "classification needs at least two samples");
    let mut k1s = Vec::with_capacity(grid.len());
    let mut k2s = Vec::with_capacity(grid.len());
    for &s in grid {
        let f = frenet_apparatus(curve, s)?;
        k1s.push(f.k1);
        k2s.push(f.k2);
    }
    let max_k1 = k1s.iter().fold(0.0f64, |m, &v| m.max(v));
    let max_abs_k2 = k2s.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let planar = max_abs_k2 <= tol.zero_tol * max_k1;
    if planar {
        return Ok(CurveClass {
            planar: true,
            helix: false,
            h_mean: None,
            h_relative_spread: None,
        });
    }
    let hs: Vec<f64> = k1s.iter().zip(&k2s).map(|(&a, &b)| a / b).collect();
    if hs.iter().any(|h| !h.is_finite()) {
        return Ok(CurveClass {
            planar: false,
            helix: false,
            h_mean: None,
            h_relative_spread: None,
        });
    }
    let mean = hs.iter().sum::<f64>() / hs.len() as f64;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &h in &hs {
        lo = lo.min(h);
        hi = hi.max(h);
    }
    let spread = (hi - lo) / mean.abs().max(f64::MIN_POSITIVE);
    Ok(CurveClass {
        planar: false,
        helix: spread <= HELIX_TOL,
        h_mean: Some(mean),
        h_relative_spread: Some(spread),
    })
}

// --- built-in curve catalogue -------------------------------------------------

/// Timelike circular helix `t -> (a cos t, a sin t, b t)`; timelike for `b > a > 0`.
pub fn circular_timelike_helix(a: f64, b: f64, domain: (f64, f64)) -> ParamCurve {
    ParamCurve::analytic(
        move |t: f64| Vec3::new(a * t.cos(), a * t.sin(), b * t),
        move |t: f64| Vec3::new(-a * t.sin(), a * t.cos(), b),
        move |t: f64| Vec3::new(-a * t.cos(), -a * t.sin(), 0.0),
        move |t: f64| Vec3::new(a * t.sin(), -a * t.cos(), 0.0),
        domain,
    )
}

/// Timelike hyperbolic helix `t -> (b t, a cosh t, a sinh t)`; timelike for `a > b > 0`.
pub fn hyperbolic_timelike_helix(a: f64, b: f64, domain: (f64, f64)) -> ParamCurve {
    ParamCurve::analytic(
        move |t: f64| Vec3::new(b * t, a * t.cosh(), a * t.sinh()),
        move |t: f64| Vec3::new(b, a * t.sinh(), a * t.cosh()),
        move |t: f64| Vec3::new(0.0, a * t.cosh(), a * t.sinh()),
        move |t: f64| Vec3::new(0.0, a * t.sinh(), a * t.cosh()),
        domain,
    )
}

/// Straight timelike line along the time axis. Its frame is undefined.
pub fn timelike_line(domain: (f64, f64)) -> ParamCurve {
    ParamCurve::analytic(
        |t: f64| Vec3::new(0.0, 0.0, t),
        |_| Vec3::new(0.0, 0.0, 1.0),
        |_| Vec3::ZERO,
        |_| Vec3::ZERO,
        domain,
    )
}

/// Planar timelike hyperbola `t -> (0, cosh t, sinh t)`: unit speed, `k2 = 0`.
pub fn planar_timelike_curve(domain: (f64, f64)) -> ParamCurve {
    ParamCurve::analytic(
        |t: f64| Vec3::new(0.0, t.cosh(), t.sinh()),
        |t: f64| Vec3::new(0.0, t.sinh(), t.cosh()),
        |t: f64| Vec3::new(0.0, t.cosh(), t.sinh()),
        |t: f64| Vec3::new(0.0, t.sinh(), t.cosh()),
        domain,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::det3;
    use std::sync::Arc;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn derive_line_and_helix() {
        let line = timelike_line((-1.0, 1.0));
        assert_eq!(line.derive(0.3, 1).unwrap(), Vec3::new(0.0, 0.0, 1.0));

        let helix = circular_timelike_helix(1.0, 2.0, (-1.0, 1.0));
        assert_eq!(helix.derive(0.0, 1).unwrap(), Vec3::new(0.0, 1.0, 2.0));
        assert_eq!(helix.derive(0.0, 2).unwrap(), Vec3::new(-1.0, 0.0, 0.0));
    }

    #[test]
    fn derive_out_of_domain() {
        let helix = circular_timelike_helix(1.0, 2.0, (-1.0, 1.0));
        assert!(matches!(
            helix.derive(1.5, 1),
            Err(Error::OutOfDomain { .. })
        ));
        let fd = ParamCurve::finite_difference(
            |t| Vec3::new(0.0, 0.0, t),
            (-1.0, 1.0),
            1e-5,
        );
        // inside the interval but within the order-3 stencil of the edge
        assert!(matches!(fd.derive(0.999, 3), Err(Error::OutOfDomain { .. })));
        assert_eq!(fd.derive(0.0, 1).unwrap().z.round(), 1.0);
    }

    #[test]
    fn fd_derivatives_match_analytic() {
        let a = circular_timelike_helix(1.0, 2.0, (-2.0, 2.0));
        let fd = ParamCurve::finite_difference(
            |t: f64| Vec3::new(t.cos(), t.sin(), 2.0 * t),
            (-2.0, 2.0),
            1e-5,
        );
        for t in uniform_grid(-1.5, 1.5, 11) {
            for order in 1..=3 {
                let ex = a.derive(t, order).unwrap();
                let ap = fd.derive(t, order).unwrap();
                assert!(
                    (ex - ap).euclid_norm() <= 1e-6 * ex.euclid_norm().max(1.0),
                    "order {order} at t={t}"
                );
            }
        }
        assert!(a.validate_analytic(9, 1e-5) <= 1e-6);
    }

    #[test]
    fn reparametrization_constant_speeds() {
        // t -> (0,0,2t) has speed 2, so s = 2 t and t(1) = 0.5
        let c = ParamCurve::analytic(
            |t| Vec3::new(0.0, 0.0, 2.0 * t),
            |_| Vec3::new(0.0, 0.0, 2.0),
            |_| Vec3::ZERO,
            |_| Vec3::ZERO,
            (0.0, 1.0),
        );
        let p = reparametrize_proper_time(c, &tol()).unwrap();
        assert!((p.length() - 2.0).abs() < 1e-10);
        assert!((p.t_of_s(1.0).unwrap() - 0.5).abs() < 1e-10);
        assert!((p.s_of_t(0.25).unwrap() - 0.5).abs() < 1e-10);

        // circular helix a=1, b=2 has speed sqrt(3)
        let helix = circular_timelike_helix(1.0, 2.0, (0.0, 2.0));
        let p = reparametrize_proper_time(helix, &tol()).unwrap();
        assert!((p.length() - 2.0 * 3f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn reparametrization_rejects_spacelike() {
        let c = ParamCurve::analytic(
            |t: f64| Vec3::new(t.cos(), t.sin(), 0.5 * t),
            |t: f64| Vec3::new(-t.sin(), t.cos(), 0.5),
            |t: f64| Vec3::new(-t.cos(), -t.sin(), 0.0),
            |t: f64| Vec3::new(t.sin(), -t.cos(), 0.0),
            (0.0, 1.0),
        );
        assert!(matches!(
            reparametrize_proper_time(c, &tol()),
            Err(Error::NotTimelike { .. })
        ));
    }

    #[test]
    fn unit_speed_invariant() {
        let helix = circular_timelike_helix(1.0, 2.0, (-1.0, 3.0));
        let p = reparametrize_proper_time(helix, &tol()).unwrap();
        for s in uniform_grid(0.0, p.length(), 17) {
            let d = p.derivative(s, 1).unwrap();
            assert!((d.inner_sq() + 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn frenet_circular_helix() {
        let helix = circular_timelike_helix(1.0, 2.0, (-2.0, 2.0));
        let p = reparametrize_proper_time(helix, &tol()).unwrap();
        let mid = 0.5 * p.length();
        let f = frenet_apparatus(&p, mid).unwrap();
        assert!((f.k1 - 1.0 / 3.0).abs() < 1e-9, "k1 = {}", f.k1);
        assert!((f.k2 - 2.0 / 3.0).abs() < 1e-9, "k2 = {}", f.k2);
        assert!(f.orthonormality_residual() < 1e-10);
        assert!((det3(&f.tangent, &f.normal, &f.binormal) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn frenet_hyperbolic_helix() {
        let helix = hyperbolic_timelike_helix(2.0, 1.0, (-2.0, 2.0));
        let p = reparametrize_proper_time(helix, &tol()).unwrap();
        let f = frenet_apparatus(&p, 0.25 * p.length()).unwrap();
        assert!((f.k1 - 2.0 / 3.0).abs() < 1e-9);
        assert!((f.k2 - 1.0 / 3.0).abs() < 1e-9);
        assert!(f.orthonormality_residual() < 1e-10);
    }

    #[test]
    fn frenet_frame_at_zero_of_circular_helix() {
        // at t = 0 the normal points inward along -x
        let helix = circular_timelike_helix(1.0, 2.0, (-2.0, 2.0));
        let p = reparametrize_proper_time(helix, &tol()).unwrap();
        let s0 = p.s_of_t(0.0).unwrap();
        let f = frenet_apparatus(&p, s0).unwrap();
        assert!((f.normal - Vec3::new(-1.0, 0.0, 0.0)).euclid_norm() < 1e-9);
    }

    #[test]
    fn frenet_rejects_straight_line() {
        let p = reparametrize_proper_time(timelike_line((-1.0, 1.0)), &tol()).unwrap();
        assert!(matches!(
            frenet_apparatus(&p, 1.0),
            Err(Error::VanishingCurvature { .. })
        ));
    }

    #[test]
    fn frenet_residuals_small() {
        let cases: Vec<ParamCurve> = vec![
            circular_timelike_helix(1.0, 2.0, (-2.0, 2.0)),
            hyperbolic_timelike_helix(2.0, 1.0, (-2.0, 2.0)),
            planar_timelike_curve((-2.0, 2.0)),
        ];
        for c in cases {
            let p = reparametrize_proper_time(c, &tol()).unwrap();
            for s in uniform_grid(0.1 * p.length(), 0.9 * p.length(), 7) {
                let r = frenet_residual(&p, s, &tol()).unwrap();
                assert!(r <= 1e-6, "residual {r} at s={s}");
            }
        }
    }

    #[test]
    fn planar_curve_classified() {
        let p = reparametrize_proper_time(planar_timelike_curve((-2.0, 2.0)), &tol()).unwrap();
        let grid = uniform_grid(0.0, p.length(), 21);
        let class = classify_curve(&p, &grid, &tol()).unwrap();
        assert!(class.planar);
        assert!(!class.helix);
        assert_eq!(class.h_mean, None);
    }

    #[test]
    fn helices_classified_with_h() {
        let p = reparametrize_proper_time(circular_timelike_helix(1.0, 2.0, (-2.0, 2.0)), &tol())
            .unwrap();
        let grid = uniform_grid(0.0, p.length(), 21);
        let class = classify_curve(&p, &grid, &tol()).unwrap();
        assert!(!class.planar && class.helix);
        assert!((class.h_mean.unwrap() - 0.5).abs() < 1e-9);

        let p = reparametrize_proper_time(hyperbolic_timelike_helix(2.0, 1.0, (-2.0, 2.0)), &tol())
            .unwrap();
        let grid = uniform_grid(0.0, p.length(), 21);
        let class = classify_curve(&p, &grid, &tol()).unwrap();
        assert!(class.helix);
        assert!((class.h_mean.unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn double_reparametrization_is_identity() {
        let helix = circular_timelike_helix(1.0, 2.0, (0.0, 2.0));
        let p = Arc::new(reparametrize_proper_time(helix, &tol()).unwrap());
        let again = reparametrize_proper_time(p.to_param_curve(), &tol()).unwrap();
        assert!((again.length() - p.length()).abs() < 1e-10);
        for s in uniform_grid(0.0, p.length(), 9) {
            assert!((again.t_of_s(s).unwrap() - s).abs() < 1e-10);
            let a = p.position(s).unwrap();
            let b = again.position(s).unwrap();
            assert!((a - b).euclid_norm() < 1e-10);
        }
    }

    #[test]
    fn concurrent_evaluation() {
        let helix = circular_timelike_helix(1.0, 2.0, (-2.0, 2.0));
        let p = Arc::new(reparametrize_proper_time(helix, &tol()).unwrap());
        let mid = 0.5 * p.length();
        let reference = frenet_apparatus(&p, mid).unwrap();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let p = Arc::clone(&p);
                std::thread::spawn(move || frenet_apparatus(&p, mid).unwrap())
            })
            .collect();
        for h in handles {
            let f = h.join().unwrap();
            assert_eq!(f.k1, reference.k1);
            assert_eq!(f.k2, reference.k2);
        }
    }
}
