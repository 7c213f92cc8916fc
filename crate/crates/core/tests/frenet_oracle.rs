//! Verifies the Frenet apparatus against a self-contained finite-difference
//! oracle that never touches the library's curve machinery: it samples the
//! known unit-speed form of each helix and applies the frame definitions
//! with its own differencing and its own Lorentzian algebra.

use drall_core::{
    circular_timelike_helix, classify_curve, frenet_apparatus, frenet_residual,
    hyperbolic_timelike_helix, planar_timelike_curve, reparametrize_proper_time, uniform_grid,
    Tolerance, Vec3,
};

// ---- independent oracle ---------------------------------------------------

mod oracle {
    pub type V = [f64; 3];

    pub fn inner(u: V, v: V) -> f64 {
        u[0] * v[0] + u[1] * v[1] - u[2] * v[2]
    }

    pub fn cross(u: V, v: V) -> V {
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            -(u[0] * v[1] - u[1] * v[0]),
        ]
    }

    fn sub(u: V, v: V) -> V {
        [u[0] - v[0], u[1] - v[1], u[2] - v[2]]
    }

    fn scale(u: V, c: f64) -> V {
        [u[0] * c, u[1] * c, u[2] * c]
    }

    fn add(u: V, v: V) -> V {
        [u[0] + v[0], u[1] + v[1], u[2] + v[2]]
    }

    /// Richardson-extrapolated first central difference.
    pub fn d1<F: Fn(f64) -> V>(f: &F, s: f64, h: f64) -> V {
        let full = scale(sub(f(s + h), f(s - h)), 1.0 / (2.0 * h));
        let half = scale(sub(f(s + 0.5 * h), f(s - 0.5 * h)), 1.0 / h);
        scale(sub(scale(half, 4.0), full), 1.0 / 3.0)
    }

    /// Richardson-extrapolated second central difference.
    pub fn d2<F: Fn(f64) -> V>(f: &F, s: f64, h: f64) -> V {
        let rule = |h: f64| {
            scale(
                add(sub(f(s + h), scale(f(s), 2.0)), f(s - h)),
                1.0 / (h * h),
            )
        };
        let full = rule(h);
        let half = rule(0.5 * h);
        scale(sub(scale(half, 4.0), full), 1.0 / 3.0)
    }

    pub struct Frame {
        pub t: V,
        pub n: V,
        pub b: V,
        pub k1: f64,
        pub k2: f64,
    }

    /// Frenet data of a unit-speed timelike curve, from samples alone:
    /// `T = a'`, `k1 = |a''|`, `N = a''/k1`, `B = T x N`, `k2 = <N', B>`.
    ///
    /// The second difference loses about eight digits to cancellation, so
    /// the inner step is wide (3e-3) and the outer difference of the normal
    /// field wider still (1e-2).
    pub fn frame<F: Fn(f64) -> V>(f: &F, s: f64) -> Frame {
        let t = d1(f, s, 1e-5);
        let acc = d2(f, s, 3e-3);
        let k1 = inner(acc, acc).max(0.0).sqrt();
        let n = scale(acc, 1.0 / k1);
        let b = cross(t, n);
        let n_field = |x: f64| {
            let a = d2(f, x, 3e-3);
            let k = inner(a, a).max(0.0).sqrt();
            scale(a, 1.0 / k)
        };
        let k2 = inner(d1(&n_field, s, 1e-2), b);
        Frame { t, n, b, k1, k2 }
    }
}

fn tol() -> Tolerance {
    Tolerance::default()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1.0)
}

#[test]
fn oracle_confirms_circular_helix_curvatures() {
    // the oracle and the implementation see the curve through different
    // parametrizations; curvatures must agree on the frozen closed values
    for (a, b) in [(1.0f64, 2.0f64), (1.0, 3.0), (0.5, 1.5), (2.0, 3.0)] {
        let c = (b * b - a * a).sqrt();
        let unit_speed = move |s: f64| [a * (s / c).cos(), a * (s / c).sin(), b * s / c];

        let k1_expect = a / (b * b - a * a);
        let k2_expect = b / (b * b - a * a);

        let of = oracle::frame(&unit_speed, 0.7);
        assert!(close(of.k1, k1_expect, 1e-6), "oracle k1 {} vs {k1_expect}", of.k1);
        assert!(close(of.k2, k2_expect, 1e-6), "oracle k2 {} vs {k2_expect}", of.k2);

        let curve = circular_timelike_helix(a, b, (-1.0, 2.0));
        let p = reparametrize_proper_time(curve, &tol()).unwrap();
        for s in uniform_grid(0.0, p.length(), 13) {
            let f = frenet_apparatus(&p, s).unwrap();
            assert!(close(f.k1, k1_expect, 1e-6), "impl k1 {} vs {k1_expect}", f.k1);
            assert!(close(f.k2, k2_expect, 1e-6), "impl k2 {} vs {k2_expect}", f.k2);
        }
    }
}

#[test]
fn oracle_confirms_hyperbolic_helix_curvatures() {
    for (a, b) in [(2.0f64, 1.0f64), (3.0, 1.0), (1.5, 0.5)] {
        let c = (a * a - b * b).sqrt();
        let unit_speed = move |s: f64| [b * s / c, a * (s / c).cosh(), a * (s / c).sinh()];

        let k1_expect = a / (a * a - b * b);
        let k2_expect = b / (a * a - b * b);

        let of = oracle::frame(&unit_speed, 0.4);
        assert!(close(of.k1, k1_expect, 1e-6), "oracle k1 {} vs {k1_expect}", of.k1);
        assert!(close(of.k2, k2_expect, 1e-6), "oracle k2 {} vs {k2_expect}", of.k2);

        let curve = hyperbolic_timelike_helix(a, b, (-1.5, 1.5));
        let p = reparametrize_proper_time(curve, &tol()).unwrap();
        for s in uniform_grid(0.0, p.length(), 13) {
            let f = frenet_apparatus(&p, s).unwrap();
            assert!(close(f.k1, k1_expect, 1e-6));
            assert!(close(f.k2, k2_expect, 1e-6));
        }
    }
}

#[test]
fn oracle_frame_vectors_match_implementation() {
    let (a, b) = (1.0, 2.0);
    let c = 3f64.sqrt();
    let unit_speed = move |s: f64| [a * (s / c).cos(), a * (s / c).sin(), b * s / c];

    let curve = circular_timelike_helix(a, b, (0.0, 2.0));
    let p = reparametrize_proper_time(curve, &tol()).unwrap();
    for t_val in [0.3, 0.8, 1.4] {
        let s = p.s_of_t(t_val).unwrap();
        // the implementation measures s from the domain start t = 0, so the
        // oracle's arc parameter coincides
        let of = oracle::frame(&unit_speed, s);
        let f = frenet_apparatus(&p, s).unwrap();
        for (ours, theirs) in [
            (f.tangent, of.t),
            (f.normal, of.n),
            (f.binormal, of.b),
        ] {
            let diff = ours - Vec3::new(theirs[0], theirs[1], theirs[2]);
            assert!(diff.euclid_norm() < 1e-6, "frame vector off by {}", diff.euclid_norm());
        }
    }
}

#[test]
fn orthonormality_and_residuals_on_dense_grids() {
    let fixtures = vec![
        circular_timelike_helix(1.0, 2.0, (-1.0, 3.0)),
        hyperbolic_timelike_helix(2.0, 1.0, (-2.0, 2.0)),
        planar_timelike_curve((-2.0, 2.0)),
    ];
    for curve in fixtures {
        let p = reparametrize_proper_time(curve, &tol()).unwrap();
        let l = p.length();
        for s in uniform_grid(0.02 * l, 0.98 * l, 101) {
            let f = frenet_apparatus(&p, s).unwrap();
            assert!(f.orthonormality_residual() <= 1e-8);
            assert!(
                (drall_core::det3(&f.tangent, &f.normal, &f.binormal) - 1.0).abs() <= 1e-8
            );
            let r = frenet_residual(&p, s, &tol()).unwrap();
            assert!(r <= 1e-6, "residual {r} at s = {s}");
        }
    }
}

#[test]
fn planar_fixture_is_torsion_free() {
    let p = reparametrize_proper_time(planar_timelike_curve((-2.0, 2.0)), &tol()).unwrap();
    let grid = uniform_grid(0.05 * p.length(), 0.95 * p.length(), 33);
    for &s in &grid {
        let f = frenet_apparatus(&p, s).unwrap();
        assert!(f.k2.abs() <= 1e-10, "k2 = {} at s = {s}", f.k2);
    }
    let class = classify_curve(&p, &grid, &tol()).unwrap();
    assert!(class.planar);
}

#[test]
fn finite_difference_mode_agrees_with_analytic() {
    let pairs: Vec<(drall_core::ParamCurve, drall_core::ParamCurve)> = vec![
        (
            circular_timelike_helix(1.0, 2.0, (-2.0, 2.0)),
            drall_core::ParamCurve::finite_difference(
                |t: f64| Vec3::new(t.cos(), t.sin(), 2.0 * t),
                (-2.0, 2.0),
                1e-5,
            ),
        ),
        (
            hyperbolic_timelike_helix(2.0, 1.0, (-2.0, 2.0)),
            drall_core::ParamCurve::finite_difference(
                |t: f64| Vec3::new(t, 2.0 * t.cosh(), 2.0 * t.sinh()),
                (-2.0, 2.0),
                1e-5,
            ),
        ),
    ];
    for (analytic_curve, fd_curve) in pairs {
        let analytic = reparametrize_proper_time(analytic_curve, &tol()).unwrap();
        let fd = reparametrize_proper_time(fd_curve, &tol()).unwrap();
        // domains differ by the stencil margin; compare through the t parameter
        for t_val in [-1.0, -0.2, 0.5, 1.3] {
            let sa = analytic.s_of_t(t_val).unwrap();
            let sf = fd.s_of_t(t_val).unwrap();
            let fa = frenet_apparatus(&analytic, sa).unwrap();
            let ff = frenet_apparatus(&fd, sf).unwrap();
            assert!(close(ff.k1, fa.k1, 1e-6));
            assert!(close(ff.k2, fa.k2, 1e-6));
            assert!((fa.tangent - ff.tangent).euclid_norm() <= 1e-6);
            assert!((fa.normal - ff.normal).euclid_norm() <= 1e-6);
            assert!((fa.binormal - ff.binormal).euclid_norm() <= 1e-6);
        }
    }
}

#[test]
fn catalogue_analytic_derivatives_validate_against_differences() {
    let fixtures = vec![
        circular_timelike_helix(1.0, 2.0, (-2.0, 2.0)),
        hyperbolic_timelike_helix(2.0, 1.0, (-2.0, 2.0)),
        drall_core::timelike_line((-2.0, 2.0)),
        planar_timelike_curve((-2.0, 2.0)),
    ];
    for curve in fixtures {
        let dev = curve.validate_analytic(17, 1e-5);
        assert!(dev <= 1e-6, "analytic derivatives deviate by {dev}");
    }
}
