//! Deterministic numerical kernels: adaptive Simpson quadrature, Richardson
//! central differences and bracketed root finding. No external solver crates;
//! everything here is reproducible bit for bit.

use crate::minkowski::Vec3;

const MAX_DEPTH: u32 = 48;

/// Adaptive Simpson integration of a scalar function to absolute tolerance.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson_rule(a, b, fa, fm, fb);
    simpson_recurse(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

fn simpson_rule(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson_rule(a, m, fa, flm, fm);
    let right = simpson_rule(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Component-wise adaptive Simpson integration of a vector-valued function.
pub fn adaptive_simpson_vec3<F: Fn(f64) -> Vec3>(f: &F, a: f64, b: f64, tol: f64) -> Vec3 {
    if a == b {
        return Vec3::ZERO;
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson_rule_v(a, b, fa, fm, fb);
    simpson_recurse_v(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

fn simpson_rule_v(a: f64, b: f64, fa: Vec3, fm: Vec3, fb: Vec3) -> Vec3 {
    (fa + 4.0 * fm + fb) * ((b - a) / 6.0)
}

#[allow(clippy::too_many_arguments)]
fn simpson_recurse_v<F: Fn(f64) -> Vec3>(
    f: &F,
    a: f64,
    b: f64,
    fa: Vec3,
    fm: Vec3,
    fb: Vec3,
    whole: Vec3,
    tol: f64,
    depth: u32,
) -> Vec3 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson_rule_v(a, m, fa, flm, fm);
    let right = simpson_rule_v(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.euclid_norm() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_recurse_v(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson_recurse_v(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Step used by the order-`order` central-difference rule.
///
/// The rule divides by `h^order`, so higher orders need wider steps to stay
/// clear of roundoff: `h1 = fd_step`, `h2 = fd_step^(2/3)`, `h3 = fd_step^(1/2)`.
pub fn fd_step_for(order: usize, fd_step: f64) -> f64 {
    match order {
        1 => fd_step,
        2 => fd_step.powf(2.0 / 3.0),
        3 => fd_step.sqrt(),
        _ => panic!("derivative order must be 1, 2 or 3"),
    }
}

/// Half-width of the sampling stencil used by `richardson_central`.
pub fn stencil_reach(order: usize, fd_step: f64) -> f64 {
    let h = fd_step_for(order, fd_step);
    match order {
        1 | 2 => h,
        3 => 2.0 * h,
        _ => unreachable!(),
    }
}

/// Central difference of the given order at step `h`.
fn central<F: Fn(f64) -> Vec3 + ?Sized>(f: &F, x: f64, h: f64, order: usize) -> Vec3 {
    match order {
        1 => (f(x + h) - f(x - h)) / (2.0 * h),
        2 => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
        3 => (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) / (2.0 * h * h * h),
        _ => panic!("derivative order must be 1, 2 or 3"),
    }
}

/// Richardson-extrapolated central difference: combines the full-step and
/// half-step rules to cancel the leading `h^2` error term.
pub fn richardson_central<F: Fn(f64) -> Vec3 + ?Sized>(
    f: &F,
    x: f64,
    fd_step: f64,
    order: usize,
) -> Vec3 {
    let h = fd_step_for(order, fd_step);
    let full = central(f, x, h, order);
    let half = central(f, x, 0.5 * h, order);
    (4.0 * half - full) / 3.0
}

/// Root of an increasing function on a bracketing interval, by a
/// secant/bisection hybrid. `g(lo) <= 0 <= g(hi)` is required up to rounding.
pub fn solve_increasing<G: Fn(f64) -> f64>(g: &G, lo: f64, hi: f64, tol: f64) -> f64 {
    let mut a = lo;
    let mut b = hi;
    let mut ga = g(a);
    let mut gb = g(b);
    if ga >= 0.0 {
        return a;
    }
    if gb <= 0.0 {
        return b;
    }
    for _ in 0..128 {
        if b - a <= tol {
            break;
        }
        // secant proposal, clamped into the bracket interior
        let mut m = if gb != ga {
            a - ga * (b - a) / (gb - ga)
        } else {
            0.5 * (a + b)
        };
        let guard = 0.125 * (b - a);
        if !(m > a + guard * 1e-6 && m < b - guard * 1e-6) {
            m = 0.5 * (a + b);
        }
        let gm = g(m);
        if gm == 0.0 {
            return m;
        }
        if gm < 0.0 {
            a = m;
            ga = gm;
        } else {
            b = m;
            gb = gm;
        }
        // fall back to bisection whenever the bracket stops shrinking fast
        if (b - a) > 0.5 * (hi - lo) {
            let mid = 0.5 * (a + b);
            let gmid = g(mid);
            if gmid < 0.0 {
                a = mid;
                ga = gmid;
            } else {
                b = mid;
                gb = gmid;
            }
        }
    }
    0.5 * (a + b)
}

/// Uniform grid of `n >= 2` samples including both endpoints.
pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2, "a grid needs at least two samples");
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
        .collect()
}
