//! Plain-text analysis report: curve class, director case, developability,
//! striction summary and induced-metric types at the window corners.

use crate::scenario::{BaseConfig, BuiltScenario, OutputKind};
use crate::CliError;
use drall_core::{
    classify_curve, developability_verdict, helix_condition, BaseCurve, Error as CoreError,
    HelixVariant, PlaneClass, StrictionPoint,
};
use std::fmt::Write as _;

fn num(x: f64) -> String {
    format!("{x}")
}

/// Runs every analysis a scenario asks for and renders the report text.
///
/// The report is deterministic: the same scenario file yields byte-identical
/// output on every run.
pub fn run_scenario(built: &BuiltScenario) -> Result<String, CliError> {
    if !built.scenario.wants(OutputKind::Report) {
        return Err(CliError::Config(
            "outputs: this scenario does not request `report`".into(),
        ));
    }
    let tol = built.tol;
    let grid = built.internal_grid();
    let user_grid = built.s_grid();
    let to_user = |internal: f64| internal - built.internal_s(0.0);

    let mut out = String::new();
    let g = &built.scenario.grid;
    let c = &built.scenario.curve;

    writeln!(out, "ruled surface analysis").unwrap();
    writeln!(out, "======================").unwrap();
    writeln!(out).unwrap();
    writeln!(
        out,
        "curve: {} (a = {}, b = {})",
        c.kind.label(),
        num(c.a),
        num(c.b)
    )
    .unwrap();
    writeln!(
        out,
        "window: s in [{}, {}] with {} samples, v in [{}, {}] with {} samples",
        num(g.s_min),
        num(g.s_max),
        built.n_s(),
        num(g.v_min),
        num(g.v_max),
        built.n_v()
    )
    .unwrap();

    let class = classify_curve(&built.alpha, &grid, &tol).map_err(CliError::Numeric)?;
    let class_line = if class.planar {
        "planar (torsion vanishes)".to_string()
    } else if class.helix {
        format!(
            "helix (h = k1/k2 = {}, relative spread = {})",
            num(class.h_mean.unwrap()),
            num(class.h_relative_spread.unwrap())
        )
    } else {
        match class.h_mean {
            Some(h) => format!(
                "generic (mean k1/k2 = {}, relative spread = {})",
                num(h),
                num(class.h_relative_spread.unwrap())
            ),
            None => "generic (k1/k2 not defined everywhere)".to_string(),
        }
    };
    writeln!(out, "curve class: {class_line}").unwrap();

    let x = &built.director;
    writeln!(
        out,
        "director: x = ({}, {}, {}), <X,X> = {}, case: {}",
        num(x.x1()),
        num(x.x2()),
        num(x.x3()),
        match x.causal_sign() {
            drall_core::CausalSign::Spacelike => "+1",
            drall_core::CausalSign::Timelike => "-1",
        },
        x.classify_case(&tol)
    )
    .unwrap();

    match built.scenario.base {
        BaseConfig::Alpha => writeln!(out, "base: the timelike curve itself").unwrap(),
        BaseConfig::Companion(lambda) => {
            let spec = match built.surface.base() {
                BaseCurve::Companion(c) => c.spec(),
                BaseCurve::Alpha(_) => unreachable!("companion scenario built an alpha base"),
            };
            // <beta', X> is constant because both live in the moving frame
            let pairing = -lambda[0] * x.x1() + lambda[1] * x.x2() + lambda[2] * x.x3();
            writeln!(
                out,
                "base: companion with beta' = ({}, {}, {}) in the moving frame ({}), <beta',X> = {}",
                num(lambda[0]),
                num(lambda[1]),
                num(lambda[2]),
                spec.causal_character(),
                num(pairing)
            )
            .unwrap();
        }
    }
    writeln!(out, "convention: {}", built.convention).unwrap();
    writeln!(out).unwrap();

    // developability
    let verdict = developability_verdict(
        &built.surface,
        &grid,
        built.convention,
        built.p_tol,
        &tol,
    )
    .map_err(CliError::Numeric)?;
    writeln!(out, "developability (|P| tolerance {}):", num(built.p_tol)).unwrap();
    writeln!(out, "  developable: {}", verdict.developable).unwrap();
    writeln!(out, "  cylinder: {}", verdict.cylinder).unwrap();
    match verdict.max_abs_p {
        Some(m) => writeln!(out, "  max |P|: {}", num(m)).unwrap(),
        None => writeln!(out, "  max |P|: undefined at every sample").unwrap(),
    }
    if !verdict.witnesses.is_empty() {
        let w = verdict
            .witnesses
            .iter()
            .map(|&(s, p)| format!("P({}) = {}", num(to_user(s)), num(p)))
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(out, "  extrema: {w}").unwrap();
    }
    if verdict.undefined_count > 0 {
        writeln!(
            out,
            "  undefined samples: {} of {}",
            verdict.undefined_count,
            grid.len()
        )
        .unwrap();
    }
    writeln!(out).unwrap();

    // helix conditions
    writeln!(out, "helix conditions (residual h - target):").unwrap();
    if let Some(h) = class.h_mean {
        let lambda = built.lambda();
        let mut conditions: Vec<(&str, HelixVariant)> =
            vec![("base-curve general ratio (x2^2+x3^2)/(x1 x3)", HelixVariant::AlphaGeneral)];
        if x.classify_case(&tol) == PlaneClass::RectifyingPlane {
            conditions.push(("rectifying director ratio x3/x1", HelixVariant::RectifyingAlpha));
        }
        if lambda == [0.0, 1.0, 0.0] {
            conditions.push(("companion beta'=N ratio x1/x3", HelixVariant::BetaN));
        }
        if lambda == [0.0, 0.0, 1.0] {
            conditions.push((
                "companion beta'=B ratio x1 x3/(x1^2 - x2^2)",
                HelixVariant::BetaB,
            ));
        }
        for (label, variant) in conditions {
            match helix_condition(x, h, variant, &tol) {
                Ok(r) => writeln!(out, "  {label}: {}", num(r)).unwrap(),
                Err(CoreError::DegenerateRatio { .. }) => {
                    writeln!(out, "  {label}: ratio degenerate").unwrap()
                }
                Err(e) => return Err(CliError::Numeric(e)),
            }
        }
    } else {
        writeln!(out, "  not applicable (harmonic curvature undefined)").unwrap();
    }
    writeln!(out).unwrap();

    // striction
    writeln!(out, "striction:").unwrap();
    let mut points: Vec<StrictionPoint> = Vec::new();
    let mut cylinder_hits = 0usize;
    let mut null_hits = 0usize;
    for &s in &grid {
        match built.surface.striction_point(s, &tol) {
            Ok(p) => points.push(p),
            Err(CoreError::CylinderStriction { .. }) => cylinder_hits += 1,
            Err(CoreError::NullRulingDerivative { .. }) => null_hits += 1,
            Err(e) => return Err(CliError::Numeric(e)),
        }
    }
    if points.is_empty() {
        let reason = if cylinder_hits > 0 {
            "the ruling direction is constant (cylinder)"
        } else {
            "the ruling derivative is null"
        };
        writeln!(out, "  undefined at every sample: {reason}").unwrap();
    } else {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in &points {
            lo = lo.min(p.offset);
            hi = hi.max(p.offset);
        }
        let coincide = points.iter().filter(|p| p.coincides_with_base).count();
        writeln!(out, "  offsets in [{}, {}]", num(lo), num(hi)).unwrap();
        writeln!(
            out,
            "  coincides with base: {} of {} samples",
            coincide,
            points.len()
        )
        .unwrap();
        if points.len() >= 3 {
            let first = points[1].point - points[0].point;
            let mut collinear = true;
            for w in points.windows(2).skip(1) {
                let chord = w[1].point - w[0].point;
                let cross = first.lorentz_cross(&chord);
                if cross.euclid_norm() > 1e-6 * first.euclid_norm().max(1e-12) * chord.euclid_norm().max(1e-12)
                {
                    collinear = false;
                    break;
                }
            }
            writeln!(out, "  central points collinear: {collinear}").unwrap();
        }
        if cylinder_hits + null_hits > 0 {
            writeln!(
                out,
                "  undefined samples: {} of {}",
                cylinder_hits + null_hits,
                grid.len()
            )
            .unwrap();
        }
        if built.scenario.wants(OutputKind::Striction) {
            writeln!(out, "  central points:").unwrap();
            for (p, &user_s) in points.iter().zip(user_grid.iter()) {
                writeln!(
                    out,
                    "    s = {}: point = {}, offset = {}",
                    num(user_s),
                    p.point,
                    num(p.offset)
                )
                .unwrap();
            }
        }
    }
    writeln!(out).unwrap();

    // induced metric at the window corners
    writeln!(out, "surface causal type at window corners:").unwrap();
    let corners = [
        (g.s_min, g.v_min),
        (g.s_min, g.v_max),
        (g.s_max, g.v_min),
        (g.s_max, g.v_max),
    ];
    for (us, v) in corners {
        let label = match built.surface.causal_type(built.internal_s(us), v, &tol) {
            Ok(t) => t.to_string(),
            Err(CoreError::SingularPoint { .. }) => "singular".to_string(),
            Err(e) => return Err(CliError::Numeric(e)),
        };
        writeln!(out, "  (s = {}, v = {}): {label}", num(us), num(v)).unwrap();
    }

    Ok(out)
}
