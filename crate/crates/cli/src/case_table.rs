//! Text rendering of the special-case catalogue: every base family against
//! every axis and coordinate-plane director.

use crate::scenario::{BuiltScenario, OutputKind};
use crate::CliError;
use drall_core::case_table;
use std::fmt::Write as _;

pub fn export_case_table(built: &BuiltScenario) -> Result<String, CliError> {
    if !built.scenario.wants(OutputKind::CaseTable) {
        return Err(CliError::Config(
            "outputs: this scenario does not request `case_table`".into(),
        ));
    }
    let grid = built.internal_grid();
    let rows = case_table(&built.alpha, &grid, built.convention, &built.tol)
        .map_err(CliError::Numeric)?;

    let mut out = String::new();
    writeln!(
        out,
        "case table for {} (a = {}, b = {}), convention {}",
        built.scenario.curve.kind.label(),
        built.scenario.curve.a,
        built.scenario.curve.b,
        built.convention
    )
    .unwrap();
    writeln!(out).unwrap();
    writeln!(
        out,
        "{:<9} {:<17} {:<28} {:<26} {:>12} {:>12} {:>6} {:>11} {:>9} {:>12}",
        "base", "case", "x", "numerator", "max|P|", "mean P", "undef", "oracle dev", "cylinder", "developable"
    )
    .unwrap();
    for r in &rows {
        let coeff = format!(
            "({:.4}, {:.4}, {:.4})",
            r.coefficients[0], r.coefficients[1], r.coefficients[2]
        );
        let numerator = format!("{:+.3e}*k1 {:+.3e}*k2", r.k1_coeff, r.k2_coeff);
        let fmt_opt = |v: Option<f64>| match v {
            Some(v) => format!("{v:.4e}"),
            None => "undef".to_string(),
        };
        writeln!(
            out,
            "{:<9} {:<17} {:<28} {:<26} {:>12} {:>12} {:>6} {:>11.3e} {:>9} {:>12}",
            r.family.label(),
            r.case.to_string(),
            coeff,
            numerator,
            fmt_opt(r.max_abs_p),
            fmt_opt(r.mean_p),
            r.undefined_points,
            r.oracle_max_rel_dev,
            if r.cylinder { "yes" } else { "no" },
            if r.developable { "yes" } else { "no" }
        )
        .unwrap();
    }
    Ok(out)
}
