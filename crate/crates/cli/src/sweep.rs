//! CSV export of per-sample quantities along the base curve.
//!
//! Columns: `s,k1,k2,h,P_paper,P_lorentzian,numerator,striction_offset,flags`.
//! Numeric fields carry 17 significant digits so they re-parse exactly;
//! quantities without a value print the literal token `undefined`.

use crate::scenario::{BuiltScenario, OutputKind};
use crate::CliError;
use drall_core::{
    cylinder_check, frenet_apparatus, numerator_coefficients, DenominatorConvention,
    Error as CoreError,
};
use std::fmt::Write as _;

pub const SWEEP_HEADER: &str = "s,k1,k2,h,P_paper,P_lorentzian,numerator,striction_offset,flags";

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn export_sweep(built: &BuiltScenario) -> Result<String, CliError> {
    if !built.scenario.wants(OutputKind::Sweep) {
        return Err(CliError::Config(
            "outputs: this scenario does not request `sweep`".into(),
        ));
    }
    let tol = built.tol;
    let grid = built.internal_grid();
    let user_grid = built.s_grid();
    let lambda = built.lambda();
    let x = &built.director;
    let (c1, c2) = numerator_coefficients(lambda, x);
    let cylinder = cylinder_check(&built.surface, &grid, &tol).map_err(CliError::Numeric)?;

    let mut out = String::new();
    writeln!(out, "{SWEEP_HEADER}").unwrap();
    for (&s, &user_s) in grid.iter().zip(user_grid.iter()) {
        let frame = frenet_apparatus(built.alpha.as_ref(), s).map_err(CliError::Numeric)?;
        let h = if frame.k2.abs() > tol.zero_tol * frame.k1.abs() {
            num(frame.k1 / frame.k2)
        } else {
            "undefined".to_string()
        };
        let mut flags: Vec<&str> = Vec::new();
        if cylinder {
            flags.push("cylinder");
        }
        let p_of = |conv: DenominatorConvention| -> Result<String, CliError> {
            match built.surface.closed_form_at(s, conv, &tol) {
                Ok(rep) => Ok(num(rep.value)),
                Err(CoreError::UndefinedParameter { .. }) => Ok("undefined".to_string()),
                Err(e) => Err(CliError::Numeric(e)),
            }
        };
        let p_paper = p_of(DenominatorConvention::PaperExpanded)?;
        let p_lorentzian = p_of(DenominatorConvention::Lorentzian)?;
        if !cylinder && p_lorentzian == "undefined" && p_paper != "undefined" {
            flags.push("null_xprime");
        }
        let numerator = num(c1 * frame.k1 + c2 * frame.k2);
        let offset = match built.surface.striction_point(s, &tol) {
            Ok(p) => num(p.offset),
            Err(CoreError::CylinderStriction { .. }) => "undefined".to_string(),
            Err(CoreError::NullRulingDerivative { .. }) => {
                if !flags.contains(&"null_xprime") {
                    flags.push("null_xprime");
                }
                "undefined".to_string()
            }
            Err(e) => return Err(CliError::Numeric(e)),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            num(user_s),
            num(frame.k1),
            num(frame.k2),
            h,
            p_paper,
            p_lorentzian,
            numerator,
            offset,
            flags.join(";")
        )
        .unwrap();
    }
    Ok(out)
}
