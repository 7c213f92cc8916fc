//! Wavefront OBJ export of the sampled surface patch.
//!
//! Vertices appear row-major with `s` as the outer loop and `v` as the inner
//! one; each grid cell contributes two triangles with 1-based indices. The
//! output carries vertices and faces only.

use crate::scenario::{BuiltScenario, OutputKind};
use crate::CliError;
use std::fmt::Write as _;

pub fn export_mesh(built: &BuiltScenario) -> Result<String, CliError> {
    if !built.scenario.wants(OutputKind::Mesh) {
        return Err(CliError::Config(
            "outputs: this scenario does not request `mesh`".into(),
        ));
    }
    let grid = built.internal_grid();
    let vs = built.v_grid();
    let n_v = vs.len();

    let mut out = String::new();
    for &s in &grid {
        for &v in &vs {
            let p = built.surface.point(s, v).map_err(CliError::Numeric)?;
            writeln!(out, "v {} {} {}", p.x, p.y, p.z).unwrap();
        }
    }
    for i in 0..grid.len() - 1 {
        for j in 0..n_v - 1 {
            let a = i * n_v + j + 1;
            let b = (i + 1) * n_v + j + 1;
            let c = (i + 1) * n_v + j + 2;
            let d = i * n_v + j + 2;
            writeln!(out, "f {a} {b} {c}").unwrap();
            writeln!(out, "f {a} {c} {d}").unwrap();
        }
    }
    Ok(out)
}
