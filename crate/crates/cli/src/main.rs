use clap::{Parser, Subcommand};
use drall_cli::scenario::{BuiltScenario, Overrides, Scenario};
use drall_cli::{export_case_table, export_mesh, export_sweep, run_scenario, CliError};
use drall_core::DenominatorConvention;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Ruled surfaces over timelike curves in Minkowski 3-space: developability,
/// distribution parameters and striction from JSON scenarios.
#[derive(Parser)]
#[command(name = "drall", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Denominator convention override: paper | lorentzian
    #[arg(long, global = true, value_parser = parse_convention)]
    convention: Option<DenominatorConvention>,

    /// Developability tolerance on |P|
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Grid override as <n_s>x<n_v>, e.g. 101x21
    #[arg(long, global = true, value_parser = parse_grid)]
    grid: Option<(usize, usize)>,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report for a scenario
    Analyze {
        scenario: PathBuf,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Triangulated OBJ mesh of the surface patch
    Mesh {
        scenario: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Per-sample CSV sweep along the base curve
    Sweep {
        scenario: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Special-case catalogue over the scenario's curve
    CaseTable {
        scenario: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_convention(s: &str) -> Result<DenominatorConvention, String> {
    match s {
        "paper" => Ok(DenominatorConvention::PaperExpanded),
        "lorentzian" => Ok(DenominatorConvention::Lorentzian),
        other => Err(format!("unknown convention `{other}`, expected paper|lorentzian")),
    }
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once('x')
        .ok_or_else(|| format!("grid `{s}` is not of the form <n_s>x<n_v>"))?;
    let n_s = a.parse().map_err(|e| format!("n_s: {e}"))?;
    let n_v = b.parse().map_err(|e| format!("n_v: {e}"))?;
    Ok((n_s, n_v))
}

fn load(path: &Path) -> Result<Scenario, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Scenario::from_json(&text)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    use std::io::Write;
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Ok(()) => Ok(()),
            // a closed pipe downstream is not our error
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            Err(e) => Err(CliError::Io(e.to_string())),
        },
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let overrides = Overrides {
        convention: cli.convention,
        p_tol: cli.tol,
        grid: cli.grid,
    };
    match cli.command {
        Command::Analyze { scenario, output } => {
            let built = BuiltScenario::build(load(&scenario)?, &overrides)?;
            emit(&run_scenario(&built)?, output.as_deref())
        }
        Command::Mesh { scenario, output } => {
            let built = BuiltScenario::build(load(&scenario)?, &overrides)?;
            emit(&export_mesh(&built)?, output.as_deref())
        }
        Command::Sweep { scenario, output } => {
            let built = BuiltScenario::build(load(&scenario)?, &overrides)?;
            emit(&export_sweep(&built)?, output.as_deref())
        }
        Command::CaseTable { scenario, output } => {
            let built = BuiltScenario::build(load(&scenario)?, &overrides)?;
            emit(&export_case_table(&built)?, output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
