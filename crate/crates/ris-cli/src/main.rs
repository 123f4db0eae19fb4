//! `ris` — drive the surface simulator from a scenario file.
//!
//! Every subcommand reads the same scenario file, so one file fully
//! reproduces an experiment. CSV and SVG results go to stdout unless
//! `--out` names a file.
//!
//! Exit codes: 0 success, 2 usage, 3 scenario parse/validation failure,
//! 4 I/O failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ris_core::analysis::{enhancement_db, phase_error_report};
use ris_core::io::{layout_svg, load_scenario, CellDims, LoadedScenario, ToCsv};
use ris_core::solver::pattern_scan;
use ris_core::synthesis::synthesize;
use ris_core::Error;

#[derive(Parser)]
#[command(
    name = "ris",
    version,
    about = "Model-level simulator for a 1-bit column-biased reconfigurable reflecting surface"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the synthesized per-column configuration as a bit string (1 = On).
    Synthesize(CommonArgs),
    /// Sweep the band and report configured vs all-OFF received power (CSV).
    Sweep(CommonArgs),
    /// Scan the scattered pattern over angle at the design frequency (CSV).
    Scan(CommonArgs),
    /// Per-cell phase error of the synthesized configuration (CSV).
    PhaseError(CommonArgs),
    /// Render the printed-array layout for the synthesized configuration (SVG).
    Layout(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Scenario file (TOML).
    #[arg(long, value_name = "PATH")]
    scenario: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl Command {
    fn args(&self) -> &CommonArgs {
        match self {
            Command::Synthesize(a)
            | Command::Sweep(a)
            | Command::Scan(a)
            | Command::PhaseError(a)
            | Command::Layout(a) => a,
        }
    }
}

fn run(command: &Command) -> Result<String, Error> {
    let args = command.args();
    let LoadedScenario {
        scenario,
        geometry,
        response,
        sweep,
        scan,
    } = load_scenario(&args.scenario)?;
    let config = synthesize(&scenario, &geometry, &response)?;

    match command {
        Command::Synthesize(_) => Ok(format!("{config}\n")),
        Command::Sweep(_) => {
            let report = enhancement_db(
                &scenario,
                &geometry,
                &response,
                &config,
                &sweep.frequencies(),
            )?;
            let mut csv = report.csv_string();
            csv.push_str(&format!("# min_enhancement_db,{}\n", report.min_enhancement_db));
            Ok(csv)
        }
        Command::Scan(_) => {
            let result = pattern_scan(
                &scenario,
                &geometry,
                &config,
                &response,
                scenario.design_freq_ghz,
                scan.radius_m,
                &scan.angles(),
            )?;
            Ok(result.csv_string())
        }
        Command::PhaseError(_) => {
            let report = phase_error_report(
                &scenario,
                &geometry,
                &response,
                &config,
                scenario.design_freq_ghz,
            )?;
            Ok(report.csv_string())
        }
        Command::Layout(_) => layout_svg(&geometry, &config, &CellDims::default()),
    }
}

fn emit(output: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, output).map_err(|e| Error::Io {
            context: format!("writing {}", path.display()),
            source: e,
        }),
        None => {
            use std::io::Write;
            match std::io::stdout().write_all(output.as_bytes()) {
                // a closed downstream pipe (e.g. `| head`) is not a failure
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                other => other.map_err(|e| Error::Io {
                    context: "writing to stdout".to_string(),
                    source: e,
                }),
            }
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Io { .. } => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command).and_then(|output| emit(&output, &cli.command.args().out));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            // one-line diagnostic even for multi-line parse reports
            let message = err.to_string().replace('\n', "; ");
            eprintln!("error: {message}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
