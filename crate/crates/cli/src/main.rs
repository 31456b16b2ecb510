use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hopfhc::{parse_config, run, UsageError};

/// Cyclic cohomology workbench for Hopf algebra presets.
#[derive(Parser)]
#[command(name = "hopfhc", version)]
struct Args {
    /// Run configuration (`key = value` lines).
    config: PathBuf,
    /// Report path; overrides `output` in the config. Defaults to stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Overrides `max_degree` in the config.
    #[arg(long)]
    max_degree: Option<usize>,
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("HOPFHC_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("HOPFHC_THREADS must be a positive integer, got `{v}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn execute(args: Args) -> Result<i32, UsageError> {
    let text = std::fs::read_to_string(&args.config)?;
    let mut config = parse_config(&text)?;
    if let Some(n) = args.max_degree {
        config.max_degree = n;
    }
    if args.output.is_some() {
        config.output = args.output;
    }
    let report = run(&config)?;
    let json = report.to_json();
    match &config.output {
        Some(path) => std::fs::write(path, json)?,
        None => print!("{json}"),
    }
    for e in report.ledger.iter().filter(|e| e.is_fatal_failure()) {
        eprintln!("FAIL {}: {}", e.name, e.witness.as_deref().unwrap_or(""));
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Err(e) = configure_threads() {
        eprintln!("hopfhc: {e}");
        return ExitCode::from(2);
    }
    match execute(args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("hopfhc: {e}");
            ExitCode::from(2)
        }
    }
}
