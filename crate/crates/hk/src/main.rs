//! Command-line frontend: parses flags, loads the scenario configuration,
//! dispatches to the subcommand runners, and renders the outcome through
//! the deterministic emitters.  Failures print a machine-readable error
//! record to stderr and exit nonzero; a table is only ever printed whole.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hk::scenario::{
    emit_csv, emit_json, emit_table, resolve_budget, run_assprime, run_capture, run_cmtest,
    run_colength, run_equi, run_estimate, run_function, run_hs, run_library, run_limits,
    run_monotone, RunControls, RunManifest, RunOutcome, Scenario,
};
use hk::{groebner, Error, Result};

#[derive(Parser)]
#[command(
    name = "hk",
    version,
    about = "Exact Hilbert-Kunz and parameter multiplicities over prime fields, \
             small extensions and F_p(t)"
)]
struct Cli {
    /// TOML scenario configuration (required by every subcommand except `bm`)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Cap every Frobenius-exponent grid at this value
    #[arg(long, global = true)]
    qmax: Option<u64>,
    /// Restrict the run to one named case
    #[arg(long, global = true)]
    case: Option<String>,
    /// Also write the stdout rendering to this path
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Format printed to stdout
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// S-pair budget for Groebner runs (overrides HK_BUDGET and the config)
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads (defaults to the config value, then to all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Table => "table",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact colength of every configured ideal
    Colength,
    /// Sample Hilbert-Kunz functions on the exponent grid
    Function,
    /// Function samples plus a limit estimate per ideal
    Estimate,
    /// Compare Frobenius and parameter multiplicities of parameter systems
    Hs,
    /// Equimultiplicity criterion for the configured ideal and parameters
    Equi,
    /// Colon-capturing witnesses at a Frobenius power
    Capture,
    /// Regular-sequence test modulo sampled Frobenius powers
    Cmtest,
    /// Associated-maximal scan over Frobenius powers
    Assprime,
    /// Scaled-length sequence of a parameter against an ideal
    Monotone,
    /// Scaled multiplicities of bracketed powers against their limit
    Limits,
    /// Run the built-in benchmark scenario library
    Bm,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Colength => "colength",
            Command::Function => "function",
            Command::Estimate => "estimate",
            Command::Hs => "hs",
            Command::Equi => "equi",
            Command::Capture => "capture",
            Command::Cmtest => "cmtest",
            Command::Assprime => "assprime",
            Command::Monotone => "monotone",
            Command::Limits => "limits",
            Command::Bm => "bm",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            let record = serde_json::json!({
                "error": { "kind": error.kind(), "message": error.to_string() }
            });
            eprintln!("{record}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(command: &Command, scenario: &Scenario, controls: &RunControls) -> Result<RunOutcome> {
    match command {
        Command::Colength => run_colength(scenario, controls),
        Command::Function => run_function(scenario, controls),
        Command::Estimate => run_estimate(scenario, controls),
        Command::Hs => run_hs(scenario, controls),
        Command::Equi => run_equi(scenario, controls),
        Command::Capture => run_capture(scenario, controls),
        Command::Cmtest => run_cmtest(scenario, controls),
        Command::Assprime => run_assprime(scenario, controls),
        Command::Monotone => run_monotone(scenario, controls),
        Command::Limits => run_limits(scenario, controls),
        Command::Bm => unreachable!("the library subcommand never loads a configuration"),
    }
}

fn write_text(path: &PathBuf, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| Error::Io(std::io::Error::other(format!("writing {}: {e}", path.display()))))
}

fn run(cli: Cli) -> Result<()> {
    let subcommand = cli.command.name();
    let controls = RunControls {
        qmax: cli.qmax,
        case: cli.case.clone(),
    };

    let loaded: Option<(String, String, Scenario)> = match (&cli.command, &cli.config) {
        (Command::Bm, None) => None,
        (Command::Bm, Some(_)) => {
            return Err(Error::Config(
                "the bm subcommand runs the built-in library and takes no --config".into(),
            ));
        }
        (_, None) => {
            return Err(Error::Config(format!(
                "the {subcommand} subcommand needs --config"
            )));
        }
        (_, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| {
                Error::Io(std::io::Error::other(format!("reading {}: {e}", path.display())))
            })?;
            let scenario = Scenario::from_toml(&text)?;
            Some((path.display().to_string(), text, scenario))
        }
    };

    let config_budget = loaded.as_ref().and_then(|(_, _, s)| s.spec.run.budget);
    let env_budget = std::env::var("HK_BUDGET").ok();
    let budget = resolve_budget(cli.budget, env_budget.as_deref(), config_budget)?;
    groebner::set_pair_budget(budget);

    let jobs = cli.jobs.or_else(|| loaded.as_ref().and_then(|(_, _, s)| s.spec.run.jobs));
    if let Some(threads) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
    }

    let (source, config_bytes): (String, Vec<u8>) = match &loaded {
        Some((source, text, _)) => (source.clone(), text.clone().into_bytes()),
        None => {
            let descriptor = format!(
                "builtin:library qmax={:?} case={:?}",
                cli.qmax, cli.case
            );
            (String::from("builtin:library"), descriptor.into_bytes())
        }
    };
    let mut manifest = RunManifest::begin(subcommand, &source, &config_bytes);
    manifest.set_option("format", cli.format.name());
    manifest.set_option("budget", budget);
    if let Some(qmax) = cli.qmax {
        manifest.set_option("qmax", qmax);
    }
    if let Some(case) = &cli.case {
        manifest.set_option("case", case);
    }
    if let Some(threads) = jobs {
        manifest.set_option("jobs", threads);
    }

    let outcome = match (&cli.command, &loaded) {
        (Command::Bm, _) => run_library(&controls)?,
        (command, Some((_, _, scenario))) => dispatch(command, scenario, &controls)?,
        (_, None) => unreachable!("non-library subcommands load a configuration"),
    };

    manifest.timings = outcome.timings.clone();
    manifest.verdicts = outcome.verdicts.clone();
    manifest.assumptions = outcome.assumptions.clone();
    manifest.finish();

    let rendered = match cli.format {
        Format::Table => emit_table(&outcome.rows, &outcome.footers()),
        Format::Csv => emit_csv(&outcome.rows),
        Format::Json => emit_json(&outcome.rows)?,
    };
    print!("{rendered}");

    if let Some(path) = &cli.out {
        write_text(path, &rendered)?;
    }
    if let Some((_, _, scenario)) = &loaded {
        if let Some(path) = &scenario.spec.output.csv {
            write_text(path, &emit_csv(&outcome.rows))?;
        }
        if let Some(path) = &scenario.spec.output.json {
            write_text(path, &emit_json(&outcome.rows)?)?;
        }
    }
    let manifest_path = loaded
        .as_ref()
        .and_then(|(_, _, scenario)| scenario.spec.output.manifest.clone())
        .unwrap_or_else(|| PathBuf::from("hk-manifest.json"));
    write_text(&manifest_path, &manifest.to_json()?)?;
    Ok(())
}
