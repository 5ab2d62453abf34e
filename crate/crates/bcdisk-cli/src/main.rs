//! `bcdisk` — command-line harness for the bicomplex disk toolkit.
//!
//! Configuration resolves in order: `--config <path>`, the `BCDISK_CONFIG`
//! environment variable, built-in defaults; individual keys are then
//! overridden with repeatable `--set key=value` flags. All reports are JSON
//! (written to `--out` or stdout), profiles are CSV, and human-readable
//! status goes to stderr so report bytes stay clean.
//!
//! Exit codes: `0` success, `1` domain verdict (non-converged solve, failed
//! check, failed suite criterion), `2` input/output or configuration error.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use bcdisk_core::RunConfig;

#[derive(Parser, Debug)]
#[command(name = "bcdisk", version, about = "Bicomplex function theory on the unit disk")]
struct Cli {
    /// Configuration file (overrides BCDISK_CONFIG; defaults otherwise).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Override one configuration key, e.g. `--set n_theta=512` (repeatable).
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Boundary-value solvers.
    #[command(subcommand)]
    Solve(SolveCommand),
    /// Higher-order iterated-operator bundles.
    #[command(subcommand)]
    Hoib(HoibCommand),
    /// Equation transforms.
    #[command(subcommand)]
    Transform(TransformCommand),
    /// Hardy-norm profiling.
    #[command(subcommand)]
    Hardy(HardyCommand),
    /// Verification suite.
    #[command(subcommand)]
    Suite(SuiteCommand),
}

#[derive(Subcommand, Debug)]
enum SolveCommand {
    Schwarz(commands::SchwarzArgs),
    Dirichlet(commands::DirichletArgs),
}

#[derive(Subcommand, Debug)]
enum HoibCommand {
    Roundtrip(commands::HoibRoundtripArgs),
    Extract(commands::HoibExtractArgs),
}

#[derive(Subcommand, Debug)]
enum TransformCommand {
    ConjbelToVekua(commands::ConjbelToVekuaArgs),
}

#[derive(Subcommand, Debug)]
enum HardyCommand {
    Profile(commands::HardyProfileArgs),
}

#[derive(Subcommand, Debug)]
enum SuiteCommand {
    Run(commands::SuiteRunArgs),
}

fn resolve_config(cli: &Cli) -> Result<RunConfig> {
    let mut config = RunConfig::load(cli.config.as_deref())
        .map_err(|e| anyhow!("{e}"))
        .context("loading configuration")?;
    for pair in &cli.set {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| anyhow!("--set expects key=value, got `{pair}`"))?;
        config
            .set(key.trim(), value.trim())
            .map_err(|e| anyhow!("{e}"))
            .with_context(|| format!("applying --set {pair}"))?;
    }
    config.validate().map_err(|e| anyhow!("{e}"))?;
    Ok(config)
}

fn run(cli: &Cli) -> Result<u8> {
    let config = resolve_config(cli)?;
    match &cli.command {
        Command::Solve(SolveCommand::Schwarz(args)) => commands::schwarz(args, &config),
        Command::Solve(SolveCommand::Dirichlet(args)) => commands::dirichlet(args, &config),
        Command::Hoib(HoibCommand::Roundtrip(args)) => commands::hoib_roundtrip(args),
        Command::Hoib(HoibCommand::Extract(args)) => commands::hoib_extract(args),
        Command::Transform(TransformCommand::ConjbelToVekua(args)) => {
            commands::conjbel_to_vekua(args)
        }
        Command::Hardy(HardyCommand::Profile(args)) => commands::hardy_profile(args, &config),
        Command::Suite(SuiteCommand::Run(args)) => commands::suite_run(args, &config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
