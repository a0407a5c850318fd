//! `opprank`: predict the p-rank of an oppositeness matrix from the
//! representation theory of its group, and check it by building the matrix.
//!
//! Every subcommand prints one JSON report on stdout. Exit codes: 0 on a
//! match or a successful prediction, 1 on bad input, 2 on a mismatch, 3 when
//! the prediction is unresolved, 4 when the geometry is not modelled.

pub mod cache;
pub mod commands;
pub mod config;
pub mod report;

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use config::{JobConfig, Settings};
use report::Verdict;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Core(opprank_core::Error),
    Io(String),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> CliError {
        CliError::Config(msg.into())
    }

    pub fn io(path: &Path, err: std::io::Error) -> CliError {
        CliError::Io(format!("{}: {err}", path.display()))
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(opprank_core::Error::UnsupportedGeometry(_)) => {
                Verdict::GeometryUnsupported.exit_code()
            }
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<opprank_core::Error> for CliError {
    fn from(e: opprank_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn json<T: Serialize>(report: &T, exit_code: i32) -> Outcome {
        let mut stdout = serde_json::to_string_pretty(report).expect("reports serialize");
        stdout.push('\n');
        Outcome {
            exit_code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &CliError) -> Outcome {
        Outcome {
            exit_code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("opprank: {e}\n"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "opprank", version, about = "p-ranks of oppositeness matrices in finite buildings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Predict the p-rank from dim L(λ_opp).
    Predict(JobArgs),
    /// Enumerate objects and write the oppositeness matrix.
    Build(JobArgs),
    /// Rank over F_p of a built or stored matrix.
    Rank(JobArgs),
    /// Check that every nonzero eigenvalue of A·Aᵀ is a power of q.
    Spectrum(JobArgs),
    /// Predict, build, measure and compare.
    Verify(JobArgs),
    /// Print the highest weight λ_opp.
    LambdaOpp(JobArgs),
    /// Print the Jantzen sum of a Weyl module.
    JantzenSum(JobArgs),
    /// Print the Weyl dimension of a dominant weight.
    WeylDim(JobArgs),
}

#[derive(Debug, Args)]
struct JobArgs {
    /// Flat `key = value` config file, read before the overrides.
    #[arg(short, long)]
    config: Option<PathBuf>,

    /// `key=value` overrides, or a bare root system name such as `E6`.
    #[arg(allow_hyphen_values = true)]
    settings: Vec<String>,
}

impl JobArgs {
    fn job_config(&self) -> Result<JobConfig, CliError> {
        let mut s = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                Settings::parse_file(&text)?
            }
            None => Settings::default(),
        };
        for arg in &self.settings {
            s.apply_arg(arg)?;
        }
        JobConfig::from_settings(&s)
    }
}

fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Predict(a) => commands::predict(&a.job_config()?),
        Command::Build(a) => commands::build(&a.job_config()?),
        Command::Rank(a) => commands::rank(&a.job_config()?),
        Command::Spectrum(a) => commands::spectrum(&a.job_config()?),
        Command::Verify(a) => commands::verify(&a.job_config()?),
        Command::LambdaOpp(a) => commands::lambda_opp_cmd(&a.job_config()?),
        Command::JantzenSum(a) => commands::jantzen_sum_cmd(&a.job_config()?),
        Command::WeylDim(a) => commands::weyl_dim_cmd(&a.job_config()?),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    exit_code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    dispatch(&cli.command).unwrap_or_else(|e| Outcome::error(&e))
}
