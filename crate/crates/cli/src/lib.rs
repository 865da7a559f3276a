//! `frobkit`: command-line access to generalized Frobenius numbers.
//!
//! Exit codes: 0 success (including "no reduction" and an absent `g_s`),
//! 1 internal error, 2 invalid input, 3 resource or overflow limits,
//! 4 a theorem or identity check failed.

pub mod commands;
pub mod output;

use std::ffi::OsString;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use frobkit_core::{FrobError, Generators, SearchConfig, DEFAULT_ENUMERATION_CAP};

use crate::output::{exacts, render, Exact, Format, Style};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "frobkit", version, about = "Generalized Frobenius numbers and denumerants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count (and optionally list) the representations of x.
    Denumerant(DenumerantArgs),
    /// g*_s, g_s and n*_s for a tuple.
    Frobenius(FrobeniusArgs),
    /// The table of least integers with more than s representations per residue class.
    Apery(AperyArgs),
    /// Build A_j = Π / a_j from a pairwise coprime base and check its closed forms.
    Family(FamilyArgs),
    /// Check the common-factor reduction identities for g*_s and n*_s.
    Reduce(ReduceArgs),
}

#[derive(Debug, Args)]
pub struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DenumerantArgs {
    /// Generators, comma separated (e.g. 15,10,6).
    #[arg(long, value_parser = parse_tuple)]
    pub gens: Tuple,
    #[arg(long)]
    pub x: u64,
    /// Also list every representation.
    #[arg(long)]
    pub enumerate: bool,
    /// Fail instead of listing more than this many representations.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Position (0-based) of the generator used as modulus; defaults to the smallest generator.
    #[arg(long)]
    pub modulus_index: Option<usize>,
    /// Largest integer the residue search may examine; defaults to a provable bound.
    #[arg(long)]
    pub ceiling: Option<u64>,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            modulus_index: self.modulus_index,
            ceiling: self.ceiling,
        }
    }
}

#[derive(Debug, Args)]
pub struct FrobeniusArgs {
    #[arg(long, value_parser = parse_tuple)]
    pub gens: Tuple,
    /// Representation threshold.
    #[arg(long, default_value_t = 0)]
    pub s: u64,
    /// Include the per-residue table.
    #[arg(long)]
    pub table: bool,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct AperyArgs {
    #[arg(long, value_parser = parse_tuple)]
    pub gens: Tuple,
    #[arg(long, default_value_t = 0)]
    pub s: u64,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Pairwise coprime base (a_1, ..., a_k).
    #[arg(long, value_parser = parse_tuple)]
    pub base: Tuple,
    /// Verify t = 1..=t_max.
    #[arg(long, default_value_t = 3)]
    pub t_max: u32,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, value_parser = parse_tuple)]
    pub gens: Tuple,
    #[arg(long, default_value_t = 0)]
    pub s: u64,
    #[command(flatten)]
    pub format: FormatArg,
}

/// Raw comma-separated integers, validated later so errors map to exit code 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tuple(pub Vec<i128>);

pub fn parse_tuple(raw: &str) -> Result<Tuple, String> {
    if raw.is_empty() {
        return Err("empty tuple".into());
    }
    raw.split(',')
        .map(|part| {
            if part.is_empty() || part.trim() != part {
                return Err(format!("malformed entry {part:?} in {raw:?}"));
            }
            part.parse::<i128>()
                .map_err(|e| format!("malformed entry {part:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Tuple)
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn error(err: &FrobError) -> Self {
        let code = if err.is_validation() {
            EXIT_VALIDATION
        } else if err.is_resource() {
            EXIT_RESOURCE
        } else {
            EXIT_INTERNAL
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, style: Style) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            };
        }
    };
    match dispatch(&cli.command, style) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(&e),
    }
}

fn success(stdout: String, passed: bool) -> Outcome {
    Outcome {
        stdout,
        stderr: String::new(),
        code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
    }
}

fn dispatch(command: &Command, style: Style) -> Result<Outcome, FrobError> {
    let start = Instant::now();
    let elapsed = || start.elapsed().as_millis() as u64;
    match command {
        Command::Denumerant(a) => {
            let gens = Generators::validate(&a.gens.0)?;
            let result = commands::cmd_denumerant(&gens, a.x, a.enumerate, a.cap)?;
            let inputs = commands::DenumerantInputs {
                gens: exacts(gens.values()),
                x: a.x.into(),
                enumerate: a.enumerate,
                cap: a.cap.into(),
            };
            let out = render(a.format.format, "denumerant", &inputs, &result, elapsed(), style);
            Ok(success(out, true))
        }
        Command::Frobenius(a) => {
            let gens = Generators::validate(&a.gens.0)?;
            let result = commands::cmd_frobenius(&gens, a.s, &a.search.config(), a.table)?;
            let inputs = commands::FrobeniusInputs {
                gens: exacts(gens.values()),
                s: a.s.into(),
                modulus_index: a.search.modulus_index.map(Exact::from),
                ceiling: a.search.ceiling.map(Exact::from),
                table: a.table,
            };
            let out = render(a.format.format, "frobenius", &inputs, &result, elapsed(), style);
            Ok(success(out, true))
        }
        Command::Apery(a) => {
            let gens = Generators::validate(&a.gens.0)?;
            let result = commands::cmd_apery(&gens, a.s, &a.search.config())?;
            let inputs = commands::AperyInputs {
                gens: exacts(gens.values()),
                s: a.s.into(),
                modulus_index: a.search.modulus_index.map(Exact::from),
                ceiling: a.search.ceiling.map(Exact::from),
            };
            let out = render(a.format.format, "apery", &inputs, &result, elapsed(), style);
            Ok(success(out, true))
        }
        Command::Family(a) => {
            let base = Generators::validate(&a.base.0)?;
            let result = commands::cmd_family(&base, a.t_max)?;
            let inputs = commands::FamilyInputs {
                base: exacts(base.values()),
                t_max: a.t_max.into(),
            };
            let out = render(a.format.format, "family", &inputs, &result, elapsed(), style);
            Ok(success(out, result.passed() || result.degenerate))
        }
        Command::Reduce(a) => {
            let gens = Generators::validate(&a.gens.0)?;
            let result = commands::cmd_reduce(&gens, a.s)?;
            let inputs = commands::ReduceInputs {
                gens: exacts(gens.values()),
                s: a.s.into(),
            };
            let out = render(a.format.format, "reduce", &inputs, &result, elapsed(), style);
            Ok(success(out, !result.failed()))
        }
    }
}
