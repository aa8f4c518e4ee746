//! Command-line front end: argument parsing, file ingestion and report emission.
//!
//! [`run`] is pure given a [`RunConfig`]; the binary only parses arguments,
//! applies the `K0CAT_SEED` override and prints the [`Report`].

mod tables;
mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::abelian::GroupInvariants;
use crate::higher::{k0_higher_ar, k0_higher_theta, HigherError, HigherParams, TiltingSet};
use crate::polygon::{k0_polygon, Angulation, PolygonError, PolygonParams};

pub use tables::{emit_index_table, emit_theta_table, format_expansion, TermOrder};
pub use verify::{verify_paper, Check};

pub const DEFAULT_SEED: u64 = 20_240_517;
pub const SEED_ENV: &str = "K0CAT_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_SCOPE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "k0cat", version, about = "Grothendieck groups of type A cluster categories")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// K0 of C_q(A_p) from the AR angles of an angulation.
    PolygonK0 {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// `fan` or a JSON angulation file.
        #[arg(long, default_value = "fan")]
        angulation: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// K0 of O(A^d_p) via AR angles, θ-relations or both.
    HigherK0 {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: u32,
        /// `default` or a JSON tilting file.
        #[arg(long, default_value = "default")]
        tilting: String,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// CSV tables of indices or angle θ-values.
    Tables {
        #[arg(value_enum)]
        table: TableKind,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "default")]
        tilting: String,
    },
    /// Recomputes the published examples and reports one line per check.
    VerifyPaper {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Ar,
    Theta,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Index,
    Theta,
}

/// Output of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Report { exit_code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(exit_code: i32, stderr: String) -> Self {
        Report { exit_code, stdout: String::new(), stderr }
    }
}

/// JSON body of `higher-k0 --method both`; keys in sorted order so a
/// generic JSON round trip reproduces it byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BothReport {
    pub agreement: bool,
    pub ar: GroupInvariants,
    pub theta: GroupInvariants,
}

impl RunConfig {
    /// Replaces the `verify-paper` seed with the value of `K0CAT_SEED`, if given.
    pub fn with_seed_override(mut self, seed_env: Option<&str>) -> Result<Self, String> {
        if let (Command::VerifyPaper { seed }, Some(raw)) = (&mut self.command, seed_env) {
            *seed = raw.trim().parse().map_err(|_| format!("{SEED_ENV} must be an unsigned integer, got {raw:?}"))?;
        }
        Ok(self)
    }
}

fn polygon_exit(e: &PolygonError) -> i32 {
    match e {
        PolygonError::NonIndecomposableCone { .. } | PolygonError::TowerMismatch { .. } | PolygonError::Internal(_) => {
            EXIT_SCOPE
        }
        _ => EXIT_VALIDATION,
    }
}

fn higher_exit(e: &HigherError) -> i32 {
    match e {
        HigherError::NoResolution(_) | HigherError::AmbiguousIndex { .. } => EXIT_SCOPE,
        _ => EXIT_VALIDATION,
    }
}

fn load_angulation(params: PolygonParams, spec: &str) -> Result<Angulation, PolygonError> {
    if spec == "fan" {
        return Ok(Angulation::fan(params));
    }
    let t = Angulation::load(&PathBuf::from(spec))?;
    if t.params() != params {
        return Err(PolygonError::InvalidAngulation(format!(
            "file is for p={}, q={} but --p {} --q {} was given",
            t.params().p(),
            t.params().q(),
            params.p(),
            params.q()
        )));
    }
    Ok(t)
}

pub(crate) fn load_tilting(params: HigherParams, spec: &str) -> Result<TiltingSet, HigherError> {
    if spec == "default" {
        return Ok(TiltingSet::default_for(params));
    }
    let t = TiltingSet::load(&PathBuf::from(spec))?;
    if t.params() != params {
        return Err(HigherError::InvalidTilting(format!(
            "file is for p={}, d={} but --p {} --d {} was given",
            t.params().p(),
            t.params().d(),
            params.p(),
            params.d()
        )));
    }
    Ok(t)
}

pub fn run(config: &RunConfig) -> Report {
    match &config.command {
        Command::PolygonK0 { p, q, angulation, format } => run_polygon(*p, *q, angulation, *format),
        Command::HigherK0 { p, d, tilting, method, format } => run_higher(*p, *d, tilting, *method, *format),
        Command::Tables { table, p, d, tilting } => run_tables(*table, *p, *d, tilting),
        Command::VerifyPaper { seed } => {
            let checks = verify_paper(*seed);
            let mut out = String::new();
            for c in &checks {
                writeln!(out, "{c}").unwrap();
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} checks, {} failed (seed {seed})", checks.len(), failed).unwrap();
            Report { exit_code: if failed == 0 { EXIT_OK } else { EXIT_MISMATCH }, stdout: out, stderr: String::new() }
        }
    }
}

fn run_polygon(p: u32, q: u32, angulation: &str, format: Format) -> Report {
    let result = PolygonParams::new(p, q)
        .and_then(|params| load_angulation(params, angulation))
        .and_then(|t| k0_polygon(&t).map(|g| (t, g)));
    match result {
        Err(e) => Report::fail(polygon_exit(&e), format!("error: {e}\n")),
        Ok((_, g)) if format == Format::Json => Report::ok(format!("{}\n", g.to_json())),
        Ok((t, g)) => {
            let diags: Vec<String> = t.diagonals().map(|d| d.to_string()).collect();
            Report::ok(format!("{}\nangulation: {}\nK0 = {g}\n", t.params(), diags.join(" ")))
        }
    }
}

fn run_higher(p: u32, d: u32, tilting: &str, method: Method, format: Format) -> Report {
    let params = match HigherParams::new(p, d) {
        Ok(h) => h,
        Err(e) => return Report::fail(higher_exit(&e), format!("error: {e}\n")),
    };
    let theta = || load_tilting(params, tilting).and_then(|t| k0_higher_theta(&t));
    let outcome = match method {
        Method::Ar => Ok((Some(k0_higher_ar(&params)), None)),
        Method::Theta => theta().map(|g| (None, Some(g))),
        Method::Both => theta().map(|g| (Some(k0_higher_ar(&params)), Some(g))),
    };
    let (ar, th) = match outcome {
        Ok(v) => v,
        Err(e) => return Report::fail(higher_exit(&e), format!("error: {e}\n")),
    };
    match (ar, th) {
        (Some(ar), Some(theta)) => {
            let agreement = ar == theta;
            let stdout = match format {
                Format::Json => {
                    let body = BothReport { agreement, ar, theta };
                    format!("{}\n", serde_json::to_string(&body).expect("report serializes"))
                }
                Format::Text => format!("{params}\nar: {ar}\ntheta: {theta}\nagreement: {agreement}\n"),
            };
            Report { exit_code: if agreement { EXIT_OK } else { EXIT_MISMATCH }, stdout, stderr: String::new() }
        }
        (Some(g), None) | (None, Some(g)) => match format {
            Format::Json => Report::ok(format!("{}\n", g.to_json())),
            Format::Text => Report::ok(format!("{params}\nK0 = {g}\n")),
        },
        (None, None) => unreachable!("every method computes at least one group"),
    }
}

fn run_tables(table: TableKind, p: u32, d: u32, tilting: &str) -> Report {
    let result = HigherParams::new(p, d).and_then(|params| load_tilting(params, tilting)).and_then(|t| match table {
        TableKind::Index => emit_index_table(&t),
        TableKind::Theta => emit_theta_table(&t),
    });
    match result {
        Ok(csv) => Report::ok(csv),
        Err(e) => Report::fail(higher_exit(&e), format!("error: {e}\n")),
    }
}

/// Entry point used by the binary: parse, apply the seed override, run.
pub fn main_with_args<I, T>(args: I, seed_env: Option<&str>) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Report::ok(e.to_string())
        }
        Err(e) => return Report::fail(EXIT_VALIDATION, e.to_string()),
    };
    match config.with_seed_override(seed_env) {
        Ok(c) => run(&c),
        Err(msg) => Report::fail(EXIT_VALIDATION, format!("error: {msg}\n")),
    }
}
