//! Argument grammar. Names are validated while parsing, so an unknown
//! group or suite never reaches the runner.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use painleve_core::systems::SystemName;
use painleve_core::weyl::GroupId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Suite {
    Catalog,
    Coxeter,
    Symmetry,
    Symplectic,
    Integral,
    Relations,
    Holomorphy,
    Equivalence,
    Ansatz,
    Numeric,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Catalog,
        Suite::Coxeter,
        Suite::Symmetry,
        Suite::Symplectic,
        Suite::Integral,
        Suite::Relations,
        Suite::Holomorphy,
        Suite::Equivalence,
        Suite::Ansatz,
        Suite::Numeric,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Catalog => "catalog",
            Suite::Coxeter => "coxeter",
            Suite::Symmetry => "symmetry",
            Suite::Symplectic => "symplectic",
            Suite::Integral => "integral",
            Suite::Relations => "relations",
            Suite::Holomorphy => "holomorphy",
            Suite::Equivalence => "equivalence",
            Suite::Ansatz => "ansatz",
            Suite::Numeric => "numeric",
        }
    }
}

/// Selected suites, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suites(pub Vec<Suite>);

/// Selected groups, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groups(pub Vec<GroupId>);

/// Comma-separated list of suites, or `all`.
pub fn parse_suites(s: &str) -> Result<Suites, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.eq_ignore_ascii_case("all") {
            out.extend(Suite::ALL);
            continue;
        }
        match Suite::ALL.iter().find(|x| x.as_str().eq_ignore_ascii_case(part)) {
            Some(x) => out.push(*x),
            None => {
                let known: Vec<&str> = Suite::ALL.iter().map(|x| x.as_str()).collect();
                return Err(format!("unknown suite `{part}` (expected one of {}, all)", known.join(", ")));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(Suites(out))
}

/// Comma-separated list of groups, or `all`.
pub fn parse_groups(s: &str) -> Result<Groups, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.eq_ignore_ascii_case("all") {
            out.extend(GroupId::ALL);
            continue;
        }
        let known: Vec<&str> = GroupId::ALL.iter().map(|g| g.as_str()).collect();
        out.push(GroupId::parse(part).map_err(|_| format!("unknown group `{part}` (expected one of {}, all)", known.join(", ")))?);
    }
    out.sort();
    out.dedup();
    Ok(Groups(out))
}

fn parse_system(s: &str) -> Result<SystemName, String> {
    SystemName::parse(s).ok_or_else(|| {
        let known: Vec<&str> = SystemName::ALL.iter().map(|n| n.as_str()).collect();
        format!("unknown system `{s}` (expected one of {})", known.join(", "))
    })
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got `{s}`")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "painleve", version, about = "Exact verification of six-dimensional Painleve III-type Hamiltonian systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites and write a JSON report.
    Verify(VerifyArgs),
    /// Print a catalog section in canonical text.
    Dump(DumpArgs),
    /// Integrate a catalog system from a seeded state and write CSV.
    Integrate(IntegrateArgs),
}

#[derive(Debug, Clone, clap::Args)]
pub struct VerifyArgs {
    /// Groups: d5, b5a, b5b, d62, a1, comma-separated, or all.
    #[arg(long, env = "PAINLEVE_GROUP", default_value = "all", value_parser = parse_groups)]
    pub group: Groups,
    /// Suites, comma-separated, or all.
    #[arg(long, env = "PAINLEVE_SUITE", default_value = "all", value_parser = parse_suites)]
    pub suite: Suites,
    /// Report path.
    #[arg(long, env = "PAINLEVE_REPORT", default_value = "painleve-report.json")]
    pub report: PathBuf,
    #[arg(long, env = "PAINLEVE_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Largest intermediate expression, in monomials, before a check is
    /// reported indeterminate.
    #[arg(long, env = "PAINLEVE_MONOMIAL_CAP", default_value_t = 1_000_000)]
    pub monomial_cap: usize,
    /// Wall-time cap per check.
    #[arg(long, env = "PAINLEVE_TIME_CAP_SECS")]
    pub time_cap_secs: Option<u64>,
    /// Integration tolerance of the numeric suite.
    #[arg(long, env = "PAINLEVE_TOL", default_value = "1e-12", value_parser = parse_tol)]
    pub tol: f64,
    /// Suppress the per-check summary.
    #[arg(long, short)]
    pub quiet: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DumpKind {
    Systems,
    Maps,
    Charts,
    Diagrams,
}

#[derive(Debug, Clone, clap::Args)]
pub struct DumpArgs {
    pub kind: DumpKind,
    /// Restrict to groups (systems are selected through their group).
    #[arg(long, default_value = "all", value_parser = parse_groups)]
    pub group: Groups,
}

#[derive(Debug, Clone, clap::Args)]
pub struct IntegrateArgs {
    /// System name: D5, B5a, B5b, D62, H1..H4, HIII_D7.
    #[arg(long, value_parser = parse_system)]
    pub system: SystemName,
    #[arg(long, env = "PAINLEVE_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub t0: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub t1: f64,
    #[arg(long, env = "PAINLEVE_TOL", default_value = "1e-12", value_parser = parse_tol)]
    pub tol: f64,
    /// Sample intervals.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// CSV path; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}
