//! JSON report, schema 1.

use std::io::Write;
use std::path::Path;

use anyhow::Context;
use painleve_core::report::{Status, VerificationReport};
use serde::Serialize;

use crate::run::RunConfig;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report<'a> {
    pub schema: u32,
    pub metadata: Metadata,
    pub summary: Summary,
    pub records: Vec<Record<'a>>,
    pub observations: Vec<Observation<'a>>,
}

#[derive(Debug, Serialize)]
pub struct Metadata {
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub catalog_version: u32,
    pub groups: Vec<&'static str>,
    pub suites: Vec<&'static str>,
    pub seed: u64,
    pub monomial_cap: usize,
    pub time_cap_secs: Option<f64>,
    pub tol: f64,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub indeterminate: usize,
    pub exit_status: u8,
}

#[derive(Debug, Serialize)]
pub struct Record<'a> {
    pub check_id: &'a str,
    pub subject: &'a str,
    pub status: &'static str,
    pub witness: &'a str,
    pub detail: &'a str,
    /// The only field that varies between identical runs.
    pub wall_time_secs: f64,
}

#[derive(Debug, Serialize)]
pub struct Observation<'a> {
    pub key: &'a str,
    pub value: &'a str,
}

impl<'a> Report<'a> {
    pub fn new(cfg: &RunConfig, rep: &'a VerificationReport) -> Report<'a> {
        Report {
            schema: SCHEMA,
            metadata: Metadata {
                tool: env!("CARGO_PKG_NAME"),
                tool_version: env!("CARGO_PKG_VERSION"),
                catalog_version: painleve_core::CATALOG_VERSION,
                groups: cfg.groups.iter().map(|g| g.as_str()).collect(),
                suites: cfg.suites.iter().map(|s| s.as_str()).collect(),
                seed: cfg.seed,
                monomial_cap: cfg.monomial_cap,
                time_cap_secs: cfg.time_cap.map(|d| d.as_secs_f64()),
                tol: cfg.tol,
            },
            summary: Summary {
                pass: rep.count(Status::Pass),
                fail: rep.count(Status::Fail),
                indeterminate: rep.count(Status::Indeterminate),
                exit_status: crate::exit_status(rep),
            },
            records: rep
                .records
                .iter()
                .map(|r| Record {
                    check_id: &r.check_id,
                    subject: &r.subject,
                    status: r.status.as_str(),
                    witness: &r.witness,
                    detail: &r.detail,
                    wall_time_secs: r.wall_time.as_secs_f64(),
                })
                .collect(),
            observations: rep.observations.iter().map(|o| Observation { key: &o.key, value: &o.value }).collect(),
        }
    }
}

pub fn to_string(cfg: &RunConfig, rep: &VerificationReport) -> String {
    serde_json::to_string_pretty(&Report::new(cfg, rep)).expect("report serializes")
}

pub fn write(path: &Path, cfg: &RunConfig, rep: &VerificationReport) -> anyhow::Result<()> {
    let mut f = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    f.write_all(to_string(cfg, rep).as_bytes())
        .and_then(|_| f.write_all(b"\n"))
        .with_context(|| format!("writing {}", path.display()))
}
