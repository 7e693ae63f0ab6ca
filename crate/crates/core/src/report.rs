//! Check records, resource budgets and the aggregate report.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Indeterminate => "INDETERMINATE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one exact or numeric check.
///
/// `witness` is the canonical text of a nonzero residual for failures, `"0"`
/// for exact passes and empty where no residual applies (numeric checks,
/// aborted checks). `detail` carries human-readable context.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckRecord {
    pub check_id: String,
    pub subject: String,
    pub status: Status,
    pub witness: String,
    pub detail: String,
    pub wall_time: Duration,
}

impl CheckRecord {
    pub fn new(check_id: impl Into<String>, subject: impl Into<String>, status: Status) -> CheckRecord {
        CheckRecord {
            check_id: check_id.into(),
            subject: subject.into(),
            status,
            witness: String::new(),
            detail: String::new(),
            wall_time: Duration::ZERO,
        }
    }

    pub fn pass(check_id: impl Into<String>, subject: impl Into<String>) -> CheckRecord {
        let mut r = CheckRecord::new(check_id, subject, Status::Pass);
        r.witness = "0".to_string();
        r
    }

    pub fn fail(check_id: impl Into<String>, subject: impl Into<String>, witness: impl Into<String>) -> CheckRecord {
        let mut r = CheckRecord::new(check_id, subject, Status::Fail);
        r.witness = witness.into();
        r
    }

    pub fn indeterminate(
        check_id: impl Into<String>,
        subject: impl Into<String>,
        why: impl Into<String>,
    ) -> CheckRecord {
        let mut r = CheckRecord::new(check_id, subject, Status::Indeterminate);
        r.detail = why.into();
        r
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> CheckRecord {
        self.detail = detail.into();
        self
    }

    pub fn with_time(mut self, t: Duration) -> CheckRecord {
        self.wall_time = t;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Named fact observed by a check without a pass/fail expectation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Observation {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
    pub observations: Vec<Observation>,
}

impl VerificationReport {
    pub fn new() -> VerificationReport {
        VerificationReport::default()
    }

    pub fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    pub fn observe(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.observations.push(Observation { key: key.into(), value: value.into() });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
        self.observations.extend(other.observations);
    }

    /// Sorts records by `check_id` (then subject) and observations by key.
    pub fn sort(&mut self) {
        self.records
            .sort_by(|a, b| (&a.check_id, &a.subject).cmp(&(&b.check_id, &b.subject)));
        self.observations.sort_by(|a, b| a.key.cmp(&b.key));
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed())
    }

    pub fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.status == s).count()
    }

    pub fn find(&self, check_id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check_id == check_id)
    }
}

/// Monotonic time source supplied by the host; the core has no clock.
pub trait Clock: Send + Sync {
    fn now(&self) -> Duration;
}

/// Why a budgeted computation stopped early.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exhausted {
    Monomials { size: usize, cap: usize },
    Time { cap: Duration },
}

impl fmt::Display for Exhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exhausted::Monomials { size, cap } => {
                write!(f, "intermediate size {size} exceeds monomial cap {cap}")
            }
            Exhausted::Time { cap } => write!(f, "wall-time cap of {} s exceeded", cap.as_secs_f64()),
        }
    }
}

/// Limits applied to every check. Default: 10^6 monomials, no time cap.
#[derive(Clone)]
pub struct Budget {
    pub monomial_cap: usize,
    pub time_cap: Option<Duration>,
    pub clock: Option<Arc<dyn Clock>>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { monomial_cap: 1_000_000, time_cap: None, clock: None }
    }
}

impl fmt::Debug for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Budget")
            .field("monomial_cap", &self.monomial_cap)
            .field("time_cap", &self.time_cap)
            .field("clock", &self.clock.is_some())
            .finish()
    }
}

impl Budget {
    pub fn with_clock(mut self, clock: Arc<dyn Clock>) -> Budget {
        self.clock = Some(clock);
        self
    }

    pub fn now(&self) -> Duration {
        self.clock.as_ref().map(|c| c.now()).unwrap_or(Duration::ZERO)
    }

    /// Starts the per-check timer.
    pub fn start(&self) -> Meter<'_> {
        Meter { budget: self, started: self.now() }
    }
}

/// Per-check view of a [`Budget`] with its own start time.
pub struct Meter<'a> {
    budget: &'a Budget,
    started: Duration,
}

impl Meter<'_> {
    pub fn elapsed(&self) -> Duration {
        self.budget.now().saturating_sub(self.started)
    }

    /// Fails if `size` exceeds the monomial cap or the time cap has passed.
    pub fn check(&self, size: usize) -> Result<(), Exhausted> {
        if size > self.budget.monomial_cap {
            return Err(Exhausted::Monomials { size, cap: self.budget.monomial_cap });
        }
        if let Some(cap) = self.budget.time_cap {
            if self.elapsed() > cap {
                return Err(Exhausted::Time { cap });
            }
        }
        Ok(())
    }

    pub fn finish(&self, r: CheckRecord) -> CheckRecord {
        r.with_time(self.elapsed())
    }
}
