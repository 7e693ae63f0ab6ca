//! Command-line front end for `painleve-core`: suite selection, parallel
//! execution, JSON reports, catalog dumps and trajectory export.

pub mod args;
pub mod dump;
pub mod export;
pub mod json;
pub mod run;

use std::sync::Arc;
use std::time::{Duration, Instant};

use painleve_core::report::{Budget, Clock, Status, VerificationReport};

/// Wall clock measured from construction.
pub struct StdClock(Instant);

impl StdClock {
    pub fn new() -> StdClock {
        StdClock(Instant::now())
    }
}

impl Default for StdClock {
    fn default() -> Self {
        StdClock::new()
    }
}

impl Clock for StdClock {
    fn now(&self) -> Duration {
        self.0.elapsed()
    }
}

/// Budget with the host clock attached.
pub fn budget(monomial_cap: usize, time_cap: Option<Duration>) -> Budget {
    Budget { monomial_cap, time_cap, clock: None }.with_clock(Arc::new(StdClock::new()))
}

/// `0` without failures or indeterminates, `2` on any failure, `3` when
/// the only non-passing records are indeterminate.
pub fn exit_status(report: &VerificationReport) -> u8 {
    if report.count(Status::Fail) > 0 {
        2
    } else if report.count(Status::Indeterminate) > 0 {
        3
    } else {
        0
    }
}
