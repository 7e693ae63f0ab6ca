//! Suite dispatch. Each `(group, suite)` pair is an independent task; tasks
//! run in parallel and the merged report is sorted, so its content does
//! not depend on scheduling.

use std::time::Duration;

use painleve_core::numeric::{check_numeric_suite, NumericConfig};
use painleve_core::report::{Budget, VerificationReport};
use painleve_core::systems::{compare_field, displayed_ode, scalar_piii_reduction, system};
use painleve_core::verify::{
    check_ansatz_suite, check_equivalence_suite, check_first_integral, check_hamiltonian_relations, check_holomorphy,
    check_involutions_and_braid, check_symmetry_suite, check_symplectic_suite,
};
use painleve_core::weyl::GroupId;
use rayon::prelude::*;

use crate::args::{Suite, VerifyArgs};

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub groups: Vec<GroupId>,
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub monomial_cap: usize,
    pub time_cap: Option<Duration>,
    pub tol: f64,
}

impl RunConfig {
    pub fn new(groups: &[GroupId], suites: &[Suite]) -> RunConfig {
        RunConfig {
            groups: groups.to_vec(),
            suites: suites.to_vec(),
            seed: 0,
            monomial_cap: 1_000_000,
            time_cap: None,
            tol: 1e-12,
        }
    }

    pub fn budget(&self) -> Budget {
        crate::budget(self.monomial_cap, self.time_cap)
    }
}

impl From<&VerifyArgs> for RunConfig {
    fn from(a: &VerifyArgs) -> RunConfig {
        RunConfig {
            groups: a.group.0.clone(),
            suites: a.suite.0.clone(),
            seed: a.seed,
            monomial_cap: a.monomial_cap,
            time_cap: a.time_cap_secs.map(Duration::from_secs),
            tol: a.tol,
        }
    }
}

/// Records of one suite for one group. Suites that do not apply to the
/// group return an empty report; `a1` hosts the scalar-system suites.
pub fn run_suite(group: GroupId, suite: Suite, cfg: &RunConfig) -> VerificationReport {
    let budget = cfg.budget();
    match suite {
        Suite::Catalog => catalog(group),
        Suite::Coxeter => check_involutions_and_braid(group, &budget),
        Suite::Symmetry => check_symmetry_suite(group, &budget),
        Suite::Symplectic => check_symplectic_suite(group, &budget),
        Suite::Integral if group == GroupId::A1 => check_first_integral(&budget),
        Suite::Relations if group == GroupId::A1 => check_hamiltonian_relations(&budget),
        Suite::Integral | Suite::Relations => VerificationReport::new(),
        Suite::Holomorphy => check_holomorphy(group, &budget),
        Suite::Equivalence => check_equivalence_suite(group, &budget),
        Suite::Ansatz => check_ansatz_suite(group, cfg.seed, &budget),
        Suite::Numeric => {
            let ncfg = NumericConfig { tol: cfg.tol, ..NumericConfig::default() };
            check_numeric_suite(group, cfg.seed, ncfg, &budget)
        }
    }
}

fn catalog(group: GroupId) -> VerificationReport {
    let mut rep = VerificationReport::new();
    if group == GroupId::A1 {
        rep.extend(scalar_piii_reduction().0);
        return rep;
    }
    let name = group.system();
    let ode = displayed_ode(name).expect("six-dimensional systems have displayed equations");
    for r in compare_field(&system(name), &ode) {
        rep.push(r);
    }
    rep
}

/// Every selected suite for every selected group, merged and sorted.
pub fn run(cfg: &RunConfig) -> VerificationReport {
    let tasks: Vec<(GroupId, Suite)> =
        cfg.groups.iter().flat_map(|g| cfg.suites.iter().map(move |s| (*g, *s))).collect();
    let parts: Vec<VerificationReport> = tasks.par_iter().map(|(g, s)| run_suite(*g, *s, cfg)).collect();
    let mut rep = VerificationReport::new();
    for p in parts {
        rep.extend(p);
    }
    rep.sort();
    rep
}
