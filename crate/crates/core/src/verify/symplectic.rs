use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Fraction, PHASE};
use crate::report::{Budget, CheckRecord, VerificationReport};
use crate::weyl::{chart_names, equivalences, get_chart, get_map, map_names, ExtendedMap, GroupId};

use super::{timed, Halt};

/// Entry `(a, b)` of the canonical form pairing `(x,y)`, `(z,w)`, `(q,p)`.
fn omega(a: usize, b: usize) -> i64 {
    if a % 2 == 0 && b == a + 1 {
        1
    } else if b % 2 == 0 && a == b + 1 {
        -1
    } else {
        0
    }
}

/// `J^T Omega J = Omega` for the phase Jacobian of `f`, with `t` and the
/// parameters treated as constants. Components a map does not move are
/// the identity, so two-variable maps are embedded automatically.
pub fn check_symplectic(f: &ExtendedMap, id: &str, budget: &Budget) -> CheckRecord {
    let subject = f.name.clone();
    timed(budget, |meter| {
        let run = || -> Result<Option<(String, Fraction)>, Halt> {
            let mut jac: Vec<[Fraction; 6]> = Vec::with_capacity(6);
            for phi in &f.phase {
                let row: [Fraction; 6] = PHASE.map(|v| phi.derivative(v));
                for e in &row {
                    meter.check(e.size())?;
                }
                jac.push(row);
            }
            for a in 0..6 {
                for b in a + 1..6 {
                    let mut s = Fraction::zero();
                    for i in 0..3 {
                        let (c, m) = (&jac[2 * i], &jac[2 * i + 1]);
                        s = &s + &(&(&c[a] * &m[b]) - &(&m[a] * &c[b]));
                    }
                    meter.check(s.size())?;
                    let d = &s - &Fraction::constant(crate::algebra::int(omega(a, b)));
                    if !d.is_zero() {
                        return Ok(Some((format!("({},{})", PHASE[a], PHASE[b]), d)));
                    }
                }
            }
            Ok(None)
        };
        match run() {
            Ok(None) => CheckRecord::pass(id, &subject),
            Ok(Some((entry, d))) => CheckRecord::fail(id, &subject, format!("{d}"))
                .with_detail(format!("entry {entry} of J^T Omega J differs from Omega")),
            Err(h) => h.record(id, &subject),
        }
    })
}

/// Every catalog map and chart of the group, and the equivalences that
/// land in it.
pub fn check_symplectic_suite(group: GroupId, budget: &Budget) -> VerificationReport {
    let mut rep = VerificationReport::new();
    for name in map_names(group) {
        if name.ends_with("_printed") {
            continue;
        }
        let f = get_map(group, name).expect("catalog map");
        rep.push(check_symplectic(&f, &format!("symplectic.{group}.map.{name}"), budget));
    }
    for name in chart_names(group) {
        let id = format!("symplectic.{group}.chart.{name}");
        match get_chart(group, name) {
            Ok(c) => rep.push(check_symplectic(&c.forward_map().named(name), &id, budget)),
            Err(e) => rep.push(CheckRecord::fail(id, name, format!("{e}"))),
        }
    }
    for e in equivalences().into_iter().filter(|e| e.target == group) {
        rep.push(check_symplectic(&e.map, &format!("symplectic.{group}.equiv.{}", e.id), budget));
    }
    rep
}
