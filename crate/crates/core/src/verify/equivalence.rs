use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::{rational::fmt_rational, Polynomial};
use crate::report::{Budget, CheckRecord, Status, VerificationReport};
use crate::systems::system;
use crate::weyl::{compose, compose_word, equivalences, get_map, Equivalence, ExtendedMap, GroupId};

use super::{timed, transport_record, Halt};

/// The map carries solutions of the source system to solutions of the
/// target system, parameters mapped along.
pub fn check_equivalence(eq: &Equivalence, budget: &Budget) -> CheckRecord {
    let src = system(eq.source.system());
    let tgt = system(eq.target.system());
    let id = format!("equivalence.{}.{}", eq.target, eq.id);
    let subject = format!("{}->{}", src.name, tgt.name);
    timed(budget, |meter| transport_record(&src, &tgt.vector_field(), &eq.map, &id, &subject, meter))
}

/// The target normalization, evaluated on the mapped parameters, reduces
/// to its constant on the source hyperplane.
fn normalization_record(eq: &Equivalence) -> CheckRecord {
    let src = system(eq.source.system());
    let tgt = system(eq.target.system());
    let id = format!("equivalence.{}.{}.normalization", eq.target, eq.id);
    let subject = format!("{}->{}", src.name, tgt.name);
    let mut lhs = Polynomial::zero();
    for (i, c) in tgt.constraint.coeffs.iter().enumerate() {
        lhs = &lhs + &eq.map.params.image(i).scale(c);
    }
    let lhs = src.reduce_poly(&lhs);
    let d = &lhs - &Polynomial::constant(tgt.constraint.constant.clone());
    if d.is_zero() {
        CheckRecord::pass(&id, &subject).with_detail(format!(
            "target normalization = {} on the source hyperplane",
            fmt_rational(&tgt.constraint.constant)
        ))
    } else {
        CheckRecord::fail(&id, &subject, d.to_string()).with_detail(format!("mapped normalization is {lhs}"))
    }
}

fn order_label(mirrored: bool) -> &'static str {
    if mirrored {
        "mirrored order"
    } else {
        "order as written"
    }
}

/// `M o word = S o M` for each identification `S := word`, the words read
/// as written and mirrored; `.corr.order` passes if one reading serves
/// every entry.
pub fn check_generator_correspondence(eq: &Equivalence, budget: &Budget) -> VerificationReport {
    let src = system(eq.source.system());
    let mut rep = VerificationReport::new();
    let base = format!("equivalence.{}.{}.corr", eq.target, eq.id);
    if eq.correspondences.is_empty() {
        rep.observe(format!("{base}.table"), "no identification table");
        return rep;
    }
    let mut holding: Vec<Vec<bool>> = Vec::new();
    for (gen, word) in &eq.correspondences {
        let id = format!("{base}.{gen}");
        let subject = format!("{gen} := {}", word.join("*"));
        let target = get_map(eq.target, gen).expect("target generator");
        let maps: Vec<ExtendedMap> = word.iter().map(|n| get_map(eq.source, n).expect("source generator")).collect();
        let mut ok = Vec::new();
        let mut recs = Vec::new();
        for mirrored in [false, true] {
            let r = timed(budget, |meter| {
                let run = || -> Result<Option<(alloc::string::String, alloc::string::String)>, Halt> {
                    let mut refs: Vec<&ExtendedMap> = maps.iter().collect();
                    if mirrored {
                        refs.reverse();
                    }
                    let w = compose_word(&refs)?;
                    meter.check(w.size())?;
                    let lhs = compose(&eq.map, &w)?.reduced(&src);
                    meter.check(lhs.size())?;
                    let rhs = compose(&target, &eq.map)?.reduced(&src);
                    meter.check(rhs.size())?;
                    Ok(lhs.difference_on(&rhs, &src))
                };
                match run() {
                    Ok(None) => CheckRecord::pass(&id, &subject),
                    Ok(Some((l, d))) => {
                        CheckRecord::fail(&id, &subject, d).with_detail(format!("component {l} differs"))
                    }
                    Err(h) => h.record(&id, &subject),
                }
            });
            if r.passed() {
                ok.push(mirrored);
            }
            recs.push(r);
        }
        let time = recs.iter().map(|r| r.wall_time).sum();
        let rec = if !ok.is_empty() {
            let labels: Vec<&str> = ok.iter().map(|m| order_label(*m)).collect();
            CheckRecord::pass(&id, &subject).with_detail(format!("holds for: {}", labels.join("; ")))
        } else if recs.iter().any(|r| r.status == Status::Indeterminate) {
            CheckRecord::indeterminate(&id, &subject, "no reading verified within budget")
        } else {
            recs.swap_remove(0)
        };
        rep.push(rec.with_time(time));
        holding.push(ok);
    }
    let common: Vec<bool> = [false, true].into_iter().filter(|m| holding.iter().all(|h| h.contains(m))).collect();
    let id = format!("{base}.order");
    rep.push(match common.first() {
        Some(m) => CheckRecord::pass(&id, eq.id).with_detail(order_label(*m)),
        None => CheckRecord::fail(&id, eq.id, "no common composition order"),
    });
    rep
}

/// Pushforward, normalization and correspondence table of every
/// equivalence landing in `group`.
pub fn check_equivalence_suite(group: GroupId, budget: &Budget) -> VerificationReport {
    let mut rep = VerificationReport::new();
    for eq in equivalences().into_iter().filter(|e| e.target == group) {
        rep.push(check_equivalence(&eq, budget));
        rep.push(normalization_record(&eq));
        rep.extend(check_generator_correspondence(&eq, budget));
        let factor = system(eq.source.system())
            .constraint
            .proportionality(&system(eq.target.system()).constraint.pullback(&eq.map.params));
        let value = match factor {
            Some(l) => format!("pulled-back target form = {} x source form", fmt_rational(&l)),
            None => "pulled-back target form is not proportional to the source form".to_string(),
        };
        rep.observe(format!("equivalence.{group}.{}.normalization_factor", eq.id), value);
    }
    rep
}
