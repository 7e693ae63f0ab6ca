//! Acceptance criteria, one line per criterion. Runs the full suite once and
//! grades the merged report, timing the cheaper suites separately.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use painleve_cli::args::Suite;
use painleve_cli::run::{run, RunConfig};
use painleve_core::algebra::{int, parse_polynomial, Polynomial};
use painleve_core::report::{CheckRecord, Status, VerificationReport};
use painleve_core::systems::scalar_piii_reduction;
use painleve_core::verify::symmetry_subjects;
use painleve_core::weyl::{chart_names, get_map, map_names, GroupId, EQUIVALENCE_IDS};

const SIX: [GroupId; 4] = GroupId::SIX_DIM;

struct Grade {
    ok: bool,
    note: String,
}

fn grade(ok: bool, note: impl Into<String>) -> Grade {
    Grade { ok, note: note.into() }
}

fn timed(groups: &[GroupId], suites: &[Suite]) -> (VerificationReport, Duration) {
    let start = Instant::now();
    let rep = run(&RunConfig::new(groups, suites));
    (rep, start.elapsed())
}

fn with_prefix<'a>(rep: &'a VerificationReport, prefix: &str) -> Vec<&'a CheckRecord> {
    rep.records.iter().filter(|r| r.check_id.starts_with(prefix)).collect()
}

/// All records under `prefix` pass, and there are exactly `n` of them.
fn all_pass(rep: &VerificationReport, prefix: &str, n: usize) -> Result<(), String> {
    let rs = with_prefix(rep, prefix);
    if rs.len() != n {
        return Err(format!("{prefix}: {} records, expected {n}", rs.len()));
    }
    match rs.iter().find(|r| r.status != Status::Pass) {
        Some(r) => Err(format!("{} is {}", r.check_id, r.status)),
        None => Ok(()),
    }
}

fn required(rep: &VerificationReport, ids: &[String]) -> Result<(), String> {
    for id in ids {
        match rep.find(id) {
            None => return Err(format!("{id} missing")),
            Some(r) if r.status != Status::Pass => return Err(format!("{id} is {}", r.status)),
            _ => {}
        }
    }
    Ok(())
}

fn check(results: Vec<Result<(), String>>, note: String) -> Grade {
    match results.into_iter().find_map(Result::err) {
        Some(e) => grade(false, e),
        None => grade(true, note),
    }
}

fn catalog() -> Grade {
    let (rep, t) = timed(&SIX, &[Suite::Catalog]);
    let mut rs: Vec<_> = SIX.iter().map(|g| all_pass(&rep, &format!("catalog.{g}."), 6)).collect();
    rs.push(if t < Duration::from_secs(10) { Ok(()) } else { Err(format!("took {t:?}")) });
    check(rs, format!("24 components, {:.2}s", t.as_secs_f64()))
}

fn coxeter() -> (Grade, Grade) {
    let (rep, t) = timed(&GroupId::ALL, &[Suite::Coxeter]);
    let mut inv: Vec<_> = SIX.iter().map(|g| all_pass(&rep, &format!("coxeter.{g}.inv."), 6)).collect();
    inv.push(required(&rep, &["coxeter.a1.inv.s0".into(), "coxeter.a1.inv.s1".into()]));
    inv.push(if t < Duration::from_secs(30) { Ok(()) } else { Err(format!("took {t:?}")) });
    let braid: Vec<_> = SIX
        .iter()
        .map(|g| all_pass(&rep, &format!("coxeter.{g}.braid."), 15))
        .chain([if t < Duration::from_secs(300) { Ok(()) } else { Err(format!("took {t:?}")) }])
        .collect();
    let secs = t.as_secs_f64();
    (check(inv, format!("26 involutions, {secs:.2}s")), check(braid, format!("60 pair relations, {secs:.2}s")))
}

fn symmetry(rep: &VerificationReport) -> Grade {
    let mut ids = Vec::new();
    let mut reversed = 0;
    for g in GroupId::ALL {
        for n in symmetry_subjects(g) {
            ids.push(format!("symmetry.{g}.{n}"));
            if get_map(g, n).unwrap().time_sign() == Some(-1) {
                reversed += 1;
            }
        }
    }
    let n = ids.len();
    check(vec![required(rep, &ids)], format!("{n} maps, {reversed} time-reversing"))
}

fn symplectic(rep: &VerificationReport) -> Grade {
    let mut ids = Vec::new();
    for g in SIX {
        for n in map_names(g) {
            ids.push(format!("symplectic.{g}.map.{n}"));
        }
        for c in chart_names(g) {
            ids.push(format!("symplectic.{g}.chart.{c}"));
        }
    }
    for n in ["tr1", "tr2", "tr3"] {
        ids.push(format!("symplectic.a1.map.{n}"));
    }
    for id in EQUIVALENCE_IDS {
        let tgt = painleve_core::weyl::get_equivalence(id).unwrap().target;
        ids.push(format!("symplectic.{tgt}.equiv.{id}"));
    }
    let all = with_prefix(rep, "symplectic.");
    let bad = all.iter().find(|r| r.status != Status::Pass).map(|r| Err(format!("{} is {}", r.check_id, r.status)));
    let n = all.len();
    check(vec![required(rep, &ids), bad.unwrap_or(Ok(()))], format!("{n} Jacobians"))
}

fn integral(rep: &VerificationReport) -> Grade {
    let ids = ["integral.h1.identity", "integral.h1.flow", "numeric.a1.h1_integral"].map(String::from);
    let detail = rep.find("numeric.a1.h1_integral").map(|r| r.detail.clone()).unwrap_or_default();
    check(vec![required(rep, &ids)], detail)
}

fn relations(rep: &VerificationReport) -> Grade {
    let ids = ["tr1", "tr2_tr1", "tr3", "orientation"].map(|n| format!("relations.a1.{n}"));
    let o = rep.observations.iter().find(|o| o.key == "relations.a1.orientation");
    let rs = vec![required(rep, &ids), o.map(|_| ()).ok_or_else(|| "orientation not recorded".to_string())];
    check(rs, format!("orientation: {}", o.map(|o| o.value.as_str()).unwrap_or("-")))
}

fn holomorphy(rep: &VerificationReport) -> Grade {
    // Per chart: polynomiality and round trip; plus the untransformed field.
    let rs: Vec<_> = SIX.iter().map(|g| all_pass(rep, &format!("holomorphy.{g}."), 2 * chart_names(*g).len() + 1)).collect();
    check(rs, "24 charts".into())
}

fn equivalence(rep: &VerificationReport) -> Grade {
    let mut rs = Vec::new();
    for id in EQUIVALENCE_IDS {
        let e = painleve_core::weyl::get_equivalence(id).unwrap();
        let base = format!("equivalence.{}.{id}", e.target);
        let mut ids = vec![base.clone(), format!("{base}.normalization")];
        ids.extend(e.correspondences.iter().map(|(n, _)| format!("{base}.corr.{n}")));
        rs.push(required(rep, &ids));
    }
    let all = with_prefix(rep, "equivalence.");
    if let Some(r) = all.iter().find(|r| r.status != Status::Pass) {
        rs.push(Err(format!("{} is {}", r.check_id, r.status)));
    }
    let n = all.len();
    check(rs, format!("{n} records over 4 equivalences"))
}

fn scalar(rep: &VerificationReport) -> Grade {
    let (_, consts) = scalar_piii_reduction();
    let Some(c) = consts else { return grade(false, "no constants extracted") };
    let want: [Polynomial; 4] = [
        Polynomial::constant(int(-8)),
        parse_polynomial("4 - 4*a1").unwrap(),
        Polynomial::zero(),
        Polynomial::constant(int(-4)),
    ];
    let got = [c.a.clone(), c.b.clone(), c.c.clone(), c.d.clone()];
    let exact = if got == want { Ok(()) } else { Err(format!("constants {got:?}")) };
    let rs = vec![exact, all_pass(rep, "scalar.piii.", 7)];
    check(rs, format!("(a, b, c, d) = ({}, {}, {}, {})", c.a, c.b, c.c, c.d))
}

fn numeric(rep: &VerificationReport, wall: Duration) -> Grade {
    let mut ids = Vec::new();
    for g in GroupId::ALL {
        for n in symmetry_subjects(g) {
            if rep.find(&format!("symmetry.{g}.{n}")).is_some_and(CheckRecord::passed) {
                ids.push(format!("numeric.{g}.symmetry.{n}"));
            }
        }
    }
    for id in EQUIVALENCE_IDS {
        let tgt = painleve_core::weyl::get_equivalence(id).unwrap().target;
        if rep.find(&format!("equivalence.{tgt}.{id}")).is_some_and(CheckRecord::passed) {
            ids.push(format!("numeric.{tgt}.equivalence.{id}"));
        }
    }
    let worst = with_prefix(rep, "numeric.")
        .iter()
        .filter_map(|r| r.detail.strip_prefix("max residual ")?.split_whitespace().next()?.parse::<f64>().ok())
        .fold(0.0, f64::max);
    let n = ids.len();
    let time = if wall <= Duration::from_secs(900) { Ok(()) } else { Err(format!("full run took {wall:?}")) };
    check(vec![required(rep, &ids), time], format!("{n} shadows, worst {worst:.1e}, full run {:.1}s", wall.as_secs_f64()))
}

fn dimensions(rep: &VerificationReport) -> Vec<(String, String)> {
    rep.observations
        .iter()
        .filter(|o| o.key.starts_with("ansatz.") && o.key.ends_with(".dimension"))
        .map(|o| (o.key.clone(), o.value.clone()))
        .collect()
}

fn ansatz(rep: &VerificationReport) -> Grade {
    let mut rs: Vec<_> = SIX.iter().map(|g| all_pass(rep, &format!("ansatz.{g}."), 3)).collect();
    let first = dimensions(rep);
    let (again, _) = timed(&SIX, &[Suite::Ansatz]);
    let second = dimensions(&again);
    if first.len() != 12 {
        rs.push(Err(format!("{} dimensions logged", first.len())));
    }
    if first != second {
        rs.push(Err("dimensions differ between runs".into()));
    }
    let mut values: Vec<&str> = first.iter().map(|(_, v)| v.as_str()).collect();
    values.dedup();
    check(rs, format!("dimensions {}", values.join(",")))
}

fn main() -> ExitCode {
    let (c1, (c2, c3)) = (catalog(), coxeter());
    let (full, wall) = timed(&GroupId::ALL, &Suite::ALL);
    let grades = [
        ("catalog consistency", c1),
        ("involutions", c2),
        ("braid relations", c3),
        ("symmetry", symmetry(&full)),
        ("symplecticity", symplectic(&full)),
        ("first integral", integral(&full)),
        ("hamiltonian relations", relations(&full)),
        ("holomorphy", holomorphy(&full)),
        ("equivalences", equivalence(&full)),
        ("scalar reduction", scalar(&full)),
        ("numeric shadow", numeric(&full, wall)),
        ("ansatz membership", ansatz(&full)),
    ];
    let mut failed = 0;
    for (i, (name, g)) in grades.iter().enumerate() {
        println!("criterion {:>2} {:<22} {}  {}", i + 1, name, if g.ok { "PASS" } else { "FAIL" }, g.note);
        failed += usize::from(!g.ok);
    }
    println!(
        "acceptance: {} of {} criteria pass ({} records: {} pass, {} fail, {} indeterminate)",
        grades.len() - failed,
        grades.len(),
        full.records.len(),
        full.count(Status::Pass),
        full.count(Status::Fail),
        full.count(Status::Indeterminate)
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
