use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{Polynomial, Var};
use crate::report::{Budget, CheckRecord, Meter, VerificationReport};
use crate::systems::{system, HamiltonSystem};
use crate::weyl::{compose, extra_names, generators, get_diagram, get_map, order_of, ExtendedMap, GroupId};

use super::{timed, Halt};

/// `(w)^n` reduced on the normalization after every product, compared
/// with the identity.
fn power_is_identity(
    sys: &HamiltonSystem,
    word: &[&ExtendedMap],
    n: u32,
    meter: &Meter<'_>,
) -> Result<Option<(String, String)>, Halt> {
    let mut acc = ExtendedMap::identity();
    for _ in 0..n {
        for m in word.iter().rev() {
            acc = compose(m, &acc)?.reduced(sys);
            meter.check(acc.size())?;
        }
    }
    Ok(acc.difference_on(&ExtendedMap::identity(), sys))
}

fn relation_record(
    id: String,
    subject: String,
    sys: &HamiltonSystem,
    word: &[&ExtendedMap],
    n: u32,
    budget: &Budget,
) -> CheckRecord {
    timed(budget, |meter| match power_is_identity(sys, word, n, meter) {
        Ok(None) => CheckRecord::pass(&id, &subject),
        Ok(Some((label, diff))) => {
            CheckRecord::fail(&id, &subject, diff).with_detail(format!("component {label} differs from the identity"))
        }
        Err(h) => h.record(&id, &subject),
    })
}

/// Involutions `s_i^2 = 1` and braid relations `(s_i s_j)^{m_ij} = 1`, one
/// record each. Orders of the extra generators, observed Cartan integers
/// and conjugation tables go into observations.
pub fn check_involutions_and_braid(group: GroupId, budget: &Budget) -> VerificationReport {
    if group == GroupId::A1 {
        return scalar_relations(budget);
    }
    let sys = system(group.system());
    let diagram = get_diagram(group).expect("six-dimensional groups have diagrams");
    let s = generators(group);
    let mut rep = VerificationReport::new();
    for (i, si) in s.iter().enumerate() {
        rep.push(relation_record(
            format!("coxeter.{group}.inv.s{i}"),
            format!("{group}:s{i}"),
            &sys,
            &[si],
            2,
            budget,
        ));
    }
    for i in 0..6 {
        for j in i + 1..6 {
            let m = diagram.m(i, j) as u32;
            let r = relation_record(
                format!("coxeter.{group}.braid.s{i}s{j}"),
                format!("{group}:(s{i}*s{j})^{m}"),
                &sys,
                &[&s[i], &s[j]],
                m,
                budget,
            );
            rep.push(r.clone().with_detail(if r.detail.is_empty() {
                format!("m = {m}")
            } else {
                format!("m = {m}; {}", r.detail)
            }));
        }
    }
    observe_structure(group, &sys, &s, &mut rep);
    rep
}

/// Observed Cartan row of `s_i`: `s_i(a_j) = a_j - c_ij a_i`.
fn cartan_row(s: &ExtendedMap, i: usize) -> String {
    let ai = Var::param(i);
    let cells: Vec<String> = (0..6)
        .map(|j| {
            let diff = &s.params.image(j) - &Polynomial::var(Var::param(j));
            if diff.is_zero() {
                return String::from("0");
            }
            let c = diff.coefficient(crate::algebra::Monomial::var(ai));
            let rest = &diff - &Polynomial::term(crate::algebra::Monomial::var(ai), c.clone());
            if rest.is_zero() {
                crate::algebra::rational::fmt_rational(&-c)
            } else {
                format!("({diff})")
            }
        })
        .collect();
    format!("[{}]", cells.join(", "))
}

fn observe_structure(group: GroupId, sys: &HamiltonSystem, s: &[ExtendedMap], rep: &mut VerificationReport) {
    for (i, si) in s.iter().enumerate() {
        rep.observe(format!("coxeter.{group}.cartan.s{i}"), cartan_row(si, i));
    }
    for name in extra_names(group) {
        let e = get_map(group, name).expect("catalog extra");
        let order = match order_of(&e, 8) {
            Ok(Some(n)) => n.to_string(),
            Ok(None) => String::from("none up to 8"),
            Err(err) => format!("error: {err}"),
        };
        rep.observe(format!("coxeter.{group}.order.{name}"), order);
        rep.observe(format!("coxeter.{group}.conj.{name}"), conjugation_table(sys, &e, s));
    }
}

/// `e s_i e^-1` identified with a generator where possible.
fn conjugation_table(sys: &HamiltonSystem, e: &ExtendedMap, s: &[ExtendedMap]) -> String {
    let inv = match e.inverse() {
        Some(i) => i.clone(),
        None => return String::from("no stored inverse"),
    };
    let cells: Vec<String> = s
        .iter()
        .enumerate()
        .map(|(i, si)| {
            let c = compose(e, si).and_then(|es| compose(&es, &inv));
            let hit = c.ok().and_then(|c| {
                let c = c.reduced(sys);
                s.iter().position(|sk| c.equals_on(sk, sys))
            });
            match hit {
                Some(k) => format!("s{i}->s{k}"),
                None => format!("s{i}->?"),
            }
        })
        .collect();
    cells.join(" ")
}

/// Relations of the scalar family: involutions of `s0`, `s1`, `sigma`, the
/// factorization `pi = sigma s1` and `sigma`-conjugation of the reflections.
fn scalar_relations(budget: &Budget) -> VerificationReport {
    let g = GroupId::A1;
    let sys = system(g.system());
    let map = |n: &str| get_map(g, n).expect("catalog map");
    let (s0, s1, sigma, pi) = (map("s0"), map("s1"), map("sigma"), map("pi"));
    let mut rep = VerificationReport::new();
    for (n, m) in [("s0", &s0), ("s1", &s1), ("sigma", &sigma)] {
        rep.push(relation_record(format!("coxeter.a1.inv.{n}"), format!("a1:{n}"), &sys, &[m], 2, budget));
    }
    let equal = |id: &str, subject: &str, lhs: &[&ExtendedMap], rhs: &ExtendedMap| {
        timed(budget, |meter| {
            let run = || -> Result<Option<(String, String)>, Halt> {
                let mut acc = ExtendedMap::identity();
                for m in lhs.iter().rev() {
                    acc = compose(m, &acc)?.reduced(&sys);
                    meter.check(acc.size())?;
                }
                Ok(acc.difference_on(rhs, &sys))
            };
            match run() {
                Ok(None) => CheckRecord::pass(id, subject),
                Ok(Some((l, d))) => CheckRecord::fail(id, subject, d).with_detail(format!("component {l} differs")),
                Err(h) => h.record(id, subject),
            }
        })
    };
    rep.push(equal("coxeter.a1.pi_factorization", "a1:sigma*s1 = pi", &[&sigma, &s1], &pi));
    rep.push(equal("coxeter.a1.sigma_conj.s0", "a1:sigma*s0*sigma = s1", &[&sigma, &s0, &sigma], &s1));
    rep.push(equal("coxeter.a1.sigma_conj.s1", "a1:sigma*s1*sigma = s0", &[&sigma, &s1, &sigma], &s0));
    let s = [s0.clone(), s1.clone()];
    for (i, si) in s.iter().enumerate() {
        rep.observe(format!("coxeter.a1.cartan.s{i}"), cartan_row(si, i));
    }
    let order = |m: &ExtendedMap| match order_of(m, 8) {
        Ok(Some(n)) => n.to_string(),
        _ => String::from("none up to 8"),
    };
    let s0s1 = compose(&s0, &s1).expect("composable");
    rep.observe("coxeter.a1.order.s0s1", order(&s0s1));
    rep.observe("coxeter.a1.order.pi", order(&pi));
    for n in ["tr1", "tr2", "tr3"] {
        rep.observe(format!("coxeter.a1.order.{n}"), order(&map(n)));
    }
    rep
}
