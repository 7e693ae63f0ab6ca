//! Canonical text of catalog sections. Output depends only on the catalog
//! and the selection, so it can be diffed across versions.

use std::fmt::Write;

use painleve_core::algebra::{Fraction, Var, PARAMS, PHASE};
use painleve_core::systems::{system, SystemName};
use painleve_core::weyl::{chart_names, equivalences, get_chart, get_diagram, get_map, map_names, GroupId};

use crate::args::DumpKind;

pub fn dump(kind: DumpKind, groups: &[GroupId]) -> String {
    let mut out = String::new();
    match kind {
        DumpKind::Systems => systems(&mut out, groups),
        DumpKind::Maps => maps(&mut out, groups),
        DumpKind::Charts => charts(&mut out, groups),
        DumpKind::Diagrams => diagrams(&mut out, groups),
    }
    out
}

/// Systems filed under a group: the six-dimensional system, or the scalar
/// family for `a1`.
pub fn systems_of(group: GroupId) -> Vec<SystemName> {
    match group {
        GroupId::A1 => vec![SystemName::HIIID7, SystemName::H1, SystemName::H2, SystemName::H3, SystemName::H4],
        g => vec![g.system()],
    }
}

fn systems(out: &mut String, groups: &[GroupId]) {
    for g in groups {
        for name in systems_of(*g) {
            let sys = system(name);
            let th = &Fraction::var(Var::T) * &sys.hamiltonian;
            let _ = writeln!(out, "system {name}");
            let _ = writeln!(out, "  group {g}");
            let pairs: Vec<String> = sys.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
            let _ = writeln!(out, "  pairs {}", pairs.join(" "));
            let _ = writeln!(out, "  normalization {}", sys.constraint);
            let _ = writeln!(out, "  eliminated {}", PARAMS[sys.eliminated_param]);
            match th.as_polynomial() {
                Some(p) => {
                    let _ = writeln!(out, "  t*H ({} terms)", p.len());
                    for (m, c) in p.terms() {
                        let _ = writeln!(out, "    {}", painleve_core::algebra::Polynomial::term(*m, c.clone()));
                    }
                }
                None => {
                    let _ = writeln!(out, "  t*H = {th}");
                }
            }
            let field = sys.vector_field();
            for v in PHASE {
                let c = field.component(v);
                if !c.is_zero() || sys.pairs.iter().any(|(a, b)| *a == v || *b == v) {
                    let _ = writeln!(out, "  d{v}/dt = {c}");
                }
            }
        }
    }
}

fn maps(out: &mut String, groups: &[GroupId]) {
    for g in groups {
        let _ = writeln!(out, "group {g}");
        for name in map_names(*g) {
            let m = get_map(*g, name).expect("listed map");
            let _ = writeln!(out, "  {m}");
        }
        for eq in equivalences().into_iter().filter(|e| e.target == *g) {
            let _ = writeln!(out, "  equivalence {} ({} -> {})", eq.id, eq.source, eq.target);
            let _ = writeln!(out, "    {}", eq.map);
            for (gen, word) in &eq.correspondences {
                let _ = writeln!(out, "    {gen} := {}", word.join("*"));
            }
        }
    }
}

fn charts(out: &mut String, groups: &[GroupId]) {
    for g in groups {
        let names = chart_names(*g);
        if names.is_empty() {
            continue;
        }
        let _ = writeln!(out, "group {g}");
        for name in names {
            let c = get_chart(*g, name).expect("listed chart");
            let _ = writeln!(out, "  chart {name}");
            for (v, f) in PHASE.iter().zip(&c.forward) {
                let _ = writeln!(out, "    {v}' = {f}");
            }
            for (v, b) in PHASE.iter().zip(&c.backward) {
                let _ = writeln!(out, "    {v} = {b}");
            }
        }
    }
}

fn diagrams(out: &mut String, groups: &[GroupId]) {
    for g in groups {
        if let Ok(d) = get_diagram(*g) {
            let _ = write!(out, "{d}");
        }
    }
}
