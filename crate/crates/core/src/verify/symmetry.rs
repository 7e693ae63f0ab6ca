use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::report::{Budget, CheckRecord, VerificationReport};
use crate::systems::HamiltonSystem;
use crate::weyl::{compose, extra_names, get_map, reflection_names, ExtendedMap, GroupId};

use super::timed;

/// Maps that should preserve the group's own system.
pub fn symmetry_subjects(group: GroupId) -> Vec<&'static str> {
    let mut v: Vec<&str> = reflection_names(group).to_vec();
    v.extend_from_slice(extra_names(group));
    v
}

/// Whether `f` maps solutions of `sys` to solutions of `sys`, including the
/// factor `dt'/dt` for time-reversing maps.
pub fn check_symmetry(sys: &HamiltonSystem, f: &ExtendedMap, id: &str, budget: &Budget) -> CheckRecord {
    timed(budget, |meter| {
        let subject = format!("{}:{}", sys.name, f.name);
        if !f.preserves(&sys.constraint) {
            return CheckRecord::fail(id, &subject, "parameter action leaves the normalization hyperplane");
        }
        super::transport_record(sys, &sys.vector_field(), f, id, &subject, meter)
    })
}

/// Symmetry of every generator and diagram automorphism of the group.
pub fn check_symmetry_suite(group: GroupId, budget: &Budget) -> VerificationReport {
    let sys = crate::systems::system(group.system());
    let mut rep = VerificationReport::new();
    for name in symmetry_subjects(group) {
        let f = get_map(group, name).expect("catalog subject");
        rep.push(check_symmetry(&sys, &f, &format!("symmetry.{group}.{name}"), budget));
    }
    if group == GroupId::A1 {
        // The reflections as printed, kept as errata observations.
        for name in ["s0_printed", "s1_printed"] {
            let f = get_map(group, name).expect("catalog subject");
            let r = check_symmetry(&sys, &f, name, budget);
            let value = if r.passed() { String::from("preserves the system") } else { format!("rejected: {}", r.witness) };
            rep.observe(format!("symmetry.{group}.{name}"), value);
        }
    }
    rep.extend(check_symmetry_closure(group, budget));
    rep
}

fn closure_pairs(group: GroupId) -> [(&'static str, &'static str); 5] {
    match group {
        GroupId::D5 => [("s0", "s2"), ("s2", "s3"), ("s4", "s5"), ("pi1", "s1"), ("s3", "pi3")],
        GroupId::B5a => [("s0", "s1"), ("s1", "s2"), ("s3", "s4"), ("phi", "s5"), ("s2", "s0")],
        GroupId::B5b => [("s0", "s2"), ("s2", "s3"), ("s4", "s5"), ("phi", "s1"), ("s5", "s3")],
        GroupId::D62 => [("s0", "s1"), ("s2", "s3"), ("s4", "s5"), ("psi", "s0"), ("s5", "psi")],
        GroupId::A1 => [("s0", "s1"), ("s1", "s0"), ("sigma", "s0"), ("s1", "sigma"), ("pi", "s0")],
    }
}

/// Symmetry of products `f o g` of two separately checked maps.
pub fn check_symmetry_closure(group: GroupId, budget: &Budget) -> VerificationReport {
    let sys = crate::systems::system(group.system());
    let mut rep = VerificationReport::new();
    for (a, b) in closure_pairs(group) {
        let id = format!("symmetry.{group}.closure.{a}.{b}");
        let f = get_map(group, a).expect("catalog subject");
        let g = get_map(group, b).expect("catalog subject");
        match compose(&f, &g) {
            Ok(fg) => rep.push(check_symmetry(&sys, &fg, &id, budget)),
            Err(e) => rep.push(CheckRecord::fail(id, format!("{a}*{b}"), e.to_string())),
        }
    }
    rep
}

