//! Generators, diagram automorphisms and the scalar-family maps.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::map::ExtendedMap;
use super::{GroupId, WeylError};

type Spec = (&'static str, &'static [(&'static str, &'static str)], &'static str, &'static [(&'static str, &'static str)]);

const D5_S: [Spec; 9] = [
    ("s0", &[("y", "y - a0/x")], "t", &[("a0", "-a0"), ("a2", "a2 + a0")]),
    ("s1", &[("y", "y - a1/(x+1)")], "t", &[("a1", "-a1"), ("a2", "a2 + a1")]),
    (
        "s2",
        &[("x", "x + a2*w/(y*w+1)"), ("z", "z + a2*y/(y*w+1)")],
        "t",
        &[("a0", "a0 + a2"), ("a1", "a1 + a2"), ("a2", "-a2"), ("a3", "a3 + a2")],
    ),
    (
        "s3",
        &[("w", "w - a3*q/(z*q-1)"), ("p", "p - a3*z/(z*q-1)")],
        "t",
        &[("a2", "a2 + a3"), ("a3", "-a3"), ("a4", "a4 + a3"), ("a5", "a5 + a3")],
    ),
    ("s4", &[("q", "q + a4/p")], "t", &[("a3", "a3 + a4"), ("a4", "-a4")]),
    ("s5", &[("q", "q + a5/(p-t)")], "t", &[("a3", "a3 + a5"), ("a5", "-a5")]),
    (
        "pi1",
        &[("x", "-x-1"), ("y", "-y"), ("z", "-z"), ("w", "-w"), ("q", "-q"), ("p", "-p")],
        "-t",
        &[("a0", "a1"), ("a1", "a0")],
    ),
    ("pi2", &[("p", "p - t")], "-t", &[("a4", "a5"), ("a5", "a4")]),
    (
        "pi3",
        &[("x", "(p-t)/t"), ("y", "-t*q"), ("z", "-t*w"), ("w", "z/t"), ("q", "y/t"), ("p", "-t*(x+1)")],
        "-t",
        &[("a0", "a5"), ("a1", "a4"), ("a2", "a3"), ("a3", "a2"), ("a4", "a1"), ("a5", "a0")],
    ),
];

const B5A_S: [Spec; 3] = [
    (
        "s0",
        &[("x", "-x - 2*a0/y + 1/y^2"), ("y", "-y"), ("z", "-z"), ("w", "-w"), ("q", "-q"), ("p", "-p")],
        "-t",
        &[("a0", "-a0"), ("a1", "a1 + 2*a0")],
    ),
    ("s1", &[("y", "y - a1/x")], "t", &[("a0", "a0 + a1"), ("a1", "-a1"), ("a2", "a2 + a1")]),
    (
        "s2",
        &[("x", "x + a2/(y+w)"), ("z", "z + a2/(y+w)")],
        "t",
        &[("a1", "a1 + a2"), ("a2", "-a2"), ("a3", "a3 + a2")],
    ),
];

const B5B_S: [Spec; 3] = [
    (
        "s3",
        &[("w", "w - a3/(z-q)"), ("p", "p + a3/(z-q)")],
        "t",
        &[("a2", "a2 + a3"), ("a3", "-a3"), ("a4", "a4 + a3")],
    ),
    ("s4", &[("q", "q + a4/p")], "t", &[("a3", "a3 + a4"), ("a4", "-a4"), ("a5", "a5 + a4")]),
    ("s5", &[("p", "p - 2*a5/q + t/q^2")], "-t", &[("a4", "a4 + 2*a5"), ("a5", "-a5")]),
];

const D62_PSI: Spec = (
    "psi",
    &[("x", "-t*p"), ("y", "q/t"), ("z", "t*w"), ("w", "-z/t"), ("q", "-t*y"), ("p", "x/t")],
    "-t",
    &[("a0", "a5"), ("a1", "a4"), ("a2", "a3"), ("a3", "a2"), ("a4", "a1"), ("a5", "a0")],
);

/// Generators of the scalar `HIII_D7` symmetry. The reflections are the
/// sign-corrected forms that actually preserve the system; the printed
/// forms are kept under `*_printed` so that their failure stays checkable.
const A1_S: [Spec; 7] = [
    ("s0", &[("p", "p - a0/q + t/q^2")], "-t", &[("a0", "-a0"), ("a1", "a1 + 2*a0")]),
    ("s1", &[("q", "-q - a1/p - 1/p^2"), ("p", "-p")], "-t", &[("a0", "a0 + 2*a1"), ("a1", "-a1")]),
    ("sigma", &[("q", "t*p"), ("p", "-q/t")], "-t", &[("a0", "a1"), ("a1", "a0")]),
    ("pi", &[("q", "t*p"), ("p", "-(p^2*q + a1*p + 1)/(p^2*t)")], "t", &[("a0", "-a1"), ("a1", "a0 + 2*a1")]),
    ("s0_printed", &[("p", "p + a0/q - t/q^2")], "-t", &[("a0", "-a0"), ("a1", "a1 + 2*a0")]),
    ("s1_printed", &[("q", "-q + a1/p + 1/p^2"), ("p", "-p")], "-t", &[("a0", "a0 + 2*a1"), ("a1", "-a1")]),
    ("pi_inv", &[("q", "-t*p + a0*t/q - t^2/q^2"), ("p", "q/t")], "t", &[("a0", "a1 + 2*a0"), ("a1", "-a0")]),
];

/// Maps relating `H1` to `H2`, `H3`, `H4`, with hand-derived inverses.
const TR: [(Spec, Spec); 3] = [
    (
        ("tr1", &[("q", "t/p"), ("p", "(q*p - a0)*p/t")], "t", &[]),
        ("tr1_inv", &[("q", "(q*p + a0)*q/t"), ("p", "t/q")], "t", &[]),
    ),
    (("tr2", &[("q", "-t*p"), ("p", "q/t")], "t", &[]), ("tr2_inv", &[("q", "t*p"), ("p", "-q/t")], "t", &[])),
    (("tr3", &[("q", "p/t"), ("p", "-t*q")], "t", &[]), ("tr3_inv", &[("q", "-p/t"), ("p", "t*q")], "t", &[])),
];

fn build(s: &Spec) -> ExtendedMap {
    ExtendedMap::from_text(s.0, s.1, s.2, s.3).expect("catalog maps parse")
}

fn find(specs: &[Spec], name: &str) -> Option<ExtendedMap> {
    specs.iter().find(|s| s.0 == name).map(build)
}

/// Names accepted by [`get_map`] for a group, generators first.
pub fn map_names(group: GroupId) -> Vec<&'static str> {
    match group {
        GroupId::D5 => vec!["s0", "s1", "s2", "s3", "s4", "s5", "pi1", "pi2", "pi3"],
        GroupId::B5a | GroupId::B5b => vec!["s0", "s1", "s2", "s3", "s4", "s5", "phi"],
        GroupId::D62 => vec!["s0", "s1", "s2", "s3", "s4", "s5", "psi"],
        GroupId::A1 => vec![
            "s0",
            "s1",
            "sigma",
            "pi",
            "pi_inv",
            "s0_printed",
            "s1_printed",
            "tr1",
            "tr1_inv",
            "tr2",
            "tr2_inv",
            "tr3",
            "tr3_inv",
        ],
    }
}

/// Generators that correspond to nodes of the diagram.
pub fn reflection_names(group: GroupId) -> &'static [&'static str] {
    match group {
        GroupId::A1 => &["s0", "s1"],
        _ => &["s0", "s1", "s2", "s3", "s4", "s5"],
    }
}

/// Diagram automorphisms and other named extras checked for symmetry.
pub fn extra_names(group: GroupId) -> &'static [&'static str] {
    match group {
        GroupId::D5 => &["pi1", "pi2", "pi3"],
        GroupId::B5a | GroupId::B5b => &["phi"],
        GroupId::D62 => &["psi"],
        GroupId::A1 => &["sigma", "pi"],
    }
}

fn lookup(group: GroupId, name: &str) -> Option<ExtendedMap> {
    match group {
        GroupId::D5 => find(&D5_S, name),
        GroupId::B5a => match name {
            "s3" | "s4" | "s5" => find(&D5_S, name),
            "phi" => find(&D5_S, "pi2"),
            _ => find(&B5A_S, name),
        },
        GroupId::B5b => match name {
            "s0" | "s1" | "s2" => find(&D5_S, name),
            "phi" => find(&D5_S, "pi1"),
            _ => find(&B5B_S, name),
        },
        GroupId::D62 => match name {
            "s0" | "s1" | "s2" => find(&B5A_S, name),
            "psi" => Some(build(&D62_PSI)),
            _ => find(&B5B_S, name),
        },
        GroupId::A1 => {
            if let Some(m) = find(&A1_S, name) {
                return Some(m);
            }
            TR.iter().find_map(|(f, i)| {
                if f.0 == name {
                    Some(build(f).with_inverse(build(i)))
                } else if i.0 == name {
                    Some(build(i).with_inverse(build(f)))
                } else {
                    None
                }
            })
        }
    }
}

/// Catalog entry with its stored inverse.
pub fn get_map(group: GroupId, name: &str) -> Result<ExtendedMap, WeylError> {
    let m = lookup(group, name).ok_or_else(|| WeylError::UnknownMap {
        group: group.as_str().to_string(),
        name: name.to_string(),
    })?;
    let m = m.named(name);
    Ok(match (group, name) {
        (_, n) if n.starts_with("tr") => m,
        (GroupId::A1, "pi") => {
            let inv = lookup(group, "pi_inv").unwrap().named("pi_inv");
            m.with_inverse(inv)
        }
        (GroupId::A1, "pi_inv") => {
            let inv = lookup(group, "pi").unwrap().named("pi");
            m.with_inverse(inv)
        }
        // All reflections and diagram automorphisms are involutions; the
        // claim is checked, not assumed, by the inverse tests.
        _ => m.involutive(),
    })
}

/// `s0..s5` (or `s0, s1` for `a1`) in node order.
pub fn generators(group: GroupId) -> Vec<ExtendedMap> {
    reflection_names(group)
        .iter()
        .map(|n| get_map(group, n).expect("generators exist"))
        .collect()
}
