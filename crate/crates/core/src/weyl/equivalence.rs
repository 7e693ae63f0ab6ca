//! Birational equivalences between the six-dimensional systems.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::map::ExtendedMap;
use super::{GroupId, WeylError};

#[derive(Clone, Debug)]
pub struct Equivalence {
    pub id: &'static str,
    pub source: GroupId,
    pub target: GroupId,
    /// Source coordinates and parameters to target ones, with inverse.
    pub map: ExtendedMap,
    /// `(target generator, word in source generators)` identifications.
    pub correspondences: Vec<(&'static str, Vec<&'static str>)>,
}

pub const EQUIVALENCE_IDS: [&str; 4] = ["d5-b5a", "d5-b5b", "b5a-b5b", "d5-d62"];

type Part = &'static [(&'static str, &'static str)];

struct Data {
    id: &'static str,
    source: GroupId,
    target: GroupId,
    fwd: (Part, Part),
    bwd: (Part, Part),
    table: &'static [(&'static str, &'static [&'static str])],
}

const DATA: [Data; 4] = [
    Data {
        id: "d5-b5a",
        source: GroupId::D5,
        target: GroupId::B5a,
        fwd: (&[("x", "-(x*y - a0)*y"), ("y", "1/y")], &[("a0", "(a1 - a0)/2"), ("a1", "a0")]),
        bwd: (&[("x", "a1*y - x*y^2"), ("y", "1/y")], &[("a0", "a1"), ("a1", "2*a0 + a1")]),
        table: &[
            ("s0", &["pi1"]),
            ("s1", &["s0"]),
            ("s2", &["s2"]),
            ("s3", &["s3"]),
            ("s4", &["s4"]),
            ("s5", &["s5"]),
            ("phi", &["pi2"]),
        ],
    },
    Data {
        id: "d5-b5b",
        source: GroupId::D5,
        target: GroupId::B5b,
        fwd: (&[("q", "1/q"), ("p", "-(p*q + a4)*q")], &[("a5", "(a5 - a4)/2")]),
        bwd: (&[("q", "1/q"), ("p", "-(p*q + a4)*q")], &[("a5", "2*a5 + a4")]),
        table: &[
            ("s0", &["s0"]),
            ("s1", &["s1"]),
            ("s2", &["s2"]),
            ("s3", &["s3"]),
            ("s4", &["s4"]),
            ("s5", &["pi2"]),
            ("phi", &["pi1"]),
        ],
    },
    Data {
        id: "b5a-b5b",
        source: GroupId::B5a,
        target: GroupId::B5b,
        fwd: (
            &[("x", "-(x*y - a1)*y"), ("y", "1/y"), ("q", "1/q"), ("p", "-(p*q + a4)*q")],
            &[("a0", "a1"), ("a1", "2*a0 + a1"), ("a5", "(a5 - a4)/2")],
        ),
        bwd: (
            &[("x", "a0*y - x*y^2"), ("y", "1/y"), ("q", "1/q"), ("p", "-(p*q + a4)*q")],
            &[("a0", "(a1 - a0)/2"), ("a1", "a0"), ("a5", "2*a5 + a4")],
        ),
        table: &[],
    },
    Data {
        id: "d5-d62",
        source: GroupId::D5,
        target: GroupId::D62,
        fwd: (
            &[("x", "-(x*y - a0)*y"), ("y", "1/y"), ("q", "1/q"), ("p", "-(p*q + a4)*q")],
            &[("a0", "(a1 - a0)/2"), ("a1", "a0"), ("a5", "(a5 - a4)/2")],
        ),
        bwd: (
            &[("x", "a1*y - x*y^2"), ("y", "1/y"), ("q", "1/q"), ("p", "-(p*q + a4)*q")],
            &[("a0", "a1"), ("a1", "2*a0 + a1"), ("a5", "2*a5 + a4")],
        ),
        table: &[
            ("s0", &["pi1"]),
            ("s1", &["s0"]),
            ("s2", &["s2"]),
            ("s3", &["s3"]),
            ("s4", &["s4"]),
            ("s5", &["pi2"]),
            ("psi", &["pi1", "pi2", "pi3"]),
        ],
    },
];

pub fn get_equivalence(id: &str) -> Result<Equivalence, WeylError> {
    let d = DATA
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| WeylError::UnknownEquivalence(id.to_string()))?;
    let fwd = ExtendedMap::from_text(d.id, d.fwd.0, "t", d.fwd.1).expect("equivalence text parses");
    let bwd = ExtendedMap::from_text(&alloc::format!("{}_inv", d.id), d.bwd.0, "t", d.bwd.1)
        .expect("equivalence text parses");
    Ok(Equivalence {
        id: d.id,
        source: d.source,
        target: d.target,
        map: fwd.with_inverse(bwd),
        correspondences: d.table.iter().map(|(t, w)| (*t, w.to_vec())).collect(),
    })
}

pub fn equivalences() -> Vec<Equivalence> {
    EQUIVALENCE_IDS.iter().map(|id| get_equivalence(id).unwrap()).collect()
}
