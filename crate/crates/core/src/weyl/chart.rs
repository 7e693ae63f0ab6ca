//! Holomorphy charts: coordinate changes with hand-derived inverses.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{AlgebraError, Fraction, Var, PHASE};

use super::map::{compose, ExtendedMap};
use super::{GroupId, WeylError};

#[derive(Clone, Debug)]
pub struct Chart {
    pub name: String,
    pub group: GroupId,
    /// Chart coordinates as functions of the original ones.
    pub forward: [Fraction; 6],
    /// Original coordinates as functions of the chart ones.
    pub backward: [Fraction; 6],
}

type Part = &'static [(&'static str, &'static str)];

/// Elementary coordinate changes `(forward, backward)`.
const ELEMENTARY: &[(&str, Part, Part)] = &[
    // x0 = -(xy - a0) y, y0 = 1/y
    ("r0_d", &[("x", "-(x*y - a0)*y"), ("y", "1/y")], &[("x", "a0*y - x*y^2"), ("y", "1/y")]),
    ("r1_d", &[("x", "-((x+1)*y - a1)*y"), ("y", "1/y")], &[("x", "a1*y - x*y^2 - 1"), ("y", "1/y")]),
    ("r0_b", &[("x", "x + 2*a0/y - 1/y^2")], &[("x", "x - 2*a0/y + 1/y^2")]),
    ("r1_b", &[("x", "-(x*y - a1)*y"), ("y", "1/y")], &[("x", "a1*y - x*y^2"), ("y", "1/y")]),
    (
        "r2",
        &[("x", "1/x"), ("y", "-((y+w)*x + a2)*x"), ("z", "z - x")],
        &[("x", "1/x"), ("y", "-(y*x + a2)*x - w"), ("z", "z + 1/x")],
    ),
    (
        "r3",
        &[("z", "-((z-q)*w - a3)*w"), ("w", "1/w"), ("p", "p + w")],
        &[("z", "q - (z*w - a3)*w"), ("w", "1/w"), ("p", "p - 1/w")],
    ),
    ("r4", &[("q", "1/q"), ("p", "-(p*q + a4)*q")], &[("q", "1/q"), ("p", "-(p*q + a4)*q")]),
    ("r5_d", &[("q", "1/q"), ("p", "-((p-t)*q + a5)*q")], &[("q", "1/q"), ("p", "t - (p*q + a5)*q")]),
    ("r5_b", &[("p", "p - 2*a5/q + t/q^2")], &[("p", "p + 2*a5/q - t/q^2")]),
];

/// How each group's charts are assembled. A pair `(outer, inner)` is the
/// two-stage chart `outer o inner`: apply `inner`, then `outer` in the
/// resulting coordinates.
fn layout(group: GroupId) -> &'static [(&'static str, &'static str, Option<&'static str>)] {
    match group {
        GroupId::D5 => &[
            ("r0", "r0_d", None),
            ("r1", "r1_d", None),
            ("r2", "r2", Some("r0_d")),
            ("r3", "r3", Some("r4")),
            ("r4", "r4", None),
            ("r5", "r5_d", None),
        ],
        GroupId::B5a => &[
            ("r0", "r0_b", None),
            ("r1", "r1_b", None),
            ("r2", "r2", None),
            ("r3", "r3", Some("r4")),
            ("r4", "r4", None),
            ("r5", "r5_d", None),
        ],
        GroupId::B5b => &[
            ("r0", "r0_d", None),
            ("r1", "r1_d", None),
            ("r2", "r2", Some("r0_d")),
            ("r3", "r3", None),
            ("r4", "r4", None),
            ("r5", "r5_b", None),
        ],
        GroupId::D62 => &[
            ("r0", "r0_b", None),
            ("r1", "r1_b", None),
            ("r2", "r2", None),
            ("r3", "r3", None),
            ("r4", "r4", None),
            ("r5", "r5_b", None),
        ],
        GroupId::A1 => &[],
    }
}

fn phase_map(name: &str, part: Part) -> ExtendedMap {
    ExtendedMap::from_text(name, part, "t", &[]).expect("chart text parses")
}

fn elementary(key: &str) -> (ExtendedMap, ExtendedMap) {
    let (_, f, b) = ELEMENTARY.iter().find(|e| e.0 == key).expect("known elementary chart");
    (phase_map(key, f), phase_map(key, b))
}

impl Chart {
    fn from_maps(name: &str, group: GroupId, f: ExtendedMap, b: ExtendedMap) -> Chart {
        Chart { name: name.to_string(), group, forward: f.phase, backward: b.phase }
    }

    pub fn forward_map(&self) -> ExtendedMap {
        let mut m = ExtendedMap::identity().named(alloc::format!("{}_fwd", self.name));
        m.phase = self.forward.clone();
        m
    }

    pub fn backward_map(&self) -> ExtendedMap {
        let mut m = ExtendedMap::identity().named(alloc::format!("{}_bwd", self.name));
        m.phase = self.backward.clone();
        m
    }

    /// `outer o inner` as a chart.
    pub fn composite(name: &str, outer: &Chart, inner: &Chart) -> Result<Chart, AlgebraError> {
        let f = compose(&outer.forward_map(), &inner.forward_map())?;
        let b = compose(&inner.backward_map(), &outer.backward_map())?;
        Ok(Chart { name: name.to_string(), group: outer.group, forward: f.phase, backward: b.phase })
    }

    /// Both compositions of forward and backward are the identity.
    pub fn round_trip(&self) -> Result<bool, AlgebraError> {
        let fb = compose(&self.forward_map(), &self.backward_map())?;
        let bf = compose(&self.backward_map(), &self.forward_map())?;
        Ok(fb.is_identity() && bf.is_identity())
    }

    /// The chart with no coordinate change.
    pub fn identity(group: GroupId) -> Chart {
        Chart {
            name: "id".to_string(),
            group,
            forward: PHASE.map(Fraction::var),
            backward: PHASE.map(Fraction::var),
        }
    }

    /// Phase variables moved by the chart.
    pub fn moved(&self) -> Vec<Var> {
        PHASE
            .iter()
            .copied()
            .filter(|v| self.forward[v.index()] != Fraction::var(*v))
            .collect()
    }
}

pub fn chart_names(group: GroupId) -> Vec<&'static str> {
    layout(group).iter().map(|l| l.0).collect()
}

fn build(group: GroupId, name: &str) -> Option<Chart> {
    let (n, key, inner) = layout(group).iter().find(|l| l.0 == name)?;
    let (f, b) = elementary(key);
    let outer = Chart::from_maps(n, group, f, b);
    match inner {
        None => Some(outer),
        Some(ik) => {
            let (fi, bi) = elementary(ik);
            let inner = Chart::from_maps(ik, group, fi, bi);
            Some(Chart::composite(n, &outer, &inner).expect("chart composition is defined"))
        }
    }
}

/// Catalog chart; the stored inverse is verified before returning.
pub fn get_chart(group: GroupId, name: &str) -> Result<Chart, WeylError> {
    let c = build(group, name).ok_or_else(|| WeylError::UnknownChart {
        group: group.as_str().to_string(),
        name: name.to_string(),
    })?;
    match c.round_trip() {
        Ok(true) => Ok(c),
        Ok(false) => Err(WeylError::ChartInverse(name.to_string())),
        Err(e) => Err(WeylError::Algebra(e)),
    }
}

/// The two stages of a composite chart, outer first, if it has two.
pub fn chart_stages(group: GroupId, name: &str) -> Option<Vec<Chart>> {
    let (_, key, inner) = layout(group).iter().find(|l| l.0 == name)?;
    let (f, b) = elementary(key);
    let mut out = vec![Chart::from_maps(key, group, f, b)];
    if let Some(ik) = inner {
        let (fi, bi) = elementary(ik);
        out.push(Chart::from_maps(ik, group, fi, bi));
    }
    Some(out)
}
