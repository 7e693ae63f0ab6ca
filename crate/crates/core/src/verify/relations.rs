use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::report::{Budget, CheckRecord, Status, VerificationReport};
use crate::systems::{system, SystemName};
use crate::weyl::{compose_word, get_map, ExtendedMap, GroupId};

use super::{timed, transport_record};

/// How a relation `T(H1) = Hk` is read: substitute the stated maps or their
/// inverses, and compose a word as written or mirrored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Orientation {
    pub inverse: bool,
    pub mirrored: bool,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [
        Orientation { inverse: false, mirrored: false },
        Orientation { inverse: false, mirrored: true },
        Orientation { inverse: true, mirrored: false },
        Orientation { inverse: true, mirrored: true },
    ];

    pub fn label(self) -> &'static str {
        match (self.inverse, self.mirrored) {
            (false, false) => "maps, order as written",
            (false, true) => "maps, mirrored order",
            (true, false) => "inverses, order as written",
            (true, true) => "inverses, mirrored order",
        }
    }

    fn realize(self, word: &[&str]) -> ExtendedMap {
        let maps: Vec<ExtendedMap> = word
            .iter()
            .map(|n| {
                let m = get_map(GroupId::A1, n).expect("catalog map");
                if self.inverse {
                    m.inverse().expect("stored inverse").clone()
                } else {
                    m
                }
            })
            .collect();
        let mut refs: Vec<&ExtendedMap> = maps.iter().collect();
        if self.mirrored {
            refs.reverse();
        }
        compose_word(&refs).expect("substitution of catalog maps")
    }
}

/// Relations carrying `H1` to `target`; the word is read with `o`.
const RELATIONS: [(&str, &[&str], SystemName); 3] = [
    ("tr1", &["tr1"], SystemName::H2),
    ("tr2_tr1", &["tr2", "tr1"], SystemName::H3),
    ("tr3", &["tr3"], SystemName::H4),
];

fn attempt(word: &[&str], target: SystemName, o: Orientation, id: &str, budget: &Budget) -> CheckRecord {
    let src = system(SystemName::H1);
    let f = o.realize(word);
    let subject = format!("H1->{target}:{}", f.name);
    timed(budget, |meter| transport_record(&src, &system(target).vector_field(), &f, id, &subject, meter))
}

/// The three scalar relations under every orientation. Each relation passes
/// if some orientation holds; `relations.a1.orientation` passes only if one
/// orientation holds for all three.
pub fn check_hamiltonian_relations(budget: &Budget) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let mut holding: Vec<Vec<Orientation>> = Vec::new();
    for (name, word, target) in RELATIONS {
        let id = format!("relations.a1.{name}");
        let tries: Vec<(Orientation, CheckRecord)> =
            Orientation::ALL.iter().map(|o| (*o, attempt(word, target, *o, &id, budget))).collect();
        let ok: Vec<Orientation> = tries.iter().filter(|(_, r)| r.passed()).map(|(o, _)| *o).collect();
        let elapsed = tries.iter().map(|(_, r)| r.wall_time).sum();
        let subject = format!("H1->{target}");
        let rec = if !ok.is_empty() {
            let labels: Vec<&str> = ok.iter().map(|o| o.label()).collect();
            CheckRecord::pass(&id, &subject).with_detail(format!("holds for: {}", labels.join("; ")))
        } else if tries.iter().any(|(_, r)| r.status == Status::Indeterminate) {
            CheckRecord::indeterminate(&id, &subject, "no orientation verified within budget")
        } else {
            let w = tries[0].1.witness.clone();
            CheckRecord::fail(&id, &subject, w).with_detail("fails in every orientation")
        };
        rep.push(rec.with_time(elapsed));
        holding.push(ok);
    }

    let common: Vec<Orientation> = Orientation::ALL
        .iter()
        .copied()
        .filter(|o| holding.iter().all(|h| h.contains(o)))
        .collect();
    let id = "relations.a1.orientation";
    rep.push(match common.first() {
        Some(o) => CheckRecord::pass(id, "tr1,tr2_tr1,tr3").with_detail(o.label()),
        None => CheckRecord::fail(id, "tr1,tr2_tr1,tr3", "no common orientation")
            .with_detail("the relations hold under different conventions"),
    });
    if let Some(o) = common.first() {
        rep.observe("relations.a1.orientation", o.label());
    }

    // Only the composite is claimed to reach H3; tr2 by itself should not.
    let control: Vec<String> = Orientation::ALL
        .iter()
        .filter(|o| !o.mirrored)
        .map(|o| {
            let r = attempt(&["tr2"], SystemName::H3, *o, "relations.a1.control.tr2", budget);
            format!("{}: {}", o.label(), r.status)
        })
        .collect();
    rep.observe("relations.a1.control.tr2", control.join("; ").to_string());
    rep
}
