//! Transformations, diagrams and charts of each symmetry group.

mod catalog;
mod chart;
mod diagram;
mod equivalence;
mod map;

use alloc::string::String;
use core::fmt;

use crate::algebra::AlgebraError;
use crate::systems::SystemName;

pub use catalog::{extra_names, generators, get_map, map_names, reflection_names};
pub use chart::{chart_names, chart_stages, get_chart, Chart};
pub use diagram::{get_diagram, CoxeterDiagram};
pub use equivalence::{equivalences, get_equivalence, Equivalence, EQUIVALENCE_IDS};
pub use map::{compose, compose_word, order_of, ExtendedMap};

/// Symmetry groups by system: `d5`, `b5a`, `b5b`, `d62` for the
/// six-dimensional systems, `a1` for the scalar family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupId {
    D5,
    B5a,
    B5b,
    D62,
    A1,
}

impl GroupId {
    pub const ALL: [GroupId; 5] = [GroupId::D5, GroupId::B5a, GroupId::B5b, GroupId::D62, GroupId::A1];
    pub const SIX_DIM: [GroupId; 4] = [GroupId::D5, GroupId::B5a, GroupId::B5b, GroupId::D62];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupId::D5 => "d5",
            GroupId::B5a => "b5a",
            GroupId::B5b => "b5b",
            GroupId::D62 => "d62",
            GroupId::A1 => "a1",
        }
    }

    pub fn parse(s: &str) -> Result<GroupId, WeylError> {
        GroupId::ALL
            .iter()
            .copied()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| WeylError::UnknownGroup(String::from(s)))
    }

    /// The system whose symmetry the group describes.
    pub fn system(self) -> SystemName {
        match self {
            GroupId::D5 => SystemName::D5,
            GroupId::B5a => SystemName::B5a,
            GroupId::B5b => SystemName::B5b,
            GroupId::D62 => SystemName::D62,
            GroupId::A1 => SystemName::HIIID7,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Group identifier a system's records are filed under.
pub fn group_id_of(name: SystemName) -> &'static str {
    match name {
        SystemName::D5 => "d5",
        SystemName::B5a => "b5a",
        SystemName::B5b => "b5b",
        SystemName::D62 => "d62",
        _ => "a1",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("unknown map `{name}` in group `{group}`")]
    UnknownMap { group: String, name: String },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("unknown chart `{name}` in group `{group}`")]
    UnknownChart { group: String, name: String },
    #[error("unknown equivalence `{0}`")]
    UnknownEquivalence(String),
    #[error("stored inverse of chart `{0}` does not round-trip")]
    ChartInverse(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
