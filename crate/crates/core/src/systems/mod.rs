//! Catalog of Hamiltonian systems and their vector fields.

mod catalog;
mod scalar;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::algebra::{
    parse_fraction, parse_polynomial, reduce_fraction_by_constraint, Fraction, LinearForm, Polynomial,
    Rational, Var, PHASE,
};
use crate::report::{CheckRecord, VerificationReport};

pub use scalar::{scalar_derivatives, scalar_piii_reduction, scalar_sides_at, PiiiConstants};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SystemName {
    D5,
    B5a,
    B5b,
    D62,
    H1,
    H2,
    H3,
    H4,
    HIIID7,
}

impl SystemName {
    pub const ALL: [SystemName; 9] = [
        SystemName::D5,
        SystemName::B5a,
        SystemName::B5b,
        SystemName::D62,
        SystemName::H1,
        SystemName::H2,
        SystemName::H3,
        SystemName::H4,
        SystemName::HIIID7,
    ];

    pub const SIX_DIM: [SystemName; 4] = [SystemName::D5, SystemName::B5a, SystemName::B5b, SystemName::D62];

    pub fn as_str(self) -> &'static str {
        match self {
            SystemName::D5 => "D5",
            SystemName::B5a => "B5a",
            SystemName::B5b => "B5b",
            SystemName::D62 => "D62",
            SystemName::H1 => "H1",
            SystemName::H2 => "H2",
            SystemName::H3 => "H3",
            SystemName::H4 => "H4",
            SystemName::HIIID7 => "HIII_D7",
        }
    }

    /// Case-insensitive lookup; `HIII_D7` also answers to `hiiid7`.
    pub fn parse(s: &str) -> Option<SystemName> {
        SystemName::ALL.iter().copied().find(|n| {
            n.as_str().eq_ignore_ascii_case(s) || n.as_str().replace('_', "").eq_ignore_ascii_case(s)
        })
    }

    pub fn is_six_dim(self) -> bool {
        SystemName::SIX_DIM.contains(&self)
    }

    /// Normalization and the parameter eliminated with it.
    fn constraint(self) -> (LinearForm, usize) {
        use crate::algebra::rational::{int, rat};
        match self {
            SystemName::D5 => (LinearForm::from_integers([1, 1, 2, 2, 1, 1], int(1)), 3),
            SystemName::B5a => (LinearForm::from_integers([2, 2, 2, 2, 1, 1], int(1)), 3),
            SystemName::B5b => (LinearForm::from_integers([1, 1, 2, 2, 2, 2], int(1)), 3),
            SystemName::D62 => (LinearForm::from_integers([1, 1, 1, 1, 1, 1], rat(1, 2)), 3),
            SystemName::H1 | SystemName::H2 | SystemName::H3 | SystemName::H4 => {
                (LinearForm::from_integers([1, -1, 2, 0, 0, 0], int(0)), 2)
            }
            SystemName::HIIID7 => (LinearForm::from_integers([1, 1, 0, 0, 0, 0], int(1)), 0),
        }
    }
}

impl fmt::Display for SystemName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SystemError {
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
}

/// A Hamiltonian together with its canonical pairs and normalization.
#[derive(Clone, Debug)]
pub struct HamiltonSystem {
    pub name: SystemName,
    pub hamiltonian: Fraction,
    /// `(coordinate, momentum)` pairs.
    pub pairs: Vec<(Var, Var)>,
    pub constraint: LinearForm,
    pub eliminated_param: usize,
}

impl HamiltonSystem {
    /// Builds a system from an arbitrary Hamiltonian, reusing the pairing and
    /// normalization of a catalog entry.
    pub fn with_hamiltonian(like: SystemName, hamiltonian: Fraction) -> HamiltonSystem {
        let mut s = system(like);
        s.hamiltonian = hamiltonian;
        s
    }

    /// Replaces the eliminated parameter through the normalization.
    pub fn reduce(&self, f: &Fraction) -> Fraction {
        reduce_fraction_by_constraint(f, &self.constraint, self.eliminated_param)
            .expect("an affine substitution in a parameter cannot zero a denominator")
    }

    pub fn reduce_poly(&self, p: &Polynomial) -> Polynomial {
        crate::algebra::reduce_by_constraint(p, &self.constraint, self.eliminated_param)
    }

    pub fn vector_field(&self) -> VectorField {
        hamiltonian_vector_field(self)
    }

    /// Completes a parameter vector so that it satisfies the normalization.
    pub fn admissible_params(&self, alpha: &[Rational; 6]) -> [Rational; 6] {
        self.constraint.complete(alpha, self.eliminated_param)
    }

    pub fn phase_vars(&self) -> Vec<Var> {
        let mut v = Vec::with_capacity(self.pairs.len() * 2);
        for (c, m) in &self.pairs {
            v.push(*c);
            v.push(*m);
        }
        v
    }
}

/// Right-hand sides ordered as `(x, y, z, w, q, p)`; zero for variables a
/// two-dimensional system does not move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    pub components: [Fraction; 6],
}

impl VectorField {
    pub fn zero() -> VectorField {
        VectorField { components: core::array::from_fn(|_| Fraction::zero()) }
    }

    pub fn component(&self, v: Var) -> &Fraction {
        assert!(v.is_phase(), "{v} is not a phase variable");
        &self.components[v.index()]
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField { components: core::array::from_fn(|i| &self.components[i] + &other.components[i]) }
    }
}

impl Index<Var> for VectorField {
    type Output = Fraction;
    fn index(&self, v: Var) -> &Fraction {
        self.component(v)
    }
}

pub fn system(name: SystemName) -> HamiltonSystem {
    let text = catalog::T_HAMILTONIAN
        .iter()
        .find(|(n, _)| *n == name.as_str())
        .map(|(_, s)| *s)
        .expect("every name has a catalog entry");
    let th = parse_polynomial(text).expect("catalog Hamiltonians parse");
    let hamiltonian = Fraction::new(th, Polynomial::var(Var::T)).expect("t is nonzero");
    let pairs = if name.is_six_dim() {
        alloc::vec![(Var::X, Var::Y), (Var::Z, Var::W), (Var::Q, Var::P)]
    } else {
        alloc::vec![(Var::Q, Var::P)]
    };
    let (constraint, eliminated_param) = name.constraint();
    HamiltonSystem { name, hamiltonian, pairs, constraint, eliminated_param }
}

pub fn get_system(name: &str) -> Result<HamiltonSystem, SystemError> {
    SystemName::parse(name)
        .map(system)
        .ok_or_else(|| SystemError::UnknownSystem(name.to_string()))
}

/// Hamilton's equations: `dc/dt = dH/dm`, `dm/dt = -dH/dc` for each pair.
pub fn hamiltonian_vector_field(sys: &HamiltonSystem) -> VectorField {
    let mut f = VectorField::zero();
    for (c, m) in &sys.pairs {
        f.components[c.index()] = sys.hamiltonian.derivative(*m);
        f.components[m.index()] = -sys.hamiltonian.derivative(*c);
    }
    f
}

/// The independently transcribed equations of a six-dimensional system.
pub fn displayed_ode(name: SystemName) -> Option<[Fraction; 6]> {
    let (_, rows) = catalog::DISPLAYED_ODE.iter().find(|(n, _)| *n == name.as_str())?;
    Some(core::array::from_fn(|i| parse_fraction(rows[i]).expect("displayed equations parse")))
}

/// The first integral of the `H1` flow.
pub fn h1_first_integral() -> Polynomial {
    parse_polynomial(catalog::H1_INTEGRAL).expect("integral parses")
}

/// Compares a system's Hamiltonian field with given right-hand sides,
/// component by component, after constraint reduction of both sides.
pub fn compare_field(sys: &HamiltonSystem, expected: &[Fraction; 6]) -> Vec<CheckRecord> {
    let field = hamiltonian_vector_field(sys);
    let group = crate::weyl::group_id_of(sys.name);
    PHASE
        .iter()
        .map(|v| {
            let id = alloc::format!("catalog.{group}.d{v}");
            let lhs = sys.reduce(&field.components[v.index()]);
            let rhs = sys.reduce(&expected[v.index()]);
            let res = &lhs - &rhs;
            if res.is_zero() {
                CheckRecord::pass(id, sys.name.as_str())
            } else {
                CheckRecord::fail(id, sys.name.as_str(), res.to_string())
                    .with_detail(alloc::format!("component d{v}/dt differs from the displayed equation"))
            }
        })
        .collect()
}

/// Hamiltonian fields against the displayed equations for all four
/// six-dimensional systems.
pub fn check_catalog_consistency() -> VerificationReport {
    let mut rep = VerificationReport::new();
    for name in SystemName::SIX_DIM {
        let sys = system(name);
        let ode = displayed_ode(name).expect("six-dimensional systems have displayed equations");
        for r in compare_field(&sys, &ode) {
            rep.push(r);
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarSet;

    #[test]
    fn lookup() {
        assert_eq!(get_system("d62").unwrap().name, SystemName::D62);
        assert_eq!(get_system("HIII_D7").unwrap().name, SystemName::HIIID7);
        assert!(matches!(get_system("E8"), Err(SystemError::UnknownSystem(_))));
    }

    #[test]
    fn denominators_are_t() {
        for n in SystemName::ALL {
            let s = system(n);
            assert_eq!(*s.hamiltonian.denom(), Polynomial::var(Var::T), "{n}");
            if n.is_six_dim() {
                assert_eq!(s.hamiltonian.numer().degree_in_set(VarSet::PHASE), 4, "{n}");
            }
        }
    }
}
