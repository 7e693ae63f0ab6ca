//! Exact checkers for the structures claimed of the catalog: symmetry,
//! Coxeter relations, symplecticity, first integrals, Hamiltonian relations,
//! holomorphy, equivalences and the holomorphy ansatz.
//!
//! Every check returns records rather than errors. A check whose
//! intermediate expressions outgrow the [`Budget`] is reported as
//! `INDETERMINATE`.

mod ansatz;
mod coxeter;
mod equivalence;
mod holomorphy;
mod integral;
mod oracle;
mod relations;
mod symmetry;
mod symplectic;

use alloc::format;
use alloc::string::{String, ToString};

use crate::algebra::{AlgebraError, Fraction, Var, PHASE};
use crate::report::{Budget, CheckRecord, Exhausted, Meter};
use crate::systems::{HamiltonSystem, VectorField};
use crate::weyl::{ExtendedMap, WeylError};

pub use ansatz::{
    catalog_coefficients, check_ansatz_suite, seeded_params, solve_holomorphy_ansatz, solve_on_charts, AnsatzSpace,
    BasisElement, TWindow,
};
pub use coxeter::check_involutions_and_braid;
pub use equivalence::{check_equivalence, check_equivalence_suite, check_generator_correspondence};
pub use holomorphy::{check_holomorphy, transformed_field};
pub use integral::check_first_integral;
pub use oracle::{oracle_point, random_point, reference_point};
pub use relations::{check_hamiltonian_relations, Orientation};
pub use symmetry::{check_symmetry, check_symmetry_closure, check_symmetry_suite, symmetry_subjects};
pub use symplectic::{check_symplectic, check_symplectic_suite};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("parameters violate the normalization: {0}")]
    ConstraintViolated(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Why an exact computation stopped before reaching a verdict.
#[derive(Debug)]
pub(crate) enum Halt {
    Budget(Exhausted),
    Algebra(AlgebraError),
}

impl From<Exhausted> for Halt {
    fn from(e: Exhausted) -> Halt {
        Halt::Budget(e)
    }
}

impl From<AlgebraError> for Halt {
    fn from(e: AlgebraError) -> Halt {
        Halt::Algebra(e)
    }
}

impl Halt {
    /// Budget exhaustion is `INDETERMINATE`; an algebraic failure (a map
    /// that cannot be substituted) is a genuine `FAIL`.
    pub(crate) fn record(self, id: &str, subject: &str) -> CheckRecord {
        match self {
            Halt::Budget(e) => CheckRecord::indeterminate(id, subject, e.to_string()),
            Halt::Algebra(e) => CheckRecord::fail(id, subject, e.to_string()),
        }
    }
}

/// Pass if every residual vanishes, else fail on the first nonzero one.
pub(crate) fn residual_record(id: &str, subject: &str, labels: &[String], residuals: &[Fraction]) -> CheckRecord {
    for (l, r) in labels.iter().zip(residuals) {
        if !r.is_zero() {
            let n = residuals.iter().filter(|r| !r.is_zero()).count();
            return CheckRecord::fail(id, subject, r.to_string())
                .with_detail(format!("component {l} has a nonzero residual ({n} of {} nonzero)", residuals.len()));
        }
    }
    CheckRecord::pass(id, subject)
}

pub(crate) fn phase_labels() -> [String; 6] {
    PHASE.map(|v| format!("d{v}"))
}

/// Chain-rule residuals of `f` carrying solutions of `src` to solutions of
/// the system with field `target`:
///
/// `sum_v dphi_j/dv F_v + dphi_j/dt - (dt'/dt) G_j(f(P))`,
///
/// reduced through the source normalization.
pub(crate) fn pushforward_residuals(
    src: &HamiltonSystem,
    field: &VectorField,
    target: &VectorField,
    f: &ExtendedMap,
    meter: &Meter<'_>,
) -> Result<[Fraction; 6], Halt> {
    let eps = f.time.derivative(Var::T);
    let mut out: [Fraction; 6] = core::array::from_fn(|_| Fraction::zero());
    for (j, phi) in f.phase.iter().enumerate() {
        let mut lhs = phi.derivative(Var::T);
        for v in PHASE {
            let fv = &field.components[v.index()];
            if fv.is_zero() || !phi.support().contains(v) {
                continue;
            }
            lhs = &lhs + &(&phi.derivative(v) * fv);
        }
        meter.check(lhs.size())?;
        let g = &target.components[j];
        let rhs = if g.is_zero() { Fraction::zero() } else { &eps * &f.apply(g)? };
        meter.check(rhs.size())?;
        out[j] = src.reduce(&(&lhs - &rhs));
        meter.check(out[j].size())?;
    }
    Ok(out)
}

/// Oracle refutation at seeded points, then the symbolic pushforward of
/// `f` from `src` into the system with field `target`.
pub(crate) fn transport_record(
    src: &HamiltonSystem,
    target: &VectorField,
    f: &ExtendedMap,
    id: &str,
    subject: &str,
    meter: &Meter<'_>,
) -> CheckRecord {
    let field = src.vector_field();
    for k in 0..4u64 {
        let pt = if k == 0 { oracle::reference_point(src) } else { oracle::random_point(src, k) };
        if let Some(vals) = oracle::oracle_point(&field, target, f, &pt) {
            if let Some((j, v)) = vals.iter().enumerate().find(|(_, v)| **v != crate::algebra::int(0)) {
                return CheckRecord::fail(id, subject, v.to_string())
                    .with_detail(format!("nonzero residual in component {} at an oracle point", phase_labels()[j]));
            }
            break;
        }
    }
    match pushforward_residuals(src, &field, target, f, meter) {
        Ok(res) => residual_record(id, subject, &phase_labels(), &res),
        Err(h) => h.record(id, subject),
    }
}

/// Runs `body` under a fresh meter and stamps the elapsed time.
pub(crate) fn timed<F>(budget: &Budget, body: F) -> CheckRecord
where
    F: FnOnce(&Meter<'_>) -> CheckRecord,
{
    let meter = budget.start();
    let r = body(&meter);
    meter.finish(r)
}
