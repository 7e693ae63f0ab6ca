use alloc::format;
use alloc::string::ToString;

use crate::algebra::{AlgebraError, Fraction, Var, VarSet, PHASE};
use crate::report::{Budget, CheckRecord, Meter, VerificationReport};
use crate::systems::{system, HamiltonSystem};
use crate::weyl::{chart_names, get_chart, Chart, GroupId};

use super::{phase_labels, timed, Halt};

fn phase_set() -> VarSet {
    PHASE.iter().copied().collect()
}

fn transformed_metered(sys: &HamiltonSystem, chart: &Chart, meter: &Meter<'_>) -> Result<[Fraction; 6], Halt> {
    let field = sys.vector_field();
    let back = chart.backward_map();
    let mut out: [Fraction; 6] = core::array::from_fn(|_| Fraction::zero());
    for (j, phi) in chart.forward.iter().enumerate() {
        let mut g = phi.derivative(Var::T);
        for v in PHASE {
            let fv = &field.components[v.index()];
            if fv.is_zero() || !phi.support().contains(v) {
                continue;
            }
            g = &g + &(&phi.derivative(v) * fv);
        }
        meter.check(g.size())?;
        out[j] = sys.reduce(&back.apply(&g)?);
        meter.check(out[j].size())?;
    }
    Ok(out)
}

/// Time derivatives of the chart coordinates written in the chart
/// coordinates: `(sum_v dphi_j/dv F_v + dphi_j/dt) o backward`.
pub fn transformed_field(sys: &HamiltonSystem, chart: &Chart) -> Result<[Fraction; 6], AlgebraError> {
    let budget = Budget { monomial_cap: usize::MAX, ..Budget::default() };
    match transformed_metered(sys, chart, &budget.start()) {
        Ok(f) => Ok(f),
        Err(Halt::Algebra(e)) => Err(e),
        Err(Halt::Budget(_)) => unreachable!("uncapped budget"),
    }
}

fn chart_record(sys: &HamiltonSystem, chart: &Chart, id: &str, budget: &Budget) -> CheckRecord {
    let subject = format!("{}:{}", sys.name, chart.name);
    timed(budget, |meter| match transformed_metered(sys, chart, meter) {
        Ok(g) => {
            let labels = phase_labels();
            for (j, c) in g.iter().enumerate() {
                if !c.denom().free_of(phase_set()) {
                    return CheckRecord::fail(id, &subject, c.to_string())
                        .with_detail(format!("component {} has denominator {}", labels[j], c.denom()));
                }
            }
            CheckRecord::pass(id, &subject)
        }
        Err(h) => h.record(id, &subject),
    })
}

/// Polynomiality of the transformed field in every chart of the group, plus
/// the identity chart and each chart's stored inverse.
pub fn check_holomorphy(group: GroupId, budget: &Budget) -> VerificationReport {
    let sys = system(group.system());
    let mut rep = VerificationReport::new();
    if chart_names(group).is_empty() {
        return rep;
    }
    rep.push(chart_record(&sys, &Chart::identity(group), &format!("holomorphy.{group}.id"), budget));
    for name in chart_names(group) {
        let id = format!("holomorphy.{group}.{name}");
        let rt = format!("{id}.round_trip");
        match get_chart(group, name) {
            Ok(c) => {
                rep.push(chart_record(&sys, &c, &id, budget));
                rep.push(timed(budget, |_| match c.round_trip() {
                    Ok(true) => CheckRecord::pass(&rt, name),
                    Ok(false) => CheckRecord::fail(&rt, name, "forward o backward is not the identity"),
                    Err(e) => CheckRecord::fail(&rt, name, e.to_string()),
                }));
            }
            Err(e) => {
                rep.push(CheckRecord::fail(&id, name, e.to_string()));
                rep.push(CheckRecord::fail(&rt, name, e.to_string()));
            }
        }
    }
    rep
}
