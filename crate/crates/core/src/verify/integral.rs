use alloc::format;

use crate::algebra::{Fraction, Var};
use crate::report::{Budget, CheckRecord, VerificationReport};
use crate::systems::{h1_first_integral, system, SystemName};

use super::timed;

/// `t H1 = I` and `dI/dt = 0` along the `H1` flow, both exactly.
pub fn check_first_integral(budget: &Budget) -> VerificationReport {
    let sys = system(SystemName::H1);
    let i = Fraction::from_poly(h1_first_integral());
    let mut rep = VerificationReport::new();

    rep.push(timed(budget, |_| {
        let id = "integral.h1.identity";
        let th = &Fraction::var(Var::T) * &sys.hamiltonian;
        let r = sys.reduce(&(&th - &i));
        if r.is_zero() {
            CheckRecord::pass(id, "H1")
        } else {
            CheckRecord::fail(id, "H1", format!("{r}")).with_detail("t*H1 - I is not zero")
        }
    }));

    rep.push(timed(budget, |_| {
        let id = "integral.h1.flow";
        let f = sys.vector_field();
        let d = &(&(&i.derivative(Var::Q) * f.component(Var::Q)) + &(&i.derivative(Var::P) * f.component(Var::P)))
            + &i.derivative(Var::T);
        let r = sys.reduce(&d);
        if r.is_zero() {
            CheckRecord::pass(id, "H1")
        } else {
            CheckRecord::fail(id, "H1", format!("{r}")).with_detail("derivative of I along the flow is not zero")
        }
    }));
    rep
}
