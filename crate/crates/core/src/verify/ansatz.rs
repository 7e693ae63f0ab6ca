//! Generic degree-4 Hamiltonians constrained by the holomorphy charts.
//!
//! Parameters are specialized to rationals. Every elementary chart stage
//! has monomial denominators in its backward map, so the transformed
//! fields are Laurent polynomials and polynomiality is the vanishing of
//! their polar coefficients. A two-stage chart is processed inner stage
//! first; its inner stage is always a chart of the group in its own right,
//! so on the solution set the inner field is already polynomial and only
//! its polynomial part is carried into the outer stage.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::linsolve::{AffineSolution, Equation, SparseSystem, SparseVec};
use crate::algebra::{int, rat, Fraction, Polynomial, Rational, Var, PARAMS, PHASE};
use crate::report::{Budget, CheckRecord, Exhausted, Meter, VerificationReport};
use crate::systems::{system, HamiltonSystem};
use crate::weyl::{chart_names, chart_stages, get_chart, Chart, GroupId};

use super::holomorphy::transformed_field;
use super::{timed, VerifyError};

mod laurent {
    use alloc::collections::BTreeMap;
    use alloc::vec::Vec;

    use num_traits::{One, Zero};

    use crate::algebra::{Fraction, Polynomial, Rational, VAR_COUNT};

    /// Exponents of `x, y, z, w, q, p, t`.
    pub type Exps = [i16; 7];

    #[derive(Clone, Debug, Default, PartialEq)]
    pub struct Laurent(pub BTreeMap<Exps, Rational>);

    impl Laurent {
        pub fn zero() -> Laurent {
            Laurent(BTreeMap::new())
        }

        pub fn term(e: Exps, c: Rational) -> Laurent {
            let mut m = BTreeMap::new();
            if !c.is_zero() {
                m.insert(e, c);
            }
            Laurent(m)
        }

        pub fn one() -> Laurent {
            Laurent::term([0; 7], Rational::one())
        }

        pub fn len(&self) -> usize {
            self.0.len()
        }

        pub fn is_zero(&self) -> bool {
            self.0.is_empty()
        }

        pub fn add_scaled(&mut self, other: &Laurent, s: &Rational) {
            for (e, c) in &other.0 {
                let v = self.0.entry(*e).or_insert_with(Rational::zero);
                *v += c * s;
                if v.is_zero() {
                    self.0.remove(e);
                }
            }
        }

        pub fn add(&mut self, other: &Laurent) {
            self.add_scaled(other, &Rational::one());
        }

        pub fn mul(&self, other: &Laurent) -> Laurent {
            let mut out: BTreeMap<Exps, Rational> = BTreeMap::new();
            for (e1, c1) in &self.0 {
                for (e2, c2) in &other.0 {
                    let e: Exps = core::array::from_fn(|i| e1[i] + e2[i]);
                    let v = out.entry(e).or_insert_with(Rational::zero);
                    *v += c1 * c2;
                }
            }
            out.retain(|_, c| !c.is_zero());
            Laurent(out)
        }

        pub fn derivative(&self, v: usize) -> Laurent {
            let mut out = BTreeMap::new();
            for (e, c) in &self.0 {
                if e[v] != 0 {
                    let mut d = *e;
                    d[v] -= 1;
                    out.insert(d, c * Rational::from_integer(e[v].into()));
                }
            }
            Laurent(out)
        }

        fn as_monomial(&self) -> Option<(Exps, &Rational)> {
            if self.0.len() == 1 {
                self.0.iter().next().map(|(e, c)| (*e, c))
            } else {
                None
            }
        }

        fn is_polar(e: &Exps) -> bool {
            e[..6].iter().any(|x| *x < 0)
        }

        /// `(polynomial part, polar part)` with respect to the phase variables.
        pub fn split(&self) -> (Laurent, Laurent) {
            let (polar, poly): (BTreeMap<_, _>, BTreeMap<_, _>) =
                self.0.iter().map(|(e, c)| (*e, c.clone())).partition(|(e, _)| Laurent::is_polar(e));
            (Laurent(poly), Laurent(polar))
        }

        pub fn from_poly(p: &Polynomial) -> Option<Laurent> {
            let mut out = BTreeMap::new();
            for (m, c) in p.terms() {
                let ex: [u8; VAR_COUNT] = m.exponents();
                if ex[7..].iter().any(|e| *e != 0) {
                    return None;
                }
                out.insert(core::array::from_fn(|i| ex[i] as i16), c.clone());
            }
            Some(Laurent(out))
        }

        /// Fractions whose denominator is a single term.
        pub fn from_fraction(f: &Fraction) -> Option<Laurent> {
            let num = Laurent::from_poly(f.numer())?;
            let den = Laurent::from_poly(f.denom())?;
            let (e, c) = den.as_monomial()?;
            let inv = Laurent::term(core::array::from_fn(|i| -e[i]), c.recip());
            Some(num.mul(&inv))
        }
    }

    /// Cached powers of the images of the six phase variables.
    pub struct Substitution {
        images: [Laurent; 6],
        powers: [Vec<Laurent>; 6],
    }

    impl Substitution {
        pub fn new(images: [Laurent; 6]) -> Substitution {
            Substitution { images, powers: core::array::from_fn(|_| alloc::vec![Laurent::one()]) }
        }

        fn power(&mut self, v: usize, e: i16) -> Option<Laurent> {
            if e >= 0 {
                let e = e as usize;
                while self.powers[v].len() <= e {
                    let next = self.powers[v].last().unwrap().mul(&self.images[v]);
                    self.powers[v].push(next);
                }
                return Some(self.powers[v][e].clone());
            }
            // Negative powers only of monomial images.
            let (m, c) = self.images[v].as_monomial()?;
            let k = -e;
            let mut inv = c.recip();
            inv = num_traits::pow(inv, k as usize);
            Some(Laurent::term(core::array::from_fn(|i| -m[i] * k), inv))
        }

        /// `None` if a negative power of a non-monomial image is needed.
        pub fn apply(&mut self, l: &Laurent) -> Option<Laurent> {
            let mut out = Laurent::zero();
            for (e, c) in &l.0 {
                let mut term = Laurent::term([0, 0, 0, 0, 0, 0, e[6]], c.clone());
                for v in 0..6 {
                    if e[v] != 0 {
                        term = term.mul(&self.power(v, e[v])?);
                    }
                }
                out.add(&term);
            }
            Some(out)
        }
    }
}

use laurent::{Exps, Laurent, Substitution};

/// Inclusive range of `t` exponents in the ansatz.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TWindow {
    pub min: i32,
    pub max: i32,
}

impl Default for TWindow {
    fn default() -> Self {
        TWindow { min: -1, max: 1 }
    }
}

impl TWindow {
    pub fn len(&self) -> usize {
        (self.max - self.min + 1).max(0) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Unknown coefficient of `monomial * t^t_power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisElement {
    /// Exponents of `x, y, z, w, q, p`.
    pub monomial: [u8; 6],
    pub t_power: i32,
}

impl BasisElement {
    pub fn degree(&self) -> u32 {
        self.monomial.iter().map(|e| *e as u32).sum()
    }

    fn polynomial(&self) -> Polynomial {
        let mut p = Polynomial::one();
        for (i, e) in self.monomial.iter().enumerate() {
            if *e > 0 {
                p = &p * &Polynomial::var(PHASE[i]).pow(*e as u32);
            }
        }
        p
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, e) in self.monomial.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("{}", PHASE[i])),
                _ => parts.push(format!("{}^{e}", PHASE[i])),
            }
        }
        match self.t_power {
            0 => {}
            1 => parts.push("t".to_string()),
            k => parts.push(format!("t^{k}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Phase monomials of total degree at most 4, by degree then exponents.
fn phase_monomials() -> Vec<[u8; 6]> {
    let mut out = Vec::new();
    for d in 0..=4u8 {
        let mut cur = [0u8; 6];
        fill(&mut out, &mut cur, 0, d);
    }
    out
}

fn fill(out: &mut Vec<[u8; 6]>, cur: &mut [u8; 6], pos: usize, left: u8) {
    if pos == 5 {
        cur[5] = left;
        out.push(*cur);
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(out, cur, pos + 1, left - e);
    }
    cur[pos] = 0;
}

/// Solution space of the holomorphy conditions at one parameter point.
#[derive(Clone, Debug)]
pub struct AnsatzSpace {
    pub group: GroupId,
    pub params: [Rational; 6],
    pub window: TWindow,
    pub basis: Vec<BasisElement>,
    /// Charts whose conditions were imposed.
    pub charts: Vec<String>,
    pub equations: SparseSystem,
    /// Whether the conditions have no constant part, so that the zero
    /// Hamiltonian satisfies them.
    pub homogeneous: bool,
    /// `None` when the conditions are inconsistent.
    pub solution: Option<AffineSolution>,
}

impl AnsatzSpace {
    pub fn dimension(&self) -> Option<usize> {
        self.solution.as_ref().map(|s| s.dimension())
    }

    pub fn index_of(&self, b: &BasisElement) -> Option<usize> {
        self.basis.iter().position(|e| e == b)
    }

    pub fn contains(&self, coeffs: &[Rational]) -> bool {
        self.solution.is_some() && self.equations.satisfied_by(coeffs)
    }

    pub fn admits_direction(&self, v: &SparseVec) -> bool {
        self.equations.direction_allowed(v)
    }

    /// Directions `t^k` for every `k` in the window.
    pub fn t_only_directions(&self) -> Vec<SparseVec> {
        (self.window.min..=self.window.max)
            .filter_map(|k| self.index_of(&BasisElement { monomial: [0; 6], t_power: k }))
            .map(|i| alloc::vec![(i, Rational::one())])
            .collect()
    }

    /// The Hamiltonian with the given coefficients.
    pub fn hamiltonian(&self, coeffs: &[Rational]) -> Fraction {
        let mut num = Polynomial::zero();
        let lift = (-self.window.min).max(0);
        for (b, c) in self.basis.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            let t = Polynomial::var(Var::T).pow((b.t_power + lift) as u32);
            num = &num + &(&b.polynomial() * &t).scale(c);
        }
        Fraction::new(num, Polynomial::var(Var::T).pow(lift as u32)).expect("t power is nonzero")
    }

    /// Substitutes the particular solution, and the particular solution
    /// plus every basis direction, back into the exact chart transform and
    /// checks polynomiality there.
    pub fn round_trip(&self) -> Result<bool, VerifyError> {
        let Some(sol) = &self.solution else { return Ok(true) };
        let mut generic = sol.particular.clone();
        for v in &sol.basis {
            for (j, c) in v {
                generic[*j] += c;
            }
        }
        let charts = specialized_charts(self.group, &self.params, &self.charts)?;
        for coeffs in [&sol.particular, &generic] {
            if !self.equations.satisfied_by(coeffs) {
                return Ok(false);
            }
            let sys = HamiltonSystem::with_hamiltonian(self.group.system(), self.hamiltonian(coeffs));
            for chart in &charts {
                for c in transformed_field(&sys, chart)? {
                    if !c.denom().free_of(PHASE.iter().copied().collect()) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

fn param_values(params: &[Rational; 6]) -> Vec<(Var, Rational)> {
    PARAMS.iter().copied().zip(params.iter().cloned()).collect()
}

fn specialize6(f: &[Fraction; 6], vals: &[(Var, Rational)]) -> Result<[Fraction; 6], VerifyError> {
    let mut out: [Fraction; 6] = core::array::from_fn(|_| Fraction::zero());
    for (i, c) in f.iter().enumerate() {
        out[i] = c
            .specialize(vals)
            .ok_or_else(|| VerifyError::ConstraintViolated("chart degenerates at these parameters".to_string()))?;
    }
    Ok(out)
}

fn specialized_charts(group: GroupId, params: &[Rational; 6], names: &[String]) -> Result<Vec<Chart>, VerifyError> {
    let vals = param_values(params);
    names
        .iter()
        .map(|n| {
            let mut c = get_chart(group, n)?;
            c.forward = specialize6(&c.forward, &vals)?;
            c.backward = specialize6(&c.backward, &vals)?;
            Ok(c)
        })
        .collect()
}

/// Coefficients of the catalog Hamiltonian at `params` in the ansatz basis;
/// `None` if it has terms outside the basis.
pub fn catalog_coefficients(group: GroupId, params: &[Rational; 6], window: TWindow) -> Option<Vec<Rational>> {
    let h = system(group.system()).hamiltonian.specialize(&param_values(params))?;
    let l = Laurent::from_fraction(&h)?;
    let basis = basis_for(window);
    let mut out = alloc::vec![Rational::zero(); basis.len()];
    for (e, c) in &l.0 {
        if e[..6].iter().any(|x| *x < 0) {
            return None;
        }
        let b = BasisElement { monomial: core::array::from_fn(|i| e[i] as u8), t_power: e[6] as i32 };
        let i = basis.iter().position(|x| *x == b)?;
        out[i] = c.clone();
    }
    Some(out)
}

fn basis_for(window: TWindow) -> Vec<BasisElement> {
    let mut out = Vec::new();
    for m in phase_monomials() {
        for k in window.min..=window.max {
            out.push(BasisElement { monomial: m, t_power: k });
        }
    }
    out
}

/// A chart stage compiled to Laurent data at fixed parameters.
struct Stage {
    /// `dphi_j / dv`.
    jac: [[Laurent; 6]; 6],
    /// `dphi_j / dt`.
    dt: [Laurent; 6],
    back: Substitution,
}

fn compile_stage(chart: &Chart, vals: &[(Var, Rational)]) -> Result<Stage, VerifyError> {
    let bad = || VerifyError::ConstraintViolated(format!("chart stage {} is not a Laurent change", chart.name));
    let fwd = specialize6(&chart.forward, vals)?;
    let bwd = specialize6(&chart.backward, vals)?;
    let mut phi: Vec<Laurent> = Vec::with_capacity(6);
    for f in &fwd {
        phi.push(Laurent::from_fraction(f).ok_or_else(bad)?);
    }
    let mut images: [Laurent; 6] = core::array::from_fn(|_| Laurent::zero());
    for (i, b) in bwd.iter().enumerate() {
        images[i] = Laurent::from_fraction(b).ok_or_else(bad)?;
    }
    Ok(Stage {
        jac: core::array::from_fn(|j| core::array::from_fn(|v| phi[j].derivative(v))),
        dt: core::array::from_fn(|j| phi[j].derivative(6)),
        back: Substitution::new(images),
    })
}

impl Stage {
    /// The field in the stage's coordinates; `with_dt` adds `dphi/dt`.
    fn transform(&mut self, field: &[Laurent; 6], with_dt: bool, meter: &Meter<'_>) -> Result<[Laurent; 6], Halt> {
        let mut out: [Laurent; 6] = core::array::from_fn(|_| Laurent::zero());
        for j in 0..6 {
            let mut g = if with_dt { self.dt[j].clone() } else { Laurent::zero() };
            for v in 0..6 {
                if field[v].is_zero() || self.jac[j][v].is_zero() {
                    continue;
                }
                g.add(&self.jac[j][v].mul(&field[v]));
            }
            meter.check(g.len())?;
            out[j] = self.back.apply(&g).ok_or(Halt::NotLaurent)?;
            meter.check(out[j].len())?;
        }
        Ok(out)
    }
}

enum Halt {
    Budget(Exhausted),
    NotLaurent,
}

impl From<Exhausted> for Halt {
    fn from(e: Exhausted) -> Halt {
        Halt::Budget(e)
    }
}

/// Hamiltonian field of `m * t^0` for the pairs `(x,y)`, `(z,w)`, `(q,p)`.
fn monomial_field(m: &[u8; 6]) -> [Laurent; 6] {
    let h = Laurent::term(core::array::from_fn(|i| if i < 6 { m[i] as i16 } else { 0 }), Rational::one());
    let mut f: [Laurent; 6] = core::array::from_fn(|_| Laurent::zero());
    for pair in 0..3 {
        let (c, p) = (2 * pair, 2 * pair + 1);
        f[c] = h.derivative(p);
        f[p].add_scaled(&h.derivative(c), &int(-1));
    }
    f
}

/// Polar coefficients keyed by `(condition block, component, exponents)`.
type Conditions = BTreeMap<(usize, usize, Exps), Vec<(usize, Rational)>>;

fn record_polar(out: &mut Conditions, block: usize, g: &[Laurent; 6], col: Option<(usize, usize, &TWindow)>, rhs: &mut BTreeMap<(usize, usize, Exps), Rational>) {
    for (j, comp) in g.iter().enumerate() {
        let (_, polar) = comp.split();
        for (e, c) in &polar.0 {
            match col {
                Some((m, nk, w)) => {
                    for (ki, k) in (w.min..=w.max).enumerate() {
                        let mut s = *e;
                        s[6] += k as i16;
                        out.entry((block, j, s)).or_default().push((m * nk + ki, c.clone()));
                    }
                }
                None => {
                    let v = rhs.entry((block, j, *e)).or_insert_with(Rational::zero);
                    *v -= c;
                }
            }
        }
    }
}

fn poly_part(g: &[Laurent; 6]) -> [Laurent; 6] {
    core::array::from_fn(|j| g[j].split().0)
}

/// Ansatz restricted to the named charts of the group.
pub fn solve_on_charts(
    group: GroupId,
    params: &[Rational; 6],
    window: TWindow,
    charts: &[&str],
    budget: &Budget,
) -> Result<Result<AnsatzSpace, Exhausted>, VerifyError> {
    let sys = system(group.system());
    if !sys.constraint.is_satisfied(params) {
        return Err(VerifyError::ConstraintViolated(format!(
            "{} evaluates to {} instead of {}",
            sys.constraint,
            crate::algebra::rational::fmt_rational(&sys.constraint.evaluate(params)),
            crate::algebra::rational::fmt_rational(&sys.constraint.constant)
        )));
    }
    let vals = param_values(params);
    let monomials = phase_monomials();
    let basis = basis_for(window);
    let nk = window.len();
    let meter = budget.start();
    let mut conds: Conditions = BTreeMap::new();
    let mut rhs: BTreeMap<(usize, usize, Exps), Rational> = BTreeMap::new();
    let fields: Vec<[Laurent; 6]> = monomials.iter().map(monomial_field).collect();
    let mut block = 0;
    for name in charts {
        let stages = chart_stages(group, name)
            .ok_or_else(|| crate::weyl::WeylError::UnknownChart { group: group.to_string(), name: name.to_string() })?;
        let mut compiled: Vec<Stage> = Vec::new();
        for st in stages.iter().rev() {
            compiled.push(compile_stage(st, &vals)?);
        }
        let not_laurent =
            || VerifyError::ConstraintViolated(format!("chart {name} needs a non-monomial inverse power"));
        for (m, f) in fields.iter().enumerate() {
            let mut cur = f.clone();
            for (s, st) in compiled.iter_mut().enumerate() {
                let g = match st.transform(&cur, false, &meter) {
                    Ok(g) => g,
                    Err(Halt::Budget(e)) => return Ok(Err(e)),
                    Err(Halt::NotLaurent) => return Err(not_laurent()),
                };
                record_polar(&mut conds, block + s, &g, Some((m, nk, &window)), &mut rhs);
                cur = poly_part(&g);
            }
        }
        let mut cur: [Laurent; 6] = core::array::from_fn(|_| Laurent::zero());
        for (s, st) in compiled.iter_mut().enumerate() {
            let g = match st.transform(&cur, true, &meter) {
                Ok(g) => g,
                Err(Halt::Budget(e)) => return Ok(Err(e)),
                Err(Halt::NotLaurent) => return Err(not_laurent()),
            };
            record_polar(&mut conds, block + s, &g, None, &mut rhs);
            cur = poly_part(&g);
        }
        block += compiled.len();
        if let Err(e) = meter.check(conds.len()) {
            return Ok(Err(e));
        }
    }
    let homogeneous = rhs.values().all(|v| v.is_zero());
    let mut equations = SparseSystem::new(basis.len());
    let mut keys: Vec<_> = conds.keys().copied().collect();
    keys.extend(rhs.keys().copied().filter(|k| !conds.contains_key(k)));
    keys.sort();
    for k in keys {
        let row = conds.remove(&k).unwrap_or_default();
        let b = rhs.remove(&k).unwrap_or_else(Rational::zero);
        equations.push(Equation::new(row, b));
    }
    let solution = equations.solve();
    Ok(Ok(AnsatzSpace {
        group,
        params: params.clone(),
        window,
        basis,
        charts: charts.iter().map(|s| s.to_string()).collect(),
        equations,
        homogeneous,
        solution,
    }))
}

/// The ansatz under every chart of the group, within an uncapped budget.
pub fn solve_holomorphy_ansatz(group: GroupId, params: &[Rational; 6], window: TWindow) -> Result<AnsatzSpace, VerifyError> {
    let budget = Budget { monomial_cap: usize::MAX, ..Budget::default() };
    let names = chart_names(group);
    match solve_on_charts(group, params, window, &names, &budget)? {
        Ok(space) => Ok(space),
        Err(_) => unreachable!("uncapped budget"),
    }
}

fn splitmix(z: &mut u64) -> u64 {
    *z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut x = *z;
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Parameter points on the group's normalization. Seed 0 is
/// `(1/7, 2/7, 1/14, *, 1/7, 1/7)` completed through the normalization;
/// other seeds draw small rationals.
pub fn seeded_params(group: GroupId, seed: u64) -> [Rational; 6] {
    let sys = system(group.system());
    let alpha: [Rational; 6] = if seed == 0 {
        [rat(1, 7), rat(2, 7), rat(1, 14), int(0), rat(1, 7), rat(1, 7)]
    } else {
        let mut s = seed.wrapping_mul(0x2545_f491_4f6c_dd1d);
        core::array::from_fn(|_| {
            let n = (splitmix(&mut s) % 41) as i64 - 20;
            let d = (splitmix(&mut s) % 23) as i64 + 1;
            rat(n, d)
        })
    };
    sys.admissible_params(&alpha)
}

/// Membership of the catalog Hamiltonian, admissibility of the `t`-only
/// directions and the round trip, at three seeded parameter points.
pub fn check_ansatz_suite(group: GroupId, base_seed: u64, budget: &Budget) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let names = chart_names(group);
    if names.is_empty() {
        return rep;
    }
    for k in 0..3u64 {
        let seed = base_seed.wrapping_add(k);
        let id = format!("ansatz.{group}.seed{k}");
        let params = seeded_params(group, seed);
        let subject = format!("{}@seed{seed}", group.system());
        let window = TWindow::default();
        let mut dimension: Option<usize> = None;
        let rec = timed(budget, |_| match solve_on_charts(group, &params, window, &names, budget) {
            Err(e) => CheckRecord::fail(&id, &subject, e.to_string()),
            Ok(Err(e)) => CheckRecord::indeterminate(&id, &subject, e.to_string()),
            Ok(Ok(space)) => {
                let Some(dim) = space.dimension() else {
                    return CheckRecord::fail(&id, &subject, "holomorphy conditions are inconsistent");
                };
                dimension = Some(dim);
                let Some(h) = catalog_coefficients(group, &params, window) else {
                    return CheckRecord::fail(&id, &subject, "catalog Hamiltonian lies outside the ansatz basis");
                };
                if !space.contains(&h) {
                    let bad = space.equations.equations.iter().find(|e| !e.residual(&h).is_zero());
                    let w = bad.map(|e| crate::algebra::rational::fmt_rational(&e.residual(&h))).unwrap_or_default();
                    return CheckRecord::fail(&id, &subject, w)
                        .with_detail("catalog Hamiltonian violates a holomorphy condition");
                }
                if !space.t_only_directions().iter().all(|d| space.admits_direction(d)) {
                    return CheckRecord::fail(&id, &subject, "a t-only direction is excluded");
                }
                match space.round_trip() {
                    Ok(true) => CheckRecord::pass(&id, &subject).with_detail(format!(
                        "dimension {dim}; {} unknowns, {} conditions",
                        space.basis.len(),
                        space.equations.equations.len()
                    )),
                    Ok(false) => CheckRecord::fail(&id, &subject, "a reported solution is not holomorphic"),
                    Err(e) => CheckRecord::fail(&id, &subject, e.to_string()),
                }
            }
        });
        rep.push(rec);
        let shown: Vec<String> = params.iter().map(crate::algebra::rational::fmt_rational).collect();
        rep.observe(format!("ansatz.{group}.seed{k}.params"), format!("({})", shown.join(", ")));
        if let Some(d) = dimension {
            rep.observe(format!("ansatz.{group}.seed{k}.dimension"), d.to_string());
        }
    }
    rep
}
