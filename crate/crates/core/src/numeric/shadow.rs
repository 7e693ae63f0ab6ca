//! Trajectory residuals of maps and the numeric suite.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::algebra::{rat, Fraction};
use crate::report::{Budget, CheckRecord, VerificationReport};
use crate::systems::{h1_first_integral, system, HamiltonSystem, SystemName};
use crate::verify::symmetry_subjects;
use crate::weyl::{compose_word, equivalences, get_map, ExtendedMap, GroupId};

use super::compile::{CompiledField, CompiledFraction, CompiledMap, Point};
use super::dopri::{integrate_sampled, Trajectory};
use super::{seeded_params, seeded_state, NumericError};

/// Smallest admissible map denominator magnitude along a trajectory.
pub const DEFAULT_POLE_FLOOR: f64 = 1e-8;
/// Target outer step of the extrapolated central difference.
pub const FD_STEP: f64 = 1e-3;

/// Settings of the numeric suite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericConfig {
    pub tol: f64,
    pub t0: f64,
    pub t1: f64,
    /// Sample intervals per trajectory.
    pub samples: usize,
    /// Trajectories required per check.
    pub trajectories: usize,
    /// Candidate trajectories tried before giving up.
    pub attempts: usize,
    pub threshold: f64,
    pub pole_floor: f64,
    /// Grid doublings allowed when the difference oracle is unresolved.
    pub refinements: usize,
}

impl Default for NumericConfig {
    fn default() -> NumericConfig {
        NumericConfig {
            tol: 1e-12,
            t0: 1.0,
            t1: 1.5,
            samples: 1000,
            trajectories: 3,
            attempts: 12,
            threshold: 1e-6,
            pole_floor: DEFAULT_POLE_FLOOR,
            refinements: 4,
        }
    }
}

/// Largest deviation, over interior samples of `traj`, between the
/// finite-difference derivative of the mapped samples and `eps` times the
/// target field at the mapped point.
///
/// The derivative combines five-point central differences at steps `h` and
/// `h/2` (Richardson), `h` the multiple of twice the sample spacing nearest
/// [`FD_STEP`]. Samples must be evenly spaced.
pub fn residual_under_map(
    target: &CompiledField,
    f: &CompiledMap,
    traj: &Trajectory,
    floor: f64,
) -> Result<f64, NumericError> {
    residual_with_step(target, f, traj, floor, FD_STEP)
}

/// [`residual_under_map`] with outer difference step near `step`.
pub fn residual_with_step(
    target: &CompiledField,
    f: &CompiledMap,
    traj: &Trajectory,
    floor: f64,
    step: f64,
) -> Result<f64, NumericError> {
    let n = traj.samples.len();
    if n < 2 {
        return Ok(0.0);
    }
    let spacing = traj.samples[1].0 - traj.samples[0].0;
    let stride = (Float::round(step / (2.0 * spacing.abs())) as usize).max(1);
    let h = 2.0 * stride as f64 * spacing;
    let mut images = Vec::with_capacity(n);
    for (t, y) in &traj.samples {
        let (img, smallest) = f.apply(&Point { phase: *y, t: *t, params: traj.params });
        if smallest < floor {
            return Err(NumericError::PoleProximity { t: *t, magnitude: smallest });
        }
        images.push(img);
    }
    let mut worst: f64 = 0.0;
    for i in 4 * stride..n.saturating_sub(4 * stride) {
        let at = |k: isize| &images[(i as isize + k * stride as isize) as usize].phase;
        let (m4, m2, m1, p1, p2, p4) = (at(-4), at(-2), at(-1), at(1), at(2), at(4));
        let g = target.eval(&images[i]);
        for j in 0..6 {
            let wide = (m4[j] - p4[j] + (p2[j] - m2[j]) * 8.0) / (12.0 * h);
            let narrow = (m2[j] - p2[j] + (p1[j] - m1[j]) * 8.0) / (6.0 * h);
            let d = (narrow * 16.0 - wide) / 15.0;
            worst = worst.max((d - g[j] * f.epsilon).norm());
        }
    }
    Ok(worst)
}

/// Starting value and largest drift of the `H1` first integral from
/// `(q, p, t) = (1, 1, 1)` to `t = 2` at `alpha0 = 1/3`, `alpha1 = 1/4`.
pub fn h1_integral_drift(tol: f64) -> Result<(f64, f64), NumericError> {
    let sys = system(SystemName::H1);
    let alpha = sys.admissible_params(&[rat(1, 3), rat(1, 4), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
    let params: [Complex64; 6] = core::array::from_fn(|i| Complex64::new(crate::algebra::rational::to_f64(&alpha[i]), 0.0));
    let field = CompiledField::new(&sys.vector_field());
    let y0 = [Complex64::new(1.0, 0.0); 6];
    let traj = integrate_sampled(&field, &params, &y0, 1.0, 2.0, tol, 20)?;
    let integral = CompiledFraction::new(&Fraction::from_poly(h1_first_integral()));
    let value = |t: f64, y: &[Complex64; 6]| integral.eval(&Point { phase: *y, t, params });
    let i0 = value(1.0, &y0);
    let drift = traj.samples.iter().map(|(t, y)| (value(*t, y) - i0).norm()).fold(0.0, f64::max);
    Ok((i0.re, drift))
}

/// `numeric.a1.h1_integral`: drift at most `1e-8` from the start value
/// `13/12`.
pub fn check_h1_integral(tol: f64, budget: &Budget) -> CheckRecord {
    let id = "numeric.a1.h1_integral";
    let meter = budget.start();
    let r = match h1_integral_drift(tol) {
        Ok((i0, drift)) => {
            let detail = format!("I(start) = {i0:.15}, drift {drift:.3e} at tol {tol:e}");
            if (i0 - 13.0 / 12.0).abs() > 1e-14 {
                CheckRecord::fail(id, "H1", format!("{i0:e}")).with_detail("unexpected start value")
            } else if drift <= 1e-8 {
                CheckRecord::pass(id, "H1").with_detail(detail)
            } else {
                CheckRecord::fail(id, "H1", format!("{drift:e}")).with_detail(detail)
            }
        }
        Err(e) => CheckRecord::fail(id, "H1", e.to_string()),
    };
    meter.finish(r)
}

/// Lazily integrated seeded trajectories of one system, each at several
/// grid resolutions.
struct Pool {
    sys: HamiltonSystem,
    field: CompiledField,
    base: u64,
    cfg: NumericConfig,
    cache: BTreeMap<(usize, usize), Result<Trajectory, NumericError>>,
}

impl Pool {
    fn new(name: SystemName, seed: u64, cfg: NumericConfig) -> Pool {
        let sys = system(name);
        let field = CompiledField::new(&sys.vector_field());
        let salt = name
            .as_str()
            .bytes()
            .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        Pool { sys, field, base: seed.wrapping_mul(0x2545_f491_4f6c_dd1d) ^ salt, cfg, cache: BTreeMap::new() }
    }

    /// Candidate `k` sampled on a grid `2^level` times finer than the
    /// configured one.
    fn get(&mut self, k: usize, level: usize) -> &Result<Trajectory, NumericError> {
        let (sys, field, base, c) = (&self.sys, &self.field, self.base, self.cfg);
        self.cache.entry((k, level)).or_insert_with(|| {
            let s = base.wrapping_add(k as u64);
            let params = seeded_params(sys, s);
            integrate_sampled(field, &params, &seeded_state(s), c.t0, c.t1, c.tol, c.samples << level)
        })
    }
}

/// Outcome of one candidate trajectory for one map.
enum Trial {
    /// Residual and the refinement level it was measured at.
    Measured(f64, usize),
    Skipped(NumericError),
}

fn trial(pool: &mut Pool, target: &CompiledField, cm: &CompiledMap, k: usize) -> Trial {
    let cfg = pool.cfg;
    let mut last = None;
    for level in 0..=cfg.refinements {
        match pool.get(k, level) {
            Ok(traj) => match residual_with_step(target, cm, traj, cfg.pole_floor, FD_STEP / (1u64 << level) as f64) {
                Ok(r) => {
                    last = Some((r, level));
                    if r <= cfg.threshold {
                        break;
                    }
                }
                Err(e) => return Trial::Skipped(e),
            },
            Err(e) => return if let Some((r, l)) = last { Trial::Measured(r, l) } else { Trial::Skipped(*e) },
        }
    }
    let (r, l) = last.expect("at least one level");
    Trial::Measured(r, l)
}

fn shadow_record(
    id: &str,
    subject: &str,
    pool: &mut Pool,
    target: &CompiledField,
    f: &ExtendedMap,
    budget: &Budget,
) -> CheckRecord {
    let meter = budget.start();
    let cfg = pool.cfg;
    let Some(cm) = CompiledMap::new(f) else {
        return meter.finish(CheckRecord::indeterminate(id, subject, "time component is not +t or -t"));
    };
    let mut used: Vec<String> = Vec::new();
    let mut skipped: Vec<String> = Vec::new();
    let mut worst: f64 = 0.0;
    for k in 0..cfg.attempts {
        if used.len() == cfg.trajectories {
            break;
        }
        match trial(pool, target, &cm, k) {
            Trial::Measured(r, level) => {
                worst = worst.max(r);
                used.push(format!("#{k}: {r:.1e} at {} samples", cfg.samples << level));
            }
            Trial::Skipped(e) => skipped.push(format!("#{k}: {e}")),
        }
    }
    let mut detail = format!(
        "max residual {worst:.3e} (tol {:e}, t in [{}, {}]; {})",
        cfg.tol,
        cfg.t0,
        cfg.t1,
        used.join(", ")
    );
    if !skipped.is_empty() {
        detail = format!("{detail}; skipped {}", skipped.join(", "));
    }
    let r = if used.len() < cfg.trajectories {
        CheckRecord::indeterminate(id, subject, detail)
    } else if worst <= cfg.threshold {
        CheckRecord::pass(id, subject).with_detail(detail)
    } else {
        CheckRecord::fail(id, subject, format!("{worst:e}")).with_detail(detail)
    };
    meter.finish(r)
}

/// Trajectory shadows of the group's symmetries and of the equivalences
/// into it; for `a1`, also the scalar relations and the `H1` integral.
/// `numeric.{g}.self` maps trajectories through the identity, measuring
/// the integrator and finite difference alone.
pub fn check_numeric_suite(group: GroupId, seed: u64, cfg: NumericConfig, budget: &Budget) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let mut pool = Pool::new(group.system(), seed, cfg);
    let own = pool.field.clone();
    let subject = group.system().as_str();
    rep.push(shadow_record(&format!("numeric.{group}.self"), subject, &mut pool, &own, &ExtendedMap::identity(), budget));
    for name in symmetry_subjects(group) {
        let f = get_map(group, name).expect("catalog subject");
        let id = format!("numeric.{group}.symmetry.{name}");
        rep.push(shadow_record(&id, &format!("{subject}:{name}"), &mut pool, &own, &f, budget));
    }
    for eq in equivalences().into_iter().filter(|e| e.target == group) {
        let mut src = Pool::new(eq.source.system(), seed, cfg);
        let tgt = CompiledField::new(&system(eq.target.system()).vector_field());
        let id = format!("numeric.{group}.equivalence.{}", eq.id);
        let subject = format!("{}->{}", eq.source.system(), eq.target.system());
        rep.push(shadow_record(&id, &subject, &mut src, &tgt, &eq.map, budget));
    }
    if group == GroupId::A1 {
        let mut h1 = Pool::new(SystemName::H1, seed, cfg);
        let relations: [(&str, &[&str], SystemName); 3] = [
            ("tr1", &["tr1"], SystemName::H2),
            ("tr2_tr1", &["tr2", "tr1"], SystemName::H3),
            ("tr3", &["tr3"], SystemName::H4),
        ];
        for (name, word, target) in relations {
            let maps: Vec<ExtendedMap> = word.iter().map(|n| get_map(group, n).expect("catalog map")).collect();
            let refs: Vec<&ExtendedMap> = maps.iter().collect();
            let f = compose_word(&refs).expect("substitution of catalog maps");
            let tgt = CompiledField::new(&system(target).vector_field());
            let id = format!("numeric.a1.relations.{name}");
            rep.push(shadow_record(&id, &format!("H1->{target}"), &mut h1, &tgt, &f, budget));
        }
        rep.push(check_h1_integral(cfg.tol, budget));
    }
    rep.observe(format!("numeric.{group}.seed"), seed.to_string());
    rep
}
