//! Dormand-Prince 5(4) with the standard continuous extension.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use super::compile::{CompiledField, Point};
use super::NumericError;

type State = [Complex64; 6];

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

const MAX_STEPS: usize = 200_000;

/// One accepted step with its interpolation data.
#[derive(Clone, Debug)]
struct Segment {
    t: f64,
    h: f64,
    r: [State; 5],
}

impl Segment {
    fn eval(&self, t: f64) -> State {
        let th = (t - self.t) / self.h;
        let th1 = 1.0 - th;
        core::array::from_fn(|i| {
            let r = &self.r;
            r[0][i] + (r[1][i] + (r[2][i] + (r[3][i] + r[4][i] * th1) * th) * th1) * th
        })
    }
}

/// A numerically integrated solution with dense output.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub params: [Complex64; 6],
    /// `(t, state)` at the requested sample times, `t` strictly monotone.
    pub samples: Vec<(f64, State)>,
    pub tol: f64,
    /// Largest accepted local error estimate, in units of `tol`.
    pub max_error_ratio: f64,
    pub steps: usize,
    segments: Vec<Segment>,
}

impl Trajectory {
    pub fn t0(&self) -> f64 {
        self.segments.first().map(|s| s.t).unwrap_or(0.0)
    }

    pub fn t1(&self) -> f64 {
        self.segments.last().map(|s| s.t + s.h).unwrap_or(0.0)
    }

    /// Dense output at any `t` inside the integration interval.
    pub fn at(&self, t: f64) -> Option<State> {
        let forward = self.segments.first()?.h > 0.0;
        let idx = self.segments.partition_point(|s| if forward { s.t + s.h < t } else { s.t + s.h > t });
        let s = self.segments.get(idx)?;
        let (lo, hi) = if forward { (s.t, s.t + s.h) } else { (s.t + s.h, s.t) };
        let slack = 1e-12 * (1.0 + t.abs());
        if t < lo - slack || t > hi + slack {
            return None;
        }
        Some(s.eval(t))
    }

    pub fn last(&self) -> State {
        self.samples.last().expect("at least one sample").1
    }
}

fn axpy(y: &State, h: f64, terms: &[(f64, &State)]) -> State {
    core::array::from_fn(|i| {
        let mut s = Complex64::new(0.0, 0.0);
        for (c, k) in terms {
            s += k[i] * *c;
        }
        y[i] + s * h
    })
}

fn is_finite(y: &State) -> bool {
    y.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}

/// Reals-and-imaginaries RMS of `e` against the mixed tolerance scale.
fn error_norm(e: &State, y: &State, ynew: &State, tol: f64) -> f64 {
    let mut s = 0.0;
    for i in 0..6 {
        for (ev, a, b) in [(e[i].re, y[i].re, ynew[i].re), (e[i].im, y[i].im, ynew[i].im)] {
            let sc = tol + tol * a.abs().max(b.abs());
            s += (ev / sc) * (ev / sc);
        }
    }
    Float::sqrt(s / 12.0)
}

fn norm(y: &State) -> f64 {
    y.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Adaptive integration from `t0` to `t1` (same sign, `t0 != t1`), sampled
/// at `samples + 1` evenly spaced times including both ends. Every sample
/// is a step endpoint, so samples carry the integration error only.
pub fn integrate_sampled(
    field: &CompiledField,
    params: &[Complex64; 6],
    y0: &State,
    t0: f64,
    t1: f64,
    tol: f64,
    samples: usize,
) -> Result<Trajectory, NumericError> {
    if !(tol > 0.0) || !(t0 * t1 > 0.0) || t0 == t1 || samples == 0 {
        return Err(NumericError::InvalidInterval { t0, t1 });
    }
    let f = |t: f64, y: &State| field.eval(&Point { phase: *y, t, params: *params });
    let dir = if t1 > t0 { 1.0 } else { -1.0 };
    let span = (t1 - t0).abs();
    let mut t = t0;
    let mut y = *y0;
    let mut k1 = f(t, &y);
    if !is_finite(&k1) {
        return Err(NumericError::SingularityEncountered { t });
    }
    // Initial step from the size of the derivative.
    let d0 = norm(&y).max(1e-5);
    let d1 = norm(&k1).max(1e-5);
    let mut h = dir * (0.01 * d0 / d1).min(0.1 * span);
    let times: Vec<f64> = (0..=samples)
        .map(|i| if i == samples { t1 } else { t0 + (t1 - t0) * (i as f64) / (samples as f64) })
        .collect();
    let mut out: Vec<(f64, State)> = Vec::with_capacity(samples + 1);
    out.push((t0, y));
    let mut next = 1;
    let mut segments: Vec<Segment> = Vec::new();
    let mut max_ratio: f64 = 0.0;
    let mut rejected_last = false;
    let mut attempts = 0;
    while next <= samples {
        attempts += 1;
        if attempts > MAX_STEPS || h.abs() < 1e-14 * (1.0 + t.abs()) {
            return Err(NumericError::SingularityEncountered { t });
        }
        // Steps are clipped to land on every sample time.
        let hit = (t + h - times[next]) * dir >= 0.0;
        let step = if hit { times[next] - t } else { h };
        let k2 = f(t + C2 * step, &axpy(&y, step, &[(A21, &k1)]));
        let k3 = f(t + C3 * step, &axpy(&y, step, &[(A31, &k1), (A32, &k2)]));
        let k4 = f(t + C4 * step, &axpy(&y, step, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = f(t + C5 * step, &axpy(&y, step, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
        let ys = axpy(&y, step, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]);
        let k6 = f(t + step, &ys);
        let ynew = axpy(&y, step, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)]);
        let tnew = if hit { times[next] } else { t + step };
        let k7 = f(tnew, &ynew);
        let err_vec: State = core::array::from_fn(|i| {
            (k1[i] * E1 + k3[i] * E3 + k4[i] * E4 + k5[i] * E5 + k6[i] * E6 + k7[i] * E7) * step
        });
        let finite = is_finite(&ynew) && is_finite(&k7);
        let err = if finite { error_norm(&err_vec, &y, &ynew, tol) } else { f64::INFINITY };
        if err <= 1.0 {
            let r2: State = core::array::from_fn(|i| ynew[i] - y[i]);
            let r3: State = core::array::from_fn(|i| k1[i] * step - r2[i]);
            let r4: State = core::array::from_fn(|i| r2[i] - k7[i] * step - r3[i]);
            let r5: State = core::array::from_fn(|i| {
                (k1[i] * D1 + k3[i] * D3 + k4[i] * D4 + k5[i] * D5 + k6[i] * D6 + k7[i] * D7) * step
            });
            segments.push(Segment { t, h: step, r: [y, r2, r3, r4, r5] });
            max_ratio = max_ratio.max(err);
            t = tnew;
            y = ynew;
            k1 = k7;
            if hit {
                out.push((t, y));
                next += 1;
            }
            let grow = if err == 0.0 { 10.0 } else { (0.9 * Float::powf(err, -0.2)).clamp(0.2, 10.0) };
            let grow = if rejected_last { grow.min(1.0) } else { grow };
            // A clipped step says nothing about the natural step being too long.
            h = if hit { dir * h.abs().max((step * grow).abs()) } else { step * grow };
            rejected_last = false;
        } else {
            let shrink = if finite { (0.9 * Float::powf(err, -0.2)).clamp(0.1, 1.0) } else { 0.1 };
            h = step * shrink;
            rejected_last = true;
        }
    }
    Ok(Trajectory { params: *params, samples: out, tol, max_error_ratio: max_ratio, steps: segments.len(), segments })
}

/// [`integrate_sampled`] with 100 sample intervals.
pub fn integrate(
    field: &CompiledField,
    params: &[Complex64; 6],
    y0: &State,
    t0: f64,
    t1: f64,
    tol: f64,
) -> Result<Trajectory, NumericError> {
    integrate_sampled(field, params, y0, t0, t1, tol, 100)
}
