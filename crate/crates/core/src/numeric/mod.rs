//! Floating-point shadows of the exact checks: adaptive integration of the
//! catalog systems and trajectory residuals of maps between them.
//!
//! Phase variables are complex and time stays on a real ray that avoids
//! the fixed singularity at `t = 0`.

mod compile;
mod dopri;
mod shadow;

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::rational::to_f64;
use crate::systems::HamiltonSystem;

pub use compile::{CompiledField, CompiledFraction, CompiledMap, Point};
pub use dopri::{integrate, integrate_sampled, Trajectory};
pub use shadow::{
    check_h1_integral, check_numeric_suite, h1_integral_drift, residual_under_map, residual_with_step, NumericConfig, DEFAULT_POLE_FLOOR,
    FD_STEP,
};

#[derive(Clone, Copy, Debug, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("invalid integration interval [{t0}, {t1}] or tolerance")]
    InvalidInterval { t0: f64, t1: f64 },
    #[error("step size underflow at t = {t}")]
    SingularityEncountered { t: f64 },
    #[error("map denominator {magnitude:e} below the floor at t = {t}")]
    PoleProximity { t: f64, magnitude: f64 },
}

fn disc_point(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * Float::sqrt(rng.gen::<f64>());
    let a = core::f64::consts::TAU * rng.gen::<f64>();
    Complex64::from_polar(r, a)
}

/// `1 + u` per coordinate, `u` uniform in the unit disc.
pub fn seeded_state(seed: u64) -> [Complex64; 6] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    core::array::from_fn(|_| Complex64::new(1.0, 0.0) + disc_point(&mut rng, 1.0))
}

/// Complex parameters from the disc of radius 1/2, the eliminated one
/// solved from the normalization.
pub fn seeded_params(sys: &HamiltonSystem, seed: u64) -> [Complex64; 6] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9a7a_3e7e_5eed);
    let mut a: [Complex64; 6] = core::array::from_fn(|_| disc_point(&mut rng, 0.5));
    complete_params(sys, &mut a);
    a
}

/// Overwrites the eliminated parameter so that `a` satisfies the
/// normalization.
pub fn complete_params(sys: &HamiltonSystem, a: &mut [Complex64; 6]) {
    let e = sys.eliminated_param;
    let c: Vec<f64> = sys.constraint.coeffs.iter().map(to_f64).collect();
    let mut rest = Complex64::new(to_f64(&sys.constraint.constant), 0.0);
    for i in (0..6).filter(|i| *i != e) {
        rest -= a[i] * c[i];
    }
    a[e] = rest / c[e];
}
