//! Evaluation oracle: exact residuals at rational points.
//!
//! A nonzero value refutes an identity outright; zero values are only
//! evidence, so the symbolic check always follows.

use alloc::vec::Vec;

use crate::algebra::{int, rat, Fraction, Rational, Var, PARAMS, PHASE, VAR_COUNT};
use crate::systems::{HamiltonSystem, VectorField};
use crate::weyl::ExtendedMap;

/// `(x, y, z, w, q, p, t) = (2, 3, 5, 7, 11, 13, 17)` with
/// `alpha = (1/2, 1/3, 1/5, 1/6, 1/7, 1/11)`, the eliminated parameter
/// replaced to satisfy the system's normalization.
pub fn reference_point(sys: &HamiltonSystem) -> [Rational; VAR_COUNT] {
    let mut pt: [Rational; VAR_COUNT] = core::array::from_fn(|_| int(0));
    for (v, n) in PHASE.iter().zip([2, 3, 5, 7, 11, 13]) {
        pt[v.index()] = int(n);
    }
    pt[Var::T.index()] = int(17);
    let alpha = [rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 6), rat(1, 7), rat(1, 11)];
    set_params(&mut pt, &sys.admissible_params(&alpha));
    pt
}

fn set_params(pt: &mut [Rational; VAR_COUNT], alpha: &[Rational; 6]) {
    for (v, a) in PARAMS.iter().zip(alpha) {
        pt[v.index()] = a.clone();
    }
}

fn splitmix(z: &mut u64) -> u64 {
    *z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut x = *z;
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seeded point with small rational coordinates on the normalization
/// hyperplane; `t` is kept nonzero.
pub fn random_point(sys: &HamiltonSystem, seed: u64) -> [Rational; VAR_COUNT] {
    let mut s = seed ^ 0x51_7cc1_b727_220a;
    let next = |s: &mut u64| {
        let n = (splitmix(s) % 101) as i64 - 50;
        let d = (splitmix(s) % 29) as i64 + 1;
        rat(n, d)
    };
    let mut pt: [Rational; VAR_COUNT] = core::array::from_fn(|_| int(0));
    for v in PHASE {
        pt[v.index()] = next(&mut s);
    }
    let mut t = next(&mut s);
    while t == int(0) {
        t = next(&mut s);
    }
    pt[Var::T.index()] = t;
    let alpha: [Rational; 6] = core::array::from_fn(|_| next(&mut s));
    set_params(&mut pt, &sys.admissible_params(&alpha));
    pt
}

/// Pushforward residuals evaluated at `pt`; `None` when a pole is hit.
pub fn oracle_point(
    field: &VectorField,
    target: &VectorField,
    f: &ExtendedMap,
    pt: &[Rational; VAR_COUNT],
) -> Option<Vec<Rational>> {
    let image = f.evaluate(pt)?;
    let eps = f.time.derivative(Var::T).evaluate(pt)?;
    let fv: Vec<Rational> = PHASE
        .iter()
        .map(|v| field.components[v.index()].evaluate(pt))
        .collect::<Option<Vec<_>>>()?;
    let mut out = Vec::with_capacity(6);
    for (j, phi) in f.phase.iter().enumerate() {
        let mut lhs = phi.derivative(Var::T).evaluate(pt)?;
        for (k, v) in PHASE.iter().enumerate() {
            if fv[k] == int(0) || !phi.support().contains(*v) {
                continue;
            }
            lhs += phi.derivative(*v).evaluate(pt)? * &fv[k];
        }
        let g: &Fraction = &target.components[j];
        let rhs = if g.is_zero() { int(0) } else { &eps * g.evaluate(&image)? };
        out.push(lhs - rhs);
    }
    Some(out)
}
