//! Exact expressions lowered to `f64`/complex term lists.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::algebra::rational::to_f64;
use crate::algebra::{Fraction, Polynomial, Var, PARAMS, PHASE, VAR_COUNT};
use crate::systems::VectorField;
use crate::weyl::ExtendedMap;

/// Point of the extended space: phase, time, parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub phase: [Complex64; 6],
    pub t: f64,
    pub params: [Complex64; 6],
}

impl Point {
    fn values(&self) -> [Complex64; VAR_COUNT] {
        let mut v = [Complex64::new(0.0, 0.0); VAR_COUNT];
        for (i, var) in PHASE.iter().enumerate() {
            v[var.index()] = self.phase[i];
        }
        v[Var::T.index()] = Complex64::new(self.t, 0.0);
        for (i, var) in PARAMS.iter().enumerate() {
            v[var.index()] = self.params[i];
        }
        v
    }
}

#[derive(Clone, Debug)]
struct CompiledPoly {
    terms: Vec<(f64, [u8; VAR_COUNT])>,
}

impl CompiledPoly {
    fn new(p: &Polynomial) -> CompiledPoly {
        CompiledPoly { terms: p.terms().iter().map(|(m, c)| (to_f64(c), m.exponents())).collect() }
    }

    fn eval(&self, v: &[Complex64; VAR_COUNT]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, e) in &self.terms {
            let mut term = Complex64::new(*c, 0.0);
            for (i, k) in e.iter().enumerate() {
                if *k > 0 {
                    term *= v[i].powu(*k as u32);
                }
            }
            acc += term;
        }
        acc
    }

    fn is_constant_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 1.0 && self.terms[0].1.iter().all(|e| *e == 0)
    }
}

/// A rational function ready for floating-point evaluation.
#[derive(Clone, Debug)]
pub struct CompiledFraction {
    num: CompiledPoly,
    den: CompiledPoly,
}

impl CompiledFraction {
    pub fn new(f: &Fraction) -> CompiledFraction {
        CompiledFraction { num: CompiledPoly::new(f.numer()), den: CompiledPoly::new(f.denom()) }
    }

    /// Value and denominator at `p`.
    pub fn eval_with_denominator(&self, p: &Point) -> (Complex64, Complex64) {
        let v = p.values();
        let d = if self.den.is_constant_one() { Complex64::new(1.0, 0.0) } else { self.den.eval(&v) };
        (self.num.eval(&v) / d, d)
    }

    pub fn eval(&self, p: &Point) -> Complex64 {
        self.eval_with_denominator(p).0
    }
}

/// Vector field with cached term lists, shared read-only between
/// trajectories.
#[derive(Clone, Debug)]
pub struct CompiledField {
    components: Vec<CompiledFraction>,
}

impl CompiledField {
    pub fn new(f: &VectorField) -> CompiledField {
        CompiledField { components: f.components.iter().map(CompiledFraction::new).collect() }
    }

    pub fn zero() -> CompiledField {
        CompiledField::new(&VectorField::zero())
    }

    pub fn eval(&self, p: &Point) -> [Complex64; 6] {
        core::array::from_fn(|i| self.components[i].eval(p))
    }
}

/// An [`ExtendedMap`] for floating-point evaluation.
#[derive(Clone, Debug)]
pub struct CompiledMap {
    phase: Vec<CompiledFraction>,
    time: CompiledFraction,
    /// Row-major affine parameter action: `a' = M a + b`.
    matrix: [[f64; 6]; 6],
    offset: [f64; 6],
    /// `dt'/dt`.
    pub epsilon: f64,
}

impl CompiledMap {
    /// `None` unless the time component is `+t` or `-t`.
    pub fn new(f: &ExtendedMap) -> Option<CompiledMap> {
        let epsilon = f.time_sign()? as f64;
        let mut matrix = [[0.0; 6]; 6];
        let mut offset = [0.0; 6];
        for (i, row) in matrix.iter_mut().enumerate() {
            let img = f.params.image(i);
            for (j, v) in PARAMS.iter().enumerate() {
                row[j] = to_f64(&img.coefficient(crate::algebra::Monomial::var(*v)));
            }
            offset[i] = to_f64(&img.constant_term());
        }
        Some(CompiledMap {
            phase: f.phase.iter().map(CompiledFraction::new).collect(),
            time: CompiledFraction::new(&f.time),
            matrix,
            offset,
            epsilon,
        })
    }

    pub fn map_params(&self, a: &[Complex64; 6]) -> [Complex64; 6] {
        core::array::from_fn(|i| {
            let mut s = Complex64::new(self.offset[i], 0.0);
            for j in 0..6 {
                s += a[j] * self.matrix[i][j];
            }
            s
        })
    }

    /// Image of `p` and the smallest denominator magnitude met on the way.
    pub fn apply(&self, p: &Point) -> (Point, f64) {
        let mut smallest = f64::INFINITY;
        let mut phase = [Complex64::new(0.0, 0.0); 6];
        for (i, c) in self.phase.iter().enumerate() {
            let (v, d) = c.eval_with_denominator(p);
            smallest = smallest.min(d.norm());
            phase[i] = v;
        }
        let t = self.time.eval(p).re;
        (Point { phase, t, params: self.map_params(&p.params) }, smallest)
    }
}
