//! Affine-linear data on the six parameters: normalization constraints and
//! parameter actions of transformations.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::fraction::Fraction;
use super::poly::Polynomial;
use super::rational::{fmt_rational, Rational};
use super::var::{Var, PARAMS};
use super::AlgebraError;

pub type ParamVector = [Rational; 6];

pub fn zero_vector() -> ParamVector {
    core::array::from_fn(|_| Rational::zero())
}

/// The constraint `sum coeffs[i] * a_i = constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: ParamVector,
    pub constant: Rational,
}

impl LinearForm {
    pub fn new(coeffs: ParamVector, constant: Rational) -> LinearForm {
        LinearForm { coeffs, constant }
    }

    pub fn from_integers(coeffs: [i64; 6], constant: Rational) -> LinearForm {
        LinearForm {
            coeffs: core::array::from_fn(|i| Rational::from_integer(coeffs[i].into())),
            constant,
        }
    }

    /// Left-hand side at `alpha`.
    pub fn evaluate(&self, alpha: &ParamVector) -> Rational {
        let mut s = Rational::zero();
        for i in 0..6 {
            s += &self.coeffs[i] * &alpha[i];
        }
        s
    }

    pub fn is_satisfied(&self, alpha: &ParamVector) -> bool {
        self.evaluate(alpha) == self.constant
    }

    /// `lhs - constant` as a polynomial in the parameters.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::constant(-self.constant.clone());
        for (i, c) in self.coeffs.iter().enumerate() {
            p = &p + &Polynomial::var(PARAMS[i]).scale(c);
        }
        p
    }

    /// The eliminated parameter expressed through the others.
    pub fn solve_for(&self, eliminated: usize) -> Polynomial {
        let c = &self.coeffs[eliminated];
        assert!(!c.is_zero(), "constraint does not involve a{eliminated}");
        let mut p = Polynomial::constant(self.constant.clone());
        for (i, ci) in self.coeffs.iter().enumerate() {
            if i != eliminated && !ci.is_zero() {
                p = &p - &Polynomial::var(PARAMS[i]).scale(ci);
            }
        }
        p.scale(&c.recip())
    }

    /// Completes a vector by solving for the eliminated coordinate; the value
    /// supplied there is ignored.
    pub fn complete(&self, alpha: &ParamVector, eliminated: usize) -> ParamVector {
        let mut out = alpha.clone();
        let mut rest = self.constant.clone();
        for i in 0..6 {
            if i != eliminated {
                rest -= &self.coeffs[i] * &alpha[i];
            }
        }
        out[eliminated] = rest / &self.coeffs[eliminated];
        out
    }

    /// Pull-back along a parameter map: the form `alpha -> self(P(alpha))`.
    pub fn pullback(&self, map: &ParamMap) -> LinearForm {
        let mut coeffs = zero_vector();
        let mut shift = Rational::zero();
        for i in 0..6 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..6 {
                coeffs[j] += &self.coeffs[i] * &map.matrix[i][j];
            }
            shift += &self.coeffs[i] * &map.offset[i];
        }
        LinearForm { coeffs, constant: &self.constant - shift }
    }

    /// Whether `other` is a nonzero multiple of `self`; returns the factor
    /// `lambda` with `other = lambda * self`.
    pub fn proportionality(&self, other: &LinearForm) -> Option<Rational> {
        let mut lambda: Option<Rational> = None;
        let pairs = self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .chain(core::iter::once((&self.constant, &other.constant)));
        for (a, b) in pairs {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => {}
                (true, false) | (false, true) => return None,
                (false, false) => {
                    let r = b / a;
                    match &lambda {
                        None => lambda = Some(r),
                        Some(l) if *l == r => {}
                        Some(_) => return None,
                    }
                }
            }
        }
        lambda
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "a{i}")?;
            } else {
                write!(f, "{}*a{i}", fmt_rational(c))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " = {}", fmt_rational(&self.constant))
    }
}

/// Replaces `a_eliminated` using the constraint. Idempotent.
pub fn reduce_by_constraint(a: &Polynomial, c: &LinearForm, eliminated: usize) -> Polynomial {
    let v = PARAMS[eliminated];
    if !a.contains_var(v) {
        return a.clone();
    }
    a.substitute(&[(v, c.solve_for(eliminated))])
}

/// [`reduce_by_constraint`] applied to numerator and denominator.
pub fn reduce_fraction_by_constraint(
    a: &Fraction,
    c: &LinearForm,
    eliminated: usize,
) -> Result<Fraction, AlgebraError> {
    let v = PARAMS[eliminated];
    if !a.support().contains(v) {
        return Ok(a.clone());
    }
    a.substitute(&[(v, Fraction::from_poly(c.solve_for(eliminated)))])
}

/// Affine parameter action `alpha' = matrix * alpha + offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMap {
    pub matrix: [[Rational; 6]; 6],
    pub offset: ParamVector,
}

impl ParamMap {
    pub fn identity() -> ParamMap {
        ParamMap {
            matrix: core::array::from_fn(|i| {
                core::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() })
            }),
            offset: zero_vector(),
        }
    }

    /// Reads the action off the images of `a0..a5`, which must be affine
    /// polynomials in the parameters alone.
    pub fn from_images(images: &[Polynomial; 6]) -> Result<ParamMap, AlgebraError> {
        let mut m = ParamMap::identity();
        for (i, img) in images.iter().enumerate() {
            m.matrix[i] = zero_vector();
            m.offset[i] = Rational::zero();
            for (mono, c) in img.terms() {
                if mono.is_one() {
                    m.offset[i] = c.clone();
                    continue;
                }
                let sup: Vec<Var> = mono.support().iter().collect();
                match sup.as_slice() {
                    [v] if v.is_param() && mono.degree() == 1 => {
                        m.matrix[i][v.param_index().unwrap()] = c.clone();
                    }
                    _ => return Err(AlgebraError::NotLinear),
                }
            }
        }
        Ok(m)
    }

    pub fn image(&self, i: usize) -> Polynomial {
        let mut p = Polynomial::constant(self.offset[i].clone());
        for j in 0..6 {
            if !self.matrix[i][j].is_zero() {
                p = &p + &Polynomial::var(PARAMS[j]).scale(&self.matrix[i][j]);
            }
        }
        p
    }

    pub fn images(&self) -> [Polynomial; 6] {
        core::array::from_fn(|i| self.image(i))
    }

    pub fn apply(&self, alpha: &ParamVector) -> ParamVector {
        core::array::from_fn(|i| {
            let mut s = self.offset[i].clone();
            for j in 0..6 {
                s += &self.matrix[i][j] * &alpha[j];
            }
            s
        })
    }

    /// `(self o inner)(alpha) = self(inner(alpha))`.
    pub fn compose(&self, inner: &ParamMap) -> ParamMap {
        let mut out = ParamMap::identity();
        for i in 0..6 {
            for j in 0..6 {
                let mut s = Rational::zero();
                for k in 0..6 {
                    s += &self.matrix[i][k] * &inner.matrix[k][j];
                }
                out.matrix[i][j] = s;
            }
            let mut s = self.offset[i].clone();
            for k in 0..6 {
                s += &self.matrix[i][k] * &inner.offset[k];
            }
            out.offset[i] = s;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == ParamMap::identity()
    }

    pub fn determinant(&self) -> Rational {
        let mut a = self.matrix.clone();
        let mut det = Rational::one();
        for col in 0..6 {
            let Some(piv) = (col..6).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            det *= &a[col][col];
            let inv = a[col][col].recip();
            for r in col + 1..6 {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &inv;
                for c in col..6 {
                    let d = &f * &a[col][c];
                    a[r][c] -= d;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    /// Substitution bindings `a_i -> image_i`, skipping fixed parameters.
    pub fn bindings(&self) -> Vec<(Var, Fraction)> {
        (0..6)
            .filter_map(|i| {
                let img = self.image(i);
                if img == Polynomial::var(PARAMS[i]) {
                    None
                } else {
                    Some((PARAMS[i], Fraction::from_poly(img)))
                }
            })
            .collect()
    }
}

impl fmt::Display for ParamMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..6 {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.image(i))?;
        }
        Ok(())
    }
}
