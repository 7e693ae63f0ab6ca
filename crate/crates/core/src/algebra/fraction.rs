use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::rational::Rational;
use super::var::{Var, VarSet, VAR_COUNT};
use super::AlgebraError;

/// Quotient of polynomials kept in lowest terms with a monic denominator.
///
/// Because the representation is canonical, structural equality coincides
/// with equality of rational functions; [`PartialEq`] still falls back to
/// cross-multiplication so that correctness never rests on the reduction.
#[derive(Clone)]
pub struct Fraction {
    num: Polynomial,
    den: Polynomial,
}

impl Fraction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Fraction, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Fraction::reduce(num, den))
    }

    pub fn zero() -> Fraction {
        Fraction::from_poly(Polynomial::zero())
    }

    pub fn one() -> Fraction {
        Fraction::from_poly(Polynomial::one())
    }

    pub fn var(v: Var) -> Fraction {
        Fraction::from_poly(Polynomial::var(v))
    }

    pub fn constant(c: Rational) -> Fraction {
        Fraction::from_poly(Polynomial::constant(c))
    }

    pub fn from_poly(num: Polynomial) -> Fraction {
        Fraction { num, den: Polynomial::one() }
    }

    /// Builds a fraction known to be in lowest terms; only the sign and
    /// scale of the denominator are normalized.
    fn coprime(num: Polynomial, den: Polynomial) -> Fraction {
        debug_assert!(!den.is_zero());
        let lc = den.leading_coefficient();
        if lc.is_one() {
            Fraction { num, den }
        } else {
            let inv = lc.recip();
            Fraction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Fraction {
        if num.is_zero() {
            return Fraction::zero();
        }
        if den.is_constant() {
            return Fraction::coprime(num, den);
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            Fraction::coprime(num, den)
        } else {
            let n = num.div_exact(&g).expect("gcd divides numerator");
            let d = den.div_exact(&g).expect("gcd divides denominator");
            Fraction::coprime(n, d)
        }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn support(&self) -> VarSet {
        self.num.support().union(self.den.support())
    }

    /// Number of stored terms, numerator plus denominator.
    pub fn size(&self) -> usize {
        self.num.len() + self.den.len()
    }

    pub fn recip(&self) -> Result<Fraction, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Fraction::coprime(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Fraction {
        if c.is_zero() {
            return Fraction::zero();
        }
        Fraction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, n: i32) -> Result<Fraction, AlgebraError> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let e = n.unsigned_abs();
        Ok(Fraction { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn derivative(&self, v: Var) -> Fraction {
        let dn = self.num.derivative(v);
        if !self.den.contains_var(v) {
            return Fraction { num: dn, den: self.den.clone() };
        }
        let dd = self.den.derivative(v);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Fraction::reduce(num, &self.den * &self.den)
    }

    /// Simultaneous substitution of fractions for variables.
    pub fn substitute(&self, bindings: &[(Var, Fraction)]) -> Result<Fraction, AlgebraError> {
        let support = self.support();
        let active: Vec<&(Var, Fraction)> =
            bindings.iter().filter(|(v, _)| support.contains(*v)).collect();
        if active.is_empty() {
            return Ok(self.clone());
        }
        if active.iter().all(|(_, f)| f.den.is_one()) {
            let polys: Vec<(Var, Polynomial)> =
                active.iter().map(|(v, f)| (*v, f.num.clone())).collect();
            let n = self.num.substitute(&polys);
            let d = self.den.substitute(&polys);
            if d.is_zero() {
                return Err(AlgebraError::SubstitutionDenominatorZero);
            }
            return Ok(Fraction::reduce(n, d));
        }
        let (n1, e1) = homogenized(&self.num, &active);
        let (n2, e2) = homogenized(&self.den, &active);
        if n2.is_zero() {
            return Err(AlgebraError::SubstitutionDenominatorZero);
        }
        // num(s)/den(s) = n1 / prod d^e1 * prod d^e2 / n2
        let mut top = n1;
        let mut bottom = n2;
        for (k, (_, f)) in active.iter().enumerate() {
            if f.den.is_one() {
                continue;
            }
            if e2[k] > e1[k] {
                top = &top * &f.den.pow(e2[k] - e1[k]);
            } else if e1[k] > e2[k] {
                bottom = &bottom * &f.den.pow(e1[k] - e2[k]);
            }
        }
        Ok(Fraction::reduce(top, bottom))
    }

    /// Substitution of rational values; `None` if the denominator vanishes.
    pub fn specialize(&self, values: &[(Var, Rational)]) -> Option<Fraction> {
        let n = self.num.specialize(values);
        let d = self.den.specialize(values);
        if d.is_zero() {
            None
        } else {
            Some(Fraction::reduce(n, d))
        }
    }

    pub fn evaluate(&self, point: &[Rational; VAR_COUNT]) -> Option<Rational> {
        let d = self.den.evaluate(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.evaluate(point) / d)
    }

    pub fn evaluate_mod(&self, point: &[u64; VAR_COUNT], p: u64) -> Option<u64> {
        let d = self.den.evaluate_mod(point, p)?;
        if d == 0 {
            return None;
        }
        let n = self.num.evaluate_mod(point, p)?;
        Some(super::modp::mul(n, super::modp::inv(d, p), p))
    }
}

/// `p(n_v / d_v)` times `prod d_v^{deg_v p}`, together with those degrees.
fn homogenized(p: &Polynomial, active: &[&(Var, Fraction)]) -> (Polynomial, Vec<u32>) {
    let degs: Vec<u32> = active.iter().map(|(v, _)| p.degree_in(*v)).collect();
    let mut num_pows: Vec<Vec<Polynomial>> = Vec::with_capacity(active.len());
    let mut den_pows: Vec<Vec<Polynomial>> = Vec::with_capacity(active.len());
    for (k, (_, f)) in active.iter().enumerate() {
        let d = degs[k] as usize;
        let mut np = Vec::with_capacity(d + 1);
        let mut dp = Vec::with_capacity(d + 1);
        np.push(Polynomial::one());
        dp.push(Polynomial::one());
        for i in 1..=d {
            np.push(&np[i - 1] * &f.num);
            dp.push(if f.den.is_one() { Polynomial::one() } else { &dp[i - 1] * &f.den });
        }
        num_pows.push(np);
        den_pows.push(dp);
    }
    let mut acc: Vec<(Monomial, Rational)> = Vec::new();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut prod = Polynomial::constant(c.clone());
        for (k, (v, _)) in active.iter().enumerate() {
            let e = m.exponent(*v) as usize;
            rest = rest.without(*v);
            if e > 0 {
                prod = &prod * &num_pows[k][e];
            }
            let de = degs[k] as usize - e;
            if de > 0 && !den_pows[k][de].is_one() {
                prod = &prod * &den_pows[k][de];
            }
        }
        acc.extend(prod.into_terms().into_iter().map(|(pm, pc)| (pm.mul(rest), pc)));
    }
    (Polynomial::from_terms(acc), degs)
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Fraction) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for Fraction {}

impl Add for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Fraction::from_poly(&self.num + &rhs.num);
            }
            return Fraction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return Fraction::coprime(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return Fraction::coprime(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let (bl, dl) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                rhs.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = &(&self.num * &dl) + &(&rhs.num * &bl);
        let den = &self.den * &dl;
        if g.is_one() {
            Fraction::coprime(num, den)
        } else {
            Fraction::reduce(num, den)
        }
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self + &(-rhs)
    }
}

impl Mul for &Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        if self.is_zero() || rhs.is_zero() {
            return Fraction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Fraction::from_poly(&self.num * &rhs.num);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let div = |p: &Polynomial, g: &Polynomial| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        Fraction::coprime(num, den)
    }
}

impl Div for &Fraction {
    type Output = Fraction;
    /// Panics on division by zero; use [`Fraction::recip`] to handle it.
    fn div(self, rhs: &Fraction) -> Fraction {
        self * &rhs.recip().expect("division by zero fraction")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Fraction {
            type Output = Fraction;
            fn $f(self, rhs: Fraction) -> Fraction {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Fraction> for Fraction {
            type Output = Fraction;
            fn $f(self, rhs: &Fraction) -> Fraction {
                (&self).$f(rhs)
            }
        }
        impl $tr<Fraction> for &Fraction {
            type Output = Fraction;
            fn $f(self, rhs: Fraction) -> Fraction {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        -&self
    }
}

impl From<Polynomial> for Fraction {
    fn from(p: Polynomial) -> Self {
        Fraction::from_poly(p)
    }
}

impl From<Var> for Fraction {
    fn from(v: Var) -> Self {
        Fraction::var(v)
    }
}

impl From<Rational> for Fraction {
    fn from(c: Rational) -> Self {
        Fraction::constant(c)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Default for Fraction {
    fn default() -> Self {
        Fraction::zero()
    }
}

impl Zero for Fraction {
    fn zero() -> Self {
        Fraction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
