use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::modp;
use super::monomial::Monomial;
use super::rational::{fmt_rational, rational_mod, Rational};
use super::var::{Var, VarSet, ALL_VARS, VAR_COUNT};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by strictly decreasing [`Monomial`] (graded
/// lexicographic) with no zero coefficients, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: alloc::vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms(mut terms: Vec<(Monomial, Rational)>) -> Self {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    /// Terms already sorted descending with no zeros and no repeats.
    fn from_sorted(terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn coefficient(&self, m: Monomial) -> Rational {
        match self.terms.binary_search_by(|(tm, _)| m.cmp(tm)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> VarSet {
        let mut acc = [0u8; VAR_COUNT];
        for (m, _) in &self.terms {
            let e = m.exponents();
            for i in 0..VAR_COUNT {
                acc[i] |= e[i];
            }
        }
        ALL_VARS
            .iter()
            .copied()
            .filter(|v| acc[v.index()] != 0)
            .collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) > 0)
    }

    pub fn free_of(&self, vars: VarSet) -> bool {
        self.support().intersection(vars).is_empty()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(v) as u32)
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    /// Largest total degree in the given variables over all terms.
    pub fn degree_in_set(&self, vars: VarSet) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_in(vars))
            .max()
            .unwrap_or(0)
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.gcd(*m)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(self.terms.iter().map(|(m, k)| (*m, k * c)).collect())
    }

    pub fn mul_monomial(&self, m: Monomial) -> Polynomial {
        Polynomial::from_sorted(self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect())
    }

    pub fn mul_term(&self, m: Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(self.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect())
    }

    /// Exact quotient by a monomial that divides every term.
    pub fn div_monomial(&self, m: Monomial) -> Option<Polynomial> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            out.push((t.div(m)?, c.clone()));
        }
        Some(Polynomial::from_sorted(out))
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => Polynomial::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        if n == 0 {
            return Polynomial::one();
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return Polynomial::term(m.pow(n), num_traits::pow(c.clone(), n as usize));
        }
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        let mut e = n;
        loop {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = &base * &base;
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Polynomial {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let reduced = m.with_exponent(v, e - 1);
            out.push((reduced, c * Rational::from_integer(e.into())));
        }
        Polynomial::from_terms(out)
    }

    /// Coefficients as a polynomial in `v`: entry `k` multiplies `v^k`.
    pub fn coefficients_in(&self, v: Var) -> Vec<Polynomial> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = alloc::vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exponent(v) as usize].push((m.without(v), c.clone()));
        }
        buckets.into_iter().map(Polynomial::from_terms).collect()
    }

    pub fn from_coefficients_in(v: Var, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let vk = Monomial::one_var(v, k as u8);
            for (m, a) in c.terms() {
                out.push((m.mul(vk), a.clone()));
            }
        }
        Polynomial::from_terms(out)
    }

    /// Substitutes polynomials for variables simultaneously.
    pub fn substitute(&self, bindings: &[(Var, Polynomial)]) -> Polynomial {
        if bindings.is_empty() {
            return self.clone();
        }
        let support = self.support();
        let active: Vec<&(Var, Polynomial)> =
            bindings.iter().filter(|(v, _)| support.contains(*v)).collect();
        if active.is_empty() {
            return self.clone();
        }
        // Power tables for every bound variable.
        let mut tables: Vec<(Var, Vec<Polynomial>)> = Vec::with_capacity(active.len());
        for (v, p) in &active {
            let d = self.degree_in(*v) as usize;
            let mut tab = Vec::with_capacity(d + 1);
            tab.push(Polynomial::one());
            for k in 1..=d {
                let next = &tab[k - 1] * p;
                tab.push(next);
            }
            tables.push((*v, tab));
        }
        let mut acc: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut prod = Polynomial::one();
            for (v, tab) in &tables {
                let e = m.exponent(*v);
                if e > 0 {
                    rest = rest.without(*v);
                    prod = &prod * &tab[e as usize];
                }
            }
            for (pm, pc) in prod.terms {
                acc.push((pm.mul(rest), pc * c));
            }
        }
        Polynomial::from_terms(acc)
    }

    /// Replaces the listed variables by rational values.
    pub fn specialize(&self, values: &[(Var, Rational)]) -> Polynomial {
        if values.is_empty() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut k = c.clone();
            for (v, val) in values {
                let e = m.exponent(*v);
                if e > 0 {
                    rest = rest.without(*v);
                    k *= num_traits::pow(val.clone(), e as usize);
                }
            }
            out.push((rest, k));
        }
        Polynomial::from_terms(out)
    }

    /// Full evaluation; `point[v.index()]` is the value of `v`.
    pub fn evaluate(&self, point: &[Rational; VAR_COUNT]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut k = c.clone();
            let e = m.exponents();
            for i in 0..VAR_COUNT {
                if e[i] > 0 {
                    k *= num_traits::pow(point[i].clone(), e[i] as usize);
                }
            }
            acc += k;
        }
        acc
    }

    /// Evaluation modulo a prime; `None` if a coefficient denominator vanishes.
    pub fn evaluate_mod(&self, point: &[u64; VAR_COUNT], p: u64) -> Option<u64> {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut k = rational_mod(c, p)?;
            let e = m.exponents();
            for i in 0..VAR_COUNT {
                if e[i] > 0 {
                    k = modp::mul(k, modp::pow(point[i], e[i] as u64, p), p);
                }
            }
            acc = modp::add(acc, k, p);
        }
        Some(acc)
    }

    /// Image in `F_p[v]` after evaluating every other variable at `point`.
    pub fn univariate_mod(&self, v: Var, point: &[u64; VAR_COUNT], p: u64) -> Option<modp::UniPoly> {
        let deg = self.degree_in(v) as usize;
        let mut coeffs = alloc::vec![0u64; deg + 1];
        for (m, c) in &self.terms {
            let mut k = rational_mod(c, p)?;
            let e = m.exponents();
            for i in 0..VAR_COUNT {
                if i != v.index() && e[i] > 0 {
                    k = modp::mul(k, modp::pow(point[i], e[i] as u64, p), p);
                }
            }
            let slot = &mut coeffs[e[v.index()] as usize];
            *slot = modp::add(*slot, k, p);
        }
        Some(modp::UniPoly(coeffs).trim())
    }

    /// Exact division: `Some(q)` with `self == d * q`, else `None`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if d.is_monomial() {
            let (dm, dc) = &d.terms[0];
            let inv = dc.recip();
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                out.push((m.div(*dm)?, c * &inv));
            }
            return Some(Polynomial::from_sorted(out));
        }
        // Cheap rejections: degree bounds in every variable.
        for v in d.support().iter() {
            if d.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        if !d.support().iter().all(|v| self.contains_var(v)) {
            return None;
        }
        let (dm, dc) = d.terms[0].clone();
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            let qm = rm.div(dm)?;
            let qc = rc * &dc_inv;
            rem = &rem - &d.mul_term(qm, &qc);
            quot.push((qm, qc));
        }
        Some(Polynomial::from_terms(quot))
    }

    /// Remainder of multivariate division by a single divisor, which is its
    /// own Groebner basis, so the result is the canonical normal form.
    pub fn normal_form(&self, d: &Polynomial) -> Polynomial {
        assert!(!d.is_zero());
        let (dm, dc) = d.terms[0].clone();
        let dc_inv = dc.recip();
        let mut p = self.clone();
        let mut rem: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((pm, pc)) = p.terms.first().cloned() {
            match pm.div(dm) {
                Some(qm) => {
                    let qc = pc * &dc_inv;
                    p = &p - &d.mul_term(qm, &qc);
                }
                None => {
                    rem.push((pm, pc));
                    p.terms.remove(0);
                }
            }
        }
        Polynomial::from_terms(rem)
    }

    /// Rational content making the polynomial have coprime integer
    /// coefficients with a positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return Polynomial::zero();
        }
        let lcm = super::rational::denominator_lcm(self.terms.iter().map(|(_, c)| c));
        let mut g = num_bigint::BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&lcm / c.denom());
            g = g.gcd(&n);
        }
        let mut factor = Rational::new(lcm, g);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Canonical text form: terms in decreasing graded-lex order.
    pub fn to_canonical_string(&self) -> String {
        alloc::format!("{self}")
    }
}

fn merge(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            core::cmp::Ordering::Less => {
                let c = if negate_b { -b[j].1.clone() } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = if negate_b { -t.1.clone() } else { t.1.clone() };
        out.push((t.0, c));
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::from_sorted(merge(&self.terms, &rhs.terms, false))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::from_sorted(merge(&self.terms, &rhs.terms, true))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if rhs.is_monomial() {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(*m, c);
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(*m, c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                prods.push((ma.mul(*mb), ca * cb));
            }
        }
        Polynomial::from_terms(prods)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_sorted(self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}
