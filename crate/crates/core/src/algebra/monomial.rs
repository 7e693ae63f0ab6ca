use core::cmp::Ordering;
use core::fmt;

use super::var::{Var, VarSet, ALL_VARS, VAR_COUNT};

/// Power product of the indeterminates, packed into a `u128`.
///
/// Layout, most significant first: a 16-bit total degree, then one byte per
/// variable in [`Var`] order. Comparing the packed integers is therefore
/// graded lexicographic order, and multiplication is integer addition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u128);

const DEGREE_SHIFT: u32 = 112;
/// Lowest bit of every field except the first variable byte; a carry or borrow
/// between fields flips one of these.
const FIELD_BOUNDARIES: u128 = {
    let mut m = 0u128;
    let mut k = 1;
    while k <= VAR_COUNT {
        m |= 1u128 << (8 * k);
        k += 1;
    }
    m
};

#[inline]
const fn shift(v: usize) -> u32 {
    ((VAR_COUNT - 1 - v) * 8) as u32
}

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(v: Var) -> Monomial {
        Monomial::one_var(v, 1)
    }

    pub fn one_var(v: Var, e: u8) -> Monomial {
        Monomial(((e as u128) << shift(v.index())) | ((e as u128) << DEGREE_SHIFT))
    }

    pub fn from_exponents(exps: &[u8; VAR_COUNT]) -> Monomial {
        let mut packed = 0u128;
        let mut deg = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            packed |= (e as u128) << shift(i);
            deg += e as u128;
        }
        Monomial(packed | (deg << DEGREE_SHIFT))
    }

    #[inline]
    pub fn exponent(self, v: Var) -> u8 {
        (self.0 >> shift(v.index())) as u8
    }

    pub fn exponents(self) -> [u8; VAR_COUNT] {
        let mut e = [0u8; VAR_COUNT];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = (self.0 >> shift(i)) as u8;
        }
        e
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEGREE_SHIFT) as u32
    }

    /// Total degree in the given variables only.
    pub fn degree_in(self, vars: VarSet) -> u32 {
        vars.iter().map(|v| self.exponent(v) as u32).sum()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn support(self) -> VarSet {
        ALL_VARS
            .iter()
            .copied()
            .filter(|v| self.exponent(*v) > 0)
            .collect()
    }

    /// Product; panics if some exponent would exceed 255.
    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        let s = self.0.wrapping_add(other.0);
        assert!(
            (self.0 ^ other.0 ^ s) & FIELD_BOUNDARIES == 0,
            "monomial exponent overflow"
        );
        Monomial(s)
    }

    /// Quotient `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(self, other: Monomial) -> Option<Monomial> {
        if self.0 < other.0 {
            return None;
        }
        let d = self.0 - other.0;
        if (self.0 ^ other.0 ^ d) & FIELD_BOUNDARIES != 0 {
            None
        } else {
            Some(Monomial(d))
        }
    }

    pub fn divides(self, other: Monomial) -> bool {
        other.div(self).is_some()
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        let a = self.exponents();
        let b = other.exponents();
        let mut e = [0u8; VAR_COUNT];
        for i in 0..VAR_COUNT {
            e[i] = a[i].min(b[i]);
        }
        Monomial::from_exponents(&e)
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        let a = self.exponents();
        let b = other.exponents();
        let mut e = [0u8; VAR_COUNT];
        for i in 0..VAR_COUNT {
            e[i] = a[i].max(b[i]);
        }
        Monomial::from_exponents(&e)
    }

    pub fn pow(self, n: u32) -> Monomial {
        let mut e = self.exponents();
        for x in e.iter_mut() {
            let v = *x as u32 * n;
            assert!(v <= 255, "monomial exponent overflow");
            *x = v as u8;
        }
        Monomial::from_exponents(&e)
    }

    /// Removes every occurrence of `v`.
    pub fn without(self, v: Var) -> Monomial {
        let e = self.exponent(v);
        Monomial(self.0 & !(0xffu128 << shift(v.index())))
            .sub_degree(e as u128)
    }

    fn sub_degree(self, d: u128) -> Monomial {
        Monomial(self.0 - (d << DEGREE_SHIFT))
    }

    pub fn with_exponent(self, v: Var, e: u8) -> Monomial {
        self.without(v).mul(Monomial::one_var(v, e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in ALL_VARS {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x = Monomial::var(Var::X);
        let y = Monomial::var(Var::Y);
        let y2 = Monomial::one_var(Var::Y, 2);
        assert!(x > y);
        assert!(y2 > x);
        assert!(x.mul(y) > y2);
        assert!(Monomial::var(Var::A5) > Monomial::ONE);
    }

    #[test]
    fn mul_div_roundtrip() {
        let m = Monomial::from_exponents(&[1, 2, 0, 0, 3, 0, 1, 0, 0, 0, 0, 0, 1, 0]);
        let n = Monomial::from_exponents(&[0, 1, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let q = m.div(n).unwrap();
        assert_eq!(q.mul(n), m);
        assert_eq!(q.degree(), 4);
        assert!(n.div(m).is_none());
        // same degree, not divisible
        let a = Monomial::var(Var::X);
        let b = Monomial::var(Var::Y);
        assert!(a.div(b).is_none());
        assert!(b.div(a).is_none());
    }

    #[test]
    fn without_and_gcd() {
        let m = Monomial::from_exponents(&[2, 1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0]);
        let w = m.without(Var::T);
        assert_eq!(w.degree(), 3);
        assert_eq!(w.exponent(Var::T), 0);
        assert_eq!(m.gcd(Monomial::one_var(Var::T, 5)), Monomial::one_var(Var::T, 3));
        assert_eq!(format!("{m}"), "x^2*y*t^3");
    }

    #[test]
    #[should_panic]
    fn overflow_panics() {
        let m = Monomial::one_var(Var::X, 200);
        let _ = m.mul(m);
    }
}
