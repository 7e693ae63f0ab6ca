use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact coefficient field.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Canonical text: `n` or `n/d` with the sign on the numerator.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Residue of `r` modulo the prime `p`, or `None` when `p` divides the
/// denominator.
pub fn rational_mod(r: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = r.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    let n = r.numer().mod_floor(&pb).to_u64()?;
    Some(super::modp::mul(n, super::modp::inv(d, p), p))
}

pub fn to_f64(r: &Rational) -> f64 {
    // Ratio::to_f64 handles large numerators and denominators without overflow.
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else if r.is_zero() {
            0.0
        } else {
            f64::INFINITY
        }
    })
}

/// Least common multiple of the denominators of `values`.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}
