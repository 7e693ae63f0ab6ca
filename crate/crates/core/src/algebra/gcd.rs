//! Multivariate polynomial gcd over the rationals.
//!
//! Coprime inputs are by far the common case in map composition, so they are
//! certified cheaply by univariate images modulo a large prime. Only when an
//! image suggests a genuine common factor does the modular algorithm run,
//! with a recursive primitive pseudo-remainder sequence as the fallback.

use alloc::vec::Vec;

use super::modp::{self, UniPoly};
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::var::{Var, VarSet, VAR_COUNT};

/// Monic greatest common divisor. `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let gm = ma.gcd(mb);
    let a1 = a.div_monomial(ma).expect("content divides");
    let b1 = b.div_monomial(mb).expect("content divides");
    let core = gcd_no_monomial(&a1, &b1);
    core.mul_monomial(gm).monic()
}

/// Gcd of a list, stopping early once it becomes a constant.
pub fn gcd_list<'a, I: IntoIterator<Item = &'a Polynomial>>(items: I) -> Polynomial {
    let mut acc = Polynomial::zero();
    for p in items {
        if p.is_zero() {
            continue;
        }
        acc = gcd(&acc, p);
        if acc.is_constant() {
            return Polynomial::one();
        }
    }
    acc
}

fn gcd_no_monomial(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    let sa = a.support();
    let sb = b.support();
    let common = sa.intersection(sb);
    if common.is_empty() {
        return Polynomial::one();
    }
    // A common divisor is free of every variable missing from one side, so
    // it divides each coefficient with respect to such a variable.
    if let Some(u) = sa.iter().find(|v| !sb.contains(*v)) {
        let coeffs = a.coefficients_in(u);
        let mut list: Vec<&Polynomial> = coeffs.iter().filter(|c| !c.is_zero()).collect();
        list.sort_by_key(|c| c.len());
        list.push(b);
        return gcd_list(list);
    }
    if let Some(u) = sb.iter().find(|v| !sa.contains(*v)) {
        let coeffs = b.coefficients_in(u);
        let mut list: Vec<&Polynomial> = coeffs.iter().filter(|c| !c.is_zero()).collect();
        list.sort_by_key(|c| c.len());
        list.push(a);
        return gcd_list(list);
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if large.div_exact(small).is_some() {
        return small.monic();
    }
    let degrees = match image_gcd_degrees(a, b, common) {
        Some(d) => d,
        None => return Polynomial::one(),
    };
    if let Some(g) = super::modgcd::gcd_modular(a, b) {
        return g;
    }
    // Main variable: smallest positive image degree, ties by input degree.
    let v = common
        .iter()
        .filter(|v| degrees[v.index()] > 0)
        .min_by_key(|v| (degrees[v.index()], a.degree_in(*v).max(b.degree_in(*v))))
        .expect("some image degree is positive");
    let ca = a.coefficients_in(v);
    let cb = b.coefficients_in(v);
    let cont_a = gcd_list(ca.iter());
    let cont_b = gcd_list(cb.iter());
    let cont = gcd(&cont_a, &cont_b);
    let pa = a.div_exact(&cont_a).expect("content divides");
    let pb = b.div_exact(&cont_b).expect("content divides");
    let g = primitive_prs(pa, pb, v);
    (&cont * &g).monic()
}

/// Upper bounds on the gcd degree in each common variable from univariate
/// images mod p; `None` certifies that the inputs are coprime.
fn image_gcd_degrees(a: &Polynomial, b: &Polynomial, common: VarSet) -> Option<[u32; VAR_COUNT]> {
    let mut out = [0u32; VAR_COUNT];
    let mut any = false;
    let mut seed = 0x9e37_79b9_7f4a_7c15u64 ^ (a.len() as u64) << 32 ^ b.len() as u64;
    for v in common.iter() {
        let da = a.degree_in(v) as usize;
        let db = b.degree_in(v) as usize;
        let mut bound = da.min(db) as u32;
        for &p in modp::PRIMES.iter().take(2) {
            let mut point = [0u64; VAR_COUNT];
            for slot in point.iter_mut() {
                seed = splitmix(seed);
                *slot = 2 + seed % (p - 3);
            }
            let (ia, ib) = match (a.univariate_mod(v, &point, p), b.univariate_mod(v, &point, p)) {
                (Some(x), Some(y)) => (x, y),
                _ => continue,
            };
            // Unlucky point if a leading coefficient vanished.
            if ia.degree() != Some(da) || ib.degree() != Some(db) {
                continue;
            }
            let g = UniPoly::gcd(&ia, &ib, p);
            bound = bound.min(g.degree().unwrap_or(0) as u32);
            if bound == 0 {
                break;
            }
        }
        out[v.index()] = bound;
        any |= bound > 0;
    }
    if any {
        Some(out)
    } else {
        None
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut x = z;
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn leading_in(p: &Polynomial, v: Var) -> (u32, Polynomial) {
    let mut coeffs = p.coefficients_in(v);
    let d = coeffs.len() as u32 - 1;
    (d, coeffs.pop().unwrap())
}

/// Pseudo-remainder of `a` by `b` with respect to `v`.
fn prem(mut a: Polynomial, b: &Polynomial, v: Var) -> Polynomial {
    let (db, lb) = leading_in(b, v);
    while !a.is_zero() {
        let (da, la) = leading_in(&a, v);
        if da < db {
            break;
        }
        let shift = Monomial::one_var(v, (da - db) as u8);
        a = &(&lb * &a) - &(&la * &b.mul_monomial(shift));
    }
    a
}

fn primitive_part(p: &Polynomial, v: Var) -> Polynomial {
    let coeffs = p.coefficients_in(v);
    let c = gcd_list(coeffs.iter());
    if c.is_constant() {
        p.primitive()
    } else {
        p.div_exact(&c).expect("content divides").primitive()
    }
}

/// Gcd of two polynomials that are primitive with respect to `v`.
fn primitive_prs(a: Polynomial, b: Polynomial, v: Var) -> Polynomial {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    if b.degree_in(v) == 0 {
        return Polynomial::one();
    }
    loop {
        let r = prem(a, &b, v);
        if r.is_zero() {
            return b.monic();
        }
        if r.degree_in(v) == 0 {
            return Polynomial::one();
        }
        a = b;
        b = primitive_part(&r, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn x() -> Polynomial {
        Polynomial::var(Var::X)
    }
    fn y() -> Polynomial {
        Polynomial::var(Var::Y)
    }
    fn c(n: i64) -> Polynomial {
        Polynomial::constant(int(n))
    }

    #[test]
    fn shared_linear_factor() {
        let f = &x() * &y() + c(1);
        let a = &f * &(x() + c(2));
        let b = &f * &(y() - c(3));
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn coprime_and_monomial() {
        let a = &x() * &x() * &y();
        let b = &x() * &(y() + c(1));
        assert_eq!(gcd(&a, &b), x());
        let a = &x() * &y() + c(1);
        let b = x() + y();
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn squared_factor() {
        let f = x() + &y() * &y();
        let a = f.pow(2) * (x() - c(1));
        let b = f.pow(3);
        assert_eq!(gcd(&a, &b), f.pow(2).monic());
    }

    #[test]
    fn asymmetric_support() {
        let t = Polynomial::var(Var::T);
        let f = x() - c(1);
        let a = &f * &(t.clone() + c(1));
        let b = &f * &(&t * &x() + c(5));
        assert_eq!(gcd(&a, &b), f);
        let z = Polynomial::var(Var::Z);
        let a = &f * &(z + c(1));
        let b = &f * &(y() + c(1));
        assert_eq!(gcd(&a, &b), f);
    }
}
