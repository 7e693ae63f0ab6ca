//! Modular multivariate gcd.
//!
//! Images of the gcd modulo word-size primes are computed by dense
//! evaluation and Newton interpolation, one variable at a time, with the
//! leading coefficient fixed through the gcd of the input leading
//! coefficients. Images are combined by Chinese remaindering, lifted to the
//! rationals by rational reconstruction, and the candidate is accepted only
//! once it divides both inputs exactly.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::rational::{rational_mod, Rational};
use super::var::Var;

/// Primes tried before giving up.
const MAX_PRIMES: usize = 200;

/// Sparse polynomial over `Z/p`, terms in descending monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ModPoly(Vec<(Monomial, u64)>);

impl ModPoly {
    fn zero() -> ModPoly {
        ModPoly(Vec::new())
    }

    fn constant(c: u64) -> ModPoly {
        if c == 0 {
            ModPoly::zero()
        } else {
            ModPoly(vec![(Monomial::ONE, c)])
        }
    }

    fn from_unsorted(mut t: Vec<(Monomial, u64)>, p: u64) -> ModPoly {
        t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(t.len());
        for (m, c) in t {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = modp::add(last.1, c, p),
                _ => out.push((m, c)),
            }
        }
        out.retain(|x| x.1 != 0);
        ModPoly(out)
    }

    fn reduce(a: &Polynomial, p: u64) -> Option<ModPoly> {
        let mut out = Vec::with_capacity(a.len());
        for (m, c) in a.terms() {
            let r = rational_mod(c, p)?;
            if r != 0 {
                out.push((*m, r));
            }
        }
        Some(ModPoly(out))
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.0.is_empty() || (self.0.len() == 1 && self.0[0].0 == Monomial::ONE)
    }

    fn lead(&self) -> Monomial {
        self.0[0].0
    }

    fn monic(self, p: u64) -> ModPoly {
        if self.is_zero() {
            return self;
        }
        let k = modp::inv(self.0[0].1, p);
        self.scale(k, p)
    }

    fn scale(mut self, k: u64, p: u64) -> ModPoly {
        if k == 0 {
            return ModPoly::zero();
        }
        for t in self.0.iter_mut() {
            t.1 = modp::mul(t.1, k, p);
        }
        self
    }

    fn mul(&self, other: &ModPoly, p: u64) -> ModPoly {
        let mut t = Vec::with_capacity(self.0.len() * other.0.len());
        for (ma, ca) in &self.0 {
            for (mb, cb) in &other.0 {
                t.push((ma.mul(*mb), modp::mul(*ca, *cb, p)));
            }
        }
        ModPoly::from_unsorted(t, p)
    }

    fn degree_in(&self, v: Var) -> u32 {
        self.0.iter().map(|(m, _)| m.exponent(v) as u32).max().unwrap_or(0)
    }

    fn evaluate(&self, v: Var, x: u64, p: u64) -> ModPoly {
        let d = self.degree_in(v) as usize;
        let mut powers = Vec::with_capacity(d + 1);
        let mut acc = 1u64;
        for _ in 0..=d {
            powers.push(acc);
            acc = modp::mul(acc, x, p);
        }
        let t = self
            .0
            .iter()
            .map(|(m, c)| (m.without(v), modp::mul(*c, powers[m.exponent(v) as usize], p)))
            .collect();
        ModPoly::from_unsorted(t, p)
    }

    /// Terms grouped by their monomial in the other variables, each group a
    /// dense polynomial in `v`; groups in descending order.
    fn split(&self, v: Var) -> Vec<(Monomial, Vec<u64>)> {
        let mut groups: BTreeMap<Monomial, Vec<u64>> = BTreeMap::new();
        for (m, c) in &self.0 {
            let e = m.exponent(v) as usize;
            let g = groups.entry(m.without(v)).or_default();
            if g.len() <= e {
                g.resize(e + 1, 0);
            }
            g[e] = *c;
        }
        groups.into_iter().rev().collect()
    }

    fn join(v: Var, groups: &[(Monomial, Vec<u64>)], p: u64) -> ModPoly {
        let mut t = Vec::new();
        for (s, coeffs) in groups {
            for (e, c) in coeffs.iter().enumerate() {
                if *c != 0 {
                    t.push((s.mul(Monomial::one_var(v, e as u8)), *c));
                }
            }
        }
        ModPoly::from_unsorted(t, p)
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    fn div_exact(&self, d: &ModPoly, p: u64) -> Option<ModPoly> {
        if self.is_zero() {
            return Some(ModPoly::zero());
        }
        // Each quotient term's exponents are bounded by the difference of
        // the operands' exponents, which caps the work on failure.
        let bound: Vec<(Var, u8)> = super::var::ALL_VARS
            .iter()
            .map(|v| {
                let (a, b) = (self.degree_in(*v), d.degree_in(*v));
                (*v, a.saturating_sub(b) as u8)
            })
            .collect();
        if super::var::ALL_VARS.iter().any(|v| d.degree_in(*v) > self.degree_in(*v)) {
            return None;
        }
        let (dm, dc) = d.0[0];
        let dinv = modp::inv(dc, p);
        let mut rem: BTreeMap<Monomial, u64> = self.0.iter().copied().collect();
        let mut quot = Vec::new();
        while let Some((&rm, &rc)) = rem.iter().next_back() {
            let qm = rm.div(dm)?;
            if bound.iter().any(|(v, b)| qm.exponent(*v) > *b) {
                return None;
            }
            let qc = modp::mul(rc, dinv, p);
            for (m, c) in &d.0 {
                let key = m.mul(qm);
                let sub = modp::mul(*c, qc, p);
                let slot = rem.entry(key).or_insert(0);
                *slot = modp::sub(*slot, sub, p);
                if *slot == 0 {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        Some(ModPoly(quot))
    }
}

mod uni {
    //! Dense univariate helpers, coefficient of `y^i` at index `i`.
    use super::modp;
    use alloc::vec::Vec;

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
        a.iter().rev().fold(0, |acc, c| modp::add(modp::mul(acc, x, p), *c, p))
    }

    pub fn monic(a: Vec<u64>, p: u64) -> Vec<u64> {
        match a.last() {
            None => a,
            Some(&l) => {
                let k = modp::inv(l, p);
                a.into_iter().map(|c| modp::mul(c, k, p)).collect()
            }
        }
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let g = modp::UniPoly::gcd(
            &modp::UniPoly(trim(a.to_vec())),
            &modp::UniPoly(trim(b.to_vec())),
            p,
        );
        monic(g.0, p)
    }

    /// Quotient of an exact division.
    pub fn div(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        let db = b.len() - 1;
        if r.len() <= db {
            return Vec::new();
        }
        let linv = modp::inv(b[db], p);
        let mut q = vec![0u64; r.len() - db];
        while r.len() > db {
            let c = modp::mul(*r.last().unwrap(), linv, p);
            let s = r.len() - 1 - db;
            q[s] = c;
            for (i, bc) in b.iter().enumerate() {
                r[s + i] = modp::sub(r[s + i], modp::mul(c, *bc, p), p);
            }
            r.pop();
        }
        q
    }

    /// `a * (y - x)`.
    pub fn mul_linear(a: &[u64], x: u64, p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len() + 1];
        for (i, c) in a.iter().enumerate() {
            out[i + 1] = modp::add(out[i + 1], *c, p);
            out[i] = modp::sub(out[i], modp::mul(*c, x, p), p);
        }
        out
    }

    pub fn add_scaled(a: &mut Vec<u64>, b: &[u64], k: u64, p: u64) {
        if a.len() < b.len() {
            a.resize(b.len(), 0);
        }
        for (i, c) in b.iter().enumerate() {
            a[i] = modp::add(a[i], modp::mul(*c, k, p), p);
        }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut x = z;
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Monic gcd modulo `p` of polynomials in `vars`; `None` if the images
/// never settled, which the caller treats as an unlucky prime.
fn gcd_mod(a: &ModPoly, b: &ModPoly, vars: &[Var], p: u64, seed: u64) -> Option<ModPoly> {
    if a.is_zero() {
        return Some(b.clone().monic(p));
    }
    if b.is_zero() {
        return Some(a.clone().monic(p));
    }
    if a.is_constant() || b.is_constant() || vars.is_empty() {
        return Some(ModPoly::constant(1));
    }
    let y = vars[vars.len() - 1];
    let rest = &vars[..vars.len() - 1];
    let ga = a.split(y);
    let gb = b.split(y);
    if rest.is_empty() {
        let g = uni::gcd(&ga[0].1, &gb[0].1, p);
        return Some(ModPoly::join(y, &[(Monomial::ONE, g)], p));
    }
    let content = |g: &[(Monomial, Vec<u64>)]| {
        let mut c: Vec<u64> = Vec::new();
        for (_, u) in g {
            c = if c.is_empty() { uni::monic(u.clone(), p) } else { uni::gcd(&c, u, p) };
            if c.len() == 1 {
                break;
            }
        }
        c
    };
    let ca = content(&ga);
    let cb = content(&gb);
    let c = uni::gcd(&ca, &cb, p);
    let prim = |g: Vec<(Monomial, Vec<u64>)>, k: &[u64]| -> Vec<(Monomial, Vec<u64>)> {
        if k.len() == 1 {
            return g;
        }
        g.into_iter().map(|(m, u)| (m, uni::div(&u, k, p))).collect()
    };
    let ga = prim(ga, &ca);
    let gb = prim(gb, &cb);
    let content_poly = ModPoly::join(y, &[(Monomial::ONE, c)], p);
    // Primitive parts free of the other variables are units.
    if ga.len() == 1 && ga[0].0 == Monomial::ONE || gb.len() == 1 && gb[0].0 == Monomial::ONE {
        return Some(content_poly.monic(p));
    }
    let la = ga[0].1.clone();
    let lb = gb[0].1.clone();
    let gamma = uni::gcd(&la, &lb, p);
    let deg_y = |g: &[(Monomial, Vec<u64>)]| g.iter().map(|(_, u)| u.len().saturating_sub(1)).max().unwrap_or(0);
    let bound = deg_y(&ga).min(deg_y(&gb)) + gamma.len() - 1;
    let a1 = ModPoly::join(y, &ga, p);
    let b1 = ModPoly::join(y, &gb, p);

    let mut lead: Option<Monomial> = None;
    let mut interp: BTreeMap<Monomial, Vec<u64>> = BTreeMap::new();
    let mut modulus: Vec<u64> = vec![1];
    let mut points = 0usize;
    let mut s = seed;
    let mut attempts = 0usize;
    while attempts < 4 * bound + 32 {
        attempts += 1;
        s = splitmix(s);
        let x = 1 + s % (p - 1);
        if uni::eval(&la, x, p) == 0 || uni::eval(&lb, x, p) == 0 || uni::eval(&modulus, x, p) == 0 {
            continue;
        }
        let ax = a1.evaluate(y, x, p);
        let bx = b1.evaluate(y, x, p);
        let gx = gcd_mod(&ax, &bx, rest, p, splitmix(s ^ 0x5555))?;
        if gx.is_constant() {
            return Some(content_poly.monic(p));
        }
        let lm = gx.lead();
        match lead {
            Some(l) if lm > l => continue,
            Some(l) if lm == l => {}
            _ => {
                lead = Some(lm);
                interp.clear();
                modulus = vec![1];
                points = 0;
            }
        }
        let gx = gx.scale(uni::eval(&gamma, x, p), p);
        // Newton step: H += (g(x) - H(x)) * M / M(x).
        let minv = modp::inv(uni::eval(&modulus, x, p), p);
        let mut changed = false;
        let mut seen: Vec<Monomial> = Vec::with_capacity(gx.0.len());
        for (m, c) in &gx.0 {
            seen.push(*m);
            let h = interp.entry(*m).or_default();
            let diff = modp::sub(*c, uni::eval(h, x, p), p);
            if diff != 0 {
                changed = true;
                uni::add_scaled(h, &modulus, modp::mul(diff, minv, p), p);
            }
        }
        for (m, h) in interp.iter_mut() {
            if seen.contains(m) {
                continue;
            }
            let diff = modp::sub(0, uni::eval(h, x, p), p);
            if diff != 0 {
                changed = true;
                uni::add_scaled(h, &modulus, modp::mul(diff, minv, p), p);
            }
        }
        modulus = uni::mul_linear(&modulus, x, p);
        points += 1;
        if points > 1 && !changed || points > bound {
            let groups: Vec<(Monomial, Vec<u64>)> =
                interp.iter().rev().map(|(m, u)| (*m, uni::trim(u.clone()))).filter(|g| !g.1.is_empty()).collect();
            let k = content(&groups);
            let h = ModPoly::join(y, &prim(groups, &k), p);
            if a1.div_exact(&h, p).is_some() && b1.div_exact(&h, p).is_some() {
                return Some(h.mul(&content_poly, p).monic(p));
            }
            if points > bound {
                return None;
            }
        }
    }
    None
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = modp::pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = modp::mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes descending from just below 2^62.
fn primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    core::iter::from_fn(move || {
        while !is_prime(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
}

/// `n/d` with `n/d = u mod m` and both below `sqrt(m/2)`.
fn reconstruct(u: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.clone());
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = core::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = core::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(Rational::new(r1, s1))
}

/// Monic gcd of two nonzero polynomials over the rationals, or `None` if no
/// prime in the search budget produced a certified result.
pub(super) fn gcd_modular(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let support = a.support().union(b.support());
    let mut vars: Vec<Var> = support.iter().collect();
    // The innermost variable is handled by univariate gcd, so it gets the
    // highest degree; the others are interpolated.
    vars.sort_by_key(|v| core::cmp::Reverse(a.degree_in(*v).max(b.degree_in(*v))));
    let (lma, lmb) = (a.leading().unwrap().0, b.leading().unwrap().0);

    let mut lead: Option<Monomial> = None;
    let mut residues: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    let mut modulus = BigInt::one();
    let mut last: Option<Polynomial> = None;
    for (i, p) in primes().take(MAX_PRIMES).enumerate() {
        let (ap, bp) = match (ModPoly::reduce(a, p), ModPoly::reduce(b, p)) {
            (Some(x), Some(y)) => (x, y),
            _ => continue,
        };
        if ap.is_zero() || bp.is_zero() || ap.lead() != lma || bp.lead() != lmb {
            continue;
        }
        let g = match gcd_mod(&ap, &bp, &vars, p, splitmix(p ^ i as u64)) {
            Some(g) => g,
            None => continue,
        };
        if g.is_constant() {
            return Some(Polynomial::one());
        }
        match lead {
            Some(l) if g.lead() > l => continue,
            Some(l) if g.lead() == l => {}
            _ => {
                lead = Some(g.lead());
                residues.clear();
                modulus = BigInt::one();
                last = None;
            }
        }
        // Chinese remaindering, coefficientwise; absent terms are zero.
        let pb = BigInt::from(p);
        let minv = BigInt::from(modp::inv((&modulus % &pb).to_u64().unwrap(), p));
        let mut keys: Vec<Monomial> = residues.keys().copied().collect();
        keys.extend(g.0.iter().map(|t| t.0));
        keys.sort_unstable();
        keys.dedup();
        let image: BTreeMap<Monomial, u64> = g.0.iter().copied().collect();
        for k in keys {
            let r = residues.entry(k).or_insert_with(BigInt::zero);
            let c = BigInt::from(*image.get(&k).unwrap_or(&0));
            let delta = ((&c - &*r).mod_floor(&pb) * &minv).mod_floor(&pb);
            *r += &modulus * delta;
        }
        modulus *= &pb;
        residues.retain(|_, v| !v.is_zero());

        let mut terms = Vec::with_capacity(residues.len());
        let mut ok = true;
        for (m, r) in &residues {
            match reconstruct(r, &modulus) {
                Some(q) => terms.push((*m, q)),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            last = None;
            continue;
        }
        let cand = Polynomial::from_terms(terms);
        if last.as_ref() == Some(&cand) && a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
            return Some(cand);
        }
        last = Some(cand);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn poly(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = primes().take(4).collect();
        assert_eq!(ps[0], 4_611_686_018_427_387_847);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(!is_prime(4_611_686_018_427_387_779));
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_003i64) * BigInt::from(999_983i64);
        let inv23 = BigInt::from(23).extended_gcd(&m).x.mod_floor(&m);
        let u = (BigInt::from(-17) * inv23).mod_floor(&m);
        assert_eq!(reconstruct(&u, &m), Some(Rational::new(BigInt::from(-17), BigInt::from(23))));
        assert_eq!(reconstruct(&BigInt::from(5), &m), Some(Rational::from_integer(BigInt::from(5))));
    }

    #[test]
    fn rational_coefficients() {
        let f = poly("x*y/3 - 5/7*t*a0 + q^2");
        let a = &f * &poly("x^2 - y*t + 2");
        let b = &f * &poly("q*a0 + 3*x - 1/2");
        assert_eq!(gcd_modular(&a, &b), Some(f.monic()));
    }

    #[test]
    fn high_degree_shared_factor() {
        let f = poly("q^3*p^4 + 2*q*p^3*a1 + p^2*a1^2 + t*q + 1");
        let a = &f.pow(3) * &poly("q*p + t");
        let b = &f.pow(2) * &poly("p^5*t - a0 + q");
        assert_eq!(gcd_modular(&a, &b), Some(f.pow(2).monic()));
    }
}
