//! Arithmetic in a prime field, used to certify coprimality cheaply.

use alloc::vec::Vec;

/// Primes below 2^62 tried in turn.
pub const PRIMES: [u64; 4] = [
    4_611_686_018_427_387_847,
    4_611_686_018_427_387_817,
    4_611_686_018_427_387_787,
    4_611_686_018_427_387_761,
];

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

/// Dense univariate polynomial, coefficient of x^i at index i, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(pub Vec<u64>);

impl UniPoly {
    pub fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
        let db = b.len() - 1;
        let lead_inv = inv(b[db], p);
        while a.len() > db {
            let c = mul(*a.last().unwrap(), lead_inv, p);
            let shift = a.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                a[shift + i] = sub(a[shift + i], mul(c, bc, p), p);
            }
            a.pop();
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        a
    }

    /// Monic-free Euclidean gcd; only the degree matters to callers.
    pub fn gcd(a: &UniPoly, b: &UniPoly, p: u64) -> UniPoly {
        let mut x = a.0.clone();
        let mut y = b.0.clone();
        while !y.is_empty() {
            let r = UniPoly::rem(x, &y, p);
            x = y;
            y = r;
        }
        UniPoly(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse() {
        let p = PRIMES[0];
        for a in [1u64, 2, 3, 12345, p - 1] {
            assert_eq!(mul(a, inv(a, p), p), 1);
        }
    }

    #[test]
    fn gcd_degree() {
        let p = PRIMES[0];
        // (x+1)(x+2) and (x+1)(x+3)
        let a = UniPoly(vec![2, 3, 1]);
        let b = UniPoly(vec![3, 4, 1]);
        assert_eq!(UniPoly::gcd(&a, &b, p).degree(), Some(1));
        let c = UniPoly(vec![5, 1]);
        assert_eq!(UniPoly::gcd(&a, &c, p).degree(), Some(0));
    }
}
