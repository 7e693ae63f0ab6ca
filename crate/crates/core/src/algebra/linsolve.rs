//! Exact sparse Gaussian elimination for affine systems `A c = b`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Sparse row: strictly increasing column indices, no zero entries.
pub type SparseVec = Vec<(usize, Rational)>;

/// One equation `sum row[j] * c_j = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub row: SparseVec,
    pub rhs: Rational,
}

impl Equation {
    pub fn new(mut entries: Vec<(usize, Rational)>, rhs: Rational) -> Equation {
        entries.sort_by_key(|e| e.0);
        let mut row: SparseVec = Vec::with_capacity(entries.len());
        for (j, c) in entries {
            match row.last_mut() {
                Some((lj, lc)) if *lj == j => *lc += c,
                _ => row.push((j, c)),
            }
        }
        row.retain(|(_, c)| !c.is_zero());
        Equation { row, rhs }
    }

    pub fn is_trivial(&self) -> bool {
        self.row.is_empty() && self.rhs.is_zero()
    }

    /// Residual `row . v - rhs` for a dense vector.
    pub fn residual(&self, v: &[Rational]) -> Rational {
        let mut s = -self.rhs.clone();
        for (j, c) in &self.row {
            s += c * &v[*j];
        }
        s
    }

    /// Value of the homogeneous part on a sparse vector.
    pub fn apply_sparse(&self, v: &SparseVec) -> Rational {
        let mut s = Rational::zero();
        let (mut i, mut k) = (0, 0);
        while i < self.row.len() && k < v.len() {
            match self.row[i].0.cmp(&v[k].0) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => k += 1,
                core::cmp::Ordering::Equal => {
                    s += &self.row[i].1 * &v[k].1;
                    i += 1;
                    k += 1;
                }
            }
        }
        s
    }
}

/// Solution set of a consistent system: `particular + span(basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub ncols: usize,
    pub particular: Vec<Rational>,
    pub basis: Vec<SparseVec>,
    pub pivots: Vec<usize>,
    pub free: Vec<usize>,
}

impl AffineSolution {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    pub ncols: usize,
    pub equations: Vec<Equation>,
}

impl SparseSystem {
    pub fn new(ncols: usize) -> SparseSystem {
        SparseSystem { ncols, equations: Vec::new() }
    }

    pub fn push(&mut self, eq: Equation) {
        debug_assert!(eq.row.iter().all(|(j, _)| *j < self.ncols));
        if !eq.is_trivial() {
            self.equations.push(eq);
        }
    }

    /// Reduced row echelon form; `None` if inconsistent.
    pub fn solve(&self) -> Option<AffineSolution> {
        // pivot column -> row with leading 1 at that column
        let mut pivots: BTreeMap<usize, Equation> = BTreeMap::new();
        for eq in &self.equations {
            let mut r = eq.clone();
            loop {
                let Some(&(lead, _)) = r.row.first() else { break };
                match pivots.get(&lead) {
                    Some(prow) => {
                        let f = r.row[0].1.clone();
                        r = axpy(&r, &f, prow);
                    }
                    None => break,
                }
            }
            if r.row.is_empty() {
                if !r.rhs.is_zero() {
                    return None;
                }
                continue;
            }
            let inv = r.row[0].1.recip();
            if !inv.is_one() {
                for e in r.row.iter_mut() {
                    e.1 *= &inv;
                }
                r.rhs *= &inv;
            }
            pivots.insert(r.row[0].0, r);
        }
        // Back substitution, highest pivot first, so every pivot row ends up
        // free of all other pivot columns.
        let cols: Vec<usize> = pivots.keys().copied().collect();
        for &c in cols.iter().rev() {
            let prow = pivots[&c].clone();
            for &other in cols.iter() {
                if other >= c {
                    break;
                }
                let row = pivots.get(&other).unwrap();
                if let Some(f) = coefficient(&row.row, c) {
                    let updated = axpy(row, &f, &prow);
                    pivots.insert(other, updated);
                }
            }
        }
        let mut is_pivot = alloc::vec![false; self.ncols];
        for &c in &cols {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.ncols).filter(|j| !is_pivot[*j]).collect();
        let mut particular = alloc::vec![Rational::zero(); self.ncols];
        for (&c, row) in &pivots {
            particular[c] = row.rhs.clone();
        }
        let mut basis: Vec<SparseVec> = Vec::with_capacity(free.len());
        // Column-major view of the non-pivot entries of each pivot row.
        let mut by_free: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (&c, row) in &pivots {
            for (j, v) in row.row.iter().skip(1) {
                by_free.entry(*j).or_default().push((c, -v.clone()));
            }
        }
        for &f in &free {
            let mut v: SparseVec = by_free.remove(&f).unwrap_or_default();
            v.push((f, Rational::one()));
            v.sort_by_key(|e| e.0);
            basis.push(v);
        }
        Some(AffineSolution { ncols: self.ncols, particular, basis, pivots: cols, free })
    }

    /// Whether a dense vector satisfies every equation.
    pub fn satisfied_by(&self, v: &[Rational]) -> bool {
        self.equations.iter().all(|e| e.residual(v).is_zero())
    }

    /// Whether a sparse direction satisfies the homogeneous system.
    pub fn direction_allowed(&self, v: &SparseVec) -> bool {
        self.equations.iter().all(|e| e.apply_sparse(v).is_zero())
    }
}

fn coefficient(row: &SparseVec, col: usize) -> Option<Rational> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|i| row[i].1.clone())
}

/// `r - f * p`.
fn axpy(r: &Equation, f: &Rational, p: &Equation) -> Equation {
    let mut out: SparseVec = Vec::with_capacity(r.row.len() + p.row.len());
    let (mut i, mut k) = (0, 0);
    while i < r.row.len() || k < p.row.len() {
        let ci = r.row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let ck = p.row.get(k).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < ck {
            out.push(r.row[i].clone());
            i += 1;
        } else if ck < ci {
            out.push((ck, -(f * &p.row[k].1)));
            k += 1;
        } else {
            let v = &r.row[i].1 - f * &p.row[k].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            k += 1;
        }
    }
    Equation { row: out, rhs: &r.rhs - f * &p.rhs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn small_affine_system() {
        // c0 + c1 = 3, c1 - c2 = 1 over three unknowns
        let mut s = SparseSystem::new(3);
        s.push(Equation::new(vec![(0, int(1)), (1, int(1))], int(3)));
        s.push(Equation::new(vec![(1, int(1)), (2, int(-1))], int(1)));
        let sol = s.solve().unwrap();
        assert_eq!(sol.dimension(), 1);
        assert!(s.satisfied_by(&sol.particular));
        for b in &sol.basis {
            assert!(s.direction_allowed(b));
        }
    }

    #[test]
    fn inconsistent() {
        let mut s = SparseSystem::new(2);
        s.push(Equation::new(vec![(0, int(1)), (1, int(1))], int(1)));
        s.push(Equation::new(vec![(0, int(2)), (1, int(2))], int(3)));
        assert!(s.solve().is_none());
    }
}
