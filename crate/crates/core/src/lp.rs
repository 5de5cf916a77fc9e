//! Feasibility of homogeneous rational systems with strict inequalities.
//!
//! A homogeneous system has a solution with some rows `> 0` exactly when it
//! has one with those rows `>= 1` (scale any solution), so strict rows are
//! replaced by `>= 1` and the resulting system is solved by an exact
//! phase-one simplex with Bland's rule.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Homogeneous system in `dim` unknowns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSystem {
    pub dim: usize,
    /// Rows `c` with `c . x > 0`.
    pub strict: Vec<Vec<BigInt>>,
    /// Rows `c` with `c . x >= 0`.
    pub weak: Vec<Vec<BigInt>>,
    /// Rows `c` with `c . x = 0`.
    pub equalities: Vec<Vec<BigInt>>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        LinearSystem { dim, ..Default::default() }
    }

    pub fn strict(&mut self, row: Vec<BigInt>) -> &mut Self {
        self.strict.push(row);
        self
    }

    pub fn weak(&mut self, row: Vec<BigInt>) -> &mut Self {
        self.weak.push(row);
        self
    }

    pub fn equality(&mut self, row: Vec<BigInt>) -> &mut Self {
        self.equalities.push(row);
        self
    }

    pub fn validate(&self) -> Result<()> {
        for r in self.strict.iter().chain(&self.weak).chain(&self.equalities) {
            if r.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: r.len() });
            }
        }
        Ok(())
    }

    /// Checks a candidate solution exactly.
    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        let eval = |row: &[BigInt]| -> BigRational {
            row.iter().zip(x).map(|(c, v)| v * BigRational::from_integer(c.clone())).sum()
        };
        x.len() == self.dim
            && self.strict.iter().all(|r| eval(r).is_positive())
            && self.weak.iter().all(|r| !eval(r).is_negative())
            && self.equalities.iter().all(|r| eval(r).is_zero())
    }
}

/// Returns a rational solution of the system, or `None` if there is none.
///
/// # Panics
/// If a row length differs from `sys.dim`.
pub fn feasible_strict(sys: &LinearSystem) -> Option<Vec<BigRational>> {
    sys.validate().expect("linear system rows must have length dim");
    let n = sys.dim;
    if sys.strict.is_empty() {
        return Some(vec![BigRational::zero(); n]);
    }
    let slacks = sys.strict.len() + sys.weak.len();
    let m = slacks + sys.equalities.len();
    // Columns: y (n), z (n), slacks, artificials (m), right-hand side.
    let art0 = 2 * n + slacks;
    let width = art0 + m + 1;
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let rows = sys
        .strict
        .iter()
        .map(|r| (r, 1))
        .chain(sys.weak.iter().map(|r| (r, 0)))
        .chain(sys.equalities.iter().map(|r| (r, -1)));
    for (i, (row, kind)) in rows.enumerate() {
        let mut t = vec![BigRational::zero(); width];
        for (j, c) in row.iter().enumerate() {
            t[j] = BigRational::from_integer(c.clone());
            t[n + j] = -BigRational::from_integer(c.clone());
        }
        if kind >= 0 {
            t[2 * n + i] = -BigRational::one();
        }
        if kind == 1 {
            t[width - 1] = BigRational::one();
        }
        t[art0 + i] = BigRational::one();
        tab.push(t);
    }
    let mut basis: Vec<usize> = (art0..art0 + m).collect();
    // Reduced costs of "minimize the sum of artificials".
    let mut cost = vec![BigRational::zero(); width];
    for t in &tab {
        for j in 0..art0 {
            cost[j] -= &t[j];
        }
        cost[width - 1] -= &t[width - 1];
    }
    loop {
        let Some(enter) = (0..art0).find(|&j| cost[j].is_negative()) else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, t) in tab.iter().enumerate() {
            if t[enter].is_positive() {
                let ratio = &t[width - 1] / &t[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave.expect("phase-one objective is bounded below");
        pivot(&mut tab, &mut cost, r, enter);
        basis[r] = enter;
    }
    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            x[b] += &tab[i][width - 1];
        } else if b < 2 * n {
            x[b - n] -= &tab[i][width - 1];
        }
    }
    debug_assert!(sys.is_satisfied_by(&x));
    Some(x)
}

fn pivot(tab: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, c: usize) {
    let inv = tab[r][c].recip();
    for x in tab[r].iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
    let prow = tab[r].clone();
    let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
    for (i, t) in tab.iter_mut().enumerate() {
        if i != r && !t[c].is_zero() {
            let f = t[c].clone();
            for &j in &nz {
                t[j] -= &f * &prow[j];
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for &j in &nz {
            cost[j] -= &f * &prow[j];
        }
    }
}
