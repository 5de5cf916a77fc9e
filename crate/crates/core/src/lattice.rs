//! Integer matrices and sublattices of `Z^n`.
//!
//! Sublattices are stored by a canonical basis: the rows of the Hermite
//! normal form of any generating set (pivots positive and strictly moving
//! right, entries above a pivot reduced into `[0, pivot)`). Two generating
//! sets describe the same lattice exactly when their bases are equal.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Converts a slice of machine integers into big integers.
pub fn int_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Greatest common divisor of the entries (zero for the zero vector).
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides a vector by the gcd of its entries.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators and divides by the gcd, keeping the direction.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|x| (x.numer() * &l) / x.denom()).collect();
    primitive(&scaled)
}

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

fn sub_multiple(target: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows, each of which must have length `cols`.
    pub fn from_rows(rows: &[Vec<BigInt>], cols: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(IntMatrix { rows: rows.len(), cols, entries })
    }

    /// Convenience constructor for small literal matrices.
    ///
    /// # Panics
    /// If the rows are ragged.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| int_vec(r)).collect();
        Self::from_rows(&rows, cols).expect("ragged literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix { rows: self.rows, cols: cols.len(), entries }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vecs();
        echelonize(&mut rows, self.cols, false)
    }
}

/// Integer row reduction on the first `ncols` columns.
///
/// Rows are combined by unimodular operations only. Returns the number of
/// pivot rows; all later rows vanish on the first `ncols` columns. With
/// `reduce` the pivot rows are put in Hermite normal form.
pub(crate) fn echelonize(rows: &mut [Vec<BigInt>], ncols: usize, reduce: bool) -> usize {
    let mut k = 0;
    for col in 0..ncols {
        if k == rows.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in k..rows.len() {
                if !rows[i][col].is_zero()
                    && best.is_none_or(|b| rows[i][col].abs() < rows[b][col].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(k, b);
            let (head, tail) = rows.split_at_mut(k + 1);
            let pivot_row = &head[k];
            let mut clean = true;
            for r in tail.iter_mut() {
                if !r[col].is_zero() {
                    let q = r[col].div_floor(&pivot_row[col]);
                    sub_multiple(r, &q, pivot_row);
                    if !r[col].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if rows[k][col].is_zero() {
            continue;
        }
        if rows[k][col].is_negative() {
            for x in rows[k].iter_mut() {
                *x = -&*x;
            }
        }
        if reduce {
            let (head, tail) = rows.split_at_mut(k);
            let pivot_row = &tail[0];
            for r in head.iter_mut() {
                let q = r[col].div_floor(&pivot_row[col]);
                sub_multiple(r, &q, pivot_row);
            }
        }
        k += 1;
    }
    k
}

fn leading_index(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// A sublattice of `Z^n` with its canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubLattice {
    ambient_dim: usize,
    basis: Vec<Vec<BigInt>>,
}

impl SubLattice {
    pub fn zero(n: usize) -> Self {
        SubLattice { ambient_dim: n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        SubLattice { ambient_dim: n, basis: IntMatrix::identity(n).row_vecs() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis vectors as the rows of a matrix.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.basis, self.ambient_dim).expect("basis rows have ambient length")
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|b| leading_index(b).expect("basis vectors are nonzero")).collect()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut w = v.to_vec();
        for b in &self.basis {
            let p = leading_index(b).expect("basis vectors are nonzero");
            let (q, r) = w[p].div_rem(&b[p]);
            if !r.is_zero() {
                return false;
            }
            sub_multiple(&mut w, &q, b);
        }
        is_zero_vec(&w)
    }

    pub fn is_subset_of(&self, other: &SubLattice) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// Is `v` orthogonal to every vector of the lattice?
    pub fn is_orthogonal_to(&self, v: &[BigInt]) -> bool {
        self.basis.iter().all(|b| dot(b, v).is_zero())
    }

    /// Sum of two sublattices of the same ambient lattice.
    pub fn join(&self, other: &SubLattice) -> Result<SubLattice> {
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        hermite_basis(&gens, self.ambient_dim)
    }
}

/// Canonical basis of the lattice generated by `vectors` inside `Z^dim`.
pub fn hermite_basis(vectors: &[Vec<BigInt>], dim: usize) -> Result<SubLattice> {
    if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
    }
    let mut rows = vectors.to_vec();
    let r = echelonize(&mut rows, dim, true);
    rows.truncate(r);
    Ok(SubLattice { ambient_dim: dim, basis: rows })
}

/// `{x in Z^cols : M x = 0}`.
pub fn kernel_lattice(m: &IntMatrix) -> SubLattice {
    let (r, n) = (m.rows(), m.cols());
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut row = m.column(j);
            row.extend((0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let rank = echelonize(&mut rows, r, false);
    let tails: Vec<Vec<BigInt>> = rows[rank..].iter().map(|row| row[r..].to_vec()).collect();
    hermite_basis(&tails, n).expect("kernel vectors have ambient length")
}

/// `{x in Z^n : x . l = 0 for all l in L}`.
pub fn perp_lattice(l: &SubLattice) -> SubLattice {
    if l.is_zero() {
        return SubLattice::full(l.ambient_dim);
    }
    kernel_lattice(&l.matrix())
}

/// The saturation `L_Q ∩ Z^n` and the index of `L` in it.
pub fn saturation(l: &SubLattice) -> (SubLattice, BigInt) {
    let sat = perp_lattice(&perp_lattice(l));
    if l.is_zero() {
        return (sat, BigInt::one());
    }
    let piv = sat.pivots();
    let sat_det: BigInt = sat.basis.iter().zip(&piv).map(|(b, &p)| b[p].clone()).product();
    let det_l = determinant(&l.matrix().select_columns(&piv)).abs();
    let index = det_l / sat_det;
    (sat, index)
}

/// Determinant of a square integer matrix (fraction-free elimination).
///
/// # Panics
/// If the matrix is not square.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.row_vecs();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of the Smith normal form.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.row_vecs();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = min_entry(&a, t, t..r, t..c) else { break };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    let pivot_row = a[t].clone();
                    sub_multiple(&mut a[i], &q, &pivot_row);
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..c {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut() {
                        let s = row[t].clone();
                        row[j] -= &q * s;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if dirty {
                let col = min_entry(&a, t, t..r, t..t + 1);
                let row = min_entry(&a, t, t..t + 1, t..c);
                let pick = match (col, row) {
                    (Some(x), Some(y)) => {
                        if a[x.0][x.1].abs() <= a[y.0][y.1].abs() {
                            x
                        } else {
                            y
                        }
                    }
                    (Some(x), None) | (None, Some(x)) => x,
                    (None, None) => unreachable!("pivot entry is nonzero"),
                };
                a.swap(t, pick.0);
                swap_cols(&mut a, t, pick.1);
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    let src = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(src) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn min_entry(
    a: &[Vec<BigInt>],
    _t: usize,
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// One solution of the rational system `A x = b`, free variables set to zero.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational], ncols: usize) -> Option<Vec<BigRational>> {
    let m = a.len();
    let mut rows: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            let mut row = r.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut k = 0;
    for col in 0..ncols {
        let Some(p) = (k..m).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(k, p);
        let inv = rows[k][col].recip();
        for x in rows[k].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[k].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != k && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        k += 1;
        if k == m {
            break;
        }
    }
    if rows[k..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][ncols].clone();
    }
    Some(x)
}

/// Rank over the rationals of a list of integer vectors.
pub fn rational_rank(vectors: &[Vec<BigInt>], dim: usize) -> usize {
    let mut rows = vectors.to_vec();
    echelonize(&mut rows, dim, false)
}
