//! Smith normal form over the integers.
//!
//! Elimination runs on a sparse row-major copy of the matrix. It first tries checked `i64`
//! arithmetic and restarts with arbitrary precision integers if any operation overflows.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    /// `cols[j]` lists `(row, value)` pairs with nonzero value, rows increasing.
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, cols: vec![Vec::new(); ncols] }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols =
            (0..ncols).map(|j| (0..nrows).filter(|&i| rows[i][j] != 0).map(|i| (i, rows[i][j])).collect()).collect();
        Self { nrows, ncols, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.ncols]; self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                d[i][j] = v;
            }
        }
        d
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Product `self · other` (dense accumulation, for checks on small matrices).
    pub fn mul(&self, other: &SparseMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.ncols, other.nrows);
        let mut out = vec![vec![0i64; other.ncols]; self.nrows];
        for (j, col) in other.cols.iter().enumerate() {
            for &(k, b) in col {
                for &(i, a) in &self.cols[k] {
                    out[i][j] += a * b;
                }
            }
        }
        out
    }
}

/// Invariant factors of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Positive diagonal entries, each dividing the next.
    pub factors: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors larger than one.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().filter(|f| !f.is_one())
    }
}

trait Scalar: Clone + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    fn is_unit(&self) -> bool;
    /// Truncated quotient `a / b`.
    fn quot(&self, b: &Self) -> Self;
    /// `self - q * b`, or `None` on overflow.
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn quot(&self, b: &Self) -> Self {
        self / b
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        q.checked_mul(*b).and_then(|p| self.checked_sub(p))
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn quot(&self, b: &Self) -> Self {
        self / b
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

struct Work<T> {
    rows: Vec<BTreeMap<usize, T>>,
    /// Rows holding a nonzero entry in each column.
    col_rows: Vec<BTreeSet<usize>>,
}

impl<T: Scalar> Work<T> {
    fn new(m: &SparseMatrix) -> Self {
        let mut rows = vec![BTreeMap::new(); m.nrows];
        let mut col_rows = vec![BTreeSet::new(); m.ncols];
        for (j, col) in m.cols.iter().enumerate() {
            for &(i, v) in col {
                if v != 0 {
                    rows[i].insert(j, T::from_i64(v));
                    col_rows[j].insert(i);
                }
            }
        }
        Self { rows, col_rows }
    }

    /// Smallest |entry|, ties broken by row-major position.
    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &T)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, v) in row {
                if best.is_none_or(|(_, _, b)| v.cmp_abs(b) == Ordering::Less) {
                    best = Some((i, j, v));
                    if v.is_unit() {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn set(&mut self, i: usize, j: usize, v: T) {
        if v.is_zero() {
            self.rows[i].remove(&j);
            self.col_rows[j].remove(&i);
        } else {
            self.rows[i].insert(j, v);
            self.col_rows[j].insert(i);
        }
    }

    /// `row_i -= q · row_r`.
    fn row_op(&mut self, i: usize, r: usize, q: &T) -> Option<()> {
        let src: Vec<(usize, T)> = self.rows[r].iter().map(|(&j, v)| (j, v.clone())).collect();
        for (j, v) in src {
            let cur = self.rows[i].get(&j).cloned().unwrap_or_else(|| T::from_i64(0));
            let new = cur.sub_mul(q, &v)?;
            self.set(i, j, new);
        }
        Some(())
    }

    fn remove_pivot(&mut self, r: usize, c: usize) -> T {
        let p = self.rows[r].remove(&c).expect("pivot present");
        self.col_rows[c].remove(&r);
        debug_assert!(self.rows[r].is_empty() && self.col_rows[c].is_empty());
        p
    }
}

fn diagonalize<T: Scalar>(m: &SparseMatrix) -> Option<Vec<BigInt>> {
    let mut w = Work::<T>::new(m);
    let mut diag = Vec::new();
    while let Some((r, c)) = w.pivot() {
        let p = w.rows[r][&c].clone();

        let others: Vec<usize> = w.col_rows[c].iter().copied().filter(|&i| i != r).collect();
        let mut clean = true;
        for i in others {
            let q = w.rows[i][&c].quot(&p);
            w.row_op(i, r, &q)?;
            clean &= !w.rows[i].contains_key(&c);
        }
        if !clean {
            continue;
        }
        // Column c now holds only the pivot, so column operations only touch row r.
        let rest: Vec<(usize, T)> = w.rows[r].iter().filter(|(&j, _)| j != c).map(|(&j, v)| (j, v.clone())).collect();
        for (j, v) in rest {
            let q = v.quot(&p);
            let new = v.sub_mul(&q, &p)?;
            w.set(r, j, new);
            clean &= !w.rows[r].contains_key(&j);
        }
        if clean {
            diag.push(w.remove_pivot(r, c).to_bigint().abs());
        }
    }
    Some(diag)
}

/// Rewrites a diagonal into invariant-factor form `d₁ | d₂ | …`.
fn normalize(mut diag: Vec<BigInt>) -> Vec<BigInt> {
    diag.sort();
    let split = diag.iter().position(|d| !d.is_one()).unwrap_or(diag.len());
    let tail = &mut diag[split..];
    for i in 0..tail.len() {
        for j in i + 1..tail.len() {
            let g = tail[i].gcd(&tail[j]);
            let l = tail[i].lcm(&tail[j]);
            tail[i] = g;
            tail[j] = l;
        }
    }
    diag.sort();
    diag
}

/// Invariant factors of `m`. Pivots are chosen by minimal absolute value, ties by row-major
/// position.
pub fn smith_normal_form(m: &SparseMatrix) -> SnfResult {
    let diag =
        diagonalize::<i64>(m).unwrap_or_else(|| diagonalize::<BigInt>(m).expect("bigint arithmetic cannot overflow"));
    SnfResult { factors: normalize(diag) }
}

/// Same as [`smith_normal_form`] but always in arbitrary precision.
pub fn smith_normal_form_bigint(m: &SparseMatrix) -> SnfResult {
    SnfResult { factors: normalize(diagonalize::<BigInt>(m).expect("bigint arithmetic cannot overflow")) }
}
