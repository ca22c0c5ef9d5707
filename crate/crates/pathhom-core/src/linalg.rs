//! Exact sparse matrices over the coefficient field, with canonical reduced
//! row echelon form, kernel bases, and quotient ranks.
//!
//! Everything is deterministic: the pivot rule is smallest column index then
//! smallest row index, storage is ordered maps, and every subspace is kept
//! in canonical RREF form so that equal subspaces compare equal and
//! serialized output is reproducible bit for bit. Over the rationals the
//! forward elimination is fraction-free (Bareiss) on integer-scaled rows;
//! over GF(p) it is ordinary Gauss-Jordan. Small matrices are eliminated
//! densely, larger ones on sparse rows; both paths produce identical RREF.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, K};

/// Sparse coordinate vector: index -> nonzero scalar.
pub type SparseVec = BTreeMap<usize, K>;

/// Matrices above this entry-count bound are eliminated on sparse rows.
pub const DEFAULT_DENSE_LIMIT: usize = 4096;

/// A sparse matrix with fixed dimensions. Entries are keyed column-major
/// and zero values are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: BTreeMap<(usize, usize), K>, // (col, row) -> value
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from sparse rows (each `cols` wide).
    pub fn from_rows(field: Field, cols: usize, rows: Vec<SparseVec>) -> Self {
        let mut m = Matrix::zero(field, rows.len(), cols);
        for (r, row) in rows.into_iter().enumerate() {
            for (c, v) in row {
                m.set(r, c, v);
            }
        }
        m
    }

    /// Builds a matrix from sparse columns (each `rows` tall).
    pub fn from_columns(field: Field, rows: usize, columns: Vec<SparseVec>) -> Self {
        let mut m = Matrix::zero(field, rows, columns.len());
        for (c, col) in columns.into_iter().enumerate() {
            for (r, v) in col {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        if v.is_zero() {
            self.entries.remove(&(c, r));
        } else {
            self.entries.insert((c, r), v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&K> {
        self.entries.get(&(c, r))
    }

    /// Entries as (row, col, value), column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &K)> {
        self.entries.iter().map(|(&(c, r), v)| (r, c, v))
    }

    pub fn column(&self, c: usize) -> SparseVec {
        self.entries
            .range((c, 0)..=(c, usize::MAX))
            .map(|(&(_, r), v)| (r, v.clone()))
            .collect()
    }

    fn into_sparse_rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![SparseVec::new(); self.rows];
        for (&(c, r), v) in &self.entries {
            rows[r].insert(c, v.clone());
        }
        rows
    }

    /// Matrix-vector product with a sparse column vector of length `cols`.
    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = SparseVec::new();
        for (&c, coeff) in v {
            assert!(c < self.cols, "vector index out of range");
            for (r, col_val) in self.column(c) {
                let add = col_val.mul(coeff);
                merge_term(&mut acc, r, add);
            }
        }
        acc
    }

    /// Matrix product; `self.cols` must equal `other.rows`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut cols = Vec::with_capacity(other.cols);
        for j in 0..other.cols {
            cols.push(self.mul_vec(&other.column(j)));
        }
        Ok(Matrix::from_columns(self.field, self.rows, cols))
    }

    /// Canonical reduced row echelon form with the default dense/sparse
    /// threshold.
    pub fn rref(&self) -> Rref {
        self.rref_with_dense_limit(DEFAULT_DENSE_LIMIT)
    }

    /// As `rref`, but matrices with at most `dense_limit` positions are
    /// eliminated densely. Both elimination paths yield the same RREF.
    pub fn rref_with_dense_limit(&self, dense_limit: usize) -> Rref {
        let rows = self.into_sparse_rows();
        let dense = self.rows.saturating_mul(self.cols) <= dense_limit;
        let reduced = match self.field {
            Field::Rational => {
                if dense {
                    rref_rational_dense(rows, self.cols)
                } else {
                    rref_rational_sparse(rows, self.cols)
                }
            }
            Field::GfP(p) => {
                if dense {
                    rref_gf_dense(rows, self.cols, p)
                } else {
                    rref_gf_sparse(rows, self.cols, p)
                }
            }
        };
        let rank = reduced.pivots.len();
        let matrix = Matrix::from_rows(self.field, self.cols, reduced.rows);
        // pad back to the original row count with zero rows
        let mut matrix = matrix;
        matrix.rows = self.rows;
        Rref {
            matrix,
            rank,
            pivots: reduced.pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the null space; dimension is `cols - rank`.
    pub fn kernel(&self) -> Subspace {
        let r = self.rref();
        let mut vectors = Vec::new();
        let pivot_set: BTreeMap<usize, usize> = r
            .pivots
            .iter()
            .enumerate()
            .map(|(row, &col)| (col, row))
            .collect();
        for free_col in 0..self.cols {
            if pivot_set.contains_key(&free_col) {
                continue;
            }
            let mut v = SparseVec::new();
            v.insert(free_col, self.field.one());
            for (&pc, &pr) in &pivot_set {
                if let Some(val) = r.matrix.get(pr, free_col) {
                    v.insert(pc, val.neg());
                }
            }
            vectors.push(v);
        }
        let ker = Subspace::from_spanning(self.field, self.cols, vectors);
        // rank-nullity, checked on every kernel computation
        assert_eq!(
            r.rank + ker.dim(),
            self.cols,
            "rank-nullity violated: rank {} + nullity {} != cols {}",
            r.rank,
            ker.dim(),
            self.cols
        );
        ker
    }
}

/// Result of row reduction: the canonical RREF, its rank, and the pivot
/// columns in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

struct ReducedRows {
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

fn merge_term(acc: &mut SparseVec, idx: usize, add: K) {
    if add.is_zero() {
        return;
    }
    match acc.remove(&idx) {
        None => {
            acc.insert(idx, add);
        }
        Some(old) => {
            let folded = old.add(&add);
            if !folded.is_zero() {
                acc.insert(idx, folded);
            }
        }
    }
}

fn rational_of(k: &K) -> BigRational {
    match k {
        K::Rat(r) => r.clone(),
        K::Gf { .. } => unreachable!("rational elimination on a modular value"),
    }
}

fn gf_of(k: &K) -> u64 {
    match k {
        K::Gf { val, .. } => *val,
        K::Rat(_) => unreachable!("modular elimination on a rational value"),
    }
}

/// Clears the denominators of one sparse rational row; returns integer
/// entries. Row scaling by a positive constant leaves the row space, and
/// hence the RREF, unchanged.
fn scale_row_to_integers(row: &SparseVec) -> BTreeMap<usize, BigInt> {
    let mut lcm = BigInt::one();
    for v in row.values() {
        let den = rational_of(v).denom().clone();
        lcm = lcm.lcm(&den);
    }
    row.iter()
        .map(|(&c, v)| {
            let r = rational_of(v);
            (c, r.numer() * (&lcm / r.denom()))
        })
        .collect()
}

/// Fraction-free forward elimination on sparse integer rows. Pivot rule:
/// columns left to right, then the smallest-index remaining row. Every row
/// below the pivot is updated (including rows with a zero pivot entry), so
/// the one-step division by the previous pivot stays exact.
fn bareiss_forward_sparse(
    rows: &mut Vec<BTreeMap<usize, BigInt>>,
    cols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut next_pivot_row = 0usize;
    for c in 0..cols {
        let Some(found) = (next_pivot_row..rows.len())
            .find(|&i| rows[i].get(&c).map_or(false, |v| !v.is_zero()))
        else {
            continue;
        };
        rows.swap(next_pivot_row, found);
        let pivot_row = rows[next_pivot_row].clone();
        let pivot_val = pivot_row[&c].clone();
        for row in rows.iter_mut().skip(next_pivot_row + 1) {
            let factor = row.remove(&c).unwrap_or_else(BigInt::zero);
            let mut updated: BTreeMap<usize, BigInt> = BTreeMap::new();
            let mut js: Vec<usize> = row.keys().copied().collect();
            for j in pivot_row.keys() {
                if *j > c && !row.contains_key(j) {
                    js.push(*j);
                }
            }
            for j in js {
                if j <= c {
                    continue;
                }
                let a = row.get(&j).cloned().unwrap_or_else(BigInt::zero);
                let b = pivot_row.get(&j).cloned().unwrap_or_else(BigInt::zero);
                let num = &pivot_val * a - &factor * b;
                if num.is_zero() {
                    continue;
                }
                debug_assert!((&num % &prev).is_zero(), "inexact Bareiss division");
                updated.insert(j, num / &prev);
            }
            *row = updated;
        }
        prev = pivot_val;
        pivots.push(c);
        next_pivot_row += 1;
        if next_pivot_row == rows.len() {
            break;
        }
    }
    pivots
}

/// Dense variant of the fraction-free forward elimination.
fn bareiss_forward_dense(rows: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut next_pivot_row = 0usize;
    for c in 0..cols {
        let Some(found) = (next_pivot_row..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(next_pivot_row, found);
        let pivot_row = rows[next_pivot_row].clone();
        let pivot_val = pivot_row[c].clone();
        for row in rows.iter_mut().skip(next_pivot_row + 1) {
            let factor = core::mem::replace(&mut row[c], BigInt::zero());
            for j in (c + 1)..cols {
                let num = &pivot_val * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "inexact Bareiss division");
                row[j] = num / &prev;
            }
        }
        prev = pivot_val;
        pivots.push(c);
        next_pivot_row += 1;
        if next_pivot_row == rows.len() {
            break;
        }
    }
    pivots
}

/// Back substitution from an integer echelon form to the canonical rational
/// RREF: pivots scaled to 1, then cleared from the rows above.
fn normalize_rational(
    echelon: Vec<BTreeMap<usize, BigInt>>,
    pivots: &[usize],
) -> Vec<SparseVec> {
    let rank = pivots.len();
    let mut rows: Vec<BTreeMap<usize, BigRational>> = echelon
        .into_iter()
        .take(rank)
        .map(|row| {
            row.into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, BigRational::from_integer(v)))
                .collect()
        })
        .collect();
    for i in 0..rank {
        let pivot = rows[i][&pivots[i]].clone();
        for v in rows[i].values_mut() {
            *v /= &pivot;
        }
    }
    for i in (0..rank).rev() {
        let pivot_col = pivots[i];
        let pivot_row = rows[i].clone();
        for upper in rows.iter_mut().take(i) {
            let Some(factor) = upper.remove(&pivot_col) else {
                continue;
            };
            for (c, v) in &pivot_row {
                if *c == pivot_col {
                    continue;
                }
                let delta = &factor * v;
                match upper.remove(c) {
                    None => {
                        if !delta.is_zero() {
                            upper.insert(*c, -delta);
                        }
                    }
                    Some(old) => {
                        let folded = old - delta;
                        if !folded.is_zero() {
                            upper.insert(*c, folded);
                        }
                    }
                }
            }
        }
    }
    rows.into_iter()
        .map(|row| row.into_iter().map(|(c, v)| (c, K::Rat(v))).collect())
        .collect()
}

fn rref_rational_sparse(rows: Vec<SparseVec>, cols: usize) -> ReducedRows {
    let mut int_rows: Vec<BTreeMap<usize, BigInt>> =
        rows.iter().map(scale_row_to_integers).collect();
    let pivots = bareiss_forward_sparse(&mut int_rows, cols);
    let rows = normalize_rational(int_rows, &pivots);
    ReducedRows { rows, pivots }
}

fn rref_rational_dense(rows: Vec<SparseVec>, cols: usize) -> ReducedRows {
    let mut dense: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let ints = scale_row_to_integers(row);
            let mut out = vec![BigInt::zero(); cols];
            for (c, v) in ints {
                out[c] = v;
            }
            out
        })
        .collect();
    let pivots = bareiss_forward_dense(&mut dense, cols);
    let sparse: Vec<BTreeMap<usize, BigInt>> = dense
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect();
    let rows = normalize_rational(sparse, &pivots);
    ReducedRows { rows, pivots }
}

/// Dense Gauss-Jordan over GF(p) on flat rows.
fn rref_gf_dense(rows: Vec<SparseVec>, cols: usize, p: u64) -> ReducedRows {
    let mut work: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            let mut out = vec![0u64; cols];
            for (&c, v) in row {
                out[c] = gf_of(v);
            }
            out
        })
        .collect();
    let mulp = |a: u64, b: u64| (a as u128 * b as u128 % p as u128) as u64;
    let mut pivots = Vec::new();
    let mut next_pivot_row = 0usize;
    for c in 0..cols {
        let Some(found) = (next_pivot_row..work.len()).find(|&i| work[i][c] != 0) else {
            continue;
        };
        work.swap(next_pivot_row, found);
        let inv = gf_of(&K::Gf { val: work[next_pivot_row][c], p }.inv());
        for v in work[next_pivot_row].iter_mut() {
            *v = mulp(*v, inv);
        }
        let pivot_row = work[next_pivot_row].clone();
        for (i, row) in work.iter_mut().enumerate() {
            if i == next_pivot_row || row[c] == 0 {
                continue;
            }
            let factor = core::mem::take(&mut row[c]);
            for j in 0..cols {
                if j == c || pivot_row[j] == 0 {
                    continue;
                }
                row[j] = (row[j] + p - mulp(factor, pivot_row[j])) % p;
            }
        }
        pivots.push(c);
        next_pivot_row += 1;
        if next_pivot_row == work.len() {
            break;
        }
    }
    let field = Field::GfP(p);
    let rows = work
        .into_iter()
        .take(pivots.len())
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|&(_, v)| v != 0)
                .map(|(c, v)| (c, field.from_i64(v as i64)))
                .collect()
        })
        .collect();
    ReducedRows { rows, pivots }
}

/// Sparse Gauss-Jordan over GF(p).
fn rref_gf_sparse(rows: Vec<SparseVec>, cols: usize, p: u64) -> ReducedRows {
    let mut work: Vec<BTreeMap<usize, u64>> = rows
        .iter()
        .map(|row| row.iter().map(|(&c, v)| (c, gf_of(v))).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut next_pivot_row = 0usize;
    let field = Field::GfP(p);
    for c in 0..cols {
        let Some(found) =
            (next_pivot_row..work.len()).find(|&i| work[i].get(&c).map_or(false, |&v| v != 0))
        else {
            continue;
        };
        work.swap(next_pivot_row, found);
        // normalize pivot to 1
        let inv = gf_of(&K::Gf { val: work[next_pivot_row][&c], p }.inv());
        for v in work[next_pivot_row].values_mut() {
            *v = ((*v as u128 * inv as u128) % p as u128) as u64;
        }
        let pivot_row = work[next_pivot_row].clone();
        for (i, row) in work.iter_mut().enumerate() {
            if i == next_pivot_row {
                continue;
            }
            let Some(factor) = row.remove(&c) else { continue };
            for (&j, &pv) in &pivot_row {
                if j == c {
                    continue;
                }
                let delta = (factor as u128 * pv as u128 % p as u128) as u64;
                let old = row.get(&j).copied().unwrap_or(0);
                let folded = (old + p - delta) % p;
                if folded == 0 {
                    row.remove(&j);
                } else {
                    row.insert(j, folded);
                }
            }
        }
        pivots.push(c);
        next_pivot_row += 1;
        if next_pivot_row == work.len() {
            break;
        }
    }
    let rows = work
        .into_iter()
        .take(pivots.len())
        .map(|row| {
            row.into_iter()
                .filter(|&(_, v)| v != 0)
                .map(|(c, v)| (c, field.from_i64(v as i64)))
                .collect()
        })
        .collect();
    ReducedRows { rows, pivots }
}

/// A linear subspace held as a canonical RREF basis: nonzero rows, strictly
/// increasing pivot columns, pivots normalized to 1 and cleared from the
/// other rows. Two equal subspaces always compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            field,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The whole coordinate space, with the identity as its RREF basis.
    pub fn full(field: Field, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = SparseVec::new();
                v.insert(i, field.one());
                v
            })
            .collect();
        Subspace {
            ambient,
            field,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalizes an arbitrary spanning set.
    pub fn from_spanning(field: Field, ambient: usize, vectors: Vec<SparseVec>) -> Self {
        let m = Matrix::from_rows(field, ambient, vectors);
        let r = m.rref();
        let all_rows = r.matrix.into_sparse_rows();
        let basis = all_rows.into_iter().take(r.rank).collect();
        Subspace {
            ambient,
            field,
            basis,
            pivots: r.pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The ambient-by-dim matrix whose columns are the basis vectors.
    pub fn basis_columns(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, self.basis.clone())
    }

    /// Reduces `v` against the basis; returns the remainder and the basis
    /// coefficients used, so `v = sum(coeffs[i] * basis[i]) + remainder`.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, Vec<K>) {
        let mut rem = v.clone();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            match rem.get(&pc).cloned() {
                None => coeffs.push(self.field.zero()),
                Some(factor) => {
                    for (c, bv) in row {
                        let delta = factor.mul(bv).neg();
                        merge_term(&mut rem, *c, delta);
                    }
                    coeffs.push(factor);
                }
            }
        }
        (rem, coeffs)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Coordinates of `v` over the basis, or `None` when `v` is outside.
    pub fn coordinates_of(&self, v: &SparseVec) -> Option<Vec<K>> {
        let (rem, coeffs) = self.reduce(v);
        rem.is_empty().then_some(coeffs)
    }
}

/// Rank of `m` restricted to the subspace `s`, i.e. the dimension of the
/// image of `s` under `m`.
pub fn rank_of_restriction(m: &Matrix, s: &Subspace) -> Result<usize> {
    if s.ambient() != m.cols() {
        return Err(Error::DimensionMismatch {
            context: "rank of restriction",
            expected: m.cols(),
            found: s.ambient(),
        });
    }
    let images: Vec<SparseVec> = s.basis().iter().map(|b| m.mul_vec(b)).collect();
    Ok(Matrix::from_rows(m.field(), m.rows(), images).rank())
}

/// Rank of the images of `vectors` in the quotient by `modulo`:
/// `rank([vectors; modulo basis]) - rank(modulo basis)`.
pub fn quotient_rank(vectors: &[SparseVec], modulo: &Subspace) -> Result<usize> {
    for v in vectors {
        if let Some((&idx, _)) = v.last_key_value() {
            if idx >= modulo.ambient() {
                return Err(Error::DimensionMismatch {
                    context: "quotient rank",
                    expected: modulo.ambient(),
                    found: idx + 1,
                });
            }
        }
    }
    let mut stacked: Vec<SparseVec> = vectors.to_vec();
    stacked.extend(modulo.basis().iter().cloned());
    let total = Matrix::from_rows(modulo.field(), modulo.ambient(), stacked).rank();
    Ok(total - modulo.dim())
}
