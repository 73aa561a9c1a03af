//! Exact arithmetic over prime fields GF(p) and dense matrices over them.
//!
//! All values are canonical least non-negative residues and all arithmetic
//! is exact; there is no floating point anywhere in this module. Matrices
//! are immutable after construction and every operation returns a new value,
//! so concurrent reads are always safe.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from field and matrix construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// The requested modulus is not a prime in `2..=2^16`.
    NotPrime(u32),
    /// Entry count does not match `rows * cols`, or an entry is out of range.
    ShapeMismatch,
    /// Matrix rows disagree in length.
    RaggedRows,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not a prime in 2..=65536"),
            FieldError::ShapeMismatch => write!(f, "entries do not match the matrix shape"),
            FieldError::RaggedRows => write!(f, "matrix rows have differing lengths"),
        }
    }
}

impl core::error::Error for FieldError {}

/// A prime field GF(p) with `2 <= p <= 2^16`, primality checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldSpec {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if p > 1 << 16 || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec { p })
    }

    /// The binary field GF(2).
    pub fn gf2() -> Self {
        FieldSpec { p: 2 }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0 && a < self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// All residues `0..p`.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.p
    }
}

/// A dense row-major matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

/// Result of bringing a matrix to reduced row-echelon form.
#[derive(Debug, Clone)]
pub struct RowReduction {
    pub matrix: FieldMatrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

impl FieldMatrix {
    pub fn new(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<u32>,
    ) -> Result<Self, FieldError> {
        if entries.len() != rows * cols || entries.iter().any(|&e| e >= field.modulus()) {
            return Err(FieldError::ShapeMismatch);
        }
        Ok(FieldMatrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(field: FieldSpec, rows: &[Vec<u32>]) -> Result<Self, FieldError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(FieldError::RaggedRows);
        }
        let entries: Vec<u32> = rows.iter().flatten().copied().collect();
        FieldMatrix::new(field, rows.len(), cols, entries)
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = FieldMatrix::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut entries = vec![0u32; self.rows * self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries[c * self.rows + r] = self.get(r, c);
            }
        }
        FieldMatrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &FieldMatrix) -> Result<FieldMatrix, FieldError> {
        if self.cols != other.cols || self.field != other.field {
            return Err(FieldError::ShapeMismatch);
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(FieldMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Inner product of two symbol vectors over the matrix field.
    pub fn dot(field: FieldSpec, a: &[u32], b: &[u32]) -> u32 {
        debug_assert_eq!(a.len(), b.len());
        let p = field.modulus() as u64;
        let mut acc = 0u64;
        for (&x, &y) in a.iter().zip(b) {
            acc = (acc + x as u64 * y as u64) % p;
        }
        acc as u32
    }

    /// `v * self` for a row vector `v` of length `rows`.
    pub fn left_mul_vec(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.rows);
        let p = self.field.modulus() as u64;
        let mut out = vec![0u64; self.cols];
        for (r, &coeff) in v.iter().enumerate() {
            if coeff == 0 {
                continue;
            }
            let row = self.row(r);
            for (o, &e) in out.iter_mut().zip(row) {
                *o = (*o + coeff as u64 * e as u64) % p;
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// Reduced row-echelon form, rank and pivot columns.
    pub fn row_reduce(&self) -> RowReduction {
        let f = self.field;
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_columns = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(src) = (pivot_row..rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..cols {
                    m.swap(src * cols + c, pivot_row * cols + c);
                }
            }
            let inv = f.inv(m[pivot_row * cols + col]);
            if inv != 1 {
                for c in col..cols {
                    m[pivot_row * cols + c] = f.mul(m[pivot_row * cols + c], inv);
                }
            }
            for r in 0..rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = f.mul(factor, m[pivot_row * cols + c]);
                    m[r * cols + c] = f.sub(m[r * cols + c], sub);
                }
            }
            pivot_columns.push(col);
            pivot_row += 1;
        }
        let rank = pivot_columns.len();
        RowReduction {
            matrix: FieldMatrix {
                field: f,
                rows,
                cols,
                entries: m,
            },
            rank,
            pivot_columns,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// A basis of `{x : self * x^T = 0}`, one vector per row.
    ///
    /// Returns `cols - rank` rows; the all-zero solution space yields a
    /// matrix with zero rows.
    pub fn null_space(&self) -> FieldMatrix {
        let f = self.field;
        let red = self.row_reduce();
        let cols = self.cols;
        let pivots = &red.pivot_columns;
        let mut is_pivot = vec![false; cols];
        for &c in pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
        let mut entries = Vec::with_capacity(free.len() * cols);
        for &fc in &free {
            let mut v = vec![0u32; cols];
            v[fc] = 1;
            for (prow, &pcol) in pivots.iter().enumerate() {
                // x_pcol = -entry(prow, fc) in RREF.
                v[pcol] = f.neg(red.matrix.get(prow, fc));
            }
            entries.extend_from_slice(&v);
        }
        FieldMatrix {
            field: f,
            rows: free.len(),
            cols,
            entries,
        }
    }
}

/// Bit-packed GF(2) matrix with at most 64 columns; the fast path for
/// codeword enumeration and rank checks in hot loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<u64>,
}

impl Gf2Matrix {
    pub fn new(cols: usize, rows: Vec<u64>) -> Self {
        assert!(cols <= 64);
        debug_assert!(rows.iter().all(|&r| cols == 64 || r < (1u64 << cols)));
        Gf2Matrix { cols, rows }
    }

    /// Packs a GF(2) `FieldMatrix`; `None` if the field is not GF(2) or the
    /// matrix is too wide.
    pub fn from_field(m: &FieldMatrix) -> Option<Self> {
        if m.field().modulus() != 2 || m.cols() > 64 {
            return None;
        }
        let rows = (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (c, &e)| acc | ((e as u64) << c))
            })
            .collect();
        Some(Gf2Matrix {
            cols: m.cols(),
            rows,
        })
    }

    pub fn to_field(&self) -> FieldMatrix {
        let gf2 = FieldSpec::gf2();
        let rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|&w| (0..self.cols).map(|c| ((w >> c) & 1) as u32).collect())
            .collect();
        FieldMatrix::from_rows(gf2, &rows).expect("packed rows are rectangular")
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_words(&self) -> &[u64] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        let mut basis: Vec<u64> = Vec::new();
        for &row in &self.rows {
            let mut v = row;
            for &b in &basis {
                let pivot = b & b.wrapping_neg();
                if v & pivot != 0 {
                    v ^= b;
                }
            }
            if v != 0 {
                basis.push(v);
            }
        }
        basis.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn primality_is_enforced() {
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(65_536).is_err());
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(65_521).is_ok());
    }

    #[test]
    fn inverses() {
        let f = gf(65_521);
        for a in [1u32, 2, 3, 12_345, 65_520] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn identity_reduces_to_itself() {
        let m = FieldMatrix::identity(gf(2), 3);
        let red = m.row_reduce();
        assert_eq!(red.rank, 3);
        assert_eq!(red.pivot_columns, vec![0, 1, 2]);
        assert_eq!(red.matrix, m);
    }

    #[test]
    fn duplicate_rows_have_rank_one() {
        let m = FieldMatrix::from_rows(gf(2), &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn identity_null_space_is_empty() {
        let m = FieldMatrix::identity(gf(5), 4);
        let ns = m.null_space();
        assert_eq!(ns.rows(), 0);
        assert_eq!(ns.cols(), 4);
    }

    #[test]
    fn parity_row_null_space() {
        let m = FieldMatrix::from_rows(gf(2), &[vec![1, 1, 1]]).unwrap();
        let ns = m.null_space();
        assert_eq!(ns.rows(), 2);
        for r in 0..ns.rows() {
            let weight: u32 = ns.row(r).iter().sum();
            assert_eq!(weight % 2, 0);
            assert_eq!(FieldMatrix::dot(gf(2), ns.row(r), m.row(0)), 0);
        }
    }

    #[test]
    fn row_reduce_is_idempotent() {
        let m = FieldMatrix::from_rows(
            gf(7),
            &[vec![2, 4, 1, 0], vec![3, 3, 3, 3], vec![5, 0, 4, 3]],
        )
        .unwrap();
        let once = m.row_reduce();
        let twice = once.matrix.row_reduce();
        assert_eq!(once.matrix, twice.matrix);
        assert_eq!(once.pivot_columns, twice.pivot_columns);
    }

    #[test]
    fn gf2_packing_roundtrip_and_rank() {
        let m = FieldMatrix::from_rows(
            gf(2),
            &[vec![1, 0, 1, 1], vec![0, 1, 1, 0], vec![1, 1, 0, 1]],
        )
        .unwrap();
        let packed = Gf2Matrix::from_field(&m).unwrap();
        assert_eq!(packed.to_field(), m);
        assert_eq!(packed.rank(), m.rank());
    }
}
