//! Linear codes given by generator matrices: construction, duals, exact
//! minimum distances and codewords with prescribed supports.
//!
//! Two concrete families are built here: the extended binary Golay code
//! (from a degree-11 factor of x^23 - 1, extended by an overall parity bit
//! and self-validated by full enumeration) and evaluation-style
//! Reed–Solomon codes over prime fields, which are MDS by construction.

use crate::field::{FieldError, FieldMatrix, FieldSpec, Gf2Matrix};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Default enumeration budget for exact minimum-distance computation.
pub const MIN_DISTANCE_BUDGET: u128 = 10_000_000;

/// Errors from code construction and interrogation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    /// Reed–Solomon length exceeds the field size.
    UnsupportedLength {
        n: usize,
        q: u32,
    },
    /// Dimension out of range for the requested length.
    BadDimension {
        k: usize,
        n: usize,
    },
    /// An enumeration would exceed the caller-supplied budget.
    BudgetExceeded,
    /// No codeword has the requested support.
    NoSuchCodeword,
    /// Support search ran out of candidates without a hit.
    SearchExhausted,
    /// A stated precondition does not hold.
    Precondition(&'static str),
    /// Candidate parity-check rows do not span the dual code.
    RankDeficient {
        rank: usize,
        expected: usize,
    },
    /// A row fails to be a dual codeword.
    NotInDual {
        row: usize,
    },
    Field(FieldError),
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::UnsupportedLength { n, q } => {
                write!(f, "length {n} exceeds field size {q}")
            }
            CodeError::BadDimension { k, n } => write!(f, "dimension {k} invalid for length {n}"),
            CodeError::BudgetExceeded => write!(f, "enumeration budget exceeded"),
            CodeError::NoSuchCodeword => write!(f, "no codeword with the requested support"),
            CodeError::SearchExhausted => write!(f, "support search exhausted all candidates"),
            CodeError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            CodeError::RankDeficient { rank, expected } => {
                write!(f, "rows span rank {rank}, need {expected}")
            }
            CodeError::NotInDual { row } => write!(f, "row {row} is not a dual codeword"),
            CodeError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CodeError {}

impl From<FieldError> for CodeError {
    fn from(e: FieldError) -> Self {
        CodeError::Field(e)
    }
}

/// A linear code presented by a full-rank generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: FieldMatrix,
    n: usize,
    k: usize,
    q: u32,
    min_distance: Option<usize>,
    mds: bool,
}

impl LinearCode {
    /// Wraps a generator matrix, verifying it has full row rank.
    pub fn new(generator: FieldMatrix) -> Result<Self, CodeError> {
        let k = generator.rows();
        let n = generator.cols();
        if k == 0 || k > n {
            return Err(CodeError::BadDimension { k, n });
        }
        if generator.rank() != k {
            return Err(CodeError::RankDeficient {
                rank: generator.rank(),
                expected: k,
            });
        }
        Ok(LinearCode {
            q: generator.field().modulus(),
            n,
            k,
            generator,
            min_distance: None,
            mds: false,
        })
    }

    pub fn generator(&self) -> &FieldMatrix {
        &self.generator
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn field(&self) -> FieldSpec {
        self.generator.field()
    }

    pub fn is_mds(&self) -> bool {
        self.mds
    }

    /// Redundancy, the dimension of the dual code.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    /// Cached minimum distance, if known.
    pub fn cached_min_distance(&self) -> Option<usize> {
        self.min_distance
    }

    /// Attaches a claimed minimum distance after verifying it by full
    /// enumeration. Errs with `BudgetExceeded` when the code is too large to
    /// verify, and with `Precondition` when the claim is wrong; a cached
    /// distance is always a verified one.
    pub fn with_claimed_distance(mut self, d: usize, budget: u128) -> Result<Self, CodeError> {
        let actual = self.min_distance_with_budget(budget)?;
        if actual != d {
            return Err(CodeError::Precondition("claimed minimum distance is wrong"));
        }
        self.min_distance = Some(actual);
        Ok(self)
    }

    /// Number of codewords, `q^k`, if it fits in a `u128`.
    pub fn codeword_count(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for _ in 0..self.k {
            acc = acc.checked_mul(self.q as u128)?;
        }
        Some(acc)
    }

    /// The dual code, generated by a basis of the null space.
    ///
    /// Requires `k < n`; the dual of the full space is the zero code, which
    /// cannot be presented by a generator matrix.
    pub fn dual(&self) -> LinearCode {
        assert!(self.k < self.n, "dual of the full-space code is trivial");
        let ns = self.generator.null_space();
        let mut code = LinearCode::new(ns).expect("null-space basis is independent");
        if self.mds {
            code.mds = true;
            code.min_distance = Some(self.k + 1);
        }
        code
    }

    /// A parity-check matrix whose rows are a basis of the dual code.
    pub fn parity_check(&self) -> ParityCheckMatrix {
        ParityCheckMatrix::for_code(self.generator.null_space(), self)
            .expect("dual basis always validates")
    }

    /// Exact minimum distance by full enumeration under the default budget.
    pub fn min_distance(&self) -> Result<usize, CodeError> {
        self.min_distance_with_budget(MIN_DISTANCE_BUDGET)
    }

    /// Exact minimum distance; errs if `q^k` exceeds `budget` codewords.
    pub fn min_distance_with_budget(&self, budget: u128) -> Result<usize, CodeError> {
        if let Some(d) = self.min_distance {
            return Ok(d);
        }
        let words = self.codeword_count().ok_or(CodeError::BudgetExceeded)?;
        if words > budget {
            return Err(CodeError::BudgetExceeded);
        }
        let mut best = usize::MAX;
        self.for_each_nonzero_weight(|w| best = best.min(w));
        Ok(best)
    }

    /// Weight enumerator `A_0..A_n` by full enumeration.
    pub fn weight_enumerator(&self, budget: u128) -> Result<Vec<u64>, CodeError> {
        let words = self.codeword_count().ok_or(CodeError::BudgetExceeded)?;
        if words > budget {
            return Err(CodeError::BudgetExceeded);
        }
        let mut table = vec![0u64; self.n + 1];
        table[0] = 1;
        self.for_each_nonzero_weight(|w| table[w] += 1);
        Ok(table)
    }

    /// Applies `f` to the Hamming weight of every nonzero codeword.
    fn for_each_nonzero_weight(&self, mut f: impl FnMut(usize)) {
        if let Some(packed) = self.packed_generator() {
            // Gray-code walk: one row XOR per codeword.
            let rows = packed.row_words();
            let total: u64 = 1u64 << self.k;
            let mut acc = 0u64;
            for i in 1..total {
                acc ^= rows[i.trailing_zeros() as usize];
                f(acc.count_ones() as usize);
            }
            return;
        }
        let q = self.q;
        let f_spec = self.field();
        let mut digits = vec![0u32; self.k];
        let mut acc = vec![0u32; self.n];
        let total = self.codeword_count().expect("checked by callers");
        for _ in 1..total {
            // Base-q odometer: every digit touched by the carry chain wraps
            // q-1 -> 0 or steps by one; both amount to adding the row once.
            let mut j = 0usize;
            loop {
                let row = self.generator.row(j);
                for (a, &r) in acc.iter_mut().zip(row) {
                    *a = f_spec.add(*a, r);
                }
                digits[j] += 1;
                if digits[j] == q {
                    digits[j] = 0;
                    j += 1;
                } else {
                    break;
                }
            }
            f(acc.iter().filter(|&&x| x != 0).count());
        }
    }

    /// All codewords as packed 64-bit words, for binary codes of length <= 64.
    pub fn packed_codewords(&self) -> Option<Vec<u64>> {
        let packed = self.packed_generator()?;
        let rows = packed.row_words();
        let total: u64 = 1u64 << self.k;
        let mut out = Vec::with_capacity(total as usize);
        let mut acc = 0u64;
        out.push(0);
        for i in 1..total {
            acc ^= rows[i.trailing_zeros() as usize];
            out.push(acc);
        }
        Some(out)
    }

    fn packed_generator(&self) -> Option<Gf2Matrix> {
        if self.q == 2 && self.n <= 64 && self.k < 64 {
            Gf2Matrix::from_field(&self.generator)
        } else {
            None
        }
    }

    /// Applies `f` to every nonzero codeword as a symbol vector.
    pub fn for_each_nonzero_codeword(&self, mut f: impl FnMut(&[u32])) {
        let q = self.q;
        let f_spec = self.field();
        let mut digits = vec![0u32; self.k];
        let mut acc = vec![0u32; self.n];
        let total = self.codeword_count().expect("caller checked budget");
        for _ in 1..total {
            let mut j = 0usize;
            loop {
                let row = self.generator.row(j);
                for (a, &r) in acc.iter_mut().zip(row) {
                    *a = f_spec.add(*a, r);
                }
                digits[j] += 1;
                if digits[j] == q {
                    digits[j] = 0;
                    j += 1;
                } else {
                    break;
                }
            }
            f(&acc);
        }
    }

    /// Membership test against the generator's row space.
    pub fn contains(&self, word: &[u32]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let red = self.generator.row_reduce();
        let f = self.field();
        let mut w = word.to_vec();
        for (prow, &pcol) in red.pivot_columns.iter().enumerate() {
            let coeff = w[pcol];
            if coeff == 0 {
                continue;
            }
            for (c, entry) in w.iter_mut().enumerate() {
                let sub = f.mul(coeff, red.matrix.get(prow, c));
                *entry = f.sub(*entry, sub);
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// True when both codes have the same codeword set.
    pub fn same_codeword_set(&self, other: &LinearCode) -> bool {
        self.q == other.q
            && self.n == other.n
            && self.k == other.k
            && self.generator.row_reduce().matrix == other.generator.row_reduce().matrix
    }

    /// A codeword whose support is exactly the given index set.
    ///
    /// Only defined for MDS codes; guaranteed to succeed for supports of
    /// size exactly `d`, where the solution space is one-dimensional. For
    /// larger supports, solutions vanishing somewhere inside the support are
    /// rejected; the search covers the whole solution space before giving up.
    pub fn codeword_with_support(&self, support: &[usize]) -> Result<Vec<u32>, CodeError> {
        if !self.mds {
            return Err(CodeError::Precondition("code is not flagged MDS"));
        }
        if support.iter().any(|&i| i >= self.n) {
            return Err(CodeError::Precondition("support index out of range"));
        }
        let d = self.n - self.k + 1;
        if support.len() < d {
            return Err(CodeError::NoSuchCodeword);
        }
        let in_support = {
            let mut v = vec![false; self.n];
            for &i in support {
                v[i] = true;
            }
            v
        };
        let complement: Vec<usize> = (0..self.n).filter(|&c| !in_support[c]).collect();
        // Coefficient vectors u with u*G vanishing on the complement.
        let f = self.field();
        let sub_rows: Vec<Vec<u32>> = (0..self.k)
            .map(|r| {
                complement
                    .iter()
                    .map(|&c| self.generator.get(r, c))
                    .collect()
            })
            .collect();
        let sub = FieldMatrix::from_rows(f, &sub_rows)?;
        let basis = sub.transpose().null_space();
        if basis.rows() == 0 {
            return Err(CodeError::NoSuchCodeword);
        }
        let dim = basis.rows();
        let mut digits = vec![0u32; dim];
        let mut coeff = vec![0u32; self.k];
        let mut candidates = 0u128;
        let budget = {
            let mut acc: u128 = 1;
            for _ in 0..dim {
                acc = acc.saturating_mul(self.q as u128);
            }
            acc
        };
        loop {
            let mut j = 0usize;
            loop {
                if j == dim {
                    return Err(CodeError::SearchExhausted);
                }
                let row = basis.row(j);
                for (a, &r) in coeff.iter_mut().zip(row) {
                    *a = f.add(*a, r);
                }
                digits[j] += 1;
                if digits[j] == self.q {
                    digits[j] = 0;
                    j += 1;
                } else {
                    break;
                }
            }
            candidates += 1;
            if candidates >= budget {
                return Err(CodeError::SearchExhausted);
            }
            let word = self.generator.left_mul_vec(&coeff);
            let support_ok = (0..self.n).all(|c| (word[c] != 0) == in_support[c]);
            if support_ok {
                return Ok(word);
            }
        }
    }
}

/// The extended binary Golay (24, 12, 8) code.
///
/// Built from the length-23 cyclic code generated by the lexicographically
/// smallest degree-11 factor of x^23 - 1 over GF(2), extended by an overall
/// parity bit, then validated by full enumeration of all 4096 codewords
/// before being returned. Failures here are implementation bugs, never bad
/// input, so they panic.
pub fn golay24() -> LinearCode {
    let g = smallest_degree11_factor();
    let gf2 = FieldSpec::gf2();
    let rows: Vec<Vec<u32>> = (0..12)
        .map(|i| {
            let cyclic = (g as u64) << i;
            let parity = (cyclic.count_ones() & 1) as u64;
            let word = cyclic | (parity << 23);
            (0..24).map(|c| ((word >> c) & 1) as u32).collect()
        })
        .collect();
    let generator = FieldMatrix::from_rows(gf2, &rows).expect("rows are rectangular");
    let mut code = LinearCode::new(generator).expect("shifted factor rows are independent");
    assert_eq!(code.n, 24, "golay24 length");
    assert_eq!(code.k, 12, "golay24 dimension");
    // Self-duality: every pair of generator rows is orthogonal and k = n/2.
    for r in 0..12 {
        for s in r..12 {
            let dot = FieldMatrix::dot(gf2, code.generator.row(r), code.generator.row(s));
            assert_eq!(dot, 0, "golay24 generator rows must be self-orthogonal");
        }
    }
    let spectrum = code
        .weight_enumerator(1 << 13)
        .expect("4096 codewords fit any budget");
    let d = (1..=24)
        .find(|&w| spectrum[w] != 0)
        .expect("nonzero words exist");
    assert_eq!(d, 8, "golay24 minimum distance");
    assert_eq!(spectrum[8], 759, "golay24 octad count");
    assert_eq!(spectrum[12], 2576, "golay24 dodecad count");
    assert_eq!(spectrum[16], 759, "golay24 weight-16 count");
    assert_eq!(spectrum[24], 1, "golay24 all-ones word");
    code.min_distance = Some(8);
    code
}

/// Smallest (as a coefficient bitstring) degree-11 divisor of x^23 + 1
/// over GF(2), found by trial division.
fn smallest_degree11_factor() -> u32 {
    let target: u64 = (1 << 23) | 1;
    let mut found = Vec::new();
    for low in 0..1u32 << 10 {
        let candidate: u64 = (1 << 11) | ((low as u64) << 1) | 1;
        if poly_rem_gf2(target, candidate) == 0 {
            found.push(candidate as u32);
        }
    }
    assert_eq!(found.len(), 2, "x^23 + 1 has exactly two degree-11 factors");
    found[0]
}

fn poly_rem_gf2(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros() as i32;
    loop {
        let da = 63 - (a.leading_zeros() as i32);
        if a == 0 || da < db {
            return a;
        }
        a ^= b << (da - db);
    }
}

/// Evaluation-style Reed–Solomon code over GF(q) at points `0..n`.
///
/// Codewords are evaluations of polynomials of degree below `k`; the result
/// is MDS with `d = n - k + 1`, verified by brute force when `q^k <= 10^6`.
pub fn rs_code(q: u32, n: usize, k: usize) -> Result<LinearCode, CodeError> {
    let field = FieldSpec::new(q)?;
    if n > q as usize || n == 0 {
        return Err(CodeError::UnsupportedLength { n, q });
    }
    if k == 0 || k > n {
        return Err(CodeError::BadDimension { k, n });
    }
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|i| (0..n as u32).map(|x| field.pow(x, i as u64)).collect())
        .collect();
    let generator = FieldMatrix::from_rows(field, &rows)?;
    let mut code = LinearCode::new(generator)?;
    code.mds = true;
    code.min_distance = Some(n - k + 1);
    if code.codeword_count().is_some_and(|c| c <= 1_000_000) {
        let mut best = usize::MAX;
        code.for_each_nonzero_weight(|w| best = best.min(w));
        assert_eq!(
            best,
            n - k + 1,
            "Reed-Solomon distance must meet the Singleton bound"
        );
    }
    Ok(code)
}

/// A possibly row-redundant parity-check matrix, validated at construction:
/// every row lies in the dual code and the rows span all of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    matrix: FieldMatrix,
    code: LinearCode,
}

impl ParityCheckMatrix {
    pub fn for_code(matrix: FieldMatrix, code: &LinearCode) -> Result<Self, CodeError> {
        if matrix.cols() != code.n || matrix.field() != code.field() {
            return Err(CodeError::Precondition(
                "matrix shape does not match the code",
            ));
        }
        let f = code.field();
        for r in 0..matrix.rows() {
            for g in 0..code.k {
                if FieldMatrix::dot(f, matrix.row(r), code.generator.row(g)) != 0 {
                    return Err(CodeError::NotInDual { row: r });
                }
            }
        }
        let rank = matrix.rank();
        if rank != code.n - code.k {
            return Err(CodeError::RankDeficient {
                rank,
                expected: code.n - code.k,
            });
        }
        Ok(ParityCheckMatrix {
            matrix,
            code: code.clone(),
        })
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// Row supports as bit masks; requires length <= 64.
    pub fn row_supports(&self) -> Vec<u64> {
        assert!(self.cols() <= 64, "support masks need length <= 64");
        (0..self.rows())
            .map(|r| {
                self.matrix
                    .row(r)
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (c, &e)| acc | (((e != 0) as u64) << c))
            })
            .collect()
    }
}

/// The (7,4) Hamming code from its standard three-row check matrix, used in
/// several places as a tiny non-MDS fixture.
pub fn hamming74() -> LinearCode {
    let gf2 = FieldSpec::gf2();
    // Columns are the nonzero vectors of GF(2)^3 in counting order.
    let rows: Vec<Vec<u32>> = (0..3)
        .map(|bit| (1u32..8).map(|col| (col >> bit) & 1).collect())
        .collect();
    let h = FieldMatrix::from_rows(gf2, &rows).expect("rectangular");
    LinearCode::new(h.null_space()).expect("Hamming null space has rank 4")
}

/// The (8,4) extended Hamming code: each codeword gains an overall parity bit.
pub fn extended_hamming84() -> LinearCode {
    let base = hamming74();
    let gf2 = FieldSpec::gf2();
    let rows: Vec<Vec<u32>> = (0..base.k())
        .map(|r| {
            let mut row = base.generator().row(r).to_vec();
            let parity = row.iter().sum::<u32>() % 2;
            row.push(parity);
            row
        })
        .collect();
    LinearCode::new(FieldMatrix::from_rows(gf2, &rows).expect("rectangular"))
        .expect("extension preserves rank")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golay_parameters() {
        let g = golay24();
        assert_eq!((g.n(), g.k()), (24, 12));
        assert_eq!(g.min_distance().unwrap(), 8);
        assert_eq!(g.generator().rank(), 12);
    }

    #[test]
    fn golay_weight_enumerator_is_symmetric() {
        let g = golay24();
        let a = g.weight_enumerator(1 << 13).unwrap();
        assert_eq!(a[0], 1);
        assert_eq!(a[8], 759);
        for w in 0..=24 {
            assert_eq!(a[w], a[24 - w], "A_{w} vs A_{}", 24 - w);
        }
    }

    #[test]
    fn golay_is_self_dual() {
        let g = golay24();
        assert!(g.dual().same_codeword_set(&g));
    }

    #[test]
    fn rs_distances() {
        assert_eq!(rs_code(7, 7, 3).unwrap().min_distance().unwrap(), 5);
        assert_eq!(rs_code(5, 5, 4).unwrap().min_distance().unwrap(), 2);
        assert_eq!(rs_code(5, 5, 1).unwrap().min_distance().unwrap(), 5);
    }

    #[test]
    fn rs_rejects_bad_parameters() {
        assert!(matches!(
            rs_code(7, 8, 3),
            Err(CodeError::UnsupportedLength { .. })
        ));
        assert!(matches!(
            rs_code(7, 6, 7),
            Err(CodeError::BadDimension { .. })
        ));
    }

    #[test]
    fn mds_duality_grid() {
        // d = n - k + 1 and d(dual) = k + 1 wherever brute force is cheap.
        for q in [2u32, 3, 5, 7] {
            for n in 2..=q.min(7) as usize {
                for k in 1..n {
                    let c = rs_code(q, n, k).unwrap();
                    let within = |dim: usize| (q as u128).pow(dim as u32) <= 1_000_000;
                    if within(k) {
                        assert_eq!(c.min_distance().unwrap(), n - k + 1, "({q},{n},{k})");
                    }
                    if within(n - k) {
                        assert_eq!(
                            c.dual().min_distance().unwrap(),
                            k + 1,
                            "({q},{n},{k}) dual"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rs_dual_is_mds() {
        let c = rs_code(7, 7, 3).unwrap();
        let d = c.dual();
        assert!(d.is_mds());
        assert_eq!(d.min_distance().unwrap(), 4); // k + 1
        for r in 0..d.k() {
            for g in 0..c.k() {
                assert_eq!(
                    FieldMatrix::dot(c.field(), d.generator().row(r), c.generator().row(g)),
                    0
                );
            }
        }
    }

    #[test]
    fn dual_is_an_involution() {
        let c = rs_code(5, 5, 2).unwrap();
        assert!(c.dual().dual().same_codeword_set(&c));
    }

    #[test]
    fn repetition_dual_distance() {
        // (4,1) repetition code over GF(5) -> dual is (4,3) with d = 2.
        let rep = rs_code(5, 4, 1).unwrap();
        assert_eq!(rep.min_distance().unwrap(), 4);
        let dual = rep.dual();
        assert_eq!(dual.k(), 3);
        assert_eq!(dual.min_distance().unwrap(), 2);
    }

    #[test]
    fn hamming_distance_is_three() {
        let h = hamming74();
        assert_eq!((h.n(), h.k()), (7, 4));
        assert_eq!(h.min_distance().unwrap(), 3);
        assert_eq!(extended_hamming84().min_distance().unwrap(), 4);
    }

    #[test]
    fn min_distance_budget_is_enforced() {
        // Rewrap to drop the cached MDS distance and force enumeration.
        let c = LinearCode::new(rs_code(11, 11, 8).unwrap().generator().clone()).unwrap();
        assert!(matches!(
            c.min_distance_with_budget(1000),
            Err(CodeError::BudgetExceeded)
        ));
    }

    #[test]
    fn codeword_with_support_exact_size() {
        // (5,2) MDS code over GF(5): every 4-set supports a codeword.
        let c = rs_code(5, 5, 2).unwrap();
        for support in [
            [0, 1, 2, 3],
            [0, 1, 2, 4],
            [0, 1, 3, 4],
            [0, 2, 3, 4],
            [1, 2, 3, 4],
        ] {
            let w = c.codeword_with_support(&support).unwrap();
            let got: Vec<usize> = (0..5).filter(|&i| w[i] != 0).collect();
            assert_eq!(got, support);
            assert!(c.contains(&w));
        }
    }

    #[test]
    fn codeword_with_support_below_distance() {
        let c = rs_code(5, 5, 2).unwrap();
        assert_eq!(
            c.codeword_with_support(&[0, 1, 2]),
            Err(CodeError::NoSuchCodeword)
        );
    }

    #[test]
    fn codeword_with_oversized_support() {
        let c = rs_code(7, 7, 3).unwrap();
        let w = c.codeword_with_support(&[0, 1, 2, 3, 4, 5]).unwrap();
        let got: Vec<usize> = (0..7).filter(|&i| w[i] != 0).collect();
        assert_eq!(got, [0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn parity_check_validator_rejects_bad_rows() {
        let c = rs_code(5, 5, 2).unwrap();
        let bogus = FieldMatrix::from_rows(c.field(), &[vec![1, 0, 0, 0, 0]]).unwrap();
        assert!(matches!(
            ParityCheckMatrix::for_code(bogus, &c),
            Err(CodeError::NotInDual { .. })
        ));
        // A single dual codeword spans too little.
        let dual_row = c.dual().generator().row(0).to_vec();
        let thin = FieldMatrix::from_rows(c.field(), &[dual_row]).unwrap();
        assert!(matches!(
            ParityCheckMatrix::for_code(thin, &c),
            Err(CodeError::RankDeficient { .. })
        ));
    }

    #[test]
    fn full_dual_parity_check_validates() {
        let c = rs_code(7, 7, 3).unwrap();
        let h = c.parity_check();
        assert_eq!(h.rows(), 4);
        assert_eq!(h.matrix().rank(), 4);
    }
}
