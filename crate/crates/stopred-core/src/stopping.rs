//! Stopping-set analytics: coverage tests, stopping distance, peeling and
//! maximum-likelihood erasure decoding, and exact undecodable-pattern counts.
//!
//! An index set is a *stopping set* of a parity-check matrix when no row
//! restricted to it has Hamming weight exactly one; nonzero symbols count as
//! nonzero regardless of field value, so everything here runs off row
//! supports. Pattern counting enumerates weight classes in colex order and
//! can be split into contiguous rank ranges whose partial counts sum to the
//! full count, independent of the chunking.

use crate::codes::{CodeError, LinearCode, ParityCheckMatrix};
use crate::combin;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Default budget on the number of erasure patterns enumerated per weight.
pub const ENUMERATION_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StoppingError {
    /// The empty set is excluded from stopping-set queries.
    EmptySet,
    /// An index is out of range for the matrix width.
    IndexOutOfRange,
    /// Enumeration would exceed the caller-supplied budget or size cap.
    BudgetExceeded,
    /// The matrix is too wide for mask-based enumeration.
    TooWide,
    Code(CodeError),
}

impl fmt::Display for StoppingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StoppingError::EmptySet => write!(f, "stopping-set queries need a nonempty set"),
            StoppingError::IndexOutOfRange => write!(f, "index out of range"),
            StoppingError::BudgetExceeded => write!(f, "enumeration budget exceeded"),
            StoppingError::TooWide => write!(f, "mask enumeration supports at most 63 columns"),
            StoppingError::Code(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for StoppingError {}

impl From<CodeError> for StoppingError {
    fn from(e: CodeError) -> Self {
        StoppingError::Code(e)
    }
}

/// Which erasure decoder a count or profile refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DecoderKind {
    Iterative,
    Ml,
}

impl fmt::Display for DecoderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecoderKind::Iterative => write!(f, "iterative"),
            DecoderKind::Ml => write!(f, "ml"),
        }
    }
}

/// Result of a stopping-distance computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StoppingDistance {
    Distance(usize),
    /// No nonempty stopping set exists (degenerate matrices only).
    NoStoppingSet,
}

/// Result of an i-set coverage sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coverage {
    Covered,
    /// The first uncovered set found, as ascending indices.
    Uncovered(Vec<usize>),
}

/// Result of peeling an erasure pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeelOutcome {
    Resolved,
    /// The unique maximal stopping set inside the erased positions.
    Stuck(Vec<usize>),
}

/// True when the restriction of `row` to `iota` has weight exactly one.
pub fn covers(row: &[u32], iota: &[usize]) -> bool {
    let mut hits = 0usize;
    for &i in iota {
        if row[i] != 0 {
            hits += 1;
            if hits > 1 {
                return false;
            }
        }
    }
    hits == 1
}

fn support_masks(h: &ParityCheckMatrix) -> Result<Vec<u64>, StoppingError> {
    if h.cols() > 63 {
        return Err(StoppingError::TooWide);
    }
    Ok(h.row_supports())
}

#[inline]
fn mask_is_stopping(supports: &[u64], mask: u64) -> bool {
    for &s in supports {
        let hit = s & mask;
        if hit != 0 && hit & (hit - 1) == 0 {
            return false;
        }
    }
    true
}

/// True when `s` is a stopping set of `h` (nonempty and no weight-one row
/// restriction).
pub fn is_stopping_set(h: &ParityCheckMatrix, s: &[usize]) -> Result<bool, StoppingError> {
    if s.is_empty() {
        return Err(StoppingError::EmptySet);
    }
    if s.iter().any(|&i| i >= h.cols()) {
        return Err(StoppingError::IndexOutOfRange);
    }
    let supports = support_masks(h)?;
    Ok(mask_is_stopping(&supports, combin::indices_to_mask(s)))
}

/// Size of the smallest nonempty stopping set, by exhaustive enumeration in
/// increasing size with early exit.
pub fn stopping_distance(h: &ParityCheckMatrix) -> Result<StoppingDistance, StoppingError> {
    stopping_distance_capped(h, h.cols())
}

/// As [`stopping_distance`], but enumerates subset sizes only up to `cap`.
/// Errs with `BudgetExceeded` when the cap is exhausted without either
/// finding a stopping set or (for `cap >= n`) confirming absence.
pub fn stopping_distance_capped(
    h: &ParityCheckMatrix,
    cap: usize,
) -> Result<StoppingDistance, StoppingError> {
    let supports = support_masks(h)?;
    let n = h.cols();
    let cap = cap.min(n);
    for size in 1..=cap {
        for mask in combin::subsets(n, size) {
            if mask_is_stopping(&supports, mask) {
                return Ok(StoppingDistance::Distance(size));
            }
        }
    }
    if cap == n {
        Ok(StoppingDistance::NoStoppingSet)
    } else {
        Err(StoppingError::BudgetExceeded)
    }
}

/// Checks that every i-set with `1 <= i <= up_to` is covered by some row;
/// equivalent to `stopping_distance(h) > up_to`.
pub fn covers_all_isets(h: &ParityCheckMatrix, up_to: usize) -> Result<Coverage, StoppingError> {
    let supports = support_masks(h)?;
    let n = h.cols();
    for size in 1..=up_to.min(n) {
        for mask in combin::subsets(n, size) {
            if mask_is_stopping(&supports, mask) {
                return Ok(Coverage::Uncovered(combin::mask_to_indices(mask)));
            }
        }
    }
    Ok(Coverage::Covered)
}

fn peel_mask(supports: &[u64], mut erased: u64) -> u64 {
    loop {
        let mut progress = false;
        for &s in supports {
            let hit = s & erased;
            if hit != 0 && hit & (hit - 1) == 0 {
                erased &= !hit;
                progress = true;
                if erased == 0 {
                    return 0;
                }
            }
        }
        if !progress {
            return erased;
        }
    }
}

/// Iterative (peeling) erasure decoding: repeatedly resolve a position that
/// is the unique erased position in some row's support.
///
/// The residual of a stuck decode is the unique maximal stopping set inside
/// the erased set.
pub fn peel_decode(h: &ParityCheckMatrix, erased: &[usize]) -> Result<PeelOutcome, StoppingError> {
    if erased.iter().any(|&i| i >= h.cols()) {
        return Err(StoppingError::IndexOutOfRange);
    }
    let supports = support_masks(h)?;
    let residual = peel_mask(&supports, combin::indices_to_mask(erased));
    if residual == 0 {
        Ok(PeelOutcome::Resolved)
    } else {
        Ok(PeelOutcome::Stuck(combin::mask_to_indices(residual)))
    }
}

/// True when maximum-likelihood erasure decoding recovers the pattern, i.e.
/// the erased columns of `h` are linearly independent — equivalently, no
/// nonzero codeword is supported inside the erased set.
pub fn ml_decodable(h: &ParityCheckMatrix, erased: &[usize]) -> Result<bool, StoppingError> {
    if erased.iter().any(|&i| i >= h.cols()) {
        return Err(StoppingError::IndexOutOfRange);
    }
    let counter = ErasureCounter::ml_with_matrix(h);
    Ok(!counter.undecodable(combin::indices_to_mask(erased)))
}

/// Exact count of weight-`w` erasure patterns the chosen decoder fails on.
///
/// The iterative decoder needs an explicit matrix; maximum likelihood only
/// needs the code (any valid parity-check matrix gives the same counts).
pub fn count_undecodable(
    code: &LinearCode,
    h: Option<&ParityCheckMatrix>,
    w: usize,
    decoder: DecoderKind,
    budget: u64,
) -> Result<u64, StoppingError> {
    let counter = match decoder {
        DecoderKind::Iterative => {
            let h = h.ok_or(StoppingError::Code(CodeError::Precondition(
                "iterative counting needs a parity-check matrix",
            )))?;
            ErasureCounter::iterative(h)?
        }
        DecoderKind::Ml => match h {
            Some(h) => ErasureCounter::ml_with_matrix(h),
            None => ErasureCounter::ml(code)?,
        },
    };
    let total = counter
        .pattern_count(w)
        .ok_or(StoppingError::BudgetExceeded)?;
    if total > budget {
        return Err(StoppingError::BudgetExceeded);
    }
    Ok(counter.count_range(w, 0, total))
}

/// Prepared context for counting undecodable erasure patterns.
///
/// Enumeration walks weight classes in colex order; `count_range` counts a
/// contiguous rank interval so the space can be chunked for data-parallel
/// counting with results independent of the split.
pub struct ErasureCounter {
    n: usize,
    kind: CounterKind,
}

enum CounterKind {
    /// Row supports of the matrix driving the peeling decoder.
    Iterative(Vec<u64>),
    /// Binary parity-check columns packed into words, one per column.
    MlPacked(Vec<u64>),
    /// General q-ary columns with the field modulus.
    MlGeneric { columns: Vec<Vec<u32>>, p: u32 },
}

impl ErasureCounter {
    /// Maximum-likelihood counter from the code's canonical parity check.
    pub fn ml(code: &LinearCode) -> Result<Self, StoppingError> {
        if code.n() > 63 {
            return Err(StoppingError::TooWide);
        }
        Ok(Self::ml_with_matrix(&code.parity_check()))
    }

    /// Maximum-likelihood counter from an explicit parity-check matrix.
    pub fn ml_with_matrix(h: &ParityCheckMatrix) -> Self {
        let m = h.matrix();
        let n = m.cols();
        assert!(n <= 63, "mask enumeration supports at most 63 columns");
        if m.field().modulus() == 2 && m.rows() <= 64 {
            let columns: Vec<u64> = (0..n)
                .map(|c| {
                    (0..m.rows()).fold(0u64, |acc, r| acc | (((m.get(r, c) != 0) as u64) << r))
                })
                .collect();
            ErasureCounter {
                n,
                kind: CounterKind::MlPacked(columns),
            }
        } else {
            let columns: Vec<Vec<u32>> = (0..n)
                .map(|c| (0..m.rows()).map(|r| m.get(r, c)).collect())
                .collect();
            ErasureCounter {
                n,
                kind: CounterKind::MlGeneric {
                    columns,
                    p: m.field().modulus(),
                },
            }
        }
    }

    /// Peeling-decoder counter for a fixed matrix.
    pub fn iterative(h: &ParityCheckMatrix) -> Result<Self, StoppingError> {
        Ok(ErasureCounter {
            n: h.cols(),
            kind: CounterKind::Iterative(support_masks(h)?),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of weight-`w` patterns, `C(n, w)`.
    pub fn pattern_count(&self, w: usize) -> Option<u64> {
        combin::binomial_u64(self.n, w)
    }

    /// True when the decoder fails on the erasure pattern `mask`.
    pub fn undecodable(&self, mask: u64) -> bool {
        match &self.kind {
            CounterKind::Iterative(supports) => peel_mask(supports, mask) != 0,
            CounterKind::MlPacked(columns) => {
                let mut basis: [u64; 64] = [0; 64];
                let mut rest = mask;
                while rest != 0 {
                    let c = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let mut v = columns[c];
                    loop {
                        if v == 0 {
                            // Dependent column: the pattern supports a codeword.
                            return true;
                        }
                        let pivot = v.trailing_zeros() as usize;
                        if basis[pivot] == 0 {
                            basis[pivot] = v;
                            break;
                        }
                        v ^= basis[pivot];
                    }
                }
                false
            }
            CounterKind::MlGeneric { columns, p } => {
                let field = crate::field::FieldSpec::new(*p).expect("validated modulus");
                let mut basis: Vec<Vec<u32>> = Vec::new();
                let mut pivots: Vec<usize> = Vec::new();
                let mut rest = mask;
                while rest != 0 {
                    let c = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let mut v = columns[c].clone();
                    for (b, &piv) in basis.iter().zip(&pivots) {
                        let coeff = v[piv];
                        if coeff != 0 {
                            for (x, &y) in v.iter_mut().zip(b) {
                                *x = field.sub(*x, field.mul(coeff, y));
                            }
                        }
                    }
                    match v.iter().position(|&x| x != 0) {
                        Some(piv) => {
                            let inv = field.inv(v[piv]);
                            for x in v.iter_mut() {
                                *x = field.mul(*x, inv);
                            }
                            basis.push(v);
                            pivots.push(piv);
                        }
                        None => return true,
                    }
                }
                false
            }
        }
    }

    /// Count of undecodable weight-`w` patterns with colex rank in `lo..hi`.
    pub fn count_range(&self, w: usize, lo: u64, hi: u64) -> u64 {
        if lo >= hi {
            return 0;
        }
        let mut mask = combin::unrank_subset(self.n, w, lo);
        let mut failures = 0u64;
        for _ in lo..hi {
            if self.undecodable(mask) {
                failures += 1;
            }
            match combin::next_subset(mask, self.n) {
                Some(next) => mask = next,
                None => break,
            }
        }
        failures
    }
}

/// Exact undecodable-pattern counts by weight for one decoder and matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErasureProfile {
    pub weights: BTreeMap<usize, u64>,
    pub decoder: DecoderKind,
    pub matrix_id: String,
}

impl ErasureProfile {
    /// Checks `0 <= count <= C(n, w)` for every recorded weight.
    pub fn validate(&self, n: usize) -> bool {
        self.weights
            .iter()
            .all(|(&w, &count)| combin::binomial_u64(n, w).is_some_and(|total| count <= total))
    }

    /// Pointwise `self >= other`, meaningful for iterative vs ML profiles of
    /// the same code.
    pub fn dominates(&self, other: &ErasureProfile) -> bool {
        other
            .weights
            .iter()
            .all(|(w, &c)| self.weights.get(w).is_some_and(|&mine| mine >= c))
    }
}
