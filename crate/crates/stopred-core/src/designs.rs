//! Turán systems, covering designs and single-exclusion systems: verifiers,
//! block-family constructions, closed-form sizes, exact search oracles, and
//! the bridge from block systems to MDS parity-check matrices.
//!
//! Ground sets are `{0, .., v-1}` with `v <= 63`; blocks are bit masks. A
//! Turán `(v, k, t)`-system is a family of t-subsets such that every k-subset
//! contains a block. A single-exclusion `(v, r)`-system is a family of
//! r-subsets such that for every `i` in `1..=r+1`, every i-subset has a block
//! missing exactly one of its elements.

use crate::codes::{CodeError, LinearCode, ParityCheckMatrix};
use crate::combin;
use crate::field::FieldMatrix;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;

/// Default node budget for the exact branch-and-bound searches.
pub const SEARCH_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignError {
    /// A stated precondition does not hold.
    Precondition(&'static str),
    /// Enumeration or search would exceed the given budget.
    BudgetExceeded,
    /// Block shape does not match the system parameters.
    BadBlock,
    Code(CodeError),
}

impl fmt::Display for DesignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            DesignError::BudgetExceeded => write!(f, "search or enumeration budget exceeded"),
            DesignError::BadBlock => write!(f, "block does not fit the system parameters"),
            DesignError::Code(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DesignError {}

impl From<CodeError> for DesignError {
    fn from(e: CodeError) -> Self {
        DesignError::Code(e)
    }
}

/// A family of equal-size subsets of `{0, .., v-1}`, deduplicated and kept
/// in increasing mask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSystem {
    v: usize,
    r: usize,
    blocks: Vec<u64>,
}

impl BlockSystem {
    pub fn new(v: usize, r: usize, mut blocks: Vec<u64>) -> Result<Self, DesignError> {
        if v == 0 || v > 63 || r > v {
            return Err(DesignError::Precondition("need 0 < v <= 63 and r <= v"));
        }
        let ground = (1u64 << v) - 1;
        if blocks
            .iter()
            .any(|&b| b.count_ones() as usize != r || b & !ground != 0)
        {
            return Err(DesignError::BadBlock);
        }
        blocks.sort_unstable();
        blocks.dedup();
        Ok(BlockSystem { v, r, blocks })
    }

    pub fn from_index_blocks(
        v: usize,
        r: usize,
        blocks: &[Vec<usize>],
    ) -> Result<Self, DesignError> {
        let masks = blocks.iter().map(|b| combin::indices_to_mask(b)).collect();
        BlockSystem::new(v, r, masks)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_masks(&self) -> &[u64] {
        &self.blocks
    }

    /// Blocks as ascending index lists, ordered lexicographically.
    pub fn blocks_as_indices(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|&b| combin::mask_to_indices(b))
            .collect();
        out.sort();
        out
    }

    /// Union of two systems over the same ground set and block size.
    pub fn union(&self, other: &BlockSystem) -> Result<BlockSystem, DesignError> {
        if self.v != other.v || self.r != other.r {
            return Err(DesignError::Precondition("union needs matching (v, r)"));
        }
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        BlockSystem::new(self.v, self.r, blocks)
    }
}

/// Verifier outcome: valid, or the first uncovered target found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Valid,
    FirstUncovered(Vec<usize>),
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid)
    }
}

/// True when every k-subset of the ground set contains at least one block.
// The lint's rewrite is unsound here: the subset test binds the block.
#[allow(clippy::manual_contains)]
pub fn verify_turan(s: &BlockSystem, k: usize) -> Result<Verification, DesignError> {
    if k < s.r || k > s.v {
        return Err(DesignError::Precondition("need r <= k <= v"));
    }
    for target in combin::subsets(s.v, k) {
        if !s.blocks.iter().any(|&b| b & target == b) {
            return Ok(Verification::FirstUncovered(combin::mask_to_indices(
                target,
            )));
        }
    }
    Ok(Verification::Valid)
}

/// Single-exclusion coverage for i-sets of every size `1..=max_size`:
/// an i-set ι is covered by block β when `|ι \ β| = 1`.
pub fn verify_exclusion_up_to(
    s: &BlockSystem,
    max_size: usize,
) -> Result<Verification, DesignError> {
    if max_size > s.v {
        return Err(DesignError::Precondition("i-set size exceeds ground set"));
    }
    for size in 1..=max_size {
        for target in combin::subsets(s.v, size) {
            if !s.blocks.iter().any(|&b| {
                let out = target & !b;
                out != 0 && out & (out - 1) == 0
            }) {
                return Ok(Verification::FirstUncovered(combin::mask_to_indices(
                    target,
                )));
            }
        }
    }
    Ok(Verification::Valid)
}

/// True when the family is a single-exclusion `(v, r)`-system: every i-set
/// with `1 <= i <= r+1` has a block missing exactly one of its elements.
pub fn verify_single_exclusion(s: &BlockSystem) -> Result<Verification, DesignError> {
    if s.r + 1 > s.v {
        return Err(DesignError::Precondition("need r <= v - 1"));
    }
    verify_exclusion_up_to(s, s.r + 1)
}

/// `T(n, 3, 2) = floor(n/2) * (ceil(n/2) - 1)`, Mantel/Turán, exact.
pub fn turan_n32(n: usize) -> u64 {
    assert!(n >= 2);
    (n as u64 / 2) * ((n as u64).div_ceil(2) - 1)
}

/// `T(n, 2, 1) = n - 1`, exact.
pub fn turan_n21(n: usize) -> u64 {
    assert!(n >= 3);
    n as u64 - 1
}

/// Ringel's construction size for `T(n, 4, 3)`:
/// `floor(n/3) * floor((n-1)/3) * (2*floor((n-2)/3) + 1)`.
/// An upper bound in general; exact (optimal) for `n <= 13`.
pub fn ringel_n43(n: usize) -> u64 {
    assert!(n >= 4);
    let n = n as u64;
    (n / 3) * ((n - 1) / 3) * (2 * ((n - 2) / 3) + 1)
}

/// The two-clique Turán `(n, 3, 2)`-system: all pairs inside `{0,1,2}` plus
/// all pairs inside the rest; `C(n-3, 2) + 3` blocks.
pub fn two_clique_construction(n: usize) -> Result<BlockSystem, DesignError> {
    if n < 4 {
        return Err(DesignError::Precondition(
            "two-clique construction needs n >= 4",
        ));
    }
    let mut blocks: Vec<u64> = combin::subsets(3, 2).collect();
    for pair in combin::subsets(n - 3, 2) {
        blocks.push(pair << 3);
    }
    BlockSystem::new(n, 2, blocks)
}

/// A partition of the ground set into parts of near-equal size, optionally
/// with a compatible row partition for the row-augmented construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionScheme {
    v: usize,
    parts: Vec<u64>,
    rows: Option<Vec<u64>>,
}

impl PartitionScheme {
    /// Validates: parts are disjoint, cover the ground set, and sizes differ
    /// by at most one.
    pub fn new(v: usize, parts: Vec<u64>) -> Result<Self, DesignError> {
        if v == 0 || v > 63 || parts.is_empty() {
            return Err(DesignError::Precondition("need 0 < v <= 63 and parts"));
        }
        let ground = (1u64 << v) - 1;
        let mut seen = 0u64;
        for &p in &parts {
            if p == 0 || p & !ground != 0 || p & seen != 0 {
                return Err(DesignError::Precondition(
                    "parts must be nonempty and disjoint",
                ));
            }
            seen |= p;
        }
        if seen != ground {
            return Err(DesignError::Precondition("parts must cover the ground set"));
        }
        let sizes: Vec<u32> = parts.iter().map(|p| p.count_ones()).collect();
        let (min, max) = (
            *sizes.iter().min().expect("nonempty"),
            *sizes.iter().max().expect("nonempty"),
        );
        if max - min > 1 {
            return Err(DesignError::Precondition(
                "part sizes must differ by at most 1",
            ));
        }
        Ok(PartitionScheme {
            v,
            parts,
            rows: None,
        })
    }

    /// Attaches a row partition; every column part must meet every row part.
    pub fn with_rows(mut self, rows: Vec<u64>) -> Result<Self, DesignError> {
        let ground = (1u64 << self.v) - 1;
        let mut seen = 0u64;
        for &m in &rows {
            if m == 0 || m & !ground != 0 || m & seen != 0 {
                return Err(DesignError::Precondition(
                    "row parts must be nonempty and disjoint",
                ));
            }
            seen |= m;
        }
        if seen != ground {
            return Err(DesignError::Precondition(
                "row parts must cover the ground set",
            ));
        }
        for &p in &self.parts {
            for &m in &rows {
                if p & m == 0 {
                    return Err(DesignError::Precondition(
                        "every column part must meet every row part",
                    ));
                }
            }
        }
        self.rows = Some(rows);
        Ok(self)
    }

    /// The default partition: `N_i = {x : x = i (mod l)}`, and row parts
    /// `M_t = {x : floor(x/l) = t}` with the last row absorbing the extra
    /// `v mod l` elements.
    pub fn residue_classes(v: usize, l: usize) -> Result<Self, DesignError> {
        if l == 0 || l > v {
            return Err(DesignError::Precondition("need 1 <= l <= v"));
        }
        let mut parts = vec![0u64; l];
        for x in 0..v {
            parts[x % l] |= 1u64 << x;
        }
        let scheme = PartitionScheme::new(v, parts)?;
        let nrows = v / l;
        if nrows == 0 {
            return Ok(scheme);
        }
        let mut rows = vec![0u64; nrows];
        for x in 0..v {
            rows[(x / l).min(nrows - 1)] |= 1u64 << x;
        }
        scheme.with_rows(rows)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// Number of column parts, the modulus `l`.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn row_parts(&self) -> Option<&[u64]> {
        self.rows.as_deref()
    }

    /// Per-element column-part index.
    fn part_of(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.v];
        for (i, &p) in self.parts.iter().enumerate() {
            for x in combin::mask_to_indices(p) {
                out[x] = i;
            }
        }
        out
    }

    fn row_of(&self) -> Option<Vec<usize>> {
        let rows = self.rows.as_ref()?;
        let mut out = vec![0usize; self.v];
        for (i, &m) in rows.iter().enumerate() {
            for x in combin::mask_to_indices(m) {
                out[x] = i;
            }
        }
        Some(out)
    }
}

fn weight_table(labels: &[usize]) -> Vec<u64> {
    labels.iter().map(|&i| i as u64).collect()
}

fn mask_weight(mask: u64, weights: &[u64]) -> u64 {
    let mut acc = 0u64;
    let mut rest = mask;
    while rest != 0 {
        acc += weights[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    acc
}

/// The residue block family of the Kim–Roush construction: r-subsets that
/// miss some part entirely, plus those whose part-weighted sum is `j` mod l.
///
/// Always a Turán `(n, r+1, r)`-system; a single-exclusion `(n, r)`-system
/// whenever `l >= n / (n - r - 1)`.
pub fn kim_roush_blocks(
    r: usize,
    j: usize,
    scheme: &PartitionScheme,
) -> Result<BlockSystem, DesignError> {
    let n = scheme.v();
    let l = scheme.part_count();
    if r == 0 || r > n - 1 {
        return Err(DesignError::Precondition("need 1 <= r <= n - 1"));
    }
    if j >= l {
        return Err(DesignError::Precondition("need 0 <= j < l"));
    }
    let weights = weight_table(&scheme.part_of());
    let mut blocks = Vec::new();
    for b in combin::subsets(n, r) {
        let misses_part = scheme.parts().iter().any(|&p| b & p == 0);
        if misses_part || mask_weight(b, &weights) % l as u64 == j as u64 {
            blocks.push(b);
        }
    }
    BlockSystem::new(n, r, blocks)
}

/// The sliding-residue block family of the Frankl–Rödl construction:
/// r-subsets with `(w(B) + j) mod l <= l - s(B)`, where `s(B)` counts the
/// parts `B` intersects.
///
/// Always a Turán `(n, r+1, r)`-system; a single-exclusion `(n, r)`-system
/// whenever `n >= l(r+1)`.
pub fn frankl_rodl_blocks(
    r: usize,
    j: usize,
    scheme: &PartitionScheme,
) -> Result<BlockSystem, DesignError> {
    let n = scheme.v();
    let l = scheme.part_count();
    if r == 0 || r > n - 1 {
        return Err(DesignError::Precondition("need 1 <= r <= n - 1"));
    }
    if j >= l {
        return Err(DesignError::Precondition("need 0 <= j < l"));
    }
    let weights = weight_table(&scheme.part_of());
    let mut blocks = Vec::new();
    for b in combin::subsets(n, r) {
        let s = scheme.parts().iter().filter(|&&p| b & p != 0).count();
        let residue = (mask_weight(b, &weights) + j as u64) % l as u64;
        if residue <= (l - s) as u64 {
            blocks.push(b);
        }
    }
    BlockSystem::new(n, r, blocks)
}

/// Exact total size of the Frankl–Rödl families over all `j`:
/// `sum_j |B_j| = C(n, r) + sum_k C(n - |N_k|, r)`.
///
/// When `l` divides `n` every part has size `n/l` and this collapses to the
/// closed form `C(n, r) + l * C(n - n/l, r)`.
pub fn frankl_rodl_size_sum(r: usize, scheme: &PartitionScheme) -> BigUint {
    let n = scheme.v();
    let mut acc = combin::binomial(n, r);
    for &p in scheme.parts() {
        acc += combin::binomial(n - p.count_ones() as usize, r);
    }
    acc
}

/// The row-residue family `M_t`: r-subsets whose row-weighted sum is `t`
/// modulo the number of row parts. The `M_t` partition all r-subsets.
pub fn row_residue_blocks(
    r: usize,
    t: usize,
    scheme: &PartitionScheme,
) -> Result<BlockSystem, DesignError> {
    let n = scheme.v();
    let row_of = scheme
        .row_of()
        .ok_or(DesignError::Precondition("scheme has no row partition"))?;
    let nrows = scheme.row_parts().map(<[u64]>::len).expect("rows checked");
    if t >= nrows {
        return Err(DesignError::Precondition("need 0 <= t < floor(n/l)"));
    }
    let weights = weight_table(&row_of);
    let mut blocks = Vec::new();
    for b in combin::subsets(n, r) {
        if mask_weight(b, &weights) % nrows as u64 == t as u64 {
            blocks.push(b);
        }
    }
    BlockSystem::new(n, r, blocks)
}

/// The row-augmented family `B_j ∪ M_t`: a single-exclusion `(n, r)`-system
/// for every choice of `l`, `j` and `t`.
pub fn row_augmented_blocks(
    r: usize,
    j: usize,
    t: usize,
    scheme: &PartitionScheme,
) -> Result<BlockSystem, DesignError> {
    let base = frankl_rodl_blocks(r, j, scheme)?;
    let rows = row_residue_blocks(r, t, scheme)?;
    base.union(&rows)
}

/// Achievable subset-sum residues modulo `l` over all k-subsets of
/// `{0, .., l-1}`; covers every residue for `1 <= k <= l-1`.
pub fn subset_sum_residues(l: usize, k: usize) -> Vec<usize> {
    assert!(l >= 2 && k >= 1 && k <= l);
    let mut seen = vec![false; l];
    for mask in combin::subsets(l, k) {
        let sum: usize = combin::mask_to_indices(mask).iter().sum();
        seen[sum % l] = true;
    }
    (0..l).filter(|&i| seen[i]).collect()
}

/// All `(d-2)`-subsets meeting the anchor `{0, .., d-3}`; their union with
/// any Turán `(n, d-1, d-2)`-system is a single-exclusion `(n, d-2)`-system,
/// and they alone cover every i-set with `i <= d-2`.
pub fn anchored_patch_blocks(n: usize, d: usize) -> Result<BlockSystem, DesignError> {
    if d < 4 || d > n {
        return Err(DesignError::Precondition(
            "anchored patch needs 4 <= d <= n",
        ));
    }
    let anchor = (1u64 << (d - 2)) - 1;
    let blocks: Vec<u64> = combin::subsets(n, d - 2)
        .filter(|&b| b & anchor != 0)
        .collect();
    BlockSystem::new(n, d - 2, blocks)
}

/// Closed-form size of the anchored patch:
/// `sum_{m=0}^{d-3} C(d-2, d-2-m) * C(n-d+2, m)`.
pub fn anchored_patch_size(n: usize, d: usize) -> BigUint {
    let mut acc = BigUint::from(0u32);
    for m in 0..=(d - 3) {
        acc += combin::binomial(d - 2, d - 2 - m) * combin::binomial(n - d + 2, m);
    }
    acc
}

/// Single-exclusion `(n, n-3)`-system with fewer than `(2/3) C(n, 2)` blocks,
/// built as complements of structured triples over three-element bins.
///
/// Elements are laid out as bins `(x, 0..3)` for `x` in `1..=t` plus a
/// partial bin `(t+1, 0..rem)` where `n = 3t + rem`, flattened row-major.
pub fn bin_triple_complements(n: usize) -> Result<BlockSystem, DesignError> {
    if n < 6 {
        return Err(DesignError::Precondition("bin construction needs n >= 6"));
    }
    let t = n / 3;
    let rem = n % 3;
    let exists = |x: usize, i: usize| x <= t || (x == t + 1 && i < rem);
    let flatten = |x: usize, i: usize| (x - 1) * 3 + i;
    let ground = (1u64 << n) - 1;
    let mut triples: Vec<u64> = Vec::new();
    let push = |points: [(usize, usize); 3], triples: &mut Vec<u64>| {
        if points.iter().all(|&(x, i)| exists(x, i)) {
            let mask = points
                .iter()
                .fold(0u64, |acc, &(x, i)| acc | (1u64 << flatten(x, i)));
            triples.push(mask);
        }
    };
    for x in 1..=t {
        push([(x, 0), (x, 1), (x, 2)], &mut triples);
    }
    for x in 1..=t {
        for y in (x + 1)..=(t + 1) {
            for i in 0..3 {
                let ii = (i + 1) % 3;
                push([(x, i), (y, i), (y, ii)], &mut triples);
                push([(x, i), (x, ii), (y, i)], &mut triples);
            }
        }
    }
    if rem > 0 {
        for x in 1..=t {
            push([(x, 0), (x, 2), (t + 1, 0)], &mut triples);
        }
    }
    let blocks: Vec<u64> = triples.iter().map(|&tr| ground & !tr).collect();
    BlockSystem::new(n, n - 3, blocks)
}

/// Covering-design parameters translated to Turán parameters:
/// `C(v, k, t) = T(v, v-t, v-k)`.
pub fn covering_params_to_turan(v: usize, k: usize, t: usize) -> (usize, usize, usize) {
    assert!(t <= k && k <= v);
    (v, v - t, v - k)
}

/// Exact minimum size plus a witness family from the branch-and-bound
/// searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub count: usize,
    pub blocks: BlockSystem,
}

struct TargetSpace {
    /// One bit per target, grouped by class.
    words: usize,
    /// Coverage bitset per candidate block, indexed by candidate id.
    coverage: Vec<Vec<u64>>,
    /// Candidate ids able to cover each target.
    candidates_of: Vec<Vec<u32>>,
    /// (class start index, class length, per-block cap) per target class.
    classes: Vec<(usize, usize, u64)>,
    total_targets: usize,
}

fn build_target_space(
    v: usize,
    candidate_masks: &[u64],
    class_sizes: &[usize],
    covers: impl Fn(u64, u64) -> bool,
) -> TargetSpace {
    let mut targets: Vec<u64> = Vec::new();
    let mut classes = Vec::new();
    for &size in class_sizes {
        let start = targets.len();
        targets.extend(combin::subsets(v, size));
        classes.push((start, targets.len() - start, 0u64));
    }
    let total = targets.len();
    let words = total.div_ceil(64);
    let mut coverage = vec![vec![0u64; words]; candidate_masks.len()];
    let mut candidates_of = vec![Vec::new(); total];
    for (cid, &cand) in candidate_masks.iter().enumerate() {
        for (tid, &target) in targets.iter().enumerate() {
            if covers(cand, target) {
                coverage[cid][tid / 64] |= 1u64 << (tid % 64);
                candidates_of[tid].push(cid as u32);
            }
        }
    }
    // Per-class cap: the most targets of the class any one block covers.
    for (start, len, cap) in classes.iter_mut() {
        let mut best = 0u64;
        for cov in &coverage {
            let mut count = 0u64;
            for tid in *start..*start + *len {
                count += (cov[tid / 64] >> (tid % 64)) & 1;
            }
            best = best.max(count);
        }
        *cap = best.max(1);
    }
    TargetSpace {
        words,
        coverage,
        candidates_of,
        classes,
        total_targets: total,
    }
}

struct CoverSearch<'a> {
    space: &'a TargetSpace,
    candidate_masks: &'a [u64],
    nodes: u64,
    node_budget: u64,
    best_count: usize,
    best_blocks: Vec<u64>,
    lower_bound: usize,
}

impl CoverSearch<'_> {
    fn greedy(&self) -> Option<Vec<usize>> {
        let words = self.space.words;
        let mut uncovered = vec![!0u64; words];
        trim_tail(&mut uncovered, self.space.total_targets);
        let mut chosen = Vec::new();
        let mut left = self.space.total_targets as u64;
        while left > 0 {
            let mut best_id = usize::MAX;
            let mut best_gain = 0u64;
            for (cid, cov) in self.space.coverage.iter().enumerate() {
                let gain: u32 = cov
                    .iter()
                    .zip(&uncovered)
                    .map(|(c, u)| (c & u).count_ones())
                    .sum();
                if u64::from(gain) > best_gain {
                    best_gain = u64::from(gain);
                    best_id = cid;
                }
            }
            if best_id == usize::MAX {
                return None; // Some target is uncoverable.
            }
            for (u, c) in uncovered.iter_mut().zip(&self.space.coverage[best_id]) {
                *u &= !c;
            }
            left -= best_gain;
            chosen.push(best_id);
        }
        Some(chosen)
    }

    fn class_lower_bound(&self, uncovered: &[u64]) -> usize {
        let mut bound = 0usize;
        for &(start, len, cap) in &self.space.classes {
            let mut count = 0u64;
            for tid in start..start + len {
                count += (uncovered[tid / 64] >> (tid % 64)) & 1;
            }
            bound = bound.max(count.div_ceil(cap) as usize);
        }
        bound
    }

    fn dfs(
        &mut self,
        uncovered: &mut Vec<u64>,
        chosen: &mut Vec<usize>,
    ) -> Result<(), DesignError> {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Err(DesignError::BudgetExceeded);
        }
        let left: u32 = uncovered.iter().map(|u| u.count_ones()).sum();
        if left == 0 {
            if chosen.len() < self.best_count {
                self.best_count = chosen.len();
                self.best_blocks = chosen.iter().map(|&c| self.candidate_masks[c]).collect();
            }
            return Ok(());
        }
        if chosen.len() + self.class_lower_bound(uncovered) >= self.best_count {
            return Ok(());
        }
        // Branch on the uncovered target with the fewest candidates.
        let mut pick = usize::MAX;
        let mut pick_len = usize::MAX;
        for (tid, cands) in self.space.candidates_of.iter().enumerate() {
            if (uncovered[tid / 64] >> (tid % 64)) & 1 == 1 && cands.len() < pick_len {
                pick = tid;
                pick_len = cands.len();
            }
        }
        if pick_len == 0 {
            return Ok(()); // Uncoverable target: dead branch.
        }
        // Try candidates by decreasing fresh coverage, tie-broken by mask.
        let mut order: Vec<(u32, u64, u32)> = self.space.candidates_of[pick]
            .iter()
            .map(|&cid| {
                let gain: u32 = self.space.coverage[cid as usize]
                    .iter()
                    .zip(uncovered.iter())
                    .map(|(c, u)| (c & u).count_ones())
                    .sum();
                (gain, self.candidate_masks[cid as usize], cid)
            })
            .collect();
        order.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let saved = uncovered.clone();
        for (_, _, cid) in order {
            for (u, c) in uncovered.iter_mut().zip(&self.space.coverage[cid as usize]) {
                *u &= !c;
            }
            chosen.push(cid as usize);
            self.dfs(uncovered, chosen)?;
            chosen.pop();
            uncovered.copy_from_slice(&saved);
            if self.best_count == self.lower_bound {
                return Ok(());
            }
        }
        Ok(())
    }
}

fn trim_tail(words: &mut [u64], bits: usize) {
    let full = bits / 64;
    if full < words.len() {
        let rem = bits % 64;
        words[full] &= if rem == 0 { 0 } else { (1u64 << rem) - 1 };
        for w in words.iter_mut().skip(full + 1) {
            *w = 0;
        }
    }
}

fn run_cover_search(
    v: usize,
    r: usize,
    candidate_masks: Vec<u64>,
    space: TargetSpace,
    lower_bound: usize,
    node_budget: u64,
) -> Result<SearchOutcome, DesignError> {
    let mut search = CoverSearch {
        space: &space,
        candidate_masks: &candidate_masks,
        nodes: 0,
        node_budget,
        best_count: usize::MAX,
        best_blocks: Vec::new(),
        lower_bound,
    };
    match search.greedy() {
        Some(chosen) => {
            search.best_count = chosen.len();
            search.best_blocks = chosen.iter().map(|&c| candidate_masks[c]).collect();
        }
        None => return Err(DesignError::Precondition("some target is uncoverable")),
    }
    if search.best_count > lower_bound {
        let mut uncovered = vec![!0u64; space.words];
        trim_tail(&mut uncovered, space.total_targets);
        let mut chosen = Vec::new();
        search.dfs(&mut uncovered, &mut chosen)?;
    }
    let count = search.best_count;
    let blocks = BlockSystem::new(v, r, search.best_blocks)?;
    Ok(SearchOutcome { count, blocks })
}

/// Exact Turán number `T(v, k, t)` with a witness system, by depth-first
/// search over uncovered k-sets with a greedy upper bound, a counting lower
/// bound, and the element-deletion bound
/// `T(v, k, t) >= ceil(v * T(v-1, k, t) / (v - t))` applied recursively.
pub fn turan_number_exact(
    v: usize,
    k: usize,
    t: usize,
    node_budget: u64,
) -> Result<SearchOutcome, DesignError> {
    let mut cache = BTreeMap::new();
    turan_exact_inner(v, k, t, node_budget, &mut cache)
}

fn turan_exact_inner(
    v: usize,
    k: usize,
    t: usize,
    node_budget: u64,
    cache: &mut BTreeMap<(usize, usize, usize), SearchOutcome>,
) -> Result<SearchOutcome, DesignError> {
    if t == 0 || t > k || k > v || v > 24 {
        return Err(DesignError::Precondition("need 1 <= t <= k <= v <= 24"));
    }
    if let Some(hit) = cache.get(&(v, k, t)) {
        return Ok(hit.clone());
    }
    let outcome = if k == v {
        SearchOutcome {
            count: 1,
            blocks: BlockSystem::new(v, t, vec![(1u64 << t) - 1])?,
        }
    } else if k == t {
        SearchOutcome {
            count: combin::binomial_u64(v, t).expect("v <= 24") as usize,
            blocks: BlockSystem::new(v, t, combin::subsets(v, t).collect())?,
        }
    } else {
        let candidate_masks: Vec<u64> = combin::subsets(v, t).collect();
        let space = build_target_space(v, &candidate_masks, &[k], |cand, target| {
            cand & target == cand
        });
        let counting = combin::binomial_u64(v, k)
            .zip(combin::binomial_u64(v - t, k - t))
            .map_or(1, |(targets, cap)| targets.div_ceil(cap) as usize);
        let ladder = {
            let sub = turan_exact_inner(v - 1, k, t, node_budget, cache)?;
            (v * sub.count).div_ceil(v - t)
        };
        run_cover_search(
            v,
            t,
            candidate_masks,
            space,
            counting.max(ladder),
            node_budget,
        )?
    };
    cache.insert((v, k, t), outcome.clone());
    Ok(outcome)
}

/// Exact single-exclusion number `Γ(v, r)` with a witness system; the same
/// search core as the Turán oracle with targets of every size `1..=r+1` and
/// the exact Turán number `T(v, r+1, r)` as an extra lower bound.
pub fn single_exclusion_number_exact(
    v: usize,
    r: usize,
    node_budget: u64,
) -> Result<SearchOutcome, DesignError> {
    if r == 0 || r + 1 > v || v > 24 {
        return Err(DesignError::Precondition(
            "need 1 <= r <= v - 1 and v <= 24",
        ));
    }
    let candidate_masks: Vec<u64> = combin::subsets(v, r).collect();
    let class_sizes: Vec<usize> = (1..=r + 1).collect();
    let space = build_target_space(v, &candidate_masks, &class_sizes, |cand, target| {
        let out = target & !cand;
        out != 0 && out & (out - 1) == 0
    });
    let turan_lb = turan_number_exact(v, r + 1, r, node_budget)?.count;
    run_cover_search(v, r, candidate_masks, space, turan_lb, node_budget)
}

/// One parity-check row per block: the row's support is the complement of
/// the block, realised by a minimum-weight dual codeword. For an MDS code
/// with `d - 2 = r`, the result has stopping distance `d` and full rank.
pub fn parity_check_from_system(
    system: &BlockSystem,
    code: &LinearCode,
) -> Result<ParityCheckMatrix, DesignError> {
    if !code.is_mds() {
        return Err(DesignError::Precondition("code must be MDS"));
    }
    let n = code.n();
    let d = n - code.k() + 1;
    if system.v() != n || system.r() + 2 != d {
        return Err(DesignError::Precondition(
            "system must be (n, d-2) for the code",
        ));
    }
    if !verify_single_exclusion(system)?.is_valid() {
        return Err(DesignError::Precondition("system is not single-exclusion"));
    }
    let dual = code.dual();
    let mut rows = Vec::with_capacity(system.len());
    for &block in system.block_masks() {
        let support: Vec<usize> = (0..n).filter(|&i| block & (1 << i) == 0).collect();
        rows.push(dual.codeword_with_support(&support)?);
    }
    let matrix = FieldMatrix::from_rows(code.field(), &rows).map_err(CodeError::Field)?;
    Ok(ParityCheckMatrix::for_code(matrix, code)?)
}
