//! Greedy search for short parity-check matrices with maximum stopping
//! distance, an exact stopping-redundancy oracle for tiny codes, and the
//! explicit row-combination matrices behind the combination bounds.
//!
//! The greedy loop tracks which `(target_s - 1)`-sets are covered by the
//! current row selection, replaces one row per iteration with the
//! replacement that covers the most additional sets, and appends a fresh
//! row once no replacement improves coverage. Everything is driven by the
//! seed in the configuration: identical seed and configuration reproduce
//! the identical run, bit for bit.

use crate::codes::{CodeError, LinearCode, ParityCheckMatrix};
use crate::combin;
use crate::field::FieldMatrix;
use crate::stopping::{self, StoppingDistance, StoppingError};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    /// The row cap was hit before the target stopping distance was reached.
    RowCapExceeded {
        rows: usize,
    },
    /// Enumeration or search exceeded its budget.
    BudgetExceeded,
    /// A stated precondition does not hold.
    Precondition(&'static str),
    Code(CodeError),
    Stopping(StoppingError),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::RowCapExceeded { rows } => {
                write!(f, "row cap hit after growing to {rows} rows")
            }
            SearchError::BudgetExceeded => write!(f, "search budget exceeded"),
            SearchError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            SearchError::Code(e) => write!(f, "{e}"),
            SearchError::Stopping(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SearchError {}

impl From<CodeError> for SearchError {
    fn from(e: CodeError) -> Self {
        SearchError::Code(e)
    }
}

impl From<StoppingError> for SearchError {
    fn from(e: StoppingError) -> Self {
        SearchError::Stopping(e)
    }
}

/// Where replacement candidates come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidatePool {
    /// Every dual codeword (deduplicated by support). Right for duals that
    /// are fully enumerable, like the self-dual Golay code.
    FullDual,
    /// A fixed pool of this many supports sampled from random information
    /// vectors of the dual, for duals too large to enumerate.
    Sampled(usize),
}

/// Tuning knobs for the greedy search. Identical configuration and seed
/// give bit-identical runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    /// Hard cap on matrix rows; `None` means `3 * (n - k)`.
    pub max_rows: Option<usize>,
    /// Consecutive improvement failures tolerated before a row is added.
    /// With a fixed pool the scan is deterministic, so one exhausted scan
    /// already proves a stall and the effective limit is 1.
    pub max_stall_iterations: usize,
    /// i-set sizes tracked by the objective; `None` means only
    /// `target_s - 1`, with smaller sizes added if final verification
    /// finds one uncovered.
    pub coverage_sizes: Option<Vec<usize>>,
    /// Independent attempts (seeds derived from `seed`) before giving up.
    pub restarts: usize,
    pub pool: CandidatePool,
    /// Rows in the initial random selection; `None` means `n - k`.
    pub initial_rows: Option<usize>,
    /// How many current rows are scored for replacement per iteration,
    /// picked by fewest uniquely-covered sets; the scan falls back to all
    /// rows before declaring a stall.
    pub replace_candidates: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 1,
            max_rows: None,
            max_stall_iterations: 200,
            coverage_sizes: None,
            restarts: 1,
            pool: CandidatePool::FullDual,
            initial_rows: None,
            replace_candidates: 8,
        }
    }
}

/// One line of the search trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogEntry {
    pub iteration: usize,
    pub rows: usize,
    pub uncovered: u64,
}

/// A verified search result; the stopping distance comes from an exhaustive
/// check, never from the search loop's own bookkeeping.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub matrix: ParityCheckMatrix,
    pub rows: usize,
    pub stopping_distance: usize,
    pub iterations: usize,
    pub seed: u64,
    pub log: Vec<LogEntry>,
}

struct PoolEntry {
    support: u64,
    weight: u32,
    word: Vec<u32>,
}

fn word_support(word: &[u32]) -> u64 {
    word.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &e)| acc | (((e != 0) as u64) << i))
}

fn uniform_below(rng: &mut ChaCha8Rng, n: u64) -> u64 {
    let zone = u64::MAX - (u64::MAX % n);
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % n;
        }
    }
}

/// Enumerates the candidate pool, deduplicated by support, sorted by
/// (weight, support): the tie-break order used everywhere in the search.
fn build_pool(
    dual: &LinearCode,
    pool: CandidatePool,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<PoolEntry>, SearchError> {
    let mut entries: Vec<PoolEntry> = Vec::new();
    let mut seen = alloc::collections::BTreeSet::new();
    match pool {
        CandidatePool::FullDual => {
            let words = dual.codeword_count().ok_or(SearchError::BudgetExceeded)?;
            if words > 1 << 22 {
                return Err(SearchError::BudgetExceeded);
            }
            dual.for_each_nonzero_codeword(|w| {
                let support = word_support(w);
                if seen.insert(support) {
                    entries.push(PoolEntry {
                        support,
                        weight: support.count_ones(),
                        word: w.to_vec(),
                    });
                }
            });
        }
        CandidatePool::Sampled(size) => {
            let f = dual.field();
            let q = dual.q() as u64;
            let mut attempts = 0u64;
            while entries.len() < size && attempts < 64 * size as u64 {
                attempts += 1;
                let coeffs: Vec<u32> = (0..dual.k())
                    .map(|_| uniform_below(rng, q) as u32)
                    .collect();
                if coeffs.iter().all(|&c| c == 0) {
                    continue;
                }
                let word = dual.generator().left_mul_vec(&coeffs);
                let support = word_support(&word);
                if seen.insert(support) {
                    entries.push(PoolEntry {
                        support,
                        weight: support.count_ones(),
                        word,
                    });
                }
                let _ = f;
            }
        }
    }
    entries.sort_by_key(|e| (e.weight, e.support));
    Ok(entries)
}

/// Coverage bookkeeping over the tracked i-set sizes.
struct CoverGrid {
    sizes: Vec<usize>,
    total_bits: usize,
    words: usize,
    /// Flat candidate-major coverage bitmaps; size classes are concatenated
    /// in ascending size order.
    bitmaps: Vec<u64>,
    /// Total targets each candidate covers; an upper bound on any gain, used
    /// to skip candidates that cannot beat the current best move.
    static_cover: Vec<u64>,
}

impl CoverGrid {
    fn build(n: usize, sizes: &[usize], supports: &[u64]) -> CoverGrid {
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut total = 0usize;
        for &s in sizes {
            offsets.push(total);
            total += combin::binomial_u64(n, s).expect("n <= 63") as usize;
        }
        let words = total.div_ceil(64);
        let mut bitmaps = vec![0u64; supports.len() * words];
        for (cid, &sup) in supports.iter().enumerate() {
            let base = cid * words;
            for (&size, &offset) in sizes.iter().zip(&offsets) {
                for (rank, target) in combin::subsets(n, size).enumerate() {
                    let hit = sup & target;
                    if hit != 0 && hit & (hit - 1) == 0 {
                        let bit = offset + rank;
                        bitmaps[base + bit / 64] |= 1u64 << (bit % 64);
                    }
                }
            }
        }
        let static_cover = (0..supports.len())
            .map(|cid| {
                bitmaps[cid * words..(cid + 1) * words]
                    .iter()
                    .map(|w| w.count_ones() as u64)
                    .sum()
            })
            .collect();
        CoverGrid {
            sizes: sizes.to_vec(),
            total_bits: total,
            words,
            bitmaps,
            static_cover,
        }
    }

    fn coverage(&self, cid: usize) -> &[u64] {
        &self.bitmaps[cid * self.words..(cid + 1) * self.words]
    }
}

struct GreedyState {
    counts: Vec<u8>,
    uncovered: Vec<u64>,
    uncovered_count: u64,
}

impl GreedyState {
    fn fresh(grid: &CoverGrid) -> GreedyState {
        let mut uncovered = vec![!0u64; grid.words];
        let rem = grid.total_bits % 64;
        if rem != 0 {
            uncovered[grid.words - 1] = (1u64 << rem) - 1;
        }
        GreedyState {
            counts: vec![0u8; grid.total_bits],
            uncovered,
            uncovered_count: grid.total_bits as u64,
        }
    }

    fn add(&mut self, grid: &CoverGrid, cid: usize) {
        let cov = grid.coverage(cid);
        for (w, &bits) in cov.iter().enumerate() {
            let mut rest = bits;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let t = w * 64 + b;
                if self.counts[t] == 0 {
                    self.uncovered[w] &= !(1u64 << b);
                    self.uncovered_count -= 1;
                }
                self.counts[t] += 1;
            }
        }
    }

    fn remove(&mut self, grid: &CoverGrid, cid: usize) {
        let cov = grid.coverage(cid);
        for (w, &bits) in cov.iter().enumerate() {
            let mut rest = bits;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let t = w * 64 + b;
                self.counts[t] -= 1;
                if self.counts[t] == 0 {
                    self.uncovered[w] |= 1u64 << b;
                    self.uncovered_count += 1;
                }
            }
        }
    }

    /// Bitmap of targets covered only by the given row.
    fn uniquely_covered(&self, grid: &CoverGrid, cid: usize, out: &mut Vec<u64>) -> u64 {
        let cov = grid.coverage(cid);
        out.clear();
        out.resize(grid.words, 0);
        let mut total = 0u64;
        for (w, &bits) in cov.iter().enumerate() {
            let mut word = 0u64;
            let mut rest = bits;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.counts[w * 64 + b] == 1 {
                    word |= 1u64 << b;
                }
            }
            out[w] = word;
            total += word.count_ones() as u64;
        }
        total
    }
}

fn intersect_popcount(a: &[u64], b: &[u64]) -> u64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as u64)
        .sum()
}

/// Greedy search for a parity-check matrix with stopping distance at least
/// `target_s`: start from a random row selection, replace rows while
/// replacements strictly improve coverage of the tracked i-sets, add rows on
/// stalls, and verify the result exhaustively (coverage of every smaller
/// i-set, full rank, exact stopping distance).
pub fn greedy_pcm_search(
    code: &LinearCode,
    target_s: usize,
    cfg: &SearchConfig,
) -> Result<SearchResult, SearchError> {
    if code.n() > 63 {
        return Err(SearchError::Precondition("search needs n <= 63"));
    }
    if target_s < 2 {
        return Err(SearchError::Precondition(
            "target stopping distance must be >= 2",
        ));
    }
    let d = code.min_distance()?;
    if target_s > d {
        return Err(SearchError::Precondition(
            "target stopping distance exceeds the minimum distance",
        ));
    }
    let mut last_err = SearchError::Precondition("no restarts configured");
    for attempt in 0..cfg.restarts.max(1) {
        let seed = cfg
            .seed
            .wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        match greedy_attempt(code, target_s, cfg, seed) {
            Ok(result) => return Ok(result),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

fn greedy_attempt(
    code: &LinearCode,
    target_s: usize,
    cfg: &SearchConfig,
    seed: u64,
) -> Result<SearchResult, SearchError> {
    let n = code.n();
    let redundancy = code.redundancy();
    let max_rows = cfg.max_rows.unwrap_or(3 * redundancy).min(250);
    if max_rows < redundancy {
        return Err(SearchError::Precondition("row cap below the redundancy"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dual = code.dual();
    let pool = build_pool(&dual, cfg.pool, &mut rng)?;
    if pool.is_empty() {
        return Err(SearchError::Precondition("empty candidate pool"));
    }
    let supports: Vec<u64> = pool.iter().map(|e| e.support).collect();

    let mut sizes: Vec<usize> = cfg
        .coverage_sizes
        .clone()
        .unwrap_or_else(|| vec![target_s - 1]);
    sizes.sort_unstable();
    sizes.dedup();
    let mut grid = CoverGrid::build(n, &sizes, &supports);
    let mut state = GreedyState::fresh(&grid);

    // Initial selection: distinct random pool rows.
    let initial = cfg.initial_rows.unwrap_or(redundancy).clamp(1, pool.len());
    let mut selected: Vec<usize> = Vec::with_capacity(initial);
    while selected.len() < initial {
        let pick = uniform_below(&mut rng, pool.len() as u64) as usize;
        if !selected.contains(&pick) {
            selected.push(pick);
            state.add(&grid, pick);
        }
    }

    let mut log = Vec::new();
    let mut iterations = 0usize;
    let mut scratch = Vec::new();
    let mut target_buf: Vec<u64> = Vec::new();

    loop {
        if state.uncovered_count == 0 {
            // Tracked sizes are covered; verify every smaller i-set too.
            let uncovered_size =
                (1..target_s).find(|&s| !covers_all_of_size(&supports, &selected, n, s));
            match uncovered_size {
                None => break,
                Some(_) => {
                    // Track every smaller size and keep going.
                    let all: Vec<usize> = (1..target_s).collect();
                    if all == grid.sizes {
                        return Err(SearchError::Precondition(
                            "coverage complete yet verification failed",
                        ));
                    }
                    grid = CoverGrid::build(n, &all, &supports);
                    state = GreedyState::fresh(&grid);
                    for &cid in &selected {
                        state.add(&grid, cid);
                    }
                    continue;
                }
            }
        }
        iterations += 1;
        if iterations > 2_000_000 {
            return Err(SearchError::BudgetExceeded);
        }
        log.push(LogEntry {
            iteration: iterations,
            rows: selected.len(),
            uncovered: state.uncovered_count,
        });

        // Rows ranked by how little they uniquely cover.
        let mut removal_order: Vec<(u64, usize, usize)> = selected
            .iter()
            .enumerate()
            .map(|(slot, &cid)| {
                let uniq = state.uniquely_covered(&grid, cid, &mut scratch);
                (uniq, pool[cid].support as usize, slot)
            })
            .collect();
        removal_order.sort_unstable();

        let mut best: Option<(i64, usize, usize)> = None; // (improvement, slot, new cid)
        let scan = |limit: usize,
                    best: &mut Option<(i64, usize, usize)>,
                    state: &GreedyState,
                    target_buf: &mut Vec<u64>,
                    scratch: &mut Vec<u64>| {
            for &(_, _, slot) in removal_order.iter().take(limit) {
                let out_cid = selected[slot];
                let uniq_count = state.uniquely_covered(&grid, out_cid, scratch);
                target_buf.clear();
                target_buf.extend(
                    state
                        .uncovered
                        .iter()
                        .zip(scratch.iter())
                        .map(|(u, q)| u | q),
                );
                for (cid, _) in pool.iter().enumerate() {
                    if selected.contains(&cid) {
                        continue;
                    }
                    if let Some((best_improvement, _, _)) = *best {
                        if grid.static_cover[cid] as i64 - uniq_count as i64 <= best_improvement {
                            continue;
                        }
                    }
                    let gain = intersect_popcount(grid.coverage(cid), target_buf);
                    let improvement = gain as i64 - uniq_count as i64;
                    if best.is_none() || improvement > best.expect("checked").0 {
                        *best = Some((improvement, slot, cid));
                    }
                }
            }
        };
        scan(
            cfg.replace_candidates.min(selected.len()),
            &mut best,
            &state,
            &mut target_buf,
            &mut scratch,
        );
        if best.is_none_or(|b| b.0 <= 0) && cfg.replace_candidates < selected.len() {
            scan(
                selected.len(),
                &mut best,
                &state,
                &mut target_buf,
                &mut scratch,
            );
        }

        match best {
            Some((improvement, slot, new_cid)) if improvement > 0 => {
                let old = selected[slot];
                state.remove(&grid, old);
                state.add(&grid, new_cid);
                selected[slot] = new_cid;
            }
            _ => {
                // The pool is fixed and the scan above was exhaustive, so
                // retrying cannot help: this already is the stall.

                if selected.len() >= max_rows {
                    return Err(SearchError::RowCapExceeded {
                        rows: selected.len(),
                    });
                }
                // Append the row covering the most uncovered targets.
                let mut best_add: Option<(u64, usize)> = None;
                for (cid, _) in pool.iter().enumerate() {
                    if selected.contains(&cid) {
                        continue;
                    }
                    if let Some((best_gain, _)) = best_add {
                        if grid.static_cover[cid] <= best_gain {
                            continue;
                        }
                    }
                    let gain = intersect_popcount(grid.coverage(cid), &state.uncovered);
                    if best_add.is_none() || gain > best_add.expect("checked").0 {
                        best_add = Some((gain, cid));
                    }
                }
                let (gain, cid) =
                    best_add.ok_or(SearchError::Precondition("candidate pool exhausted"))?;
                if gain == 0 {
                    return Err(SearchError::Precondition(
                        "no candidate covers the remaining sets",
                    ));
                }
                state.add(&grid, cid);
                selected.push(cid);
            }
        }
    }

    // Rank completion: append dual basis rows until the rows span the dual.
    let mut rows: Vec<Vec<u32>> = selected.iter().map(|&cid| pool[cid].word.clone()).collect();
    let mut matrix = FieldMatrix::from_rows(code.field(), &rows).map_err(CodeError::Field)?;
    if matrix.rank() < redundancy {
        for basis_row in 0..dual.k() {
            if matrix.rank() == redundancy {
                break;
            }
            let candidate = dual.generator().row(basis_row).to_vec();
            let mut extended = rows.clone();
            extended.push(candidate.clone());
            let trial =
                FieldMatrix::from_rows(code.field(), &extended).map_err(CodeError::Field)?;
            if trial.rank() > matrix.rank() {
                rows = extended;
                matrix = trial;
            }
        }
    }
    if rows.len() > max_rows {
        return Err(SearchError::RowCapExceeded { rows: rows.len() });
    }
    let h = ParityCheckMatrix::for_code(matrix, code)?;
    let verified = match stopping::stopping_distance(&h)? {
        StoppingDistance::Distance(s) => s,
        StoppingDistance::NoStoppingSet => n + 1,
    };
    if verified < target_s {
        return Err(SearchError::Precondition(
            "verification found a small stopping set",
        ));
    }
    Ok(SearchResult {
        rows: h.rows(),
        matrix: h,
        stopping_distance: verified,
        iterations,
        seed,
        log,
    })
}

fn covers_all_of_size(supports: &[u64], selected: &[usize], n: usize, size: usize) -> bool {
    for target in combin::subsets(n, size) {
        let covered = selected.iter().any(|&cid| {
            let hit = supports[cid] & target;
            hit != 0 && hit & (hit - 1) == 0
        });
        if !covered {
            return false;
        }
    }
    true
}

/// Exact stopping redundancy for tiny codes: the minimum number of rows
/// drawn from the dual code such that every i-set with `i <= d - 1` is
/// covered and the rows span the dual.
///
/// Candidates are dual codewords up to scalar multiples (scalars change
/// neither coverage nor span). Rank shortfall after covering is repaired by
/// counting the independent rows still needed, since any independent dual
/// codeword can pad a cover without hurting coverage.
pub fn exact_stopping_redundancy(code: &LinearCode, cap: usize) -> Result<usize, SearchError> {
    let n = code.n();
    if n > 24 {
        return Err(SearchError::Precondition("exact search needs n <= 24"));
    }
    let dual = code.dual();
    let dual_words = dual.codeword_count().ok_or(SearchError::BudgetExceeded)?;
    if dual_words > 10_000 {
        return Err(SearchError::BudgetExceeded);
    }
    let d = code.min_distance()?;
    let redundancy = code.redundancy();

    // Projective representatives: first nonzero coefficient equal to 1.
    let mut candidates: Vec<(u64, u32, Vec<u32>)> = Vec::new();
    dual.for_each_nonzero_codeword(|w| {
        if w.iter().find(|&&c| c != 0) == Some(&1) {
            let support = word_support(w);
            candidates.push((support, support.count_ones(), w.to_vec()));
        }
    });
    candidates.sort_by(|a, b| (a.1, a.0, &a.2).cmp(&(b.1, b.0, &b.2)));

    // Coverage targets: all i-sets for i = 1..d.
    let mut targets: Vec<u64> = Vec::new();
    for size in 1..d {
        targets.extend(combin::subsets(n, size));
    }
    let covers = |sup: u64, t: u64| {
        let hit = sup & t;
        hit != 0 && hit & (hit - 1) == 0
    };
    let candidates_of: Vec<Vec<u32>> = targets
        .iter()
        .map(|&t| {
            (0..candidates.len() as u32)
                .filter(|&cid| covers(candidates[cid as usize].0, t))
                .collect()
        })
        .collect();
    if candidates_of.iter().any(Vec::is_empty) {
        return Err(SearchError::Precondition("some i-set is uncoverable"));
    }

    struct Dfs<'a> {
        candidates: &'a [(u64, u32, Vec<u32>)],
        targets: &'a [u64],
        candidates_of: &'a [Vec<u32>],
        redundancy: usize,
        field: crate::field::FieldSpec,
        best: usize,
        nodes: u64,
    }

    impl Dfs<'_> {
        fn cost_of(&self, chosen: &[u32]) -> usize {
            let rows: Vec<Vec<u32>> = chosen
                .iter()
                .map(|&c| self.candidates[c as usize].2.clone())
                .collect();
            let rank = FieldMatrix::from_rows(self.field, &rows)
                .map(|m| m.rank())
                .unwrap_or(0);
            chosen.len() + (self.redundancy - rank.min(self.redundancy))
        }

        fn run(&mut self, covered: &mut [bool], chosen: &mut Vec<u32>) -> Result<(), SearchError> {
            self.nodes += 1;
            if self.nodes > 50_000_000 {
                return Err(SearchError::BudgetExceeded);
            }
            let first = covered.iter().position(|&c| !c);
            let Some(_) = first else {
                let cost = self.cost_of(chosen);
                self.best = self.best.min(cost);
                return Ok(());
            };
            if chosen.len() + 1 >= self.best {
                return Ok(());
            }
            // Most-constrained uncovered target.
            let mut pick = usize::MAX;
            let mut pick_len = usize::MAX;
            for (tid, cands) in self.candidates_of.iter().enumerate() {
                if !covered[tid] && cands.len() < pick_len {
                    pick = tid;
                    pick_len = cands.len();
                }
            }
            for &cid in &self.candidates_of[pick] {
                if chosen.contains(&cid) {
                    continue;
                }
                let sup = self.candidates[cid as usize].0;
                let flipped: Vec<usize> = self
                    .targets
                    .iter()
                    .enumerate()
                    .filter(|&(tid, &t)| {
                        !covered[tid] && {
                            let hit = sup & t;
                            hit != 0 && hit & (hit - 1) == 0
                        }
                    })
                    .map(|(tid, _)| tid)
                    .collect();
                for &tid in &flipped {
                    covered[tid] = true;
                }
                chosen.push(cid);
                self.run(covered, chosen)?;
                chosen.pop();
                for &tid in &flipped {
                    covered[tid] = false;
                }
            }
            Ok(())
        }
    }

    let mut dfs = Dfs {
        candidates: &candidates,
        targets: &targets,
        candidates_of: &candidates_of,
        redundancy,
        field: code.field(),
        best: cap + 1,
        nodes: 0,
    };
    let mut covered = vec![false; targets.len()];
    let mut chosen = Vec::new();
    dfs.run(&mut covered, &mut chosen)?;
    if dfs.best > cap {
        return Err(SearchError::BudgetExceeded);
    }
    Ok(dfs.best)
}

/// Outcome of the experimental equality check between the exact stopping
/// redundancy of an MDS code and the single-exclusion number Γ(n, d-2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjectureProbe {
    pub rho: usize,
    pub gamma: usize,
    pub matches: bool,
}

/// Compares ρ(C) with Γ(n, d-2) on an MDS instance small enough for both
/// exact searches. A mismatch is reported, not swallowed.
pub fn mds_equality_probe(code: &LinearCode, cap: usize) -> Result<ConjectureProbe, SearchError> {
    if !code.is_mds() {
        return Err(SearchError::Precondition("probe needs an MDS code"));
    }
    let d = code.min_distance()?;
    let rho = exact_stopping_redundancy(code, cap)?;
    let gamma = crate::designs::single_exclusion_number_exact(
        code.n(),
        d - 2,
        crate::designs::SEARCH_NODE_BUDGET,
    )
    .map_err(|_| SearchError::BudgetExceeded)?
    .count;
    Ok(ConjectureProbe {
        rho,
        gamma,
        matches: rho == gamma,
    })
}

/// The explicit odd-combination parity-check matrix for a binary code: all
/// sums of an odd number `i <= d - 1` of dual basis rows. Its verified
/// stopping distance is exactly `d`, and its row count matches the
/// odd-combination bound.
pub fn odd_combination_matrix(code: &LinearCode) -> Result<ParityCheckMatrix, SearchError> {
    if code.q() != 2 {
        return Err(SearchError::Precondition(
            "odd combinations need a binary code",
        ));
    }
    combination_matrix(code, true)
}

/// The q-ary combination matrix: for every `i <= d - 1` and every i-subset
/// of dual basis rows, all coefficient patterns with every coefficient
/// nonzero and the first fixed at 1.
pub fn qary_combination_matrix(code: &LinearCode) -> Result<ParityCheckMatrix, SearchError> {
    combination_matrix(code, false)
}

fn combination_matrix(code: &LinearCode, odd_only: bool) -> Result<ParityCheckMatrix, SearchError> {
    let d = code.min_distance()?;
    if d < 2 {
        return Err(SearchError::Precondition(
            "combination matrices need d >= 2",
        ));
    }
    let f = code.field();
    let q = code.q();
    let dual = code.dual();
    let r = dual.k();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for i in 1..=(d - 1) {
        if odd_only && i % 2 == 0 {
            continue;
        }
        if i > r {
            break;
        }
        for subset in combin::subsets(r, i) {
            let members = combin::mask_to_indices(subset);
            // Coefficients for members[1..] run over all nonzero values;
            // the first is pinned to 1.
            let free = members.len() - 1;
            let mut digits = vec![0u32; free];
            loop {
                let mut coeffs = vec![0u32; r];
                coeffs[members[0]] = 1;
                for (slot, &m) in members[1..].iter().enumerate() {
                    coeffs[m] = digits[slot] + 1;
                }
                rows.push(dual.generator().left_mul_vec(&coeffs));
                if rows.len() > 100_000 {
                    return Err(SearchError::BudgetExceeded);
                }
                // Odometer over nonzero coefficient values.
                let mut slot = 0usize;
                loop {
                    if slot == free {
                        break;
                    }
                    digits[slot] += 1;
                    if digits[slot] == q - 1 {
                        digits[slot] = 0;
                        slot += 1;
                    } else {
                        break;
                    }
                }
                if slot == free {
                    break;
                }
            }
        }
    }
    let matrix = FieldMatrix::from_rows(f, &rows).map_err(CodeError::Field)?;
    let h = ParityCheckMatrix::for_code(matrix, code)?;
    match stopping::stopping_distance(&h)? {
        StoppingDistance::Distance(s) if s == d => Ok(h),
        _ => Err(SearchError::Precondition(
            "combination matrix failed its stopping-distance check",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds;
    use crate::codes::{extended_hamming84, hamming74, rs_code};
    use crate::field::FieldSpec;
    use num_traits::ToPrimitive;

    #[test]
    fn parity_code_single_row() {
        // Binary parity code n=4, d=2: one all-ones dual codeword suffices.
        let gf2 = FieldSpec::gf2();
        let rows: Vec<Vec<u32>> = vec![vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]];
        let code = LinearCode::new(FieldMatrix::from_rows(gf2, &rows).unwrap()).unwrap();
        let cfg = SearchConfig {
            seed: 7,
            ..SearchConfig::default()
        };
        let result = greedy_pcm_search(&code, 2, &cfg).unwrap();
        assert_eq!(result.rows, 1);
        assert_eq!(result.stopping_distance, 2);
    }

    #[test]
    fn tiny_mds_search_reaches_the_optimum() {
        // (5,2,4) over GF(5): the minimum is 5 rows and the greedy loop must
        // land exactly there on this instance.
        let code = rs_code(5, 5, 2).unwrap();
        let cfg = SearchConfig {
            seed: 3,
            restarts: 4,
            ..SearchConfig::default()
        };
        let result = greedy_pcm_search(&code, 4, &cfg).unwrap();
        assert_eq!(result.stopping_distance, 4);
        assert_eq!(result.rows, 5);
        assert_eq!(result.matrix.matrix().rank(), 3);
    }

    #[test]
    fn rank_completion_on_a_non_mds_code() {
        // Hamming (7,4): d = 3 but n - k = 3 > d - 1 = 2, so covering all
        // 2-sets does not force full rank; the completion step must top the
        // matrix up to a valid parity check (the validator enforces it).
        let code = hamming74();
        for seed in 1..=4 {
            let cfg = SearchConfig {
                seed,
                ..SearchConfig::default()
            };
            let result = greedy_pcm_search(&code, 3, &cfg).unwrap();
            assert_eq!(result.stopping_distance, 3);
            assert_eq!(result.matrix.matrix().rank(), 3);
        }
    }

    #[test]
    fn search_is_reproducible() {
        let code = rs_code(5, 5, 2).unwrap();
        let cfg = SearchConfig {
            seed: 11,
            ..SearchConfig::default()
        };
        let a = greedy_pcm_search(&code, 4, &cfg).unwrap();
        let b = greedy_pcm_search(&code, 4, &cfg).unwrap();
        assert_eq!(a.matrix.matrix(), b.matrix.matrix());
        assert_eq!(a.iterations, b.iterations);
        assert_eq!(a.log, b.log);
    }

    #[test]
    fn exact_redundancy_tiny_instances() {
        // (4,2,3) MDS over GF(5).
        assert_eq!(
            exact_stopping_redundancy(&rs_code(5, 4, 2).unwrap(), 10).unwrap(),
            3
        );
        // (4,1,4) repetition over GF(5).
        assert_eq!(
            exact_stopping_redundancy(&rs_code(5, 4, 1).unwrap(), 10).unwrap(),
            3
        );
        // (5,2,4) over GF(5).
        assert_eq!(
            exact_stopping_redundancy(&rs_code(5, 5, 2).unwrap(), 10).unwrap(),
            5
        );
    }

    #[test]
    fn equality_probe_on_tiny_mds() {
        for code in [
            rs_code(5, 4, 2).unwrap(),
            rs_code(5, 4, 1).unwrap(),
            rs_code(5, 5, 2).unwrap(),
        ] {
            let probe = mds_equality_probe(&code, 12).unwrap();
            assert!(probe.matches, "rho={} gamma={}", probe.rho, probe.gamma);
        }
    }

    #[test]
    fn exact_redundancy_brackets() {
        // rho >= max(redundancy, the Turán lower bound) and never exceeds
        // the q-ary combination bound realised as a matrix.
        let code = rs_code(5, 5, 2).unwrap();
        let rho = exact_stopping_redundancy(&code, 12).unwrap();
        assert!(rho >= code.redundancy());
        let lower = bounds::mds_turan_lower(5, 4).unwrap().1.to_usize().unwrap();
        assert!(rho >= lower);
        let combo = qary_combination_matrix(&code).unwrap();
        assert!(rho <= combo.rows());
    }

    #[test]
    fn hamming_combination_matrices() {
        // d = 3: odd combinations collapse to the three basis rows.
        let h74 = odd_combination_matrix(&hamming74()).unwrap();
        assert_eq!(h74.rows(), 3);
        // d = 4, r = 4: C(4,1) + C(4,3) = 8 rows.
        let h84 = odd_combination_matrix(&extended_hamming84()).unwrap();
        assert_eq!(h84.rows(), 8);
    }

    #[test]
    fn qary_combination_matrix_size() {
        // (5,3,3) over GF(5): C(2,1) + C(2,2)*4 = 6 rows.
        let code = rs_code(5, 5, 3).unwrap();
        let h = qary_combination_matrix(&code).unwrap();
        assert_eq!(h.rows(), 6);
        let expected = bounds::qary_combination_bound(2, 3, 5).unwrap();
        assert_eq!(BigUint::from(h.rows()), expected);
    }

    use num_bigint::BigUint;
}
