//! Worker fan-out for pattern counting. The enumeration space splits into
//! contiguous colex rank ranges whose partial counts sum to the full count,
//! so the result is independent of the worker count.

use stopred_core::stopping::ErasureCounter;

/// Worker cap: the `STOPRED_THREADS` environment variable when set (minimum
/// 1), otherwise the available parallelism.
pub fn worker_count() -> usize {
    std::env::var("STOPRED_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(std::num::NonZeroUsize::get)
                .unwrap_or(1)
        })
}

/// Counts undecodable weight-`w` patterns across all workers.
pub fn count_undecodable_chunked(counter: &ErasureCounter, w: usize) -> Option<u64> {
    let total = counter.pattern_count(w)?;
    let workers = worker_count().min(total.max(1) as usize);
    if workers <= 1 {
        return Some(counter.count_range(w, 0, total));
    }
    let chunk = total.div_ceil(workers as u64);
    let sum = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|i| {
                let lo = i * chunk;
                let hi = ((i + 1) * chunk).min(total);
                scope.spawn(move || counter.count_range(w, lo, hi.max(lo)))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("counting worker panicked"))
            .sum()
    });
    Some(sum)
}
