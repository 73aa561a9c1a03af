//! Binomial coefficients and fixed-size subset enumeration.
//!
//! Subsets of `{0, .., n-1}` with `n <= 63` are represented as `u64` masks.
//! Enumeration is in increasing mask order, which coincides with
//! colexicographic order on the index sets; ranking/unranking use the same
//! order so that an enumeration space can be split into contiguous chunks.

use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact binomial coefficient as an arbitrary-precision integer.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Binomial coefficient if it fits in a `u64`.
pub fn binomial_u64(n: usize, k: usize) -> Option<u64> {
    binomial_u128(n, k).and_then(|v| u64::try_from(v).ok())
}

/// Binomial coefficient if it fits in a `u128`.
pub fn binomial_u128(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

/// Natural logarithm of the binomial coefficient.
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    let mut acc = 0.0f64;
    for i in 0..k {
        acc += libm::log((n - i) as f64) - libm::log((i + 1) as f64);
    }
    acc
}

/// Mask with the lowest `k` bits set, the first `k`-subset in colex order.
pub fn first_subset(k: usize) -> u64 {
    debug_assert!(k < 64);
    (1u64 << k) - 1
}

/// Iterator over all `k`-subsets of `{0, .., n-1}` as masks, in colex order.
pub fn subsets(n: usize, k: usize) -> SubsetIter {
    assert!(
        n < 64,
        "subset enumeration is limited to ground sets below 64"
    );
    let cur = if k > n { None } else { Some(first_subset(k)) };
    SubsetIter { n, cur }
}

/// Gosper-style enumerator of fixed-popcount masks.
pub struct SubsetIter {
    n: usize,
    cur: Option<u64>,
}

impl Iterator for SubsetIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.cur?;
        self.cur = next_subset(cur, self.n);
        Some(cur)
    }
}

/// Successor of `mask` among same-size subsets of `{0, .., n-1}`, if any.
pub fn next_subset(mask: u64, n: usize) -> Option<u64> {
    if mask == 0 {
        return None;
    }
    let low = mask & mask.wrapping_neg();
    let carry = mask + low;
    let next = carry | (((mask ^ carry) / low) >> 2);
    if next < (1u64 << n) {
        Some(next)
    } else {
        None
    }
}

/// Colex rank of a subset mask among subsets of the same size.
pub fn rank_subset(mask: u64) -> u64 {
    let mut rank = 0u64;
    let mut rest = mask;
    let mut pos = 1usize;
    while rest != 0 {
        let c = rest.trailing_zeros() as usize;
        rank += binomial_u64(c, pos).expect("rank fits u64");
        rest &= rest - 1;
        pos += 1;
    }
    rank
}

/// Subset of `{0, .., n-1}` with the given size and colex rank.
pub fn unrank_subset(n: usize, k: usize, mut rank: u64) -> u64 {
    let mut mask = 0u64;
    let mut top = n;
    for slot in (1..=k).rev() {
        // Largest c with C(c, slot) <= rank.
        let mut c = slot - 1;
        let mut best = 0u64;
        for cand in (slot - 1..top).rev() {
            let b = binomial_u64(cand, slot).expect("rank fits u64");
            if b <= rank {
                c = cand;
                best = b;
                break;
            }
        }
        rank -= best;
        mask |= 1u64 << c;
        top = c;
    }
    mask
}

/// Indices of the set bits of `mask`, ascending.
pub fn mask_to_indices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

/// Mask with the given bit indices set.
pub fn indices_to_mask(indices: &[usize]) -> u64 {
    let mut mask = 0u64;
    for &i in indices {
        debug_assert!(i < 64);
        mask |= 1u64 << i;
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial_u64(0, 0), Some(1));
        assert_eq!(binomial_u64(5, 2), Some(10));
        assert_eq!(binomial_u64(5, 6), Some(0));
        assert_eq!(binomial_u64(24, 12), Some(2_704_156));
        assert_eq!(binomial(24, 7), BigUint::from(346_104u32));
    }

    #[test]
    fn ln_binomial_matches_exact() {
        let exact = binomial_u64(30, 11).unwrap() as f64;
        let approx = libm::exp(ln_binomial(30, 11));
        assert!((approx / exact - 1.0).abs() < 1e-9);
    }

    #[test]
    fn subset_enumeration_counts_and_order() {
        let all: Vec<u64> = subsets(6, 3).collect();
        assert_eq!(all.len(), 20);
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert!(all.iter().all(|m| m.count_ones() == 3));
    }

    #[test]
    fn rank_unrank_roundtrip() {
        for (rank, mask) in subsets(10, 4).enumerate() {
            assert_eq!(rank_subset(mask), rank as u64);
            assert_eq!(unrank_subset(10, 4, rank as u64), mask);
        }
    }

    #[test]
    fn empty_subset() {
        let all: Vec<u64> = subsets(5, 0).collect();
        assert_eq!(all, [0]);
    }
}
