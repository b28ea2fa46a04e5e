//! Exhaustive search for circulant Hadamard matrices.
//!
//! With `S` the set of positions of `−1` in `γ`, the circulant matrix
//! `H_{ij} = γ_{j−i}` is Hadamard iff `|S ∩ (S+k)| = |S| − N/4` for every
//! shift `k ≠ 0`. Sets are bitmasks, so each test is a rotate and a popcount.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest order scanned (2^28 sign vectors).
pub const CHC_LIMIT: usize = 28;

/// All `γ ∈ {±1}^N` whose circulant matrix is Hadamard, sorted by the
/// bitmask of their `−1` positions (position 0 least significant).
///
/// Only `N ∈ {1, 2}` and multiples of 4 can carry a Hadamard matrix; other
/// orders return no vectors without scanning.
pub fn circulant_hadamard_search(n: usize) -> Result<Vec<Vec<i8>>> {
    if n == 0 {
        return Err(Error::InvalidInput("order must be positive".into()));
    }
    if n > CHC_LIMIT {
        return Err(Error::Budget { what: "circulant Hadamard order", value: n, limit: CHC_LIMIT });
    }
    let masks: Vec<u32> = match n {
        1 => vec![0, 1],
        // [[a,b],[b,a]] has orthogonal rows only if 2ab = 0
        2 => Vec::new(),
        _ if !n.is_multiple_of(4) => Vec::new(),
        _ => scan(n),
    };
    Ok(masks.into_iter().map(|m| to_signs(m, n)).collect())
}

fn scan(n: usize) -> Vec<u32> {
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let rotate = |s: u32, k: usize| ((s << k) | (s >> (n - k))) & full;
    let quarter = (n / 4) as u32;
    let accept = |s: u32| {
        let size = s.count_ones();
        // |S ∩ (S+k)| ≥ 0 forces |S| ≥ N/4; shifts k and N−k give the same count
        size >= quarter && (1..=n / 2).all(|k| (s & rotate(s, k)).count_ones() == size - quarter)
    };
    // split the space into chunks on the top bits for the thread pool
    let chunk_bits = n.saturating_sub(8).min(20);
    let chunks = 1u64 << (n - chunk_bits);
    let mut found: Vec<u32> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|hi| {
            let base = (hi << chunk_bits) as u32;
            (0..1u32 << chunk_bits).map(move |lo| base | lo).filter(move |&s| accept(s))
        })
        .collect();
    found.sort_unstable();
    found
}

fn to_signs(mask: u32, n: usize) -> Vec<i8> {
    (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect()
}
