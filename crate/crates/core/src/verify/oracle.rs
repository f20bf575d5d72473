//! Brute-force MUS enumeration by direct occurrence counting.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::mus::{MusInterval, MusSet};
use crate::text::Text;

pub const DEFAULT_ORACLE_CAP: usize = 2000;

/// `MUS(t)` from hash counts of every substring, level by length.
///
/// Independent of the suffix-array path. Quadratic memory per level and
/// cubic time in the worst case, so inputs are capped.
pub fn brute_mus(t: &Text, cap: usize) -> Result<MusSet> {
    t.require_nonempty()?;
    let n = t.len();
    if n > cap {
        return Err(Error::TextTooLargeForOracle { len: n, cap });
    }
    let b = t.as_bytes();
    let mut out = Vec::new();
    // Counts saturate at 2: only "unique" vs "repeat" matters.
    let mut prev: HashMap<&[u8], u8> = HashMap::new();
    for len in 1..=n {
        let mut cur: HashMap<&[u8], u8> = HashMap::with_capacity(n - len + 1);
        for w in b.windows(len) {
            let c = cur.entry(w).or_insert(0);
            *c = (*c + 1).min(2);
        }
        let repeats = |w: &[u8]| w.is_empty() || prev.get(w).copied().unwrap_or(0) >= 2;
        for (k, w) in b.windows(len).enumerate() {
            if cur[w] == 1 && repeats(&w[..len - 1]) && repeats(&w[1..]) {
                out.push(MusInterval::new(k + 1, k + len));
            }
        }
        if cur.values().all(|&c| c == 1) {
            // Every longer substring has a unique proper prefix.
            break;
        }
        prev = cur;
    }
    Ok(MusSet::from_intervals(n, out))
}

/// Occurrences of `pattern` in `text` by a sliding-window scan (1-based).
pub fn scan_occurrences(text: &[u8], pattern: &[u8]) -> Vec<usize> {
    if pattern.is_empty() {
        return (1..=text.len() + 1).collect();
    }
    text.windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(k, _)| k + 1)
        .collect()
}
