//! Suffix-array index over a [`Text`] deciding uniqueness of substrings.

mod sais;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::text::Text;

pub use sais::suffix_array;

const UNDEFINED: u32 = 0;

/// Suffix array, LCP array and shortest-unique-length array of a nonempty
/// text. Immutable after construction.
///
/// Internally everything is 0-based `u32`; accessors speak 1-based
/// positions.
#[derive(Clone, Debug)]
pub struct TextIndex {
    text: Text,
    sa: Vec<u32>,
    lcp: Vec<u32>,
    unique_len: Vec<u32>,
}

impl TextIndex {
    pub fn build(text: Text) -> Result<Self> {
        text.require_nonempty()?;
        if text.len() >= u32::MAX as usize {
            return Err(Error::TextTooLarge(text.len()));
        }
        let sa = sais::suffix_array(text.as_bytes());
        let lcp = lcp_kasai(text.as_bytes(), &sa);
        let unique_len = shortest_unique_lengths(&sa, &lcp);
        Ok(TextIndex {
            text,
            sa,
            lcp,
            unique_len,
        })
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Suffix start positions (1-based) in lexicographic order.
    pub fn suffix_array(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.sa.iter().map(|&p| p as usize + 1)
    }

    /// `lcp[r]` is the common-prefix length of the suffixes at ranks `r`
    /// and `r + 1` (0-based ranks); `n - 1` entries.
    pub fn lcp_array(&self) -> &[u32] {
        &self.lcp
    }

    /// Length of the shortest unique substring starting at 1-based `i`, or
    /// `None` when every prefix of `T[i..n]` repeats.
    pub fn unique_len(&self, i: usize) -> Option<usize> {
        match self.unique_len.get(i.checked_sub(1)?) {
            Some(&l) if l != UNDEFINED => Some(l as usize),
            _ => None,
        }
    }

    pub(crate) fn raw_unique_len(&self) -> &[u32] {
        &self.unique_len
    }

    /// Half-open rank range of suffixes having `pattern` as a prefix.
    fn rank_range(&self, pattern: &[u8]) -> (usize, usize) {
        let t = self.text.as_bytes();
        let prefix_cmp = |pos: u32| {
            let suf = &t[pos as usize..];
            let k = suf.len().min(pattern.len());
            match suf[..k].cmp(&pattern[..k]) {
                Ordering::Equal if suf.len() < pattern.len() => Ordering::Less,
                o => o,
            }
        };
        let lo = self
            .sa
            .partition_point(|&p| prefix_cmp(p) == Ordering::Less);
        let hi = lo + self.sa[lo..].partition_point(|&p| prefix_cmp(p) == Ordering::Equal);
        (lo, hi)
    }

    /// `occ_T(pattern)`; the empty pattern occurs `n + 1` times.
    pub fn occurrence_count(&self, pattern: &[u8]) -> usize {
        if pattern.is_empty() {
            return self.len() + 1;
        }
        let (lo, hi) = self.rank_range(pattern);
        hi - lo
    }

    /// Sorted 1-based start positions of `pattern` (nonempty).
    pub fn occurrences(&self, pattern: &[u8]) -> Vec<usize> {
        if pattern.is_empty() {
            return (1..=self.len() + 1).collect();
        }
        let (lo, hi) = self.rank_range(pattern);
        let mut occ: Vec<usize> = self.sa[lo..hi].iter().map(|&p| p as usize + 1).collect();
        occ.sort_unstable();
        occ
    }
}

/// Kasai et al. LCP construction in O(n).
fn lcp_kasai(text: &[u8], sa: &[u32]) -> Vec<u32> {
    let n = text.len();
    if n < 2 {
        return Vec::new();
    }
    let mut rank = vec![0u32; n];
    for (r, &p) in sa.iter().enumerate() {
        rank[p as usize] = r as u32;
    }
    let mut lcp = vec![0u32; n - 1];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r + 1 == n {
            h = 0;
            continue;
        }
        let j = sa[r + 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

fn shortest_unique_lengths(sa: &[u32], lcp: &[u32]) -> Vec<u32> {
    let n = sa.len();
    let mut out = vec![UNDEFINED; n];
    for (r, &p) in sa.iter().enumerate() {
        let left = if r > 0 { lcp[r - 1] } else { 0 };
        let right = lcp.get(r).copied().unwrap_or(0);
        let l = left.max(right) + 1;
        if p as usize + l as usize <= n {
            out[p as usize] = l;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn index(s: &str) -> TextIndex {
        TextIndex::build(Text::from(s)).unwrap()
    }

    #[test]
    fn banana_arrays() {
        let idx = index("banana");
        assert_eq!(
            idx.suffix_array().collect::<Vec<_>>(),
            vec![6, 4, 2, 1, 5, 3]
        );
        assert_eq!(idx.lcp_array(), &[1, 3, 0, 0, 2]);
        let l: Vec<_> = (1..=6).map(|i| idx.unique_len(i)).collect();
        assert_eq!(l, vec![Some(1), Some(4), Some(3), None, None, None]);
    }

    #[test]
    fn distinct_and_unary() {
        let idx = index("abc");
        assert_eq!(idx.suffix_array().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(idx.lcp_array(), &[0, 0]);
        assert_eq!(
            (1..=3).map(|i| idx.unique_len(i)).collect::<Vec<_>>(),
            vec![Some(1); 3]
        );

        let idx = index("aaaa");
        let l: Vec<_> = (1..=4).map(|i| idx.unique_len(i)).collect();
        assert_eq!(l, vec![Some(4), None, None, None]);
    }

    #[test]
    fn empty_text_is_rejected() {
        assert_eq!(
            TextIndex::build(Text::default()).unwrap_err(),
            Error::EmptyText
        );
    }

    #[test]
    fn occurrence_counts() {
        assert_eq!(index("abaab").occurrence_count(b"a"), 3);
        assert_eq!(index("banana").occurrence_count(b""), 7);
        assert_eq!(index("banana").occurrence_count(b"na"), 2);
        assert_eq!(index("banana").occurrence_count(b"bananas"), 0);
        assert_eq!(index("banana").occurrence_count(b"x"), 0);
        assert_eq!(index("banana").occurrences(b"ana"), vec![2, 4]);
    }
}
