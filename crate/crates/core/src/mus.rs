//! Minimal unique substrings and positional stabbing queries.

use crate::error::{Error, Result};
use crate::index::TextIndex;
use crate::text::Text;

/// A MUS occurrence `T[start..=end]`, 1-based and inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MusInterval {
    pub start: usize,
    pub end: usize,
}

impl MusInterval {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(1 <= start && start <= end);
        MusInterval { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.start <= pos && pos <= self.end
    }

    pub fn content<'t>(&self, text: &'t Text) -> &'t [u8] {
        text.slice(self.start, self.end)
    }
}

/// All MUSs of one text, sorted by start.
///
/// MUSs never nest, so both starts and ends are strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MusSet {
    n: usize,
    intervals: Vec<MusInterval>,
}

impl MusSet {
    /// Wraps intervals for a text of length `n`, sorting them by start.
    pub fn from_intervals(n: usize, mut intervals: Vec<MusInterval>) -> Self {
        intervals.sort_unstable();
        MusSet { n, intervals }
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn intervals(&self) -> &[MusInterval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, MusInterval> {
        self.intervals.iter()
    }

    /// True when starts and ends are both strictly increasing.
    pub fn is_non_nesting(&self) -> bool {
        self.intervals
            .windows(2)
            .all(|w| w[0].start < w[1].start && w[0].end < w[1].end)
    }

    /// Index range of the intervals containing `pos`.
    fn stab_range(&self, pos: usize) -> std::ops::Range<usize> {
        let lo = self.intervals.partition_point(|m| m.end < pos);
        let hi = self.intervals.partition_point(|m| m.start <= pos);
        lo..hi.max(lo)
    }

    /// `MUS(T, pos)`: intervals containing `pos`, in start order.
    pub fn stab(&self, pos: usize) -> Result<&[MusInterval]> {
        if pos == 0 || pos > self.n {
            return Err(Error::PositionOutOfRange { pos, max: self.n });
        }
        Ok(&self.intervals[self.stab_range(pos)])
    }

    /// `|MUS(T, pos)|`.
    pub fn stab_count(&self, pos: usize) -> Result<usize> {
        self.stab(pos).map(<[_]>::len)
    }

    /// Position with the largest stabbing count, smallest position on ties.
    /// An empty set yields `(1, 0)`.
    pub fn max_stab(&self) -> (usize, usize) {
        // +1 at each start, -1 just past each end.
        let mut events: Vec<(usize, i64)> = Vec::with_capacity(2 * self.len());
        for m in &self.intervals {
            events.push((m.start, 1));
            events.push((m.end + 1, -1));
        }
        events.sort_unstable();
        let (mut best_pos, mut best) = (1, 0i64);
        let mut cur = 0i64;
        let mut k = 0;
        while k < events.len() {
            let pos = events[k].0;
            while k < events.len() && events[k].0 == pos {
                cur += events[k].1;
                k += 1;
            }
            if cur > best {
                best = cur;
                best_pos = pos;
            }
        }
        (best_pos, best as usize)
    }

    /// Stabbing count at every position `1..=n` (index 0 is position 1).
    pub fn stab_profile(&self) -> Vec<usize> {
        let mut diff = vec![0i64; self.n + 2];
        for m in &self.intervals {
            diff[m.start] += 1;
            diff[m.end + 1] -= 1;
        }
        let mut cur = 0i64;
        diff[1..=self.n]
            .iter()
            .map(|d| {
                cur += d;
                cur as usize
            })
            .collect()
    }
}

impl<'a> IntoIterator for &'a MusSet {
    type Item = &'a MusInterval;
    type IntoIter = std::slice::Iter<'a, MusInterval>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

/// Enumerates `MUS(T)` from the shortest-unique-length array.
///
/// Position `i` starts a MUS iff `L[i]` is defined and `L[i+1] >= L[i]`,
/// with `L[n+1]` and undefined entries read as infinity. The MUS is then
/// `[i, i + L[i] - 1]`.
pub fn compute_mus(idx: &TextIndex) -> MusSet {
    let l = idx.raw_unique_len();
    let n = l.len();
    let inf = |v: u32| if v == 0 { u32::MAX } else { v };
    let intervals = (0..n)
        .filter(|&i| {
            let here = l[i];
            here != 0 && l.get(i + 1).map_or(u32::MAX, |&v| inf(v)) >= here
        })
        .map(|i| MusInterval::new(i + 1, i + l[i] as usize))
        .collect();
    MusSet { n, intervals }
}

/// Builds the index and enumerates the MUSs of `text`.
pub fn mus_of(text: &Text) -> Result<MusSet> {
    Ok(compute_mus(&TextIndex::build(text.clone())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ivs(pairs: &[(usize, usize)]) -> Vec<MusInterval> {
        pairs.iter().map(|&(s, e)| MusInterval::new(s, e)).collect()
    }

    fn mus(s: &str) -> MusSet {
        mus_of(&Text::from(s)).unwrap()
    }

    #[test]
    fn compute_examples() {
        assert_eq!(mus("banana").intervals(), ivs(&[(1, 1), (3, 5)]));
        assert_eq!(mus("abc").intervals(), ivs(&[(1, 1), (2, 2), (3, 3)]));
        assert_eq!(mus("abaab").intervals(), ivs(&[(2, 3), (3, 4)]));
        assert_eq!(mus("aaaa").intervals(), ivs(&[(1, 4)]));
        assert_eq!(mus("a").intervals(), ivs(&[(1, 1)]));
    }

    #[test]
    fn empty_text() {
        assert_eq!(mus_of(&Text::default()).unwrap_err(), Error::EmptyText);
    }

    #[test]
    fn stab_examples() {
        let ms = mus("banana");
        assert_eq!(ms.stab(4).unwrap(), ivs(&[(3, 5)]));
        assert!(ms.stab(2).unwrap().is_empty());
        assert_eq!(ms.stab(1).unwrap(), ivs(&[(1, 1)]));
        assert_eq!(
            ms.stab(0).unwrap_err(),
            Error::PositionOutOfRange { pos: 0, max: 6 }
        );
        assert!(ms.stab(7).is_err());
    }

    #[test]
    fn max_stab_examples() {
        assert_eq!(mus("banana").max_stab(), (1, 1));
        assert_eq!(mus("abc").max_stab(), (1, 1));
        assert_eq!(mus("abaab").max_stab(), (3, 2));
        assert_eq!(MusSet::default().max_stab(), (1, 0));
    }

    #[test]
    fn profile_matches_stab_count() {
        let ms = mus("abaababaabaab");
        let prof = ms.stab_profile();
        for (k, &c) in prof.iter().enumerate() {
            assert_eq!(ms.stab_count(k + 1).unwrap(), c);
        }
        let (pos, best) = ms.max_stab();
        assert_eq!(prof[pos - 1], best);
        assert_eq!(prof.iter().copied().max().unwrap(), best);
    }
}
