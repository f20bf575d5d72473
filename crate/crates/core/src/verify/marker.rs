//! Marker-gap inequality for `h + 1 >= 4` MUSs sharing a position `i`.
//!
//! Mark `i` inside the tail `sk` of each of the first `h` MUSs, move each
//! tail to another occurrence `Sk`, and rank the moved markers `ik` by
//! position (`f(x) = k` when `ik` is the `x`-th smallest). Then for every
//! `1 <= x <= h - 2`, `i_{f(x+2)} - i_{f(x)} > h - w` with
//! `w = max{f(x), f(x+1), f(x+2)}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::index::TextIndex;
use crate::mus::{compute_mus, MusInterval};
use crate::report::VerificationReport;
use crate::text::Text;
use crate::verify::key_lemma::alternatives;

/// Per-position cap on the number of alternative-occurrence choices tried.
pub const DEFAULT_COMBINATION_CAP: usize = 1 << 16;

#[derive(Clone, Debug)]
pub struct MarkerContext {
    pub pos: usize,
    /// All `h + 1` MUSs containing `pos`, in start order.
    pub mus: Vec<MusInterval>,
    /// Chosen starts of `S1..Sh`.
    pub alt_starts: Vec<usize>,
    /// `i1..ih`.
    pub marks: Vec<usize>,
    /// `f(1)..f(h)`, 1-based MUS indices.
    pub ranking: Vec<usize>,
}

impl MarkerContext {
    pub fn h(&self) -> usize {
        self.mus.len() - 1
    }

    fn new(pos: usize, mus: &[MusInterval], alt_starts: Vec<usize>) -> Self {
        let marks: Vec<usize> = alt_starts
            .iter()
            .zip(mus)
            .map(|(&s, m)| s + (pos - m.start - 1))
            .collect();
        let mut ranking: Vec<usize> = (1..=marks.len()).collect();
        ranking.sort_by_key(|&k| (marks[k - 1], k));
        MarkerContext {
            pos,
            mus: mus.to_vec(),
            alt_starts,
            marks,
            ranking,
        }
    }

    pub fn has_ties(&self) -> bool {
        self.ranking
            .windows(2)
            .any(|w| self.marks[w[0] - 1] == self.marks[w[1] - 1])
    }

    /// `(x, gap, h - w)` for every `x` in `1..=h-2`.
    pub fn gaps(&self) -> impl Iterator<Item = (usize, i64, i64)> + '_ {
        let h = self.h() as i64;
        self.ranking.windows(3).enumerate().map(move |(x, w)| {
            let omega = *w.iter().max().unwrap() as i64;
            let gap = self.marks[w[2] - 1] as i64 - self.marks[w[0] - 1] as i64;
            (x + 1, gap, h - omega)
        })
    }
}

impl fmt::Display for MarkerContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i={} h={} M=", self.pos, self.h())?;
        for m in &self.mus {
            write!(f, "[{},{}]", m.start, m.end)?;
        }
        write!(
            f,
            " S={:?} marks={:?} f={:?}",
            self.alt_starts, self.marks, self.ranking
        )
    }
}

pub fn check_marker_gap_lemma(
    t: &Text,
    occurrence_cap: usize,
    combination_cap: usize,
    cap: usize,
) -> Result<VerificationReport> {
    let n = t.len();
    if n > cap {
        return Err(Error::TextTooLargeForOracle { len: n, cap });
    }
    let idx = TextIndex::build(t.clone())?;
    let ms = compute_mus(&idx);
    let raw = t.as_bytes();
    let mut rep = VerificationReport::new("marker-gap");
    rep.texts = 1;

    let mut last: Option<(usize, usize)> = None;
    for pos in 1..=n {
        let stab = ms.stab(pos)?;
        if stab.len() < 4 {
            continue;
        }
        // Same stabbing set as the previous position: marks shift uniformly,
        // so every gap is unchanged.
        let key = (stab[0].start, stab.len());
        if last == Some(key) {
            continue;
        }
        last = Some(key);

        let h = stab.len() - 1;
        let alts: Vec<Vec<usize>> = stab[..h]
            .iter()
            .map(|m| {
                alternatives(
                    &idx,
                    t.slice(m.start + 1, m.end),
                    m.start + 1,
                    occurrence_cap,
                )
            })
            .collect();
        if alts.iter().any(Vec::is_empty) {
            rep.check(false, raw, || {
                format!("i={pos}: a MUS tail has no second occurrence")
            });
            continue;
        }

        let mut choice = vec![0usize; h];
        for _ in 0..combination_cap {
            let starts = choice.iter().zip(&alts).map(|(&c, a)| a[c]).collect();
            let ctx = MarkerContext::new(pos, stab, starts);
            if ctx.has_ties() {
                rep.flagged += 1;
            } else {
                for (x, gap, rhs) in ctx.gaps() {
                    rep.check(gap > rhs, raw, || {
                        format!("{ctx} x={x}: gap {gap} <= {rhs}")
                    });
                }
            }
            // Odometer over the alternative lists.
            let mut k = 0;
            while k < h {
                choice[k] += 1;
                if choice[k] < alts[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == h {
                break;
            }
        }
    }
    Ok(rep)
}
