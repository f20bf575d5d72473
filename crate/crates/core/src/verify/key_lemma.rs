//! Three MUSs sharing a position: relocated copies of `u` cannot all overlap.
//!
//! For MUSs `M1, M2, M3` (starts `i1 < i2 < i3`) sharing a position, write
//! `sk` for `Mk` without its first character, `a3 u = T[i3..end(M1)]` for
//! their common overlap, `q = T[i1+1..i3]` and `p = T[i2+1..i3]`. For any
//! other occurrences `S1, S2, S3` of `s1, s2, s3`, the copies of `u` they
//! carry at offsets `|q|`, `|p|` and `0` are not pairwise overlapping.

use std::fmt;

use crate::error::{Error, Result};
use crate::index::TextIndex;
use crate::mus::{compute_mus, MusInterval};
use crate::report::VerificationReport;
use crate::text::Text;

pub const DEFAULT_OCCURRENCE_CAP: usize = 8;
pub const DEFAULT_LEMMA_CAP: usize = 2000;

/// Closed integer interval `[lo, hi]`.
pub type Span = (usize, usize);

pub fn disjoint(a: Span, b: Span) -> bool {
    a.1 < b.0 || b.1 < a.0
}

/// The objects named in the lemma for one triple of MUSs.
#[derive(Clone, Debug)]
pub struct TripleContext {
    /// A position shared by the three MUSs.
    pub pos: usize,
    pub mus: [MusInterval; 3],
    pub heads: [u8; 3],
    pub tails: [Vec<u8>; 3],
    pub u: Vec<u8>,
    pub q: Vec<u8>,
    pub p: Vec<u8>,
    /// Suffix of `s2` following its copy of `u`.
    pub r: Vec<u8>,
}

impl TripleContext {
    pub fn new(t: &Text, mus: [MusInterval; 3]) -> Self {
        let [m1, m2, m3] = mus;
        debug_assert!(m1.start < m2.start && m2.start < m3.start && m3.start <= m1.end);
        let tail = |m: MusInterval| t.slice(m.start + 1, m.end).to_vec();
        let u = t.slice(m3.start + 1, m1.end).to_vec();
        let q = t.slice(m1.start + 1, m3.start).to_vec();
        let p = t.slice(m2.start + 1, m3.start).to_vec();
        let r = t.slice(m2.start + p.len() + u.len() + 1, m2.end).to_vec();
        TripleContext {
            pos: m3.start,
            mus,
            heads: mus.map(|m| t.at(m.start).unwrap()),
            tails: mus.map(tail),
            u,
            q,
            p,
            r,
        }
    }

    /// Copies of `u` inside alternative occurrences starting at `alt`.
    pub fn u_copies(&self, alt: [usize; 3]) -> [Span; 3] {
        let ul = self.u.len();
        let at = |s: usize| (s, s + ul - 1);
        [
            at(alt[0] + self.q.len()),
            at(alt[1] + self.p.len()),
            at(alt[2]),
        ]
    }
}

impl fmt::Display for TripleContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |b: &[u8]| String::from_utf8_lossy(b).into_owned();
        write!(f, "i={} M=", self.pos)?;
        for m in &self.mus {
            write!(f, "[{},{}]", m.start, m.end)?;
        }
        write!(
            f,
            " a={:?} u={:?} q={:?} p={:?} r={:?}",
            s(&self.heads),
            s(&self.u),
            s(&self.q),
            s(&self.p),
            s(&self.r)
        )
    }
}

/// Up to `cap` leftmost occurrences of `tail` other than `original`.
pub(crate) fn alternatives(
    idx: &TextIndex,
    tail: &[u8],
    original: usize,
    cap: usize,
) -> Vec<usize> {
    idx.occurrences(tail)
        .into_iter()
        .filter(|&s| s != original)
        .take(cap)
        .collect()
}

pub fn check_key_lemma(t: &Text, occurrence_cap: usize, cap: usize) -> Result<VerificationReport> {
    let n = t.len();
    if n > cap {
        return Err(Error::TextTooLargeForOracle { len: n, cap });
    }
    let idx = TextIndex::build(t.clone())?;
    let ms = compute_mus(&idx);
    let mus = ms.intervals();
    let raw = t.as_bytes();
    let mut rep = VerificationReport::new("key-lemma");
    rep.texts = 1;

    // Non-nesting: the triples sharing a position are exactly a < b < c with
    // start(M_c) <= end(M_a).
    for a in 0..mus.len() {
        let reach = mus.partition_point(|m| m.start <= mus[a].end);
        for c in a + 2..reach {
            for b in a + 1..c {
                let ctx = TripleContext::new(t, [mus[a], mus[b], mus[c]]);
                if ctx.u.is_empty() {
                    continue;
                }
                let alts: Vec<Vec<usize>> = (0..3)
                    .map(|k| {
                        alternatives(&idx, &ctx.tails[k], ctx.mus[k].start + 1, occurrence_cap)
                    })
                    .collect();
                for &s1 in &alts[0] {
                    for &s2 in &alts[1] {
                        for &s3 in &alts[2] {
                            let [u1, u2, u3] = ctx.u_copies([s1, s2, s3]);
                            let ok = disjoint(u1, u2) || disjoint(u1, u3) || disjoint(u2, u3);
                            rep.check(ok, raw, || {
                                format!("{ctx} S'=({s1},{s2},{s3}) U={u1:?},{u2:?},{u3:?}")
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}
