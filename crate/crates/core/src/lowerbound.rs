//! The string family `T_m` whose position `2m + 4` lies in `m - 2` MUSs.
//!
//! `T_m = a b^{2m} a b^{2m+2} S_{m,1} ... S_{m,m-1}` with
//! `S_{m,k} = a b^k a b^{2m-k}`, so `|T_m| = 2m^2 + 4m + 2`.

use crate::error::{Error, Result};
use crate::index::TextIndex;
use crate::mus::{MusInterval, MusSet};
use crate::report::VerificationReport;
use crate::text::Text;

/// One of the strings `b^i a b^{2m-i+1}` through the distinguished position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub i: usize,
    pub interval: MusInterval,
    pub content: Vec<u8>,
}

#[derive(Clone, Debug)]
pub struct LowerBoundInstance {
    pub m: usize,
    pub text: Text,
    /// Distinguished position `2m + 4` (1-based).
    pub p: usize,
    /// Members for `i = 2..=m-1`, in increasing `i`.
    pub family: Vec<FamilyMember>,
}

fn run(out: &mut Vec<u8>, sym: u8, len: usize) {
    out.extend(std::iter::repeat_n(sym, len));
}

/// `S_{m,k} = a b^k a b^{2m-k}`.
pub fn block(m: usize, k: usize) -> Vec<u8> {
    let mut s = Vec::with_capacity(2 * m + 2);
    s.push(b'a');
    run(&mut s, b'b', k);
    s.push(b'a');
    run(&mut s, b'b', 2 * m - k);
    s
}

/// 1-based start of `S_{m,k}` inside `T_m`.
pub fn block_start(m: usize, k: usize) -> usize {
    4 * m + 4 + (k - 1) * (2 * m + 2) + 1
}

pub fn expected_len(m: usize) -> usize {
    2 * m * m + 4 * m + 2
}

/// Builds `T_m`. `m = 2` is accepted and has an empty family.
pub fn gen_lower(m: usize) -> Result<LowerBoundInstance> {
    if m < 2 {
        return Err(Error::ParameterTooSmall(m));
    }
    let mut t = Vec::with_capacity(expected_len(m));
    t.push(b'a');
    run(&mut t, b'b', 2 * m);
    t.push(b'a');
    run(&mut t, b'b', 2 * m + 2);
    for k in 1..m {
        t.extend(block(m, k));
    }
    let p = 2 * m + 4;
    let family = (2..m)
        .map(|i| {
            let mut content = Vec::with_capacity(2 * m + 2);
            run(&mut content, b'b', i);
            content.push(b'a');
            run(&mut content, b'b', 2 * m - i + 1);
            FamilyMember {
                i,
                interval: MusInterval::new(p - (2 + i), p + (2 * m - 1 - i)),
                content,
            }
        })
        .collect();
    Ok(LowerBoundInstance {
        m,
        text: Text::new(t),
        p,
        family,
    })
}

/// Checks that every family member is a MUS of `T_m` containing `p`, and
/// that at least `m - 2` MUSs contain `p`. `ms` must be `MUS(T_m)`.
pub fn verify_lower(inst: &LowerBoundInstance, ms: &MusSet) -> VerificationReport {
    let mut rep = VerificationReport::new("lower-bound");
    rep.texts = 1;
    let t = &inst.text;
    let raw = t.as_bytes();
    let m = inst.m;

    rep.check(t.len() == expected_len(m), raw, || {
        format!("m={m}: |T_m| = {} != {}", t.len(), expected_len(m))
    });
    let idx = match TextIndex::build(t.clone()) {
        Ok(idx) => idx,
        Err(e) => {
            rep.check(false, raw, || format!("m={m}: cannot index: {e}"));
            return rep;
        }
    };

    for fm in &inst.family {
        let iv = fm.interval;
        let i = fm.i;
        let w = || format!("m={m} i={i} [{},{}]", iv.start, iv.end);
        if iv.end > t.len() {
            rep.check(false, raw, || format!("{}: interval past end of text", w()));
            continue;
        }
        let content = t.slice(iv.start, iv.end);
        rep.check(content == fm.content.as_slice(), raw, || {
            format!("{}: content mismatch", w())
        });
        rep.check(iv.contains(inst.p), raw, || {
            format!("{}: does not contain p={}", w(), inst.p)
        });
        rep.check(ms.intervals().binary_search(&iv).is_ok(), raw, || {
            format!("{}: not in MUS set", w())
        });
        rep.check(idx.occurrence_count(content) == 1, raw, || {
            format!("{}: not unique", w())
        });
        let prefix = &content[..content.len() - 1];
        let suffix = &content[1..];
        rep.check(idx.occurrence_count(prefix) >= 2, raw, || {
            format!("{}: prefix is unique", w())
        });
        rep.check(idx.occurrence_count(suffix) >= 2, raw, || {
            format!("{}: suffix is unique", w())
        });
        // The repeats are witnessed inside S_{m,i-1} and S_{m,i}.
        let width = 2 * m + 1;
        let s_prev = block_start(m, i - 1) + 1;
        rep.check(t.slice(s_prev, s_prev + width - 1) == suffix, raw, || {
            format!("{}: S_(m,{})[2..2m+2] is not the suffix", w(), i - 1)
        });
        let s_cur = block_start(m, i) + 1;
        rep.check(t.slice(s_cur, s_cur + width - 1) == prefix, raw, || {
            format!("{}: S_(m,{i})[2..2m+2] is not the prefix", w())
        });
    }

    let stab = ms.stab_count(inst.p).unwrap_or(0);
    rep.check(stab + 2 >= m, raw, || {
        format!("m={m}: |MUS(T_m, {})| = {stab} < m - 2", inst.p)
    });
    rep
}
