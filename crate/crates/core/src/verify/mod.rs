//! Brute-force oracle, lemma checkers and the exhaustive/random drivers
//! that sweep them over many texts.

pub mod fact;
pub mod key_lemma;
pub mod marker;
pub mod oracle;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::check_bounds;
use crate::error::{Error, Result};
use crate::index::TextIndex;
use crate::mus::compute_mus;
use crate::report::VerificationReport;
use crate::text::Text;

pub use fact::check_three_overlap_fact;
pub use key_lemma::check_key_lemma;
pub use marker::check_marker_gap_lemma;
pub use oracle::brute_mus;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Oracle,
    Bounds,
    Fact,
    KeyLemma,
    MarkerGap,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Oracle,
        Suite::Bounds,
        Suite::Fact,
        Suite::KeyLemma,
        Suite::MarkerGap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Bounds => "bounds",
            Suite::Fact => "fact",
            Suite::KeyLemma => "key-lemma",
            Suite::MarkerGap => "marker-gap",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Caps shared by every suite.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub oracle_cap: usize,
    pub fact_cap: usize,
    pub lemma_cap: usize,
    pub occurrence_cap: usize,
    pub combination_cap: usize,
    /// Maximum number of texts a sweep may generate.
    pub budget: u128,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            oracle_cap: oracle::DEFAULT_ORACLE_CAP,
            fact_cap: fact::DEFAULT_FACT_CAP,
            lemma_cap: key_lemma::DEFAULT_LEMMA_CAP,
            occurrence_cap: key_lemma::DEFAULT_OCCURRENCE_CAP,
            combination_cap: marker::DEFAULT_COMBINATION_CAP,
            budget: 20_000_000,
        }
    }
}

/// Oracle equivalence plus the structural invariants of the MUS set.
pub fn check_oracle(t: &Text, cap: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(Suite::Oracle.name());
    rep.texts = 1;
    let expected = brute_mus(t, cap)?;
    let idx = TextIndex::build(t.clone())?;
    let ms = compute_mus(&idx);
    let raw = t.as_bytes();
    rep.check(ms == expected, raw, || {
        format!(
            "compute_mus {:?} != brute_mus {:?}",
            ms.intervals(),
            expected.intervals()
        )
    });
    rep.check(ms.is_non_nesting(), raw, || {
        format!("nesting intervals {:?}", ms.intervals())
    });
    for m in &ms {
        let w = m.content(t);
        let ok = idx.occurrence_count(w) == 1
            && idx.occurrence_count(&w[..w.len() - 1]) >= 2
            && idx.occurrence_count(&w[1..]) >= 2;
        rep.check(ok, raw, || {
            format!(
                "[{},{}] fails the MUS occurrence conditions",
                m.start, m.end
            )
        });
    }
    let profile = ms.stab_profile();
    for (k, &linear) in profile.iter().enumerate() {
        let fast = ms.stab_count(k + 1)?;
        rep.check(fast == linear, raw, || {
            format!("stab({}) = {fast}, linear scan {linear}", k + 1)
        });
    }
    Ok(rep)
}

pub fn check_bounds_suite(t: &Text) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(Suite::Bounds.name());
    rep.texts = 1;
    let ms = compute_mus(&TextIndex::build(t.clone())?);
    let b = check_bounds(t, &ms)?;
    let raw = t.as_bytes();
    rep.check(b.bound_n_ok, raw, || {
        format!("|MUS| = {} > n = {}", b.mus_count, b.n)
    });
    rep.check(b.bound_rle_ok, raw, || {
        format!("|MUS| = {} > 2m - 1 with m = {}", b.mus_count, b.rle_size)
    });
    rep.check(b.bound_sqrt_ok, raw, || {
        format!(
            "max stab {} at {} > {:.3}",
            b.max_stab_count, b.max_stab_pos, b.sqrt_bound
        )
    });
    Ok(rep)
}

/// Runs one suite on one text.
pub fn run_suite(suite: Suite, t: &Text, cfg: &VerifyConfig) -> Result<VerificationReport> {
    match suite {
        Suite::Oracle => check_oracle(t, cfg.oracle_cap),
        Suite::Bounds => check_bounds_suite(t),
        Suite::Fact => check_three_overlap_fact(t, cfg.fact_cap),
        Suite::KeyLemma => check_key_lemma(t, cfg.occurrence_cap, cfg.lemma_cap),
        Suite::MarkerGap => {
            check_marker_gap_lemma(t, cfg.occurrence_cap, cfg.combination_cap, cfg.lemma_cap)
        }
    }
}

/// Runs `suites` over `texts` (possibly in parallel) and merges the results
/// in text order, one report per suite.
pub fn verify_texts(
    texts: &[Text],
    suites: &[Suite],
    cfg: &VerifyConfig,
) -> Result<Vec<VerificationReport>> {
    let per_text: Vec<Result<Vec<VerificationReport>>> = texts
        .par_iter()
        .map(|t| suites.iter().map(|&s| run_suite(s, t, cfg)).collect())
        .collect();
    let mut merged: Vec<VerificationReport> = suites
        .iter()
        .map(|s| VerificationReport::new(s.name()))
        .collect();
    for reps in per_text {
        for (acc, r) in merged.iter_mut().zip(reps?) {
            acc.merge(r);
        }
    }
    Ok(merged)
}

/// Symbol `k` of an alphabet of the given size: `a, b, c, ...` up to 26,
/// raw bytes `0..size` beyond that.
pub fn alphabet(size: usize) -> Result<Vec<u8>> {
    match size {
        1..=26 => Ok((0..size as u8).map(|k| b'a' + k).collect()),
        27..=256 => Ok((0..size).map(|k| k as u8).collect()),
        _ => Err(Error::BadAlphabet(size)),
    }
}

fn count_texts(k: u128, max_len: usize, canonical: bool) -> u128 {
    let mut total = 0u128;
    let mut pow = 1u128;
    for _ in 1..=max_len {
        pow = pow.saturating_mul(k);
        // Canonical forms are at most k^(len-1) for len >= 1 when k >= 1.
        total = total.saturating_add(if canonical { pow / k.max(1) } else { pow });
    }
    total
}

/// Every nonempty text of length `<= max_len` over `alphabet_size` symbols.
///
/// With `canonical`, texts equal up to renaming symbols are listed once, as
/// the representative whose symbols appear in alphabet order of first use.
pub fn enumerate_texts(alphabet_size: usize, max_len: usize, canonical: bool) -> Result<Vec<Text>> {
    let sigma = alphabet(alphabet_size)?;
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(max_len);
    fn rec(
        sigma: &[u8],
        max_len: usize,
        canonical: bool,
        used: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Text>,
    ) {
        if !cur.is_empty() {
            out.push(Text::new(
                cur.iter().map(|&c| sigma[c]).collect::<Vec<u8>>(),
            ));
        }
        if cur.len() == max_len {
            return;
        }
        let limit = if canonical {
            (used + 1).min(sigma.len())
        } else {
            sigma.len()
        };
        for c in 0..limit {
            cur.push(c);
            rec(sigma, max_len, canonical, used.max(c + 1), cur, out);
            cur.pop();
        }
    }
    rec(&sigma, max_len, canonical, 0, &mut cur, &mut out);
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.as_bytes().cmp(b.as_bytes()))
    });
    Ok(out)
}

pub fn exhaustive_verify(
    alphabet_size: usize,
    max_len: usize,
    suites: &[Suite],
    canonical: bool,
    cfg: &VerifyConfig,
) -> Result<Vec<VerificationReport>> {
    alphabet(alphabet_size)?;
    let needed = count_texts(alphabet_size as u128, max_len, canonical);
    if needed > cfg.budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget: cfg.budget,
        });
    }
    let texts = enumerate_texts(alphabet_size, max_len, canonical)?;
    verify_texts(&texts, suites, cfg)
}

/// `samples` texts with lengths uniform in `lengths` and i.i.d. uniform
/// symbols, reproducible from `seed`.
pub fn random_texts(
    alphabet_size: usize,
    lengths: RangeInclusive<usize>,
    samples: usize,
    seed: u64,
) -> Result<Vec<Text>> {
    let sigma = alphabet(alphabet_size)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..samples)
        .map(|_| {
            let len = rng.gen_range(lengths.clone());
            Text::new(
                (0..len)
                    .map(|_| sigma[rng.gen_range(0..sigma.len())])
                    .collect::<Vec<u8>>(),
            )
        })
        .collect())
}

pub fn random_verify(
    alphabet_size: usize,
    lengths: RangeInclusive<usize>,
    samples: usize,
    seed: u64,
    suites: &[Suite],
    cfg: &VerifyConfig,
) -> Result<Vec<VerificationReport>> {
    if *lengths.start() == 0 {
        return Err(Error::EmptyText);
    }
    if samples as u128 > cfg.budget {
        return Err(Error::BudgetExceeded {
            needed: samples as u128,
            budget: cfg.budget,
        });
    }
    let texts = random_texts(alphabet_size, lengths, samples, seed)?;
    verify_texts(&texts, suites, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_texts(2, 3, false).unwrap().len(), 14);
        assert_eq!(enumerate_texts(2, 3, true).unwrap().len(), 7);
        assert_eq!(enumerate_texts(3, 3, true).unwrap().len(), 1 + 2 + 5);
        assert!(enumerate_texts(2, 3, true)
            .unwrap()
            .iter()
            .all(|t| t.at(1) == Some(b'a')));
        assert_eq!(count_texts(2, 3, false), 14);
        assert_eq!(count_texts(2, 3, true), 7);
    }

    #[test]
    fn small_exhaustive_oracle() {
        let reps =
            exhaustive_verify(2, 3, &[Suite::Oracle], false, &VerifyConfig::default()).unwrap();
        assert_eq!(reps[0].texts, 14);
        assert!(reps[0].passed());
    }

    #[test]
    fn budget() {
        let cfg = VerifyConfig {
            budget: 100,
            ..Default::default()
        };
        assert!(matches!(
            exhaustive_verify(2, 10, &[Suite::Oracle], false, &cfg),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_texts(4, 1..=50, 20, 9).unwrap();
        let b = random_texts(4, 1..=50, 20, 9).unwrap();
        assert_eq!(a, b);
        let c = random_texts(4, 1..=50, 20, 10).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn single_symbol_texts() {
        for t in random_texts(2, 1..=1, 10, 0).unwrap() {
            let ms = crate::mus::mus_of(&t).unwrap();
            assert_eq!(ms.intervals(), &[crate::mus::MusInterval::new(1, 1)]);
        }
        let reps = random_verify(2, 1..=1, 10, 0, &Suite::ALL, &VerifyConfig::default()).unwrap();
        assert!(reps.iter().all(VerificationReport::passed));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
