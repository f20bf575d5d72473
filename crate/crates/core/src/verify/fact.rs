//! Three mutually overlapping occurrences force a period.
//!
//! If `S` occurs at `i < j < k <= i + |S| - 1`, then `gcd(j - i, k - j)` is a
//! period of `T[i..k+|S|-1]`, hence `T[j-1] = T[k-1]`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::text::{is_period, Text};

pub const DEFAULT_FACT_CAP: usize = 100;

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn check_three_overlap_fact(t: &Text, cap: usize) -> Result<VerificationReport> {
    let n = t.len();
    if n > cap {
        return Err(Error::TextTooLargeForOracle { len: n, cap });
    }
    let mut rep = VerificationReport::new("fact");
    rep.texts = 1;
    let b = t.as_bytes();
    for len in 2..=n {
        // Starts of each distinct substring of this length, ascending.
        let mut occ: HashMap<&[u8], Vec<usize>> = HashMap::new();
        for (k, w) in b.windows(len).enumerate() {
            occ.entry(w).or_default().push(k + 1);
        }
        let mut groups: Vec<_> = occ.into_iter().filter(|(_, v)| v.len() >= 3).collect();
        groups.sort_unstable();
        for (s, starts) in groups {
            for (a, &i) in starts.iter().enumerate() {
                let reach = i + len - 1;
                let window = &starts[a + 1..];
                let upto = window.partition_point(|&x| x <= reach);
                for (bi, &j) in window[..upto].iter().enumerate() {
                    for &k in &window[bi + 1..upto] {
                        let g = gcd(j - i, k - j);
                        let span = t.slice(i, k + len - 1);
                        let ok = is_period(span, g) && t.at(j - 1) == t.at(k - 1);
                        rep.check(ok, b, || {
                            format!(
                                "S={:?} i={i} j={j} k={k}: gcd {g} fails on T[{i}..{}]",
                                String::from_utf8_lossy(s),
                                k + len - 1
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unary_fires() {
        let rep = check_three_overlap_fact(&Text::from("aaaaa"), DEFAULT_FACT_CAP).unwrap();
        assert!(rep.passed());
        assert!(rep.checks > 0);
    }

    #[test]
    fn two_occurrences_contribute_nothing_for_that_substring() {
        // "ababa" occurs only at 1 and 3 in "abababa"; shorter substrings
        // still produce triples.
        let rep = check_three_overlap_fact(&Text::from("abababa"), DEFAULT_FACT_CAP).unwrap();
        assert!(rep.passed());
        let rep = check_three_overlap_fact(&Text::from("abc"), DEFAULT_FACT_CAP).unwrap();
        assert_eq!(rep.checks, 0);
    }

    #[test]
    fn cap() {
        let t = Text::new(vec![b'a'; 101]);
        assert!(check_three_overlap_fact(&t, DEFAULT_FACT_CAP).is_err());
    }

    #[test]
    fn gcd_values() {
        assert_eq!(gcd(1, 1), 1);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(7, 0), 7);
    }
}
