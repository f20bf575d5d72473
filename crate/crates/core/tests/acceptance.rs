//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//!     cargo test -p mustab --test acceptance

use std::time::{Duration, Instant};

use mustab::sensitivity::{default_alphabet, sensitivity_scan, DEFAULT_SCAN_BUDGET};
use mustab::verify::{
    brute_mus, enumerate_texts, oracle::DEFAULT_ORACLE_CAP, random_texts, verify_texts, Suite,
    VerifyConfig,
};
use mustab::{
    check_bounds, compute_mus, gen_lower, mus_of, sqrt_bound, verify_lower, within_sqrt_bound,
    EditKind, MusInterval, Text, TextIndex, VerificationReport,
};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn run(id: usize, title: &str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut o = body();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            o.ok = false;
            o.detail
                .push_str(&format!("; runtime {elapsed:.2?} exceeds {limit:?}"));
        }
    }
    println!(
        "[{}] C{id} {title}: {} ({:.2?})",
        if o.ok { "PASS" } else { "FAIL" },
        o.detail,
        elapsed
    );
    o.ok
}

fn summarize(reports: &[VerificationReport]) -> (bool, String) {
    let ok = reports.iter().all(VerificationReport::passed);
    let mut parts: Vec<String> = reports.iter().map(ToString::to_string).collect();
    if let Some(v) = reports.iter().flat_map(|r| r.violations.first()).next() {
        parts.push(format!(
            "first violation on {:?}: {}",
            String::from_utf8_lossy(&v.text),
            v.witness
        ));
    }
    (ok, parts.join("; "))
}

fn bit_or_die<T>(r: mustab::Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("setup failed: {e}"))
}

/// Criteria 3 and 4 share their texts with criterion 5.
fn bounds_texts() -> Vec<Text> {
    let mut texts = bit_or_die(enumerate_texts(2, 14, false));
    for k in [2, 4, 26] {
        for len in [50, 200, 1000, 2000] {
            texts.extend(bit_or_die(random_texts(k, len..=len, 500, 42)));
        }
    }
    texts.extend((2..=40).map(|m| gen_lower(m).unwrap().text));
    texts
}

fn oracle_texts() -> Vec<Text> {
    let mut texts = bit_or_die(enumerate_texts(2, 12, false));
    texts.extend(bit_or_die(enumerate_texts(3, 8, false)));
    for k in [2, 4, 26] {
        texts.extend(bit_or_die(random_texts(k, 1..=200, 500, 42)));
    }
    texts
}

fn main() {
    let cfg = VerifyConfig::default();
    let mut all_ok = true;

    all_ok &= run(
        1,
        "lower-bound family T_m, m = 3..40",
        Some(Duration::from_secs(1)),
        || {
            let mut failures = Vec::new();
            for m in 3..=40 {
                let inst = gen_lower(m).unwrap();
                if inst.text.len() != 2 * m * m + 4 * m + 2
                    || inst.p != 2 * m + 4
                    || inst.family.len() != m - 2
                {
                    failures.push(format!("m={m}: shape"));
                }
                let ms = mus_of(&inst.text).unwrap();
                let rep = verify_lower(&inst, &ms);
                if !rep.passed() {
                    failures.push(format!("m={m}: {}", rep.violations[0].witness));
                }
            }
            let t5 = gen_lower(5).unwrap();
            let ms5 = mus_of(&t5.text).unwrap();
            let at14 = ms5.stab(14).unwrap();
            for (s, e, content) in [
                (10, 21, "bbabbbbbbbbb"),
                (9, 20, "bbbabbbbbbbb"),
                (8, 19, "bbbbabbbbbbb"),
            ] {
                let iv = MusInterval::new(s, e);
                if !at14.contains(&iv) || iv.content(&t5.text) != content.as_bytes() {
                    failures.push(format!("m=5: [{s},{e}] {content} missing at 14"));
                }
            }
            outcome(
                failures.is_empty(),
                if failures.is_empty() {
                    "38 instances verified; T_5 has b^2ab^9, b^3ab^8, b^4ab^7 through position 14"
                        .to_string()
                } else {
                    failures.join("; ")
                },
            )
        },
    );

    all_ok &= run(
        2,
        "Omega(sqrt n) growth on T_m",
        Some(Duration::from_secs(1)),
        || {
            let mut failures = Vec::new();
            let mut worst: Option<(usize, usize)> = None;
            for m in 3..=40 {
                let inst = gen_lower(m).unwrap();
                let n = inst.text.len();
                let (_, count) = mus_of(&inst.text).unwrap().max_stab();
                // m - 2 >= sqrt(n) / sqrt(2) - 3  <=>  2 (m + 1)^2 >= n
                if count < m - 2 || 2 * (m + 1) * (m + 1) < n {
                    failures.push(format!("m={m}: max stab {count}, n {n}"));
                }
                let slack = (count.saturating_sub(m - 2), m);
                worst = Some(worst.map_or(slack, |w| w.min(slack)));
            }
            outcome(
                failures.is_empty(),
                if failures.is_empty() {
                    let (slack, at) = worst.unwrap();
                    format!("max_stab >= m-2 >= sqrt(n/2)-3 for m=3..40 (smallest slack {slack} at m={at})")
                } else {
                    failures.join("; ")
                },
            )
        },
    );

    let bounds_set = bounds_texts();
    let oracle_set = oracle_texts();

    all_ok &= run(3, "max stab <= sqrt(12n+18) - 2", None, || {
        let mut violations = 0;
        let mut tightest = (0f64, 0usize, 0usize);
        for t in &bounds_set {
            let ms = compute_mus(&TextIndex::build(t.clone()).unwrap());
            let (_, c) = ms.max_stab();
            let n = t.len();
            if !(within_sqrt_bound(c, n) && c as f64 <= sqrt_bound(n)) {
                violations += 1;
            }
            let ratio = c as f64 / sqrt_bound(n);
            if ratio > tightest.0 {
                tightest = (ratio, c, n);
            }
        }
        outcome(
            violations == 0,
            format!(
                "{} texts, {violations} violations; largest stab/bound ratio {:.3} (stab {} at n {})",
                bounds_set.len(),
                tightest.0,
                tightest.1,
                tightest.2
            ),
        )
    });

    all_ok &= run(4, "compute_mus == brute_mus", None, || {
        let reps = verify_texts(&oracle_set, &[Suite::Oracle], &cfg).unwrap();
        let (ok, detail) = summarize(&reps);
        outcome(ok, detail)
    });

    all_ok &= run(
        5,
        "|MUS| <= n and |MUS| <= 2 rle - 1; distinct text attains n",
        None,
        || {
            let mut texts = bounds_set.clone();
            texts.extend(oracle_set.iter().cloned());
            let reps = verify_texts(&texts, &[Suite::Bounds], &cfg).unwrap();
            let (mut ok, mut detail) = summarize(&reps);
            for n in 1..=256usize {
                let t = Text::new((0..n).map(|k| k as u8).collect::<Vec<u8>>());
                let ms = mus_of(&t).unwrap();
                let b = check_bounds(&t, &ms).unwrap();
                if ms.len() != n || !b.all_ok() {
                    ok = false;
                    detail.push_str(&format!("; distinct text n={n} has {} MUSs", ms.len()));
                }
            }
            detail.push_str("; distinct-symbol texts n=1..256 attain |MUS| = n");
            outcome(ok, detail)
        },
    );

    all_ok &= run(
        6,
        "lemma checkers (fact, key lemma, marker gap)",
        None,
        || {
            let mut fact_texts = bit_or_die(enumerate_texts(2, 12, false));
            fact_texts.extend(bit_or_die(random_texts(2, 1..=60, 200, 7)));
            let mut reps = verify_texts(&fact_texts, &[Suite::Fact], &cfg).unwrap();

            let family: Vec<Text> = (3..=8).map(|m| gen_lower(m).unwrap().text).collect();
            let lemma_cfg = VerifyConfig {
                occurrence_cap: 8,
                ..cfg.clone()
            };
            let on_family =
                verify_texts(&family, &[Suite::KeyLemma, Suite::MarkerGap], &lemma_cfg).unwrap();
            let fired = on_family.iter().all(|r| r.checks > 0);

            let mut lemma_texts = bit_or_die(enumerate_texts(2, 12, false));
            lemma_texts.extend(bit_or_die(random_texts(2, 1..=80, 200, 7)));
            let general = verify_texts(
                &lemma_texts,
                &[Suite::KeyLemma, Suite::MarkerGap],
                &lemma_cfg,
            )
            .unwrap();

            for (acc, r) in on_family.into_iter().zip(general) {
                let mut acc = acc;
                acc.merge(r);
                reps.push(acc);
            }
            let (ok, mut detail) = summarize(&reps);
            if !fired {
                detail.push_str("; lemma checks were vacuous on T_3..T_8");
            }
            outcome(ok && fired, detail)
        },
    );

    all_ok &= run(
        7,
        "sensitivity harness on T_m (m <= 12) and random texts",
        None,
        || {
            let mut texts: Vec<Text> = (2..=12).map(|m| gen_lower(m).unwrap().text).collect();
            texts.extend(bit_or_die(random_texts(3, 1..=40, 30, 11)));
            let (mut edits, mut identity, mut rejected, mut oracle_checked) = (0, 0, 0, 0);
            let mut max_additive = i64::MIN;
            let mut failures = Vec::new();
            for t in &texts {
                let scan =
                    sensitivity_scan(t, &EditKind::ALL, &default_alphabet(t), DEFAULT_SCAN_BUDGET)
                        .unwrap();
                for e in &scan.entries {
                    let r = match &e.outcome {
                        Ok(r) => r,
                        Err(_) => {
                            rejected += 1;
                            continue;
                        }
                    };
                    edits += 1;
                    max_additive = max_additive.max(r.additive);
                    let is_identity =
                        e.edit.kind == EditKind::Substitute && t.at(e.edit.pos) == e.edit.symbol;
                    if is_identity {
                        identity += 1;
                        if r.additive != 0 || r.surviving != r.post_count {
                            failures.push(format!("identity {} changed the MUS set", e.edit));
                        }
                    }
                    if !r.partition_holds() {
                        failures.push(format!("partition fails for {}", e.edit));
                    }
                    if !within_sqrt_bound(r.new_at_edit, r.post_len) {
                        failures.push(format!(
                            "{}: new_at_edit {} over bound",
                            e.edit, r.new_at_edit
                        ));
                    }
                    if r.post_len <= DEFAULT_ORACLE_CAP {
                        let post = mustab::apply_edit(t, e.edit).unwrap();
                        oracle_checked += 1;
                        if mus_of(&post).unwrap() != brute_mus(&post, DEFAULT_ORACLE_CAP).unwrap() {
                            failures
                                .push(format!("{}: post-edit MUS set differs from oracle", e.edit));
                        }
                    }
                }
            }
            failures.truncate(5);
            outcome(
            failures.is_empty(),
            format!(
                "{edits} edits ({identity} identity, {rejected} rejected, {oracle_checked} oracle-checked), \
                 max additive {max_additive:+}{}",
                if failures.is_empty() { String::new() } else { format!("; {}", failures.join("; ")) }
            ),
        )
        },
    );

    all_ok &= run(
        8,
        "10 MB random bytes: index + enumeration",
        Some(Duration::from_secs(60)),
        || {
            use rand::{RngCore, SeedableRng};
            let n = 10 * 1024 * 1024;
            let mut bytes = vec![0u8; n];
            rand_chacha::ChaCha8Rng::seed_from_u64(42).fill_bytes(&mut bytes);
            let t = Text::new(bytes);
            let start = Instant::now();
            let idx = TextIndex::build(t).unwrap();
            let built = start.elapsed();
            let ms = compute_mus(&idx);
            let total = start.elapsed();
            let peak = peak_rss_bytes();
            // Linear memory: at most 8 machine words per text byte at peak.
            let mem_ok = peak.is_none_or(|p| p <= 64 * n as u64);
            outcome(
                mem_ok && ms.len() <= n && ms.is_non_nesting(),
                format!(
                    "n={n}, {} MUSs, index {built:.2?}, total {total:.2?}, peak RSS {}",
                    ms.len(),
                    peak.map_or("n/a".into(), |p| format!(
                        "{:.1} bytes/symbol",
                        p as f64 / n as f64
                    ))
                ),
            )
        },
    );

    if !all_ok {
        println!("acceptance: FAILED");
        std::process::exit(1);
    }
    println!("acceptance: all criteria passed");
}

fn peak_rss_bytes() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}
