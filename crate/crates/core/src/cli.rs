//! Command-line front end. All positions are 1-based.
//!
//! Exit status: 0 on success, 1 when verification finds violations, 2 on
//! usage or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bounds::check_bounds;
use crate::index::TextIndex;
use crate::lowerbound::gen_lower;
use crate::mus::compute_mus;
use crate::output;
use crate::sensitivity::{
    default_alphabet, sensitivity, sensitivity_scan, EditKind, EditOp, DEFAULT_SCAN_BUDGET,
};
use crate::text::Text;
use crate::verify::{exhaustive_verify, random_verify, Suite, VerifyConfig};

#[derive(Debug, Parser)]
#[command(
    name = "mustab",
    version,
    about = "Minimal unique substrings: enumerate, query, verify"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Text file, read as raw bytes.
    pub file: PathBuf,
    /// Keep a trailing line feed (by default exactly one is stripped).
    #[arg(long)]
    pub keep_newline: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every MUS as CSV.
    Compute {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        show_strings: bool,
    },
    /// Print the MUSs containing a position.
    Query {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pos: usize,
        #[arg(long)]
        show_strings: bool,
    },
    /// One-row summary: counts, maximum stabbing number and its bound.
    Stats {
        #[command(flatten)]
        input: Input,
    },
    /// Write the lower-bound text T_m and its family of MUSs.
    GenLower {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        family_csv: Option<PathBuf>,
    },
    /// Run verification suites over exhaustive or random texts.
    Verify {
        /// oracle, bounds, fact, key-lemma, marker-gap or all; repeatable or comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        suite: Vec<String>,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        #[arg(long, requires = "max_len", conflicts_with_all = ["random", "len", "seed"])]
        exhaustive: bool,
        #[arg(long)]
        max_len: Option<usize>,
        /// Enumerate texts only up to renaming of symbols.
        #[arg(long, requires = "exhaustive")]
        canonical: bool,
        /// Number of random texts.
        #[arg(long, requires_all = ["len", "seed"])]
        random: Option<usize>,
        /// Random text length (maximum length when --min-len is given).
        #[arg(long)]
        len: Option<usize>,
        #[arg(long)]
        min_len: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 8)]
        occ_cap: usize,
        /// Write one line per violation to this file.
        #[arg(long)]
        violations: Option<PathBuf>,
    },
    /// Effect of single-character edits on the MUS set.
    Sensitivity {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "scan", requires = "op")]
        pos: Option<usize>,
        #[arg(long)]
        op: Option<EditKind>,
        /// Symbol for sub/ins: one byte, or \xHH.
        #[arg(long)]
        char: Option<String>,
        #[arg(long)]
        scan: bool,
        #[arg(long, value_delimiter = ',', default_value = "sub,ins,del")]
        kinds: Vec<EditKind>,
        /// Symbols to try when scanning (default: those in the text plus one fresh).
        #[arg(long)]
        symbols: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Violations,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T, O, E>(args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Violations) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read_text(input: &Input) -> std::result::Result<Text, Failure> {
    let raw = fs::read(&input.file)
        .map_err(|e| Failure::Usage(format!("{}: {e}", input.file.display())))?;
    Ok(Text::from_raw(raw, !input.keep_newline))
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult {
    fs::write(path, bytes).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_symbol(s: &str) -> std::result::Result<u8, Failure> {
    let b = s.as_bytes();
    if b.len() == 1 {
        return Ok(b[0]);
    }
    if let Some(hex) = s.strip_prefix("\\x") {
        if let Ok(v) = u8::from_str_radix(hex, 16) {
            return Ok(v);
        }
    }
    Err(Failure::Usage(format!(
        "--char expects one byte or \\xHH, got {s:?}"
    )))
}

fn parse_suites(names: &[String]) -> std::result::Result<Vec<Suite>, Failure> {
    let mut suites = Vec::new();
    for name in names {
        if name == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(name.parse::<Suite>().map_err(Failure::Usage)?);
        }
    }
    suites.sort_unstable();
    suites.dedup();
    Ok(suites)
}

fn dispatch<O: Write, E: Write>(cmd: Command, out: &mut O, err: &mut E) -> CliResult {
    match cmd {
        Command::Compute {
            input,
            show_strings,
        } => {
            let t = read_text(&input)?;
            let ms = compute_mus(&TextIndex::build(t.clone())?);
            output::write_mus_csv(out, &t, &ms, show_strings)?;
        }
        Command::Query {
            input,
            pos,
            show_strings,
        } => {
            let t = read_text(&input)?;
            let ms = compute_mus(&TextIndex::build(t.clone())?);
            let hits = ms.stab(pos)?;
            output::write_intervals_csv(out, &t, hits, show_strings)?;
        }
        Command::Stats { input } => {
            let t = read_text(&input)?;
            let ms = compute_mus(&TextIndex::build(t.clone())?);
            output::write_stats_csv(out, &check_bounds(&t, &ms)?)?;
        }
        Command::GenLower {
            m,
            out: path,
            family_csv,
        } => {
            let inst = gen_lower(m)?;
            if inst.family.is_empty() {
                writeln!(err, "warning: m = {m} gives an empty family")?;
            }
            write_file(&path, inst.text.as_bytes())?;
            if let Some(fpath) = family_csv {
                let mut buf = Vec::new();
                output::write_family_csv(&mut buf, &inst)?;
                write_file(&fpath, &buf)?;
            }
        }
        Command::Verify {
            suite,
            alphabet,
            exhaustive,
            max_len,
            canonical,
            random,
            len,
            min_len,
            seed,
            occ_cap,
            violations,
        } => {
            let suites = parse_suites(&suite)?;
            let cfg = VerifyConfig {
                occurrence_cap: occ_cap,
                ..Default::default()
            };
            let reports = if exhaustive {
                exhaustive_verify(alphabet, max_len.unwrap_or(0), &suites, canonical, &cfg)?
            } else if let (Some(samples), Some(len), Some(seed)) = (random, len, seed) {
                let lo = min_len.unwrap_or(len);
                if lo > len {
                    return Err(Failure::Usage(format!(
                        "--min-len {lo} exceeds --len {len}"
                    )));
                }
                random_verify(alphabet, lo..=len, samples, seed, &suites, &cfg)?
            } else {
                return Err(Failure::Usage(
                    "verify needs --exhaustive --max-len L or --random N --len L --seed S".into(),
                ));
            };
            output::write_report_csv(out, &reports)?;
            if let Some(path) = violations {
                let mut buf = Vec::new();
                output::write_violations(&mut buf, &reports)?;
                write_file(&path, &buf)?;
            }
            let flagged: u64 = reports.iter().map(|r| r.flagged).sum();
            if flagged > 0 {
                writeln!(
                    err,
                    "note: {flagged} tied marker configurations flagged, not asserted"
                )?;
            }
            if reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Violations);
            }
        }
        Command::Sensitivity {
            input,
            pos,
            op,
            char,
            scan,
            kinds,
            symbols,
        } => {
            let t = read_text(&input)?;
            if scan {
                let sigma = match symbols {
                    Some(s) => s.into_bytes(),
                    None => default_alphabet(&t),
                };
                let res = sensitivity_scan(&t, &kinds, &sigma, DEFAULT_SCAN_BUDGET)?;
                writeln!(out, "{}", output::SENSITIVITY_HEADER)?;
                for e in &res.entries {
                    match &e.outcome {
                        Ok(r) => output::write_sensitivity_row(out, r)?,
                        Err(reason) => writeln!(err, "rejected {}: {reason}", e.edit)?,
                    }
                }
                for (label, idx) in [
                    ("additive", res.max_additive),
                    ("multiplicative", res.max_multiplicative),
                ] {
                    if let Some(Ok(r)) = idx.map(|k| &res.entries[k].outcome) {
                        writeln!(
                            err,
                            "max {label}: {} ({} -> {}, {:+})",
                            r.edit, r.pre_count, r.post_count, r.additive
                        )?;
                    }
                }
            } else {
                let (Some(pos), Some(kind)) = (pos, op) else {
                    return Err(Failure::Usage(
                        "sensitivity needs --pos and --op, or --scan".into(),
                    ));
                };
                let edit = match kind {
                    EditKind::Delete => EditOp::delete(pos),
                    _ => {
                        let c = char.as_deref().ok_or_else(|| {
                            Failure::Usage("--char is required for sub and ins".into())
                        })?;
                        EditOp {
                            kind,
                            pos,
                            symbol: Some(parse_symbol(c)?),
                        }
                    }
                };
                let r = sensitivity(&t, edit)?;
                writeln!(out, "{}", output::SENSITIVITY_HEADER)?;
                output::write_sensitivity_row(out, &r)?;
                writeln!(
                    err,
                    "stab at edit: before {} (pos {}), after {} (pos {})",
                    r.stab_pre, r.pre_pos, r.stab_post, r.post_pos
                )?;
            }
        }
    }
    Ok(())
}
