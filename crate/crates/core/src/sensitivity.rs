//! Change of `|MUS(T)|` under one-character edits.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mus::{mus_of, MusSet};
use crate::text::Text;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EditKind {
    Substitute,
    Insert,
    Delete,
}

impl EditKind {
    pub const ALL: [EditKind; 3] = [EditKind::Substitute, EditKind::Insert, EditKind::Delete];

    pub fn name(self) -> &'static str {
        match self {
            EditKind::Substitute => "sub",
            EditKind::Insert => "ins",
            EditKind::Delete => "del",
        }
    }
}

impl FromStr for EditKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sub" | "substitute" => Ok(EditKind::Substitute),
            "ins" | "insert" => Ok(EditKind::Insert),
            "del" | "delete" => Ok(EditKind::Delete),
            _ => Err(format!("unknown edit kind {s:?} (sub, ins, del)")),
        }
    }
}

/// A single-character edit at a 1-based position. Insertion places the new
/// symbol before `pos`, so `pos = n + 1` appends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EditOp {
    pub kind: EditKind,
    pub pos: usize,
    pub symbol: Option<u8>,
}

impl EditOp {
    pub fn substitute(pos: usize, symbol: u8) -> Self {
        EditOp {
            kind: EditKind::Substitute,
            pos,
            symbol: Some(symbol),
        }
    }

    pub fn insert(pos: usize, symbol: u8) -> Self {
        EditOp {
            kind: EditKind::Insert,
            pos,
            symbol: Some(symbol),
        }
    }

    pub fn delete(pos: usize) -> Self {
        EditOp {
            kind: EditKind::Delete,
            pos,
            symbol: None,
        }
    }
}

impl fmt::Display for EditOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind.name(), self.pos)?;
        if let Some(c) = self.symbol {
            write!(f, " {:?}", c as char)?;
        }
        Ok(())
    }
}

pub fn apply_edit(t: &Text, op: EditOp) -> Result<Text> {
    let n = t.len();
    let max = if op.kind == EditKind::Insert {
        n + 1
    } else {
        n
    };
    if op.pos == 0 || op.pos > max {
        return Err(Error::PositionOutOfRange { pos: op.pos, max });
    }
    let mut b = t.as_bytes().to_vec();
    let k = op.pos - 1;
    match op.kind {
        EditKind::Substitute => b[k] = op.symbol.expect("substitution needs a symbol"),
        EditKind::Insert => b.insert(k, op.symbol.expect("insertion needs a symbol")),
        EditKind::Delete => {
            b.remove(k);
            if b.is_empty() {
                return Err(Error::ResultEmpty);
            }
        }
    }
    Ok(Text::new(b))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SensitivityRecord {
    pub edit: EditOp,
    pub pre_count: usize,
    pub post_count: usize,
    pub additive: i64,
    pub multiplicative: f64,
    /// MUSs of the edited text containing the edit position and absent
    /// (as strings) before the edit.
    pub new_at_edit: usize,
    /// MUSs of the edited text absent before the edit and not containing
    /// the edit position.
    pub new_elsewhere: usize,
    /// MUSs of the edited text that were already MUSs before the edit.
    pub surviving: usize,
    /// Edit position in the original and in the edited text.
    pub pre_pos: usize,
    pub post_pos: usize,
    pub stab_pre: usize,
    pub stab_post: usize,
    pub post_len: usize,
}

impl SensitivityRecord {
    pub fn partition_holds(&self) -> bool {
        self.new_at_edit + self.new_elsewhere + self.surviving == self.post_count
    }
}

fn contents<'t>(t: &'t Text, ms: &MusSet) -> HashSet<&'t [u8]> {
    ms.iter().map(|m| m.content(t)).collect()
}

/// Positions used for stabbing queries before and after an edit. For
/// deletions of the last symbol, the edited text has no position `pos`, so
/// its last position is used.
fn edit_positions(op: EditOp, pre_len: usize, post_len: usize) -> (usize, usize) {
    (op.pos.min(pre_len), op.pos.min(post_len))
}

/// Compares `MUS(t)` with the MUSs after applying `op`, keyed by content.
pub fn sensitivity(t: &Text, op: EditOp) -> Result<SensitivityRecord> {
    t.require_nonempty()?;
    let post = apply_edit(t, op)?;
    let pre_ms = mus_of(t)?;
    let post_ms = mus_of(&post)?;
    Ok(record(t, &pre_ms, &post, &post_ms, op))
}

/// Builds the record when both MUS sets are already known.
pub fn record(
    pre: &Text,
    pre_ms: &MusSet,
    post: &Text,
    post_ms: &MusSet,
    op: EditOp,
) -> SensitivityRecord {
    let (pre_pos, post_pos) = edit_positions(op, pre.len(), post.len());
    let before = contents(pre, pre_ms);
    let (mut new_at_edit, mut new_elsewhere, mut surviving) = (0, 0, 0);
    for m in post_ms {
        if before.contains(m.content(post)) {
            surviving += 1;
        } else if m.contains(post_pos) {
            new_at_edit += 1;
        } else {
            new_elsewhere += 1;
        }
    }
    let pre_count = pre_ms.len();
    let post_count = post_ms.len();
    SensitivityRecord {
        edit: op,
        pre_count,
        post_count,
        additive: post_count as i64 - pre_count as i64,
        multiplicative: post_count as f64 / pre_count as f64,
        new_at_edit,
        new_elsewhere,
        surviving,
        pre_pos,
        post_pos,
        stab_pre: pre_ms.stab_count(pre_pos).unwrap_or(0),
        stab_post: post_ms.stab_count(post_pos).unwrap_or(0),
        post_len: post.len(),
    }
}

/// One scanned edit: either a record or the reason it was rejected.
#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub edit: EditOp,
    pub outcome: Result<SensitivityRecord>,
}

#[derive(Clone, Debug)]
pub struct ScanResult {
    pub entries: Vec<ScanEntry>,
    /// Indices into `entries` of the first maximal additive and
    /// multiplicative records.
    pub max_additive: Option<usize>,
    pub max_multiplicative: Option<usize>,
}

impl ScanResult {
    pub fn records(&self) -> impl Iterator<Item = &SensitivityRecord> {
        self.entries.iter().filter_map(|e| e.outcome.as_ref().ok())
    }
}

pub const DEFAULT_SCAN_BUDGET: u128 = 2_000_000_000;

/// Symbols of `t` plus the first byte from `a..=z`, then `0..=255`, that
/// does not occur in `t`.
pub fn default_alphabet(t: &Text) -> Vec<u8> {
    let mut present = [false; 256];
    for &c in t.as_bytes() {
        present[c as usize] = true;
    }
    let mut out: Vec<u8> = (0..=255u8).filter(|&c| present[c as usize]).collect();
    if let Some(fresh) = (b'a'..=b'z')
        .chain(0..=255u8)
        .find(|&c| !present[c as usize])
    {
        out.push(fresh);
        out.sort_unstable();
    }
    out
}

/// Every edit of the requested kinds, ordered by (position, kind, symbol).
pub fn scan_edits(n: usize, kinds: &[EditKind], alphabet: &[u8]) -> Vec<EditOp> {
    let mut kinds = kinds.to_vec();
    kinds.sort_unstable();
    kinds.dedup();
    let mut sigma = alphabet.to_vec();
    sigma.sort_unstable();
    sigma.dedup();
    let mut ops = Vec::new();
    for pos in 1..=n + 1 {
        for &kind in &kinds {
            match kind {
                EditKind::Substitute if pos <= n => {
                    ops.extend(sigma.iter().map(|&c| EditOp::substitute(pos, c)))
                }
                EditKind::Insert => ops.extend(sigma.iter().map(|&c| EditOp::insert(pos, c))),
                EditKind::Delete if pos <= n => ops.push(EditOp::delete(pos)),
                _ => {}
            }
        }
    }
    ops
}

/// Measures every edit in [`scan_edits`] order. The work estimate
/// `edits * n` must stay within `budget`.
pub fn sensitivity_scan(
    t: &Text,
    kinds: &[EditKind],
    alphabet: &[u8],
    budget: u128,
) -> Result<ScanResult> {
    t.require_nonempty()?;
    let ops = scan_edits(t.len(), kinds, alphabet);
    let needed = ops.len() as u128 * t.len() as u128;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let pre_ms = mus_of(t)?;
    let entries: Vec<ScanEntry> = ops
        .into_iter()
        .map(|op| {
            let outcome = apply_edit(t, op)
                .and_then(|post| mus_of(&post).map(|ms| record(t, &pre_ms, &post, &ms, op)));
            ScanEntry { edit: op, outcome }
        })
        .collect();

    let mut max_additive: Option<usize> = None;
    let mut max_multiplicative: Option<usize> = None;
    for (k, e) in entries.iter().enumerate() {
        let Ok(r) = &e.outcome else { continue };
        let rec = |i: usize| entries[i].outcome.as_ref().unwrap();
        if max_additive.is_none_or(|i| r.additive > rec(i).additive) {
            max_additive = Some(k);
        }
        if max_multiplicative.is_none_or(|i| r.multiplicative > rec(i).multiplicative) {
            max_multiplicative = Some(k);
        }
    }
    Ok(ScanResult {
        entries,
        max_additive,
        max_multiplicative,
    })
}
