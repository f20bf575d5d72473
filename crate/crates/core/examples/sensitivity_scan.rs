//! Every single-character edit of T_m, summarized per edit kind.

use mustab::sensitivity::{default_alphabet, sensitivity_scan, DEFAULT_SCAN_BUDGET};
use mustab::{gen_lower, EditKind};

fn main() {
    let m: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let t = gen_lower(m).unwrap().text;
    let scan = sensitivity_scan(
        &t,
        &EditKind::ALL,
        &default_alphabet(&t),
        DEFAULT_SCAN_BUDGET,
    )
    .unwrap();
    println!("T_{m}: n = {}, {} edits", t.len(), scan.entries.len());
    for kind in EditKind::ALL {
        let recs: Vec<_> = scan.records().filter(|r| r.edit.kind == kind).collect();
        let best = recs.iter().max_by_key(|r| r.additive).unwrap();
        let at_edit = recs.iter().map(|r| r.new_at_edit).max().unwrap();
        let elsewhere = recs.iter().map(|r| r.new_elsewhere).max().unwrap();
        println!(
            "  {:<3} max additive {:+} ({}), max new at edit {at_edit}, max new elsewhere {elsewhere}",
            kind.name(),
            best.additive,
            best.edit
        );
    }
    if let Some(k) = scan.max_multiplicative {
        let r = scan.entries[k].outcome.as_ref().unwrap();
        println!("  max multiplicative {:.4} ({})", r.multiplicative, r.edit);
    }
}
