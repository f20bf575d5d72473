//! Run the periodicity fact and the two stabbing lemmas on T_3..T_8 and on
//! a user-supplied text.

use mustab::verify::{check_key_lemma, check_marker_gap_lemma, check_three_overlap_fact};
use mustab::{gen_lower, Text};

fn main() {
    let mut texts: Vec<(String, Text)> = (3..=8)
        .map(|m| (format!("T_{m}"), gen_lower(m).unwrap().text))
        .collect();
    if let Some(s) = std::env::args().nth(1) {
        texts.push((s.clone(), Text::from(s.as_str())));
    }
    for (name, t) in &texts {
        println!("{name} (n = {})", t.len());
        if t.len() <= 100 {
            println!("  {}", check_three_overlap_fact(t, 100).unwrap());
        }
        println!("  {}", check_key_lemma(t, 8, 2000).unwrap());
        println!("  {}", check_marker_gap_lemma(t, 8, 1 << 16, 2000).unwrap());
    }
}
