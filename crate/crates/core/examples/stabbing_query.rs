//! Stabbing profile: how many MUSs contain each position.

use mustab::{mus_of, Text};

fn main() {
    let text = Text::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "abaababaabaababaab".into())
            .as_str(),
    );
    let ms = mus_of(&text).expect("nonempty text");
    println!("{}", String::from_utf8_lossy(text.as_bytes()));
    for pos in 1..=text.len() {
        let hits = ms.stab(pos).unwrap();
        let shown: Vec<String> = hits
            .iter()
            .map(|m| {
                format!(
                    "[{},{}]{}",
                    m.start,
                    m.end,
                    String::from_utf8_lossy(m.content(&text))
                )
            })
            .collect();
        println!("{pos:>3} {:>2} {}", hits.len(), shown.join(" "));
    }
    let (pos, count) = ms.max_stab();
    println!("max stabbing count {count} at position {pos}");
}
