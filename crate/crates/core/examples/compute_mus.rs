//! Enumerate the MUSs of a file (or a built-in sample) and print them as CSV.
//!
//!     cargo run --example compute_mus -- path/to/text

use std::io;

use mustab::{compute_mus, output, Text, TextIndex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args_os().nth(1) {
        Some(path) => Text::from_raw(std::fs::read(path)?, true),
        None => Text::from("abracadabra"),
    };
    let idx = TextIndex::build(text.clone())?;
    let ms = compute_mus(&idx);
    eprintln!("n = {}, |MUS| = {}", text.len(), ms.len());
    output::write_mus_csv(&mut io::stdout().lock(), &text, &ms, true)?;
    Ok(())
}
