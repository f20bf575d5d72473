//! Exhaustive and seeded random sweeps over every suite.
//!
//!     cargo run --release --example random_verify

use mustab::verify::{exhaustive_verify, random_verify, Suite, VerifyConfig};

fn main() {
    let cfg = VerifyConfig::default();
    println!("exhaustive binary, length <= 10:");
    for r in exhaustive_verify(2, 10, &Suite::ALL, true, &cfg).unwrap() {
        println!("  {r}");
    }
    println!("random ternary, 100 texts of length 1..=60, seed 42:");
    for r in random_verify(3, 1..=60, 100, 42, &Suite::ALL, &cfg).unwrap() {
        println!("  {r}");
    }
}
