//! Global and positional bounds on random texts of growing length.

use mustab::verify::random_texts;
use mustab::{check_bounds, mus_of};

fn main() {
    println!("alphabet,n,mus_count,rle,max_stab,sqrt_bound,ok");
    for k in [2, 4, 26] {
        for n in [10, 100, 1000, 10_000, 100_000] {
            let t = &random_texts(k, n..=n, 1, 1).unwrap()[0];
            let ms = mus_of(t).unwrap();
            let b = check_bounds(t, &ms).unwrap();
            println!(
                "{k},{n},{},{},{},{:.3},{}",
                b.mus_count,
                b.rle_size,
                b.max_stab_count,
                b.sqrt_bound,
                b.all_ok()
            );
        }
    }
}
