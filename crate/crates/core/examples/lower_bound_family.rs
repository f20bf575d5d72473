//! Builds T_m for a few m and reports how many MUSs pass through the
//! distinguished position, against the maximum over all positions.
//!
//!     cargo run --example lower_bound_family -- 3 12

use mustab::{gen_lower, mus_of, sqrt_bound, verify_lower};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (lo, hi) = match args.as_slice() {
        [a, b] => (*a, *b),
        [a] => (*a, *a),
        _ => (3, 12),
    };
    println!("m,n,p,stab_at_p,max_stab_pos,max_stab,m_minus_2,sqrt_bound,verified");
    for m in lo.max(2)..=hi {
        let inst = gen_lower(m).expect("m >= 2");
        let ms = mus_of(&inst.text).expect("nonempty");
        let (pos, best) = ms.max_stab();
        let rep = verify_lower(&inst, &ms);
        println!(
            "{m},{},{},{},{pos},{best},{},{:.3},{}",
            inst.text.len(),
            inst.p,
            ms.stab_count(inst.p).unwrap(),
            m - 2,
            sqrt_bound(inst.text.len()),
            rep.passed()
        );
    }
    let inst = gen_lower(5).unwrap();
    println!("\nT_5 = {}", String::from_utf8_lossy(inst.text.as_bytes()));
    for f in &inst.family {
        println!(
            "  [{},{}] {}",
            f.interval.start,
            f.interval.end,
            String::from_utf8_lossy(&f.content)
        );
    }
}
