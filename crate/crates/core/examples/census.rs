//! Counts threshold functions and the order distribution for small n.
//!
//! `cargo run --release --example census -- 4` covers all 65536 four-variable functions.

use std::time::Instant;

use ptfkit::ptf;
use ptfkit::table::TruthTable;

fn main() -> ptfkit::error::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for n in 1..=max_n.min(4) {
        let start = Instant::now();
        let mut by_order = vec![0usize; n + 1];
        for w in 0..1u64 << (1 << n) {
            by_order[ptf::order(&TruthTable::from_word(n, w)?)?] += 1;
        }
        let threshold = by_order[0] + by_order.get(1).copied().unwrap_or(0);
        println!("n = {n}: {threshold} threshold functions, by order {by_order:?} ({:.2?})", start.elapsed());
    }
    Ok(())
}
