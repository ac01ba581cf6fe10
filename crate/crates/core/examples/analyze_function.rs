//! Order and minimal-degree witness for a few familiar functions.
//!
//! Run with `cargo run --example analyze_function -- 0x6996` to analyze your own table.

use ptfkit::ptf;
use ptfkit::table::TruthTable;
use ptfkit::text::format_ptf;

fn main() -> ptfkit::error::Result<()> {
    let inputs: Vec<String> = match std::env::args().skip(1).collect::<Vec<_>>() {
        v if v.is_empty() => ["0001", "0110", "0x96", "0x8001"].map(String::from).to_vec(),
        v => v,
    };
    for s in inputs {
        let f: TruthTable = s.parse()?;
        let (order, witness) = ptf::minimal_realization(&f)?;
        println!("{f}  n = {}  order = {order}", f.n());
        for line in format_ptf(&witness).lines() {
            println!("    {line}");
        }
        assert_eq!(witness.truth_table(), f);
    }
    Ok(())
}
