//! Smallest shared-weight multithreshold representations found by a bounded search.

use ptfkit::multithreshold;
use ptfkit::table::TruthTable;
use ptfkit::text::format_rational;

fn main() -> ptfkit::error::Result<()> {
    for s in ["0110", "0x96", "0x6996", "0x1ee1", "0x17"] {
        let f: TruthTable = s.parse()?;
        match multithreshold::synthesize_shared_weight(&f, 5, 2)? {
            Some(rep) => {
                let w: Vec<String> = rep.weight_vector().iter().map(format_rational).collect();
                let t: Vec<String> = rep.thresholds().iter().map(format_rational).collect();
                println!("{s}: k = {}  w = ({})  thresholds [{}]", rep.k(), w.join(", "), t.join(", "));
                assert_eq!(rep.truth_table(), f);
            }
            None => println!("{s}: nothing within k <= 5, |w_i| <= 2"),
        }
    }
    Ok(())
}
