//! Inputs whose single flip lowers the order of a function.

use ptfkit::highorder;
use ptfkit::table::TruthTable;

fn main() -> ptfkit::error::Result<()> {
    for s in ["0110", "0x96", "0x16", "0001"] {
        let g: TruthTable = s.parse()?;
        let vs = highorder::high_order_vectors(&g)?;
        println!("{s}: {} high-order vector(s)", vs.len());
        for v in vs {
            println!("    Y = {}  order {} -> {}", v.y, v.order_before, v.order_after);
        }
    }
    Ok(())
}
