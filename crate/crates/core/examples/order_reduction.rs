//! Writing an order-2 function as the XOR of two threshold functions.

use ptfkit::highorder;
use ptfkit::table::{InputVector, TruthTable};
use ptfkit::text::format_ptf;

fn main() -> ptfkit::error::Result<()> {
    let g: TruthTable = "0110".parse()?;
    let y: InputVector = "11".parse()?;
    let r = highorder::order_reduce(&g, &y)?;
    println!("g = {}  (order {}), flipped at Y = {}", r.g, r.order_g, r.y);
    println!("f2 = {}", r.f2);
    println!("{}", indent(&format_ptf(&r.f2_witness)));
    println!("f1 = {}  (true only at Y)", r.f1);
    println!("{}", indent(&format_ptf(&r.f1_witness)));
    assert_eq!(r.f1.xor(&r.f2)?, g);

    // a function with no suitable flip is rejected
    let bad: TruthTable = "0001".parse()?;
    if let Err(e) = highorder::order_reduce(&bad, &y) {
        println!("and2 at 11: {e}");
    }
    Ok(())
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}
