//! Lifting a two-threshold XOR to one more variable.

use ptfkit::multithreshold;
use ptfkit::ptf::Ptf;
use ptfkit::table::TruthTable;

fn main() -> ptfkit::error::Result<()> {
    let f1 = Ptf::linear_int(&[1, 1], 1)?;
    let f2 = Ptf::linear_int(&[1, 1], 2)?;
    let f_n: TruthTable = "0110".parse()?;
    let r = multithreshold::extend_order(&f_n, &f1, &f2)?;
    println!("f_n     = {}", r.f_n);
    println!("g_next  = {}", r.g_next);
    println!("f1_next = {}", r.f1_next);
    println!("f2_next = {}", r.f2_next);
    println!("f_next  = {}", r.f_next);
    println!("{}", serde_json::to_string_pretty(&r.witness.to_json()).unwrap());
    assert_eq!(r.witness.truth_table(), r.f_next);
    Ok(())
}
