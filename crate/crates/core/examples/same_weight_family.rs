//! Sweeping the threshold of a fixed weight vector, and the bands between members.

use ptfkit::lp::int;
use ptfkit::ptf::{self, linear_weights};
use ptfkit::text::format_rational;

fn main() -> ptfkit::error::Result<()> {
    let w = linear_weights(&[int(1), int(1), int(2)]);
    let fam = ptf::same_weight_family(&w, 3)?;
    let levels: Vec<String> = fam.levels.iter().map(format_rational).collect();
    println!("levels of G: {}", levels.join(" "));
    for m in &fam.members {
        println!("theta = {:>2}  {}", format_rational(&m.theta), m.table);
    }

    // consecutive members differ on one level set, distant ones on a band
    let (a, b) = (&fam.members[1], &fam.members[3]);
    println!("band [{}, {}): {}", format_rational(&a.theta), format_rational(&b.theta), a.table.xor(&b.table)?);
    Ok(())
}
