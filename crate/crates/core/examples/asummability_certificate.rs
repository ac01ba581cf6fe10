//! Summability certificates and their agreement with the LP answer.

use ptfkit::asummability::{self, CrossCheckStatus};
use ptfkit::table::TruthTable;

fn main() -> ptfkit::error::Result<()> {
    for s in ["0110", "0001", "0x96", "0x6996", "0x177e"] {
        let f: TruthTable = s.parse()?;
        match asummability::find_certificate(&f, 4)? {
            Some(c) => {
                let t: Vec<String> = c.true_vectors.iter().map(ToString::to_string).collect();
                let u: Vec<String> = c.false_vectors.iter().map(ToString::to_string).collect();
                println!("{s}: {}-summable, [{}] and [{}] share the sum {:?}", c.k, t.join(" "), u.join(" "), c.sum());
            }
            None => println!("{s}: asummable up to 4"),
        }
        let report = asummability::check_asummability_theorem(&f, 4)?;
        assert_ne!(report.status(), CrossCheckStatus::Inconsistent);
    }

    let mut threshold = 0;
    for w in 0..256 {
        let f = TruthTable::from_word(3, w)?;
        if asummability::find_certificate(&f, 4)?.is_none() {
            threshold += 1;
        }
    }
    println!("three-variable functions without a certificate up to k = 4: {threshold}");
    Ok(())
}
