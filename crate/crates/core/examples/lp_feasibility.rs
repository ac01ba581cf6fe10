//! The exact rational feasibility solver on its own.

use ptfkit::lp::{self, int, LinearConstraint, Rational};
use ptfkit::text::format_rational;

fn show(label: &str, cs: &[LinearConstraint], nvars: usize) -> ptfkit::error::Result<()> {
    match lp::feasible(cs, nvars)?.into_witness() {
        Some(x) => {
            let xs: Vec<String> = x.iter().map(format_rational).collect();
            println!("{label}: feasible at ({})", xs.join(", "));
        }
        None => println!("{label}: infeasible"),
    }
    Ok(())
}

fn main() -> ptfkit::error::Result<()> {
    // x + y >= 1, x - y <= -1/2, x >= 1/3
    let half = Rational::new(1.into(), 2.into());
    let third = Rational::new(1.into(), 3.into());
    let cs = vec![
        LinearConstraint::ge(vec![int(1), int(1)], int(1)),
        LinearConstraint::le(vec![int(1), int(-1)], -half),
        LinearConstraint::ge(vec![int(1), int(0)], third),
    ];
    show("wedge", &cs, 2)?;

    // x >= 2 and x <= 1
    let cs = vec![LinearConstraint::ge(vec![int(1)], int(2)), LinearConstraint::le(vec![int(1)], int(1))];
    show("empty interval", &cs, 1)?;

    // the XOR system at degree 1: no weights w1, w2 and threshold t separate it
    let rows = [(0, 0, false), (1, 0, true), (0, 1, true), (1, 1, false)];
    let cs: Vec<LinearConstraint> = rows
        .iter()
        .map(|&(a, b, out)| {
            let coeffs = vec![int(a), int(b), int(-1)];
            if out {
                LinearConstraint::ge(coeffs, int(0))
            } else {
                LinearConstraint::le(coeffs, int(-1))
            }
        })
        .collect();
    show("xor as a threshold function", &cs, 3)?;
    Ok(())
}
