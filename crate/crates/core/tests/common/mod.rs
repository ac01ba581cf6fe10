//! Oracles shared by the integration suites. None of them touch the simplex code.

#![allow(dead_code)]

use std::collections::HashSet;

use num_traits::{Signed, Zero};
use ptfkit::lp::{LinearConstraint, Rational, Relation};
use ptfkit::table::TruthTable;

/// Truth table as a word, bit `idx` = f at input index `idx` (n <= 6).
pub fn word(f: &TruthTable) -> u64 {
    f.bits().iter().enumerate().fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
}

/// Every truth table of `[w . X >= theta]` with integer `w` in `[-wb, wb]^n`, `theta` in `[-tb, tb]`.
pub fn brute_force_threshold_words(n: usize, wb: i64, tb: i64) -> HashSet<u64> {
    let mut out = HashSet::new();
    let side = (2 * wb + 1) as usize;
    let total = side.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let w: Vec<i64> = (0..n)
            .map(|_| {
                let d = (c % side) as i64 - wb;
                c /= side;
                d
            })
            .collect();
        let sums: Vec<i64> =
            (0..1usize << n).map(|idx| (0..n).filter(|&i| (idx >> i) & 1 == 1).map(|i| w[i]).sum()).collect();
        for theta in -tb..=tb {
            let word = sums.iter().enumerate().fold(0u64, |acc, (i, &g)| acc | (u64::from(g >= theta) << i));
            out.insert(word);
        }
    }
    out
}

/// Exact feasibility by Fourier-Motzkin elimination.
pub fn fourier_motzkin_feasible(constraints: &[LinearConstraint], nvars: usize) -> bool {
    // every row as a . x <= b
    let mut rows: Vec<(Vec<Rational>, Rational)> = constraints
        .iter()
        .map(|c| match c.relation {
            Relation::Le => (c.coeffs.clone(), c.rhs.clone()),
            Relation::Ge => (c.coeffs.iter().map(|a| -a).collect(), -c.rhs.clone()),
        })
        .collect();
    for j in 0..nvars {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in rows {
            if row.0[j].is_positive() {
                pos.push(row);
            } else if row.0[j].is_negative() {
                neg.push(row);
            } else {
                rest.push(row);
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                let lp = -&na[j];
                let ln = pa[j].clone();
                let a: Vec<Rational> = pa.iter().zip(na).map(|(x, y)| x * &lp + y * &ln).collect();
                let b = pb * &lp + nb * &ln;
                rest.push((a, b));
            }
        }
        rows = rest;
    }
    rows.iter().all(|(a, b)| {
        debug_assert!(a.iter().all(Zero::is_zero));
        !b.is_negative()
    })
}

/// Does any integer vector in `[-bound, bound]^nvars` satisfy every constraint?
pub fn small_integer_witness(constraints: &[LinearConstraint], nvars: usize, bound: i64) -> Option<Vec<Rational>> {
    let side = (2 * bound + 1) as usize;
    for code in 0..side.pow(nvars as u32) {
        let mut c = code;
        let x: Vec<Rational> = (0..nvars)
            .map(|_| {
                let d = (c % side) as i64 - bound;
                c /= side;
                Rational::from_integer(d.into())
            })
            .collect();
        if constraints.iter().all(|k| k.is_satisfied_by(&x)) {
            return Some(x);
        }
    }
    None
}
