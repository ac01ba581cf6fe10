//! Exact rational LP feasibility.
//!
//! Phase one of the two-phase simplex method on a dense tableau, with Bland's
//! rule for both the entering and the leaving variable. No objective is ever
//! optimized, so phase two reduces to reading off the basic solution.
//!
//! All variables are free. Each free `x` is written as `y - z` with `y >= 0`
//! and one shared `z >= 0`, which costs a single extra column.

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Result};

pub type Rational = num_rational::BigRational;

/// Builds an integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `a . x >= rhs`
    Ge,
    /// `a . x <= rhs`
    Le,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn ge(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self { coeffs, relation: Relation::Ge, rhs }
    }

    pub fn le(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self { coeffs, relation: Relation::Le, rhs }
    }

    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).fold(Rational::zero(), |acc, (a, v)| acc + a * v)
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Le => lhs <= self.rhs,
        }
    }

    /// Same half-space with both sides multiplied by a positive factor.
    pub fn scaled(&self, factor: &Rational) -> Self {
        assert!(factor.is_positive(), "scaling factor must be positive");
        Self {
            coeffs: self.coeffs.iter().map(|a| a * factor).collect(),
            relation: self.relation,
            rhs: &self.rhs * factor,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityResult {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[Rational]> {
        match self {
            FeasibilityResult::Feasible(w) => Some(w),
            FeasibilityResult::Infeasible => None,
        }
    }

    pub fn into_witness(self) -> Option<Vec<Rational>> {
        match self {
            FeasibilityResult::Feasible(w) => Some(w),
            FeasibilityResult::Infeasible => None,
        }
    }
}

/// Decides whether the system has a real (equivalently, rational) solution.
///
/// A returned witness has been checked against every constraint by exact
/// substitution.
pub fn feasible(constraints: &[LinearConstraint], nvars: usize) -> Result<FeasibilityResult> {
    for c in constraints {
        check_dim(nvars, c.coeffs.len())?;
    }
    if constraints.is_empty() {
        return Ok(FeasibilityResult::Feasible(vec![Rational::zero(); nvars]));
    }

    let mut tableau = Tableau::build(constraints, nvars);
    if !tableau.run_phase_one() {
        return Ok(FeasibilityResult::Infeasible);
    }
    let witness = tableau.solution(nvars);
    for (i, c) in constraints.iter().enumerate() {
        assert!(c.is_satisfied_by(&witness), "simplex witness violates constraint {i}; this is a solver bug");
    }
    Ok(FeasibilityResult::Feasible(witness))
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Phase-one reduced costs, last entry holds minus the current infeasibility.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    /// Columns at or past this index are artificial and never re-enter.
    first_artificial: usize,
}

impl Tableau {
    fn build(constraints: &[LinearConstraint], nvars: usize) -> Self {
        let m = constraints.len();
        let shift_col = nvars;
        let first_slack = nvars + 1;

        // Artificial columns are only needed for rows whose slack enters with -1.
        let mut needs_artificial = Vec::with_capacity(m);
        for c in constraints {
            let negate = c.rhs.is_negative();
            let slack_sign_positive = matches!(c.relation, Relation::Le) != negate;
            needs_artificial.push(!slack_sign_positive);
        }
        let first_artificial = first_slack + m;
        let n_art = needs_artificial.iter().filter(|&&b| b).count();
        let width = first_artificial + n_art + 1;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_art = first_artificial;
        for (i, c) in constraints.iter().enumerate() {
            let negate = c.rhs.is_negative();
            let sign = |v: Rational| if negate { -v } else { v };
            let mut row = vec![Rational::zero(); width];
            let mut sum = Rational::zero();
            for (j, a) in c.coeffs.iter().enumerate() {
                row[j] = sign(a.clone());
                sum += a;
            }
            row[shift_col] = sign(-sum);
            let slack = match c.relation {
                Relation::Le => Rational::one(),
                Relation::Ge => -Rational::one(),
            };
            row[first_slack + i] = sign(slack);
            row[width - 1] = sign(c.rhs.clone());
            if needs_artificial[i] {
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            } else {
                basis.push(first_slack + i);
            }
            rows.push(row);
        }

        let mut cost = vec![Rational::zero(); width];
        for (row, &b) in rows.iter().zip(&basis) {
            if b >= first_artificial {
                for (cj, a) in cost.iter_mut().zip(row) {
                    if !a.is_zero() {
                        *cj -= a;
                    }
                }
            }
        }
        for c in cost.iter_mut().take(width - 1).skip(first_artificial) {
            *c = Rational::zero();
        }

        Self { rows, cost, basis, first_artificial }
    }

    /// Returns true when the phase-one optimum is zero, i.e. the system is feasible.
    fn run_phase_one(&mut self) -> bool {
        let rhs = self.cost.len() - 1;
        // Bland: lowest-index improving column.
        while let Some(enter) = (0..self.first_artificial).find(|&j| self.cost[j].is_negative()) {
            // Bland: minimum ratio, ties to the lowest-index basic variable.
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                let a = &row[enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / a;
                let better = match &leave {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            // Phase one is bounded below by zero, so some row always limits the step.
            let (pivot_row, _) = leave.expect("phase-one objective is bounded");
            self.pivot(pivot_row, enter);
        }
        self.cost[rhs].is_zero()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for a in self.rows[r].iter_mut() {
            if !a.is_zero() {
                *a *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<Rational>| {
            let factor = row[c].clone();
            if factor.is_zero() {
                return;
            }
            for &j in &nonzero {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    fn solution(&self, nvars: usize) -> Vec<Rational> {
        let rhs = self.cost.len() - 1;
        let mut values = vec![Rational::zero(); nvars + 1];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b <= nvars {
                values[b] = row[rhs].clone();
            }
        }
        let shift = values[nvars].clone();
        values.truncate(nvars);
        values.iter_mut().for_each(|v| *v -= &shift);
        values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        int(v)
    }

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let cs = [LinearConstraint::ge(vec![r(1)], r(1)), LinearConstraint::le(vec![r(1)], r(0))];
        assert_eq!(feasible(&cs, 1).unwrap(), FeasibilityResult::Infeasible);
    }

    #[test]
    fn interval_is_feasible() {
        let cs = [LinearConstraint::ge(vec![r(1)], r(1)), LinearConstraint::le(vec![r(1)], r(2))];
        let w = feasible(&cs, 1).unwrap().into_witness().unwrap();
        assert!(cs.iter().all(|c| c.is_satisfied_by(&w)));
    }

    #[test]
    fn negative_solutions_are_reachable() {
        let cs = [LinearConstraint::le(vec![r(1), r(0)], r(-5)), LinearConstraint::ge(vec![r(0), r(1)], r(-3))];
        let w = feasible(&cs, 2).unwrap().into_witness().unwrap();
        assert!(w[0] <= r(-5));
        assert!(cs.iter().all(|c| c.is_satisfied_by(&w)));
    }

    #[test]
    fn empty_system_gives_zero_witness() {
        assert_eq!(feasible(&[], 3).unwrap(), FeasibilityResult::Feasible(vec![r(0); 3]));
    }

    #[test]
    fn and2_threshold_system() {
        // variables (w1, w2, theta); true: w.X - theta >= 0, false: w.X - theta <= -1
        let mut cs = Vec::new();
        for idx in 0..4 {
            let x1 = r(idx & 1);
            let x2 = r((idx >> 1) & 1);
            let row = vec![x1, x2, r(-1)];
            if idx == 3 {
                cs.push(LinearConstraint::ge(row, r(0)));
            } else {
                cs.push(LinearConstraint::le(row, r(-1)));
            }
        }
        let w = feasible(&cs, 3).unwrap().into_witness().unwrap();
        for idx in 0..4i64 {
            let g = r(idx & 1) * &w[0] + r((idx >> 1) & 1) * &w[1];
            assert_eq!(g >= w[2], idx == 3);
        }
    }

    #[test]
    fn equality_by_two_inequalities() {
        let cs = [
            LinearConstraint::ge(vec![r(2), r(3)], r(7)),
            LinearConstraint::le(vec![r(2), r(3)], r(7)),
            LinearConstraint::ge(vec![r(1), r(-1)], Rational::new(1.into(), 3.into())),
        ];
        let w = feasible(&cs, 2).unwrap().into_witness().unwrap();
        assert_eq!(r(2) * &w[0] + r(3) * &w[1], r(7));
    }

    #[test]
    fn coefficient_count_is_checked() {
        let cs = [LinearConstraint::ge(vec![r(1), r(1)], r(0))];
        assert!(feasible(&cs, 3).is_err());
    }

    #[test]
    fn zero_rows() {
        let ok = [LinearConstraint::ge(vec![r(0)], r(0)), LinearConstraint::le(vec![r(0)], r(0))];
        assert!(feasible(&ok, 1).unwrap().is_feasible());
        let bad = [LinearConstraint::ge(vec![r(0)], r(1))];
        assert!(!feasible(&bad, 1).unwrap().is_feasible());
    }
}
