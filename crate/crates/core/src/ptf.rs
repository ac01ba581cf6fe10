//! High-order threshold functions.
//!
//! A PTF computes `G(X) = sum over monomials m of a_m * prod_{i in m} x_i`
//! (no constant term) and outputs 1 iff `G(X) >= theta`. Realizability at a
//! given degree is decided exactly with [`crate::lp::feasible`]: true vectors
//! contribute `G(X) - theta >= 0` and false vectors `G(X) - theta <= -1`,
//! the unit margin being free by positive rescaling.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{check_cap, check_dim, Error, Result};
use crate::lp::{self, int, LinearConstraint, Rational};
use crate::table::{InputVector, TruthTable};

/// Largest `n` accepted by the LP-backed deciders.
pub const LP_MAX_VARS: usize = 10;

/// A product of distinct variables, `x_{i_1} * ... * x_{i_r}` with `i_1 < ... < i_r`.
///
/// Ordered by degree first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    vars: Vec<usize>,
}

impl Monomial {
    pub fn new(mut vars: Vec<usize>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidArgument("monomial must contain at least one variable".into()));
        }
        if vars.contains(&0) {
            return Err(Error::InvalidArgument("variable indices start at 1".into()));
        }
        vars.sort_unstable();
        if vars.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("repeated variable in monomial {vars:?}")));
        }
        Ok(Self { vars })
    }

    /// The degree-1 monomial `x_i`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variable indices start at 1");
        Self { vars: vec![i] }
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn max_var(&self) -> usize {
        *self.vars.last().expect("monomials are nonempty")
    }

    pub fn eval(&self, x: &InputVector) -> bool {
        self.vars.iter().all(|&i| x.get(i))
    }

    /// Bitmask over input indices: bit `i-1` set for each `x_i` in the product.
    pub fn mask(&self) -> usize {
        self.vars.iter().fold(0, |acc, &i| acc | (1 << (i - 1)))
    }

    /// All monomials over `n` variables with degree in `1..=d`, in monomial order.
    pub fn all_up_to(n: usize, d: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        for deg in 1..=d.min(n) {
            let mut combo: Vec<usize> = (1..=deg).collect();
            loop {
                out.push(Monomial { vars: combo.clone() });
                // next combination in lexicographic order
                let mut k = deg;
                while k > 0 && combo[k - 1] == n - deg + k {
                    k -= 1;
                }
                if k == 0 {
                    break;
                }
                combo[k - 1] += 1;
                for j in k..deg {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `"+"`-joined indices, e.g. `1+2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.vars.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let vars = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid variable index {t:?} in monomial {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Monomial::new(vars).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub type WeightMap = BTreeMap<Monomial, Rational>;

/// Checks every monomial fits `n` variables and strips zero coefficients.
pub fn normalize_weights(n: usize, weights: WeightMap) -> Result<WeightMap> {
    if let Some(bad) = weights.keys().find(|m| m.max_var() > n) {
        return Err(Error::IndexOutOfRange { index: bad.max_var(), n });
    }
    Ok(weights.into_iter().filter(|(_, a)| !a.is_zero()).collect())
}

/// `G(X)` for a weight map.
pub fn eval_weights(weights: &WeightMap, x: &InputVector) -> Rational {
    weights.iter().filter(|(m, _)| m.eval(x)).fold(Rational::zero(), |acc, (_, a)| acc + a)
}

/// Degree-1 weight map from a dense vector `(w_1, ..., w_n)`.
pub fn linear_weights(w: &[Rational]) -> WeightMap {
    w.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, a)| (Monomial::var(i + 1), a.clone())).collect()
}

/// An `n`-variable high-order threshold function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ptf {
    n: usize,
    coeffs: WeightMap,
    theta: Rational,
}

impl Ptf {
    pub fn new(n: usize, coeffs: WeightMap, theta: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a PTF needs at least one variable".into()));
        }
        let coeffs = normalize_weights(n, coeffs)?;
        Ok(Self { n, coeffs, theta })
    }

    /// Degree-1 PTF `[w . X >= theta]`.
    pub fn linear(w: &[Rational], theta: Rational) -> Result<Self> {
        Self::new(w.len(), linear_weights(w), theta)
    }

    /// Degree-1 PTF with integer weights.
    pub fn linear_int(w: &[i64], theta: i64) -> Result<Self> {
        let w: Vec<Rational> = w.iter().map(|&v| int(v)).collect();
        Self::linear(&w, int(theta))
    }

    /// Closed-form realization of the function true only at `y`:
    /// `w_i = 2 y_i - 1`, `theta = popcount(y)`. `w . X` peaks uniquely at `y`.
    pub fn single_minterm(y: &InputVector) -> Self {
        let w: Vec<Rational> = y.bits().iter().map(|&b| int(if b { 1 } else { -1 })).collect();
        Self::linear(&w, int(y.popcount() as i64)).expect("input vectors are nonempty")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &WeightMap {
        &self.coeffs
    }

    pub fn theta(&self) -> &Rational {
        &self.theta
    }

    /// Largest degree with a nonzero coefficient; 0 when there are none.
    pub fn order(&self) -> usize {
        self.coeffs.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Dense degree-1 weights `(w_1, ..., w_n)`, or `None` if some coefficient has degree > 1.
    pub fn linear_weight_vector(&self) -> Option<Vec<Rational>> {
        if self.order() > 1 {
            return None;
        }
        let mut w = vec![Rational::zero(); self.n];
        for (m, a) in &self.coeffs {
            w[m.vars()[0] - 1] = a.clone();
        }
        Some(w)
    }

    pub fn eval_g(&self, x: &InputVector) -> Result<Rational> {
        check_dim(self.n, x.dim())?;
        Ok(eval_weights(&self.coeffs, x))
    }

    pub fn eval(&self, x: &InputVector) -> Result<bool> {
        Ok(self.eval_g(x)? >= self.theta)
    }

    pub fn truth_table(&self) -> TruthTable {
        TruthTable::from_fn(self.n, |x| eval_weights(&self.coeffs, x) >= self.theta)
            .expect("PTF variable count is a valid table size")
    }

    /// Coefficients and threshold multiplied by `factor > 0`.
    pub fn scaled(&self, factor: &Rational) -> Self {
        assert!(factor.is_positive(), "scaling factor must be positive");
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(m, a)| (m.clone(), a * factor)).collect(),
            theta: &self.theta * factor,
        }
    }
}

/// A PTF of order at most `d` realizing `f`, if one exists.
pub fn realize_at_degree(f: &TruthTable, d: usize) -> Result<Option<Ptf>> {
    let n = f.n();
    check_cap("realize_at_degree", LP_MAX_VARS, n)?;
    if d > n {
        return Err(Error::InvalidArgument(format!("degree {d} exceeds variable count {n}")));
    }
    let monomials = Monomial::all_up_to(n, d);
    let masks: Vec<usize> = monomials.iter().map(Monomial::mask).collect();
    let nvars = monomials.len() + 1;

    let constraints: Vec<LinearConstraint> = (0..f.len())
        .map(|idx| {
            let mut row: Vec<Rational> = masks.iter().map(|&m| int(i64::from(idx & m == m))).collect();
            row.push(int(-1));
            if f.at(idx) {
                LinearConstraint::ge(row, int(0))
            } else {
                LinearConstraint::le(row, int(-1))
            }
        })
        .collect();

    let Some(sol) = lp::feasible(&constraints, nvars)?.into_witness() else {
        return Ok(None);
    };
    let theta = sol[nvars - 1].clone();
    let coeffs = monomials.into_iter().zip(sol).collect();
    let p = Ptf::new(n, coeffs, theta)?;
    debug_assert_eq!(p.truth_table(), *f);
    Ok(Some(p))
}

/// Smallest degree realizing `f`, with a witness of that degree.
pub fn minimal_realization(f: &TruthTable) -> Result<(usize, Ptf)> {
    check_cap("order", LP_MAX_VARS, f.n())?;
    for d in 0..=f.n() {
        if let Some(p) = realize_at_degree(f, d)? {
            return Ok((d, p));
        }
    }
    unreachable!("every Boolean function is a PTF of degree n")
}

/// Minimal PTF order of `f`: 0 for constants, 1 for threshold functions.
pub fn order(f: &TruthTable) -> Result<usize> {
    Ok(minimal_realization(f)?.0)
}

/// Degree-1 realization, present iff `f` is a threshold function.
pub fn is_threshold(f: &TruthTable) -> Result<Option<Ptf>> {
    realize_at_degree(f, 1)
}

/// One function of a same-weight family together with a threshold producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub theta: Rational,
    pub table: TruthTable,
}

/// Every function obtained from fixed weights by sweeping the threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SameWeightFamily {
    pub n: usize,
    pub weights: WeightMap,
    /// Distinct values of `G` over `B^n`, ascending.
    pub levels: Vec<Rational>,
    /// Ordered from `const1` down to `const0`.
    pub members: Vec<FamilyMember>,
}

/// Sweeps `theta` over the distinct levels of `G`.
///
/// Member `j` uses `theta = levels[j]`, which selects `{G >= levels[j]}`; the
/// final member uses `max(levels) + 1` and is `const0`.
pub fn same_weight_family(weights: &WeightMap, n: usize) -> Result<SameWeightFamily> {
    let weights = normalize_weights(n, weights.clone())?;
    let values: Vec<Rational> =
        (0..1usize << n).map(|idx| eval_weights(&weights, &InputVector::from_index(idx, n))).collect();
    let mut levels = values.clone();
    levels.sort();
    levels.dedup();

    let mut thetas = levels.clone();
    thetas.push(levels.last().expect("B^n is nonempty") + int(1));
    let members = thetas
        .into_iter()
        .map(|theta| {
            let bits = values.iter().map(|g| *g >= theta).collect();
            let table = TruthTable::new(n, bits)?;
            Ok(FamilyMember { theta, table })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SameWeightFamily { n, weights, levels, members })
}

/// Degree-1 weights shared by two threshold functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharedWeights {
    pub weights: Vec<Rational>,
    pub theta_f: Rational,
    pub theta_g: Rational,
}

impl SharedWeights {
    pub fn ptf_f(&self) -> Ptf {
        Ptf::linear(&self.weights, self.theta_f.clone()).expect("n >= 1")
    }

    pub fn ptf_g(&self) -> Ptf {
        Ptf::linear(&self.weights, self.theta_g.clone()).expect("n >= 1")
    }
}

/// Decides whether `f` and `g` are threshold functions with one common weight vector.
pub fn share_weights(f: &TruthTable, g: &TruthTable) -> Result<Option<SharedWeights>> {
    check_dim(f.n(), g.n())?;
    let n = f.n();
    check_cap("share_weights", LP_MAX_VARS, n)?;
    // variables: w_1..w_n, theta_f, theta_g
    let nvars = n + 2;
    let mut constraints = Vec::with_capacity(2 * f.len());
    for (slot, table) in [(n, f), (n + 1, g)] {
        for idx in 0..table.len() {
            let mut row: Vec<Rational> = (0..n).map(|i| int(((idx >> i) & 1) as i64)).collect();
            row.extend([int(0), int(0)]);
            row[slot] = int(-1);
            constraints.push(if table.at(idx) {
                LinearConstraint::ge(row, int(0))
            } else {
                LinearConstraint::le(row, int(-1))
            });
        }
    }
    let Some(mut sol) = lp::feasible(&constraints, nvars)?.into_witness() else {
        return Ok(None);
    };
    let theta_g = sol.pop().expect("nvars = n + 2");
    let theta_f = sol.pop().expect("nvars = n + 2");
    Ok(Some(SharedWeights { weights: sol, theta_f, theta_g }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    fn v(s: &str) -> InputVector {
        s.parse().unwrap()
    }

    fn xor2_ptf() -> Ptf {
        let coeffs =
            [(Monomial::var(1), int(1)), (Monomial::var(2), int(1)), (Monomial::new(vec![1, 2]).unwrap(), int(-2))]
                .into_iter()
                .collect();
        Ptf::new(2, coeffs, int(1)).unwrap()
    }

    #[test]
    fn eval_g_examples() {
        let p = xor2_ptf();
        assert_eq!(p.eval_g(&v("11")).unwrap(), int(0));
        assert_eq!(p.eval_g(&v("00")).unwrap(), int(0));
        let q = Ptf::linear_int(&[1, 0], 0).unwrap();
        assert_eq!(q.eval_g(&v("10")).unwrap(), int(1));
        assert!(q.eval_g(&v("1")).is_err());
    }

    #[test]
    fn eval_examples() {
        let and2 = Ptf::linear_int(&[1, 1], 2).unwrap();
        assert!(and2.eval(&v("11")).unwrap());
        assert!(!and2.eval(&v("10")).unwrap());
        assert!(!xor2_ptf().eval(&v("11")).unwrap());
    }

    #[test]
    fn truth_table_examples() {
        assert_eq!(xor2_ptf().truth_table(), t("0110"));
        assert_eq!(Ptf::new(2, WeightMap::new(), int(0)).unwrap().truth_table(), t("1111"));
        assert_eq!(Ptf::new(2, WeightMap::new(), int(1)).unwrap().truth_table(), t("0000"));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = Ptf::linear_int(&[0, 3, 0], 1).unwrap();
        assert_eq!(p.coeffs().len(), 1);
        assert_eq!(p.order(), 1);
        assert_eq!(Ptf::linear_int(&[0, 0], 1).unwrap().order(), 0);
    }

    #[test]
    fn out_of_range_monomial_rejected() {
        let coeffs = [(Monomial::var(3), int(1))].into_iter().collect();
        assert_eq!(Ptf::new(2, coeffs, int(0)), Err(Error::IndexOutOfRange { index: 3, n: 2 }));
    }

    #[test]
    fn monomial_enumeration() {
        let all: Vec<String> = Monomial::all_up_to(3, 3).iter().map(|m| m.to_string()).collect();
        assert_eq!(all, ["1", "2", "3", "1+2", "1+3", "2+3", "1+2+3"]);
        assert_eq!(Monomial::all_up_to(4, 2).len(), 4 + 6);
        assert!(Monomial::all_up_to(3, 0).is_empty());
        assert_eq!("2+1".parse::<Monomial>().unwrap().vars(), &[1, 2]);
        assert!("1+1".parse::<Monomial>().is_err());
        assert!("0".parse::<Monomial>().is_err());
    }

    #[test]
    fn realize_examples() {
        let and2 = realize_at_degree(&t("0001"), 1).unwrap().unwrap();
        assert_eq!(and2.truth_table(), t("0001"));
        assert!(realize_at_degree(&t("0110"), 1).unwrap().is_none());
        let xor2 = realize_at_degree(&t("0110"), 2).unwrap().unwrap();
        assert_eq!(xor2.truth_table(), t("0110"));
        assert!(realize_at_degree(&t("0110"), 3).is_err());
        let big = TruthTable::constant(11, false).unwrap();
        assert!(matches!(realize_at_degree(&big, 1), Err(Error::TooManyVariables { .. })));
    }

    #[test]
    fn order_examples() {
        assert_eq!(order(&t("0000")).unwrap(), 0);
        assert_eq!(order(&t("1111")).unwrap(), 0);
        assert_eq!(order(&t("0001")).unwrap(), 1);
        assert_eq!(order(&TruthTable::parity(3).unwrap()).unwrap(), 3);
    }

    #[test]
    fn is_threshold_examples() {
        assert!(is_threshold(&t("0111")).unwrap().is_some());
        assert!(is_threshold(&t("0110")).unwrap().is_none());
        for idx in 0..8 {
            let y = InputVector::from_index(idx, 3);
            let f = TruthTable::single_minterm(&y).unwrap();
            assert!(is_threshold(&f).unwrap().is_some());
            assert_eq!(Ptf::single_minterm(&y).truth_table(), f);
        }
    }

    #[test]
    fn family_of_unit_weights() {
        let w = linear_weights(&[int(1), int(1)]);
        let fam = same_weight_family(&w, 2).unwrap();
        assert_eq!(fam.levels, vec![int(0), int(1), int(2)]);
        let tables: Vec<TruthTable> = fam.members.iter().map(|m| m.table.clone()).collect();
        assert_eq!(tables, vec![t("1111"), t("0111"), t("0001"), t("0000")]);
        let thetas: Vec<Rational> = fam.members.iter().map(|m| m.theta.clone()).collect();
        assert_eq!(thetas, vec![int(0), int(1), int(2), int(3)]);
    }

    #[test]
    fn family_of_zero_weights() {
        let fam = same_weight_family(&WeightMap::new(), 3).unwrap();
        let tables: Vec<TruthTable> = fam.members.iter().map(|m| m.table.clone()).collect();
        assert_eq!(tables, vec![TruthTable::constant(3, true).unwrap(), TruthTable::constant(3, false).unwrap()]);
    }

    #[test]
    fn share_weights_examples() {
        let sw = share_weights(&t("0111"), &t("0001")).unwrap().unwrap();
        assert_eq!(sw.ptf_f().truth_table(), t("0111"));
        assert_eq!(sw.ptf_g().truth_table(), t("0001"));
        assert!(share_weights(&t("0111"), &t("0111")).unwrap().is_some());
        // x_1 and x_2 cannot share weights
        assert!(share_weights(&t("0101"), &t("0011")).unwrap().is_none());
        assert!(share_weights(&t("0101"), &t("01")).is_err());
    }
}
