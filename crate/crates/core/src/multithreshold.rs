//! Multithreshold (XOR-of-thresholds) functions and order extension.
//!
//! A `k`-threshold function is the mod-2 sum of `k` threshold functions. When
//! all members share one weight vector the representation collapses to a
//! sorted threshold list: the output is the parity of how many thresholds
//! `G(X) = w . X` meets, which is 0 below the smallest threshold.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Deserialize;
use serde_json::json;

use crate::error::{check_cap, check_dim, Error, Result};
use crate::lp::{int, Rational};
use crate::ptf::{self, eval_weights, linear_weights, Monomial, Ptf, WeightMap};
use crate::table::{InputVector, TruthTable};
use crate::text::{format_rational, parse_rational, parse_weight_pairs, ptf_to_json, PtfJson};

/// Largest `n` for the exhaustive weight search.
pub const SYNTH_MAX_VARS: usize = 4;
/// Largest per-coordinate magnitude for the exhaustive weight search.
pub const SYNTH_MAX_WEIGHT: i64 = 5;

/// Degree-1 weights with a sorted threshold list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharedWeight {
    n: usize,
    weights: WeightMap,
    thresholds: Vec<Rational>,
}

impl SharedWeight {
    /// Thresholds are sorted on construction; weights must be degree 1.
    pub fn new(n: usize, weights: WeightMap, mut thresholds: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a shared-weight function needs at least one variable".into()));
        }
        let weights = ptf::normalize_weights(n, weights)?;
        if let Some(m) = weights.keys().find(|m| m.degree() > 1) {
            return Err(Error::InvalidArgument(format!("shared weights must be degree 1, found monomial {m}")));
        }
        thresholds.sort();
        Ok(Self { n, weights, thresholds })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &WeightMap {
        &self.weights
    }

    pub fn thresholds(&self) -> &[Rational] {
        &self.thresholds
    }

    pub fn k(&self) -> usize {
        self.thresholds.len()
    }

    /// Dense `(w_1, ..., w_n)`.
    pub fn weight_vector(&self) -> Vec<Rational> {
        let mut w = vec![Rational::zero(); self.n];
        for (m, a) in &self.weights {
            w[m.vars()[0] - 1] = a.clone();
        }
        w
    }

    /// The member threshold functions `[w . X >= theta_j]`.
    pub fn members(&self) -> Vec<Ptf> {
        self.thresholds
            .iter()
            .map(|t| Ptf::new(self.n, self.weights.clone(), t.clone()).expect("validated on construction"))
            .collect()
    }

    pub fn eval(&self, x: &InputVector) -> Result<bool> {
        check_dim(self.n, x.dim())?;
        let g = eval_weights(&self.weights, x);
        Ok(self.thresholds.iter().filter(|t| g >= **t).count() % 2 == 1)
    }

    pub fn truth_table(&self) -> TruthTable {
        TruthTable::from_fn(self.n, |x| self.eval(x).expect("dimension fixed by from_fn"))
            .expect("valid variable count")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let weights: BTreeMap<String, String> =
            self.weights.iter().map(|(m, a)| (m.to_string(), format_rational(a))).collect();
        let thresholds: Vec<String> = self.thresholds.iter().map(format_rational).collect();
        json!({"n": self.n, "weights": weights, "thresholds": thresholds})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Json {
            n: usize,
            weights: BTreeMap<String, String>,
            thresholds: Vec<String>,
        }
        let j: Json = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let pairs: Vec<(String, String)> = j.weights.into_iter().collect();
        let thresholds = j.thresholds.iter().map(|t| parse_rational(t)).collect::<Result<Vec<_>>>()?;
        Self::new(j.n, parse_weight_pairs(&pairs)?, thresholds).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultithresholdRep {
    /// Explicit members of order at most 1, possibly with unrelated weights.
    XorList(Vec<Ptf>),
    SharedWeight(SharedWeight),
}

impl MultithresholdRep {
    pub fn xor_list(members: Vec<Ptf>) -> Result<Self> {
        let Some(first) = members.first() else {
            return Err(Error::InvalidArgument("an XOR list needs at least one member".into()));
        };
        let n = first.n();
        for p in &members {
            check_dim(n, p.n())?;
            if p.order() > 1 {
                return Err(Error::InvalidArgument(format!(
                    "XOR-list members must have order at most 1, found order {}",
                    p.order()
                )));
            }
        }
        Ok(Self::XorList(members))
    }

    pub fn n(&self) -> usize {
        match self {
            Self::XorList(ms) => ms[0].n(),
            Self::SharedWeight(sw) => sw.n(),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            Self::XorList(ms) => ms.len(),
            Self::SharedWeight(sw) => sw.k(),
        }
    }

    pub fn eval(&self, x: &InputVector) -> Result<bool> {
        match self {
            Self::XorList(ms) => eval_xor_list(ms, x),
            Self::SharedWeight(sw) => eval_shared_weight(sw, x),
        }
    }

    pub fn to_truth_table(&self) -> TruthTable {
        match self {
            Self::XorList(ms) => TruthTable::from_fn(ms[0].n(), |x| eval_xor_list(ms, x).expect("members share n"))
                .expect("valid variable count"),
            Self::SharedWeight(sw) => sw.truth_table(),
        }
    }

    /// Shared-weight reps serialize as an object, XOR lists as an array of PTFs.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Self::XorList(ms) => serde_json::Value::Array(ms.iter().map(ptf_to_json).collect()),
            Self::SharedWeight(sw) => sw.to_json(),
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        match v {
            serde_json::Value::Array(_) => {
                let members: Vec<PtfJson> =
                    serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
                let members = members.iter().map(Ptf::try_from).collect::<Result<Vec<_>>>()?;
                Self::xor_list(members).map_err(|e| Error::Parse(e.to_string()))
            }
            _ => Ok(Self::SharedWeight(SharedWeight::from_json(v)?)),
        }
    }
}

/// Parity of the member outputs at `x`.
pub fn eval_xor_list(members: &[Ptf], x: &InputVector) -> Result<bool> {
    members.iter().try_fold(false, |acc, p| Ok(acc ^ p.eval(x)?))
}

/// Parity of `|{j : G(x) >= theta_j}|`.
pub fn eval_shared_weight(rep: &SharedWeight, x: &InputVector) -> Result<bool> {
    rep.eval(x)
}

pub fn to_truth_table(rep: &MultithresholdRep) -> TruthTable {
    rep.to_truth_table()
}

/// Fewest thresholds realizing `f` with the given weights, or `None` when `f`
/// is not constant on some level set of `G`.
///
/// Scanning the distinct levels of `G` upward from output 0, each change of
/// the required output costs one threshold placed at the level where it happens.
pub fn thresholds_for_weights(f: &TruthTable, weights: &WeightMap) -> Result<Option<Vec<Rational>>> {
    let n = f.n();
    let weights = ptf::normalize_weights(n, weights.clone())?;
    let mut points: Vec<(Rational, bool)> =
        (0..f.len()).map(|idx| (eval_weights(&weights, &InputVector::from_index(idx, n)), f.at(idx))).collect();
    points.sort();
    Ok(level_scan(&points))
}

/// `points` sorted by level.
fn level_scan<T: Ord + Clone>(points: &[(T, bool)]) -> Option<Vec<T>> {
    let mut thresholds = Vec::new();
    let mut current = false;
    let mut i = 0;
    while i < points.len() {
        let level = &points[i].0;
        let out = points[i].1;
        let mut j = i;
        while j < points.len() && points[j].0 == *level {
            if points[j].1 != out {
                return None;
            }
            j += 1;
        }
        if out != current {
            thresholds.push(level.clone());
            current = out;
        }
        i = j;
    }
    Some(thresholds)
}

/// `0, 1, -1, 2, -2, ...`: the per-coordinate order used to break ties in synthesis.
fn signed_sweep(bound: i64) -> Vec<i64> {
    let mut out = vec![0];
    for v in 1..=bound {
        out.extend([v, -v]);
    }
    out
}

/// Odometer step with the last digit fastest; false after the final state.
fn advance(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Exhaustive search for a shared-weight representation with integer weights
/// in `[-bound, bound]^n` and at most `k_max` thresholds.
///
/// Returns the representation with the fewest thresholds; ties go to the
/// weight vector that comes first when each coordinate runs through
/// `0, 1, -1, 2, -2, ...` with `x_1` most significant.
pub fn synthesize_shared_weight(f: &TruthTable, k_max: usize, weight_bound: i64) -> Result<Option<SharedWeight>> {
    let n = f.n();
    check_cap("synthesize_shared_weight", SYNTH_MAX_VARS, n)?;
    if !(1..=SYNTH_MAX_WEIGHT).contains(&weight_bound) {
        return Err(Error::InvalidArgument(format!(
            "weight bound must be in 1..={SYNTH_MAX_WEIGHT}, got {weight_bound}"
        )));
    }
    let sweep = signed_sweep(weight_bound);
    let mut digits = vec![0usize; n];
    let mut best: Option<(Vec<i64>, Vec<i64>)> = None;
    let mut points: Vec<(i64, bool)> = Vec::with_capacity(f.len());
    loop {
        let w: Vec<i64> = digits.iter().map(|&d| sweep[d]).collect();
        points.clear();
        points.extend((0..f.len()).map(|idx| {
            let g: i64 = (0..n).filter(|&i| (idx >> i) & 1 == 1).map(|i| w[i]).sum();
            (g, f.at(idx))
        }));
        points.sort_unstable();
        if let Some(ts) = level_scan(&points) {
            let improves = best.as_ref().is_none_or(|(_, b)| ts.len() < b.len());
            if ts.len() <= k_max && improves {
                let done = ts.is_empty();
                best = Some((w, ts));
                if done {
                    break;
                }
            }
        }
        if !advance(&mut digits, sweep.len()) {
            break;
        }
    }

    let Some((w, ts)) = best else {
        return Ok(None);
    };
    let w: Vec<Rational> = w.into_iter().map(int).collect();
    let rep = SharedWeight::new(n, linear_weights(&w), ts.into_iter().map(int).collect())?;
    assert_eq!(rep.truth_table(), *f, "synthesized representation failed table check");
    Ok(Some(rep))
}

/// The `(n+1)`-variable function built from a shared-weight pair, with its two-threshold witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderExtensionResult {
    pub f_n: TruthTable,
    /// `f_n` with the degenerate variable `x_{n+1}` appended.
    pub g_next: TruthTable,
    /// `!x_{n+1} & f1 | x_{n+1}`.
    pub f1_next: TruthTable,
    /// `!x_{n+1} & f2 | x_{n+1}`.
    pub f2_next: TruthTable,
    /// `g_next ^ f1_next ^ f2_next`, which equals `x_{n+1} & f_n`.
    pub f_next: TruthTable,
    /// Weights `(w, W)` and thresholds `theta_i + W`.
    pub witness: SharedWeight,
    /// The lift `W = max_X(w . X) - min(theta_1, theta_2) + 1`.
    pub lift: Rational,
}

impl OrderExtensionResult {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "f_n": self.f_n.to_string(),
            "g_next": self.g_next.to_string(),
            "f1_next": self.f1_next.to_string(),
            "f2_next": self.f2_next.to_string(),
            "f_next": self.f_next.to_string(),
            "lift": format_rational(&self.lift),
            "witness": self.witness.to_json(),
        })
    }
}

/// Appends `x_{n+1}` to `f_n = f1 xor f2` (with `f1`, `f2` sharing degree-1
/// weights) and returns the resulting function with an explicit shared-weight
/// two-threshold witness, verified by full table comparison.
pub fn extend_order(f_n: &TruthTable, f1: &Ptf, f2: &Ptf) -> Result<OrderExtensionResult> {
    let n = f_n.n();
    if n < 2 {
        return Err(Error::Precondition(format!("order extension needs n >= 2, got n = {n}")));
    }
    check_dim(n, f1.n())?;
    check_dim(n, f2.n())?;
    for (name, p) in [("f1", f1), ("f2", f2)] {
        if p.order() > 1 {
            return Err(Error::Precondition(format!("{name} has order {}, need at most 1", p.order())));
        }
    }
    if f1.coeffs() != f2.coeffs() {
        return Err(Error::Precondition("f1 and f2 do not share the same weights".into()));
    }
    let t1 = f1.truth_table();
    let t2 = f2.truth_table();
    if t1.xor(&t2)? != *f_n {
        return Err(Error::Precondition(format!("f1 xor f2 = {} differs from f_n = {f_n}", t1.xor(&t2)?)));
    }

    let const1 = TruthTable::constant(n, true)?;
    let g_next = TruthTable::compose_by_variable(f_n, f_n)?;
    let f1_next = TruthTable::compose_by_variable(&t1, &const1)?;
    let f2_next = TruthTable::compose_by_variable(&t2, &const1)?;
    let f_next = g_next.xor(&f1_next)?.xor(&f2_next)?;

    let expected = TruthTable::compose_by_variable(&TruthTable::constant(n, false)?, f_n)?;
    assert_eq!(f_next, expected, "f_next must be x_(n+1) & f_n");
    assert!(!f_next.cofactor(n + 1, false)?.bits().iter().any(|&b| b));
    assert_eq!(f_next.cofactor(n + 1, true)?, *f_n);

    let w = f1.linear_weight_vector().expect("order checked above");
    let max_g: Rational = w.iter().filter(|a| a.is_positive()).sum();
    let min_theta = std::cmp::min(f1.theta(), f2.theta()).clone();
    let lift = max_g - min_theta + int(1);

    let mut weights = f1.coeffs().clone();
    weights.insert(Monomial::var(n + 1), lift.clone());
    let thresholds = vec![f1.theta() + &lift, f2.theta() + &lift];
    let witness = SharedWeight::new(n + 1, weights, thresholds)?;
    assert_eq!(witness.truth_table(), f_next, "two-threshold witness failed table check");

    Ok(OrderExtensionResult { f_n: f_n.clone(), g_next, f1_next, f2_next, f_next, witness, lift })
}

/// Table-level entry point: finds shared weights for `t1`, `t2` by LP first.
pub fn extend_order_from_tables(f_n: &TruthTable, t1: &TruthTable, t2: &TruthTable) -> Result<OrderExtensionResult> {
    let shared = ptf::share_weights(t1, t2)?.ok_or_else(|| {
        Error::Precondition("the two functions are not threshold functions with shared weights".into())
    })?;
    extend_order(f_n, &shared.ptf_f(), &shared.ptf_g())
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

    fn sw(w: &[i64], ts: &[i64]) -> SharedWeight {
        let w: Vec<Rational> = w.iter().map(|&a| int(a)).collect();
        SharedWeight::new(w.len(), linear_weights(&w), ts.iter().map(|&a| int(a)).collect()).unwrap()
    }

    #[test]
    fn xor_list_eval() {
        let or2 = Ptf::linear_int(&[1, 1], 1).unwrap();
        let and2 = Ptf::linear_int(&[1, 1], 2).unwrap();
        assert!(eval_xor_list(&[or2.clone(), and2.clone()], &v("10")).unwrap());
        for idx in 0..4 {
            let x = InputVector::from_index(idx, 2);
            assert_eq!(eval_xor_list(std::slice::from_ref(&or2), &x).unwrap(), or2.eval(&x).unwrap());
            assert!(!eval_xor_list(&[and2.clone(), and2.clone()], &x).unwrap());
        }
        let rep = MultithresholdRep::xor_list(vec![or2, and2]).unwrap();
        assert_eq!(to_truth_table(&rep), t("0110"));
        assert!(eval_xor_list(&[Ptf::linear_int(&[1], 1).unwrap()], &v("10")).is_err());
    }

    #[test]
    fn shared_weight_eval() {
        let rep = sw(&[1, 1], &[1, 2]);
        assert!(eval_shared_weight(&rep, &v("10")).unwrap());
        assert!(!eval_shared_weight(&rep, &v("11")).unwrap());
        assert_eq!(sw(&[1, 1], &[]).truth_table(), t("0000"));
        assert_eq!(to_truth_table(&MultithresholdRep::SharedWeight(rep)), t("0110"));
        // one threshold at or below min G is always met
        assert_eq!(sw(&[2, -3], &[-4]).truth_table(), t("1111"));
    }

    #[test]
    fn rep_validation() {
        assert!(MultithresholdRep::xor_list(vec![]).is_err());
        let xor2 = ptf::realize_at_degree(&t("0110"), 2).unwrap().unwrap();
        assert!(MultithresholdRep::xor_list(vec![xor2]).is_err());
        let quad = [(Monomial::new(vec![1, 2]).unwrap(), int(1))].into_iter().collect();
        assert!(SharedWeight::new(2, quad, vec![int(1)]).is_err());
        assert_eq!(sw(&[1, 1], &[2, 1]).thresholds(), &[int(1), int(2)]);
    }

    #[test]
    fn json_round_trip() {
        let rep = MultithresholdRep::SharedWeight(sw(&[1, 1], &[1, 2]));
        let j = rep.to_json();
        assert_eq!(j, json!({"n": 2, "weights": {"1": "1", "2": "1"}, "thresholds": ["1", "2"]}));
        assert_eq!(MultithresholdRep::from_json(&j).unwrap(), rep);
        let list = MultithresholdRep::xor_list(vec![Ptf::linear_int(&[1, 1], 1).unwrap()]).unwrap();
        assert_eq!(MultithresholdRep::from_json(&list.to_json()).unwrap(), list);
    }

    #[test]
    fn synthesis_examples() {
        assert_eq!(synthesize_shared_weight(&t("0110"), 2, 1).unwrap().unwrap(), sw(&[1, 1], &[1, 2]));
        assert_eq!(synthesize_shared_weight(&t("0001"), 1, 1).unwrap().unwrap(), sw(&[1, 1], &[2]));
        let xor3 = TruthTable::parity(3).unwrap();
        assert_eq!(synthesize_shared_weight(&xor3, 3, 1).unwrap().unwrap(), sw(&[1, 1, 1], &[1, 2, 3]));
        assert!(synthesize_shared_weight(&xor3, 2, 1).unwrap().is_none());
        assert_eq!(synthesize_shared_weight(&t("0000"), 0, 1).unwrap().unwrap().k(), 0);
        assert_eq!(synthesize_shared_weight(&t("1111"), 1, 1).unwrap().unwrap(), sw(&[0, 0], &[0]));
        assert!(synthesize_shared_weight(&t("0110"), 2, 6).is_err());
        assert!(synthesize_shared_weight(&TruthTable::constant(5, false).unwrap(), 2, 1).is_err());
    }

    #[test]
    fn level_scan_counts_switches() {
        assert_eq!(level_scan(&[(0, false), (1, true), (1, true), (2, false)]), Some(vec![1, 2]));
        assert_eq!(level_scan(&[(0, true), (1, true)]), Some(vec![0]));
        assert_eq!(level_scan(&[(0, true), (0, false)]), None);
        assert_eq!(signed_sweep(2), vec![0, 1, -1, 2, -2]);
    }

    #[test]
    fn thresholds_for_rational_weights() {
        let w = linear_weights(&[Rational::new(1.into(), 2.into()), int(1)]);
        // levels 0, 1/2, 1, 3/2 carry outputs 0, 1, 1, 0
        let ts = thresholds_for_weights(&t("0110"), &w).unwrap().unwrap();
        assert_eq!(ts, vec![Rational::new(1.into(), 2.into()), Rational::new(3.into(), 2.into())]);
        // with unit weights, (1,0) and (0,1) share a level
        let unit = linear_weights(&[int(1), int(1)]);
        assert_eq!(thresholds_for_weights(&t("0001"), &unit).unwrap(), Some(vec![int(2)]));
        assert_eq!(thresholds_for_weights(&t("0100"), &unit).unwrap(), None);
    }

    #[test]
    fn extend_xor2() {
        let f1 = Ptf::linear_int(&[1, 1], 1).unwrap();
        let f2 = Ptf::linear_int(&[1, 1], 2).unwrap();
        let res = extend_order(&t("0110"), &f1, &f2).unwrap();
        // W = max(w.X) - min(theta) + 1 = 2 - 1 + 1
        assert_eq!(res.lift, int(2));
        assert_eq!(res.witness, sw(&[1, 1, 2], &[3, 4]));
        assert_eq!(res.f_next, TruthTable::from_fn(3, |x| x.get(3) && (x.get(1) ^ x.get(2))).unwrap());
        assert_eq!(res.f_next.cofactor(3, true).unwrap(), t("0110"));
        assert_eq!(res.f_next.cofactor(3, false).unwrap(), t("0000"));
        assert_eq!(res.g_next, TruthTable::compose_by_variable(&t("0110"), &t("0110")).unwrap());
    }

    #[test]
    fn extend_preconditions() {
        let f1 = Ptf::linear_int(&[1, 1], 1).unwrap();
        let f2 = Ptf::linear_int(&[1, 1], 2).unwrap();
        let other = Ptf::linear_int(&[2, 1], 2).unwrap();
        let err = extend_order(&t("0110"), &f1, &other).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("same weights")));
        let err = extend_order(&t("0111"), &f1, &f2).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("differs")));
        let xor2 = ptf::realize_at_degree(&t("0110"), 2).unwrap().unwrap();
        let err = extend_order(&t("0110"), &xor2, &f2).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("order 2")));
        let g1 = Ptf::linear_int(&[1], 1).unwrap();
        let err = extend_order(&t("01"), &g1, &Ptf::linear_int(&[1], 5).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("n >= 2")));
        assert!(extend_order(&t("0110"), &g1, &f2).is_err());
    }

    #[test]
    fn extend_from_tables() {
        let res = extend_order_from_tables(&t("0110"), &t("0111"), &t("0001")).unwrap();
        assert_eq!(res.witness.truth_table(), res.f_next);
        assert!(matches!(extend_order_from_tables(&t("0110"), &t("0101"), &t("0011")), Err(Error::Precondition(_))));
    }
}
