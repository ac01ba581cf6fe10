//! High-order vectors and order reduction.
//!
//! `Y` is a high-order vector of `g` when flipping `g` at `Y` changes its
//! minimal PTF order. When `g` has order at least 2 and the flip lands in the
//! threshold class, `g xor flip_at(g, Y)` is the single-minterm function at
//! `Y`, which is always a threshold function.

use serde_json::json;

use crate::error::{check_cap, check_dim, Error, Result};
use crate::ptf::{self, Ptf};
use crate::table::{InputVector, TruthTable};

/// Largest `n` accepted here; each query runs two order computations.
pub const HOV_MAX_VARS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighOrderVectorResult {
    pub y: InputVector,
    /// Order of the original function.
    pub order_before: usize,
    /// Order after flipping at `y`.
    pub order_after: usize,
}

impl HighOrderVectorResult {
    pub fn to_json(&self) -> serde_json::Value {
        json!({"Y": self.y.to_u8s(), "r": self.order_before, "s": self.order_after})
    }
}

pub fn is_high_order_vector(g: &TruthTable, y: &InputVector) -> Result<Option<HighOrderVectorResult>> {
    check_dim(g.n(), y.dim())?;
    check_cap("is_high_order_vector", HOV_MAX_VARS, g.n())?;
    let r = ptf::order(g)?;
    classify(g, y, r)
}

fn classify(g: &TruthTable, y: &InputVector, r: usize) -> Result<Option<HighOrderVectorResult>> {
    let s = ptf::order(&g.flip_at(y)?)?;
    Ok((s != r).then(|| HighOrderVectorResult { y: y.clone(), order_before: r, order_after: s }))
}

/// Every high-order vector of `g`, ascending by input index.
pub fn high_order_vectors(g: &TruthTable) -> Result<Vec<HighOrderVectorResult>> {
    check_cap("high_order_vectors", HOV_MAX_VARS, g.n())?;
    let r = ptf::order(g)?;
    (0..g.len()).map(|idx| classify(g, &InputVector::from_index(idx, g.n()), r)).filter_map(Result::transpose).collect()
}

/// Output of [`order_reduce`]: `f2 = flip_at(g, y)` and `f1 = g xor f2`, both with degree-1 witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReduction {
    pub g: TruthTable,
    pub y: InputVector,
    pub order_g: usize,
    pub f2: TruthTable,
    pub f2_witness: Ptf,
    pub f1: TruthTable,
    pub f1_witness: Ptf,
}

/// Splits `g` (order >= 2) as `f1 xor f2` with both parts threshold functions.
///
/// `y` must be a high-order vector whose flip has order at most 1; `f1` is then
/// true only at `y` and gets the witness `w_i = 2 y_i - 1`, `theta = |y|`.
pub fn order_reduce(g: &TruthTable, y: &InputVector) -> Result<OrderReduction> {
    check_dim(g.n(), y.dim())?;
    check_cap("order_reduce", HOV_MAX_VARS, g.n())?;
    let order_g = ptf::order(g)?;
    if order_g < 2 {
        return Err(Error::Precondition(format!("order(g) = {order_g}, need at least 2")));
    }
    let f2 = g.flip_at(y)?;
    let (order_f2, f2_witness) = ptf::minimal_realization(&f2)?;
    if order_f2 > 1 {
        return Err(Error::Precondition(format!(
            "flipping g (order {order_g}) at {y} gives order {order_f2}, need at most 1"
        )));
    }
    let f1 = g.xor(&f2)?;
    let minterms = f1.minterms();
    assert_eq!(minterms, std::slice::from_ref(y), "g xor flip_at(g, y) must be the single minterm at y");

    let f1_witness = Ptf::single_minterm(y);
    assert_eq!(f1_witness.truth_table(), f1, "single-minterm witness failed table check");
    assert_eq!(f2_witness.truth_table(), f2);

    Ok(OrderReduction { g: g.clone(), y: y.clone(), order_g, f2, f2_witness, f1, f1_witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::int;

    fn t(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    fn v(s: &str) -> InputVector {
        s.parse().unwrap()
    }

    #[test]
    fn xor2_vectors() {
        let r = is_high_order_vector(&t("0110"), &v("11")).unwrap().unwrap();
        assert_eq!((r.order_before, r.order_after), (2, 1));
        let r = is_high_order_vector(&t("0110"), &v("10")).unwrap().unwrap();
        assert_eq!((r.order_before, r.order_after), (2, 1));
        let all = high_order_vectors(&t("0110")).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|r| r.order_after == 1));
        assert_eq!(all[1].to_json(), json!({"Y": [1, 0], "r": 2, "s": 1}));
    }

    #[test]
    fn constants() {
        let r = is_high_order_vector(&t("0000"), &v("11")).unwrap().unwrap();
        assert_eq!((r.order_before, r.order_after), (0, 1));
        let all = high_order_vectors(&t("11")).unwrap();
        assert_eq!(all.iter().map(|r| r.y.index()).collect::<Vec<_>>(), vec![0, 1]);
        assert!(all.iter().all(|r| r.order_before == 0 && r.order_after == 1));
    }

    #[test]
    fn and2_vectors_leave_the_threshold_class() {
        for r in high_order_vectors(&t("0001")).unwrap() {
            assert_eq!(r.order_before, 1);
            assert_ne!(r.order_after, 1);
        }
        // flipping (1,1) gives const0
        let r = is_high_order_vector(&t("0001"), &v("11")).unwrap().unwrap();
        assert_eq!(r.order_after, 0);
        // flipping (1,0) gives x_1, still order 1
        assert!(is_high_order_vector(&t("0001"), &v("10")).unwrap().is_none());
        // flipping (0,0) gives XNOR
        let r = is_high_order_vector(&t("0001"), &v("00")).unwrap().unwrap();
        assert_eq!(r.order_after, 2);
        assert!(is_high_order_vector(&t("0001"), &v("110")).is_err());
    }

    #[test]
    fn reduce_xor2_at_11() {
        let red = order_reduce(&t("0110"), &v("11")).unwrap();
        assert_eq!(red.f2, t("0111"));
        assert_eq!(red.f1, t("0001"));
        assert_eq!(red.f1.minterms(), vec![v("11")]);
        assert_eq!(red.f2_witness.truth_table(), red.f2);
    }

    #[test]
    fn reduce_xor2_at_00() {
        let red = order_reduce(&t("0110"), &v("00")).unwrap();
        assert_eq!(red.f2, t("1110"));
        assert_eq!(red.f1, t("1000"));
        assert_eq!(red.f1_witness, Ptf::linear_int(&[-1, -1], 0).unwrap());
        assert_eq!(red.f1_witness.eval_g(&v("00")).unwrap(), int(0));
    }

    #[test]
    fn reduce_xor3_needs_order_check() {
        let xor3 = TruthTable::parity(3).unwrap();
        // XOR3 flipped at (1,1,1) is "exactly one input set", still order 2
        let err = order_reduce(&xor3, &v("111")).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("order 3") && m.contains("gives order")));
    }

    #[test]
    fn reduce_rejects_threshold_g() {
        assert!(matches!(order_reduce(&t("0001"), &v("11")), Err(Error::Precondition(_))));
    }
}
