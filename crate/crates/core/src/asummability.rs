//! Summability certificates and bounded asummability testing.
//!
//! A certificate of size `k` is a multiset of `k` true vectors and a multiset
//! of `k` false vectors with equal componentwise sums. A threshold function
//! admits none: summing `w . X >= theta` over the true side and
//! `w . X < theta` over the false side gives a strict inequality between equal
//! quantities.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::ptf;
use crate::table::{InputVector, TruthTable};

/// Largest `n` for which certificate search is offered.
pub const SEARCH_MAX_VARS: usize = 6;

/// Largest `n` for the LP-versus-certificate cross-check.
pub const CROSS_CHECK_MAX_VARS: usize = 4;

const MAX_BOUND: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummabilityCertificate {
    pub k: usize,
    /// True vectors with repetition, ascending by input index.
    pub true_vectors: Vec<InputVector>,
    /// False vectors with repetition, ascending by input index.
    pub false_vectors: Vec<InputVector>,
}

impl SummabilityCertificate {
    /// Componentwise sum of the true side.
    pub fn sum(&self) -> Vec<usize> {
        column_sums(&self.true_vectors)
    }

    /// Re-checks sizes, equal sums, and membership against `f`.
    pub fn verify(&self, f: &TruthTable) -> bool {
        let dims_ok = self.true_vectors.iter().chain(&self.false_vectors).all(|x| x.dim() == f.n());
        dims_ok
            && self.k >= 2
            && self.true_vectors.len() == self.k
            && self.false_vectors.len() == self.k
            && self.true_vectors.iter().all(|x| f.at(x.index()))
            && self.false_vectors.iter().all(|x| !f.at(x.index()))
            && column_sums(&self.true_vectors) == column_sums(&self.false_vectors)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Json {
            k: usize,
            #[serde(rename = "true")]
            true_vectors: Vec<Vec<u8>>,
            #[serde(rename = "false")]
            false_vectors: Vec<Vec<u8>>,
        }
        serde_json::to_value(Json {
            k: self.k,
            true_vectors: self.true_vectors.iter().map(InputVector::to_u8s).collect(),
            false_vectors: self.false_vectors.iter().map(InputVector::to_u8s).collect(),
        })
        .expect("certificate serializes")
    }
}

fn column_sums(vs: &[InputVector]) -> Vec<usize> {
    let n = vs.first().map_or(0, InputVector::dim);
    let mut sums = vec![0; n];
    for v in vs {
        for (s, &b) in sums.iter_mut().zip(v.bits()) {
            *s += usize::from(b);
        }
    }
    sums
}

/// The smallest-`k` certificate with `k <= m`, lexicographically first among
/// those (true side compared first, then false side, both as ascending index lists).
pub fn find_certificate(f: &TruthTable, m: usize) -> Result<Option<SummabilityCertificate>> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("asummability bound m must be >= 2, got {m}")));
    }
    if m >= MAX_BOUND {
        return Err(Error::InvalidArgument(format!("asummability bound m = {m} is too large")));
    }
    let n = f.n();
    check_cap("find_certificate", SEARCH_MAX_VARS, n)?;

    let trues: Vec<usize> = f.indices_where(true).collect();
    let falses: Vec<usize> = f.indices_where(false).collect();
    if trues.is_empty() || falses.is_empty() {
        return Ok(None);
    }

    for k in 2..=m {
        // Coordinates of a k-fold sum stay below k + 1, so base-(k+1) packing is collision free.
        let base = (k + 1) as u128;
        let pack = |idx: usize| -> u128 { (0..n).filter(|&i| (idx >> i) & 1 == 1).map(|i| base.pow(i as u32)).sum() };
        let packed_true: Vec<u128> = trues.iter().map(|&i| pack(i)).collect();
        let packed_false: Vec<u128> = falses.iter().map(|&i| pack(i)).collect();

        // Multisets come out in lexicographic order, so the first one stored per sum is the least.
        let mut by_sum: HashMap<u128, Vec<usize>> = HashMap::new();
        for_each_multiset(trues.len(), k, &packed_true, &mut |picks, sum| {
            by_sum.entry(sum).or_insert_with(|| picks.to_vec());
        });

        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        let mut seen_false: HashMap<u128, ()> = HashMap::new();
        for_each_multiset(falses.len(), k, &packed_false, &mut |picks, sum| {
            if let Some(tp) = by_sum.get(&sum) {
                if seen_false.insert(sum, ()).is_none() {
                    let candidate = (tp.clone(), picks.to_vec());
                    if best.as_ref().is_none_or(|b| candidate < *b) {
                        best = Some(candidate);
                    }
                }
            }
        });

        if let Some((tp, fp)) = best {
            let to_vectors =
                |picks: &[usize], pool: &[usize]| picks.iter().map(|&p| InputVector::from_index(pool[p], n)).collect();
            let cert = SummabilityCertificate {
                k,
                true_vectors: to_vectors(&tp, &trues),
                false_vectors: to_vectors(&fp, &falses),
            };
            debug_assert!(cert.verify(f));
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Visits every nondecreasing `k`-sequence over `0..pool` in lexicographic
/// order with the running sum of `weights`.
fn for_each_multiset(pool: usize, k: usize, weights: &[u128], visit: &mut impl FnMut(&[usize], u128)) {
    fn rec(
        start: usize,
        pool: usize,
        k: usize,
        weights: &[u128],
        picks: &mut Vec<usize>,
        sum: u128,
        visit: &mut impl FnMut(&[usize], u128),
    ) {
        if picks.len() == k {
            visit(picks, sum);
            return;
        }
        for p in start..pool {
            picks.push(p);
            rec(p, pool, k, weights, picks, sum + weights[p], visit);
            picks.pop();
        }
    }
    let mut picks = Vec::with_capacity(k);
    rec(0, pool, k, weights, &mut picks, 0, visit);
}

/// True iff no certificate of size `2..=m` exists.
pub fn is_m_asummable(f: &TruthTable, m: usize) -> Result<bool> {
    Ok(find_certificate(f, m)?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossCheckStatus {
    /// Threshold with no certificate, or non-threshold with a certificate.
    Consistent,
    /// Non-threshold, but no certificate was found up to the bound.
    Inconclusive,
    /// Threshold yet a certificate exists: impossible unless a component is broken.
    Inconsistent,
}

/// LP classification next to the bounded certificate search for one function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub m_max: usize,
    pub lp_threshold: bool,
    pub certificate: Option<SummabilityCertificate>,
    pub consistent: bool,
    pub inconclusive: bool,
}

impl ConsistencyReport {
    pub fn status(&self) -> CrossCheckStatus {
        if !self.consistent {
            CrossCheckStatus::Inconsistent
        } else if self.inconclusive {
            CrossCheckStatus::Inconclusive
        } else {
            CrossCheckStatus::Consistent
        }
    }
}

/// Cross-checks the LP threshold decision against bounded certificate search.
pub fn check_asummability_theorem(f: &TruthTable, m_max: usize) -> Result<ConsistencyReport> {
    check_cap("check_asummability_theorem", CROSS_CHECK_MAX_VARS, f.n())?;
    let lp_threshold = ptf::is_threshold(f)?.is_some();
    let certificate = find_certificate(f, m_max)?;
    let consistent = !(lp_threshold && certificate.is_some());
    let inconclusive = !lp_threshold && certificate.is_none();
    Ok(ConsistencyReport { m_max, lp_threshold, certificate, consistent, inconclusive })
}
