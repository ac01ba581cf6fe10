//! Line-oriented text form for PTFs and weight maps.
//!
//! ```text
//! # XOR2 as a degree-2 PTF
//! n: 2
//! 1: 1
//! 2: 1
//! 1+2: -2
//! theta: 1
//! ```
//!
//! Each coefficient line is `<monomial>: <rational>` where the monomial is a
//! `+`-joined list of 1-based variable indices and the rational is `p` or
//! `p/q`. `n:` is optional; `theta:` is required for a PTF and ignored for a
//! bare weight map. Blank lines and `#` comments are skipped.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp::Rational;
use crate::ptf::{Monomial, Ptf, WeightMap};

/// `p` for integers, `p/q` otherwise, always in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Contents of a PTF or weight-map text file before validation against `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParsedWeights {
    pub n: Option<usize>,
    pub weights: WeightMap,
    pub theta: Option<Rational>,
}

impl ParsedWeights {
    /// Declared `n`, falling back to `n_hint`, then to the largest index used.
    pub fn resolve_n(&self, n_hint: Option<usize>) -> Result<usize> {
        match (self.n, n_hint) {
            (Some(a), Some(b)) if a != b => {
                Err(Error::Parse(format!("file declares n = {a} but {b} variables are expected")))
            }
            (Some(a), _) | (None, Some(a)) => Ok(a),
            (None, None) => self
                .weights
                .keys()
                .map(Monomial::max_var)
                .max()
                .ok_or_else(|| Error::Parse("cannot infer n: no `n:` line and no coefficients".into())),
        }
    }
}

pub fn parse_weights_text(s: &str) -> Result<ParsedWeights> {
    let mut out = ParsedWeights::default();
    for (lineno, raw) in s.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("line {}: expected `key: value`, got {raw:?}", lineno + 1)))?;
        let key = key.trim();
        let ctx = |e: Error| Error::Parse(format!("line {}: {}", lineno + 1, strip_prefix(&e)));
        match key {
            "n" => {
                let n = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: invalid n {value:?}", lineno + 1)))?;
                out.n = Some(n);
            }
            "theta" => out.theta = Some(parse_rational(value).map_err(ctx)?),
            _ => {
                let m: Monomial = key.parse().map_err(ctx)?;
                let a = parse_rational(value).map_err(ctx)?;
                if out.weights.insert(m.clone(), a).is_some() {
                    return Err(Error::Parse(format!("line {}: duplicate monomial {m}", lineno + 1)));
                }
            }
        }
    }
    Ok(out)
}

/// Parses a PTF; `n_hint` supplies the variable count when the context fixes it.
pub fn parse_ptf(s: &str, n_hint: Option<usize>) -> Result<Ptf> {
    let parsed = parse_weights_text(s)?;
    let n = parsed.resolve_n(n_hint)?;
    let theta = parsed.theta.ok_or_else(|| Error::Parse("missing `theta:` line".into()))?;
    Ptf::new(n, parsed.weights, theta).map_err(|e| Error::Parse(e.to_string()))
}

pub fn format_ptf(p: &Ptf) -> String {
    let mut out = format!("n: {}\n", p.n());
    for (m, a) in p.coeffs() {
        out.push_str(&format!("{m}: {}\n", format_rational(a)));
    }
    out.push_str(&format!("theta: {}\n", format_rational(p.theta())));
    out
}

/// JSON shape of a PTF: `{"n": 2, "coeffs": [["1+2", "-2"], ...], "theta": "1"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PtfJson {
    pub n: usize,
    pub coeffs: Vec<(String, String)>,
    pub theta: String,
}

impl From<&Ptf> for PtfJson {
    fn from(p: &Ptf) -> Self {
        Self {
            n: p.n(),
            coeffs: p.coeffs().iter().map(|(m, a)| (m.to_string(), format_rational(a))).collect(),
            theta: format_rational(p.theta()),
        }
    }
}

impl TryFrom<&PtfJson> for Ptf {
    type Error = Error;

    fn try_from(j: &PtfJson) -> Result<Ptf> {
        Ptf::new(j.n, parse_weight_pairs(&j.coeffs)?, parse_rational(&j.theta)?)
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn ptf_to_json(p: &Ptf) -> serde_json::Value {
    serde_json::to_value(PtfJson::from(p)).expect("PTF serializes")
}

/// Monomial/coefficient string pairs to a weight map, rejecting duplicates.
pub fn parse_weight_pairs<'a, I>(pairs: I) -> Result<WeightMap>
where
    I: IntoIterator<Item = &'a (String, String)>,
{
    let mut weights = WeightMap::new();
    for (m, a) in pairs {
        let m: Monomial = m.parse()?;
        if weights.insert(m.clone(), parse_rational(a)?).is_some() {
            return Err(Error::Parse(format!("duplicate monomial {m}")));
        }
    }
    Ok(weights)
}

fn strip_prefix(e: &Error) -> String {
    match e {
        Error::Parse(msg) => msg.clone(),
        other => other.to_string(),
    }
}
