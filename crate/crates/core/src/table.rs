//! Truth tables over `B^n` and the pointwise operators built on them.
//!
//! Inputs are indexed by `idx(X) = sum_i x_i * 2^(i-1)`, so `x_1` is the least
//! significant bit. The text form lists `f` at index 0 first.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_dim, Error, Result};

/// Largest variable count a [`TruthTable`] may carry.
pub const MAX_VARS: usize = 16;

/// A point `X = (x_1, ..., x_n)` of `B^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InputVector {
    bits: Vec<bool>,
}

impl InputVector {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidArgument("input vector must have at least one entry".into()));
        }
        Ok(Self { bits })
    }

    /// The vector whose index is `idx` among `n`-variable inputs.
    pub fn from_index(idx: usize, n: usize) -> Self {
        debug_assert!(n >= 1 && (n >= usize::BITS as usize || idx >> n == 0));
        Self { bits: (0..n).map(|i| (idx >> i) & 1 == 1).collect() }
    }

    pub fn ones(n: usize) -> Self {
        Self { bits: vec![true; n] }
    }

    pub fn zeros(n: usize) -> Self {
        Self { bits: vec![false; n] }
    }

    pub fn dim(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `x_i` with 1-based `i`.
    pub fn get(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn index(&self) -> usize {
        self.bits.iter().enumerate().fold(0, |acc, (i, &b)| acc | (usize::from(b) << i))
    }

    pub fn popcount(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Bits as 0/1 integers, `x_1` first.
    pub fn to_u8s(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| u8::from(b)).collect()
    }
}

impl fmt::Display for InputVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for InputVector {
    type Err = Error;

    /// Parses `x_1` first: `"10"` is `x_1 = 1, x_2 = 0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("invalid bit {c:?} in input vector {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.is_empty() {
            return Err(Error::Parse("empty input vector".into()));
        }
        Ok(Self { bits })
    }
}

/// Complete specification of a Boolean function `B^n -> B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    n: usize,
    bits: Vec<bool>,
}

impl TruthTable {
    pub fn new(n: usize, bits: Vec<bool>) -> Result<Self> {
        check_n(n)?;
        if bits.len() != 1 << n {
            return Err(Error::InvalidArgument(format!(
                "a {n}-variable truth table needs {} entries, got {}",
                1usize << n,
                bits.len()
            )));
        }
        Ok(Self { n, bits })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&InputVector) -> bool) -> Result<Self> {
        check_n(n)?;
        let bits = (0..1usize << n).map(|idx| f(&InputVector::from_index(idx, n))).collect();
        Ok(Self { n, bits })
    }

    /// Builds a table from the low `2^n` bits of `word`, bit `idx` giving `f` at index `idx`.
    pub fn from_word(n: usize, word: u64) -> Result<Self> {
        check_n(n)?;
        if n > 6 {
            return Err(Error::TooManyVariables { what: "from_word", max: 6, n });
        }
        Ok(Self { n, bits: (0..1usize << n).map(|idx| (word >> idx) & 1 == 1).collect() })
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n, bits: vec![value; 1 << n] })
    }

    /// `x_1 xor ... xor x_n`.
    pub fn parity(n: usize) -> Result<Self> {
        Self::from_fn(n, |x| x.popcount() % 2 == 1)
    }

    /// The function true exactly at `y`.
    pub fn single_minterm(y: &InputVector) -> Result<Self> {
        let target = y.index();
        Self::from_fn(y.dim(), |x| x.index() == target)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `f` at input index `idx`.
    pub fn at(&self, idx: usize) -> bool {
        self.bits[idx]
    }

    pub fn evaluate(&self, x: &InputVector) -> Result<bool> {
        check_dim(self.n, x.dim())?;
        Ok(self.bits[x.index()])
    }

    pub fn xor(&self, other: &TruthTable) -> Result<TruthTable> {
        check_dim(self.n, other.n)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect();
        Ok(Self { n: self.n, bits })
    }

    /// The function equal to `self` everywhere except at `y`, where it is negated.
    pub fn flip_at(&self, y: &InputVector) -> Result<TruthTable> {
        check_dim(self.n, y.dim())?;
        let mut bits = self.bits.clone();
        let idx = y.index();
        bits[idx] = !bits[idx];
        Ok(Self { n: self.n, bits })
    }

    /// Restriction with `x_i` fixed to `b`, as an `(n-1)`-variable function.
    pub fn cofactor(&self, i: usize, b: bool) -> Result<TruthTable> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        if self.n == 1 {
            return Err(Error::InvalidArgument("cannot cofactor a 1-variable function".into()));
        }
        let pos = i - 1;
        let low_mask = (1usize << pos) - 1;
        let bits = (0..1usize << (self.n - 1))
            .map(|idx| {
                let low = idx & low_mask;
                let high = (idx & !low_mask) << 1;
                self.bits[high | (usize::from(b) << pos) | low]
            })
            .collect();
        Ok(Self { n: self.n - 1, bits })
    }

    /// `h(X, x_{n+1}) = !x_{n+1} & f0(X) | x_{n+1} & f1(X)`; the new variable is appended last.
    pub fn compose_by_variable(f0: &TruthTable, f1: &TruthTable) -> Result<TruthTable> {
        check_dim(f0.n, f1.n)?;
        check_n(f0.n + 1)?;
        let bits = f0.bits.iter().chain(&f1.bits).copied().collect();
        Ok(Self { n: f0.n + 1, bits })
    }

    /// True vectors in ascending index order.
    pub fn minterms(&self) -> Vec<InputVector> {
        self.indices_where(true).map(|idx| InputVector::from_index(idx, self.n)).collect()
    }

    /// Indices of inputs where the function equals `value`, ascending.
    pub fn indices_where(&self, value: bool) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(move |(_, &b)| b == value).map(|(i, _)| i)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_constant(&self) -> bool {
        self.bits.iter().all(|&b| b == self.bits[0])
    }

    /// Number of table entries where the two functions differ.
    pub fn hamming_distance(&self, other: &TruthTable) -> Result<usize> {
        check_dim(self.n, other.n)?;
        Ok(self.bits.iter().zip(&other.bits).filter(|(a, b)| a != b).count())
    }

    /// Hex form `0x...`: big-endian nibbles of the index-0-first bit sequence. Needs `n >= 2`.
    pub fn to_hex(&self) -> Option<String> {
        if self.n < 2 {
            return None;
        }
        let mut out = String::from("0x");
        for chunk in self.bits.chunks(4) {
            let nibble = chunk.iter().fold(0u32, |acc, &b| (acc << 1) | u32::from(b));
            out.push(char::from_digit(nibble, 16).expect("nibble < 16"));
        }
        Some(out)
    }

    /// Parses either a binary string (leftmost = index 0) or a `0x`-prefixed hex string.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bits: Vec<bool> = if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
            let mut bits = Vec::with_capacity(hex.len() * 4);
            for c in hex.chars() {
                let nibble = c.to_digit(16).ok_or_else(|| Error::Parse(format!("invalid hex digit {c:?} in {s:?}")))?;
                bits.extend((0..4).rev().map(|k| (nibble >> k) & 1 == 1));
            }
            if bits.len() < 4 {
                return Err(Error::Parse(format!("empty hex truth table {s:?}")));
            }
            bits
        } else {
            s.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::Parse(format!("invalid character {c:?} in truth table {s:?}"))),
                })
                .collect::<Result<_>>()?
        };
        if bits.len() < 2 || !bits.len().is_power_of_two() {
            return Err(Error::Parse(format!(
                "truth table length must be a power of two >= 2, got {} bits from {s:?}",
                bits.len()
            )));
        }
        let n = bits.len().trailing_zeros() as usize;
        Self::new(n, bits).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for TruthTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("a truth table needs at least one variable".into()));
    }
    if n > MAX_VARS {
        return Err(Error::TooManyVariables { what: "TruthTable", max: MAX_VARS, n });
    }
    Ok(())
}
