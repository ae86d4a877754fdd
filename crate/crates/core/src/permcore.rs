//! Permutations and Lehmer codes.
//!
//! Positions and values are one-based in every public API, so `p.get(1)` is
//! the first entry and a permutation of size `n` holds the values `1..=n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation in one-line notation. The empty permutation is allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=values.len()`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::Parse(format!("value {v} is outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[idx - 1], true) {
                return Err(Error::Parse(format!("value {v} repeated")));
            }
        }
        Ok(Permutation(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// The empty permutation.
    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    /// Entry at one-based position `i`.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut q = vec![0u32; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            q[v as usize - 1] = i as u32 + 1;
        }
        Permutation(q)
    }

    /// `r(i) = n + 1 - p(n + 1 - i)`.
    pub fn reverse_complement(&self) -> Self {
        let n = self.len() as u32;
        Permutation(self.0.iter().rev().map(|&v| n + 1 - v).collect())
    }

    /// Ascending one-based positions `i` with `p(i) > p(i+1)`.
    pub fn descent_positions(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn descent_count(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Pairs `(i, j)` with `i < j` and `p(i) = p(j) + 1`, sorted by `i`.
    pub fn dip_pairs(&self) -> Vec<(usize, usize)> {
        let pos = self.inverse();
        let mut dips: Vec<(usize, usize)> = (1..self.len() as u32)
            .filter_map(|v| {
                let lo = pos.0[v as usize - 1] as usize;
                let hi = pos.0[v as usize] as usize;
                (hi < lo).then_some((hi, lo))
            })
            .collect();
        dips.sort_unstable();
        dips
    }

    pub fn inversion_count(&self) -> u64 {
        let mut count = 0u64;
        for (i, &a) in self.0.iter().enumerate() {
            count += self.0[i + 1..].iter().filter(|&&b| b < a).count() as u64;
        }
        count
    }

    pub fn lehmer_code(&self) -> LehmerCode {
        let entries = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &a)| self.0[i + 1..].iter().filter(|&&b| b < a).count() as u32)
            .collect();
        LehmerCode(entries)
    }

    pub fn is_involution(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &v)| self.0[v as usize - 1] as usize == i + 1)
    }

    /// `self ⊕ other`: `other` follows, shifted up by `|self|`.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let shift = self.len() as u32;
        let mut values = self.0.clone();
        values.extend(other.0.iter().map(|&v| v + shift));
        Permutation(values)
    }

    /// `self ⊖ other`: `self` shifted up by `|other|`, then `other`.
    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let shift = other.len() as u32;
        let mut values: Vec<u32> = self.0.iter().map(|&v| v + shift).collect();
        values.extend_from_slice(&other.0);
        Permutation(values)
    }

    /// Rearranges `values` into lexicographic successor; false at the last one.
    pub(crate) fn next_lex(values: &mut [u32]) -> bool {
        let n = values.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && values[i - 1] >= values[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while values[j] <= values[i - 1] {
            j -= 1;
        }
        values.swap(i - 1, j);
        values[i..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write_joined(f, &self.0)
        }
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Parses either `"2,4,1,3"` or the digit form `"2413"`. Bracketed
/// multi-digit entries such as `"2[11]"` are rejected.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = parse_entries(s, |c| c.is_ascii_digit() && c != '0')?;
        Permutation::new(values)
    }
}

fn parse_entries(s: &str, digit_ok: impl Fn(char) -> bool) -> Result<Vec<u32>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad entry {part:?}")))
            })
            .collect()
    } else if s.chars().all(&digit_ok) {
        Ok(s.chars().map(|c| c.to_digit(10).unwrap()).collect())
    } else {
        Err(Error::Parse(format!("unrecognised entries in {s:?}")))
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// Lehmer code `c_1 … c_n` with `c_i = #{j > i : p(j) < p(i)}`.
///
/// Entries are stored unchecked; [`LehmerCode::decode`] enforces
/// `c_i <= n - i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LehmerCode(pub Vec<u32>);

impl LehmerCode {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    /// Picks the `c_i`-th smallest remaining value at each position.
    pub fn decode(&self) -> Result<Permutation> {
        let n = self.len();
        let mut remaining: Vec<u32> = (1..=n as u32).collect();
        let mut values = Vec::with_capacity(n);
        for (i, &c) in self.0.iter().enumerate() {
            let max = n - i - 1;
            if c as usize > max {
                return Err(Error::UndecodableCode {
                    position: i + 1,
                    value: c,
                    max,
                });
            }
            values.push(remaining.remove(c as usize));
        }
        Ok(Permutation(values))
    }
}

pub fn lehmer_decode(code: &LehmerCode) -> Result<Permutation> {
    code.decode()
}

impl fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

/// Accepts comma-separated entries, or a bare digit string when every entry
/// is a single digit (`"130000"`).
impl FromStr for LehmerCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_entries(s.trim(), |c| c.is_ascii_digit()).map(LehmerCode)
    }
}

/// Every permutation of `1..=n` in lexicographic order.
pub struct SymmetricGroup {
    current: Option<Vec<u32>>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Self {
        SymmetricGroup {
            current: Some((1..=n as u32).collect()),
        }
    }
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let values = self.current.as_mut()?;
        let out = Permutation(values.clone());
        if !Permutation::next_lex(values) {
            self.current = None;
        }
        Some(out)
    }
}
