//! Rows comparing a closed form against an exhaustive count.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

/// One verification row. Big integers serialize as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub family: String,
    pub n: usize,
    #[serde(serialize_with = "decimal")]
    pub formula: BigUint,
    #[serde(serialize_with = "decimal_opt")]
    pub oracle: Option<BigUint>,
    pub agree: bool,
}

impl CountReport {
    /// `agree` is true when there is no oracle value to contradict the formula.
    pub fn new(
        family: impl Into<String>,
        n: usize,
        formula: BigUint,
        oracle: Option<BigUint>,
    ) -> Self {
        let agree = oracle.as_ref().is_none_or(|o| *o == formula);
        CountReport {
            family: family.into(),
            n,
            formula,
            oracle,
            agree,
        }
    }

    pub fn checked(family: impl Into<String>, n: usize, formula: BigUint, oracle: BigUint) -> Self {
        Self::new(family, n, formula, Some(oracle))
    }
}

/// First disagreeing row, if any.
pub fn first_mismatch(rows: &[CountReport]) -> Option<&CountReport> {
    rows.iter().find(|r| !r.agree)
}

fn decimal<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

fn decimal_opt<S: Serializer>(value: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agreement_flag() {
        assert!(CountReport::checked("x", 1, 3u32.into(), 3u32.into()).agree);
        assert!(!CountReport::checked("x", 1, 3u32.into(), 4u32.into()).agree);
        assert!(CountReport::new("x", 1, 3u32.into(), None).agree);
    }
}
