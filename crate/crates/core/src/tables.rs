//! The two enumeration tables: `|G_m(12⋯k)|` over the non-trivial range of
//! `m`, and `|G_n(sigma)|` for one-descent patterns of each size.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::patterns::{count_avoiders_closed_form, finite_class_count};
use crate::permcore::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    /// `k` for the first table, the pattern size for the second.
    pub key: usize,
    pub values: Vec<BigUint>,
}

/// Rows `k = 2..=k_max`, each listing `|G_m(12⋯k)|` for `m = k..=2k-2`.
pub fn table1(k_max: usize) -> Result<Vec<TableRow>> {
    if k_max < 2 {
        return Err(Error::OutOfRange("kmax must be at least 2".into()));
    }
    let cells: Vec<(usize, usize)> = (2..=k_max)
        .flat_map(|k| (k..=2 * k - 2).map(move |m| (k, m)))
        .collect();
    let values = cells
        .par_iter()
        .map(|&(k, m)| finite_class_count(m, k))
        .collect::<Result<Vec<_>>>()?;
    let mut rows: Vec<TableRow> = Vec::new();
    for (&(k, _), v) in cells.iter().zip(values) {
        match rows.last_mut() {
            Some(row) if row.key == k => row.values.push(v),
            _ => rows.push(TableRow {
                key: k,
                values: vec![v],
            }),
        }
    }
    Ok(rows)
}

/// Terms per row of [`table2`].
pub const TABLE2_TERMS: usize = 10;

/// `k 1 2 ⋯ (k-1)`, the representative one-descent pattern of size `k`.
/// Every one-descent pattern of a given size yields the same row.
pub fn table2_pattern(k: usize) -> Permutation {
    let mut v = vec![k as u32];
    v.extend(1..k as u32);
    Permutation::new(v).expect("valid permutation")
}

/// Rows for pattern sizes `3..=max_size`, terms `n = 1..=10`.
pub fn table2(max_size: usize) -> Result<Vec<TableRow>> {
    if max_size < 3 {
        return Err(Error::OutOfRange("pattern size must be at least 3".into()));
    }
    (3..=max_size)
        .map(|k| {
            let sigma = table2_pattern(k);
            let values = (1..=TABLE2_TERMS)
                .map(|n| count_avoiders_closed_form(n, &sigma))
                .collect::<Result<Vec<_>>>()?;
            Ok(TableRow { key: k, values })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn table1_small_rows() {
        let rows = table1(5).unwrap();
        assert_eq!(rows[0].values, nums(&[1]));
        assert_eq!(rows[1].values, nums(&[4, 2]));
        assert_eq!(rows[3].values, nums(&[26, 32, 28, 14]));
        assert!(table1(1).is_err());
    }

    #[test]
    fn table2_small_rows() {
        let rows = table2(4).unwrap();
        assert_eq!(rows[0].values, nums(&[1, 2, 4, 7, 11, 16, 22, 29, 37, 46]));
        assert_eq!(rows[1].values[9], 166u32.into());
        assert_eq!(table2_pattern(4).to_string(), "4123");
    }
}
