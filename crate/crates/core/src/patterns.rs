//! Classical pattern containment and the enumeration of pattern-avoiding
//! Grassmannian permutations.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannianIter, DEFAULT_CAP};
use crate::numbers::{binomial, pow2};
use crate::permcore::Permutation;
use crate::report::CountReport;

pub use crate::numbers::catalan;

/// True iff some subsequence of `p` is order-isomorphic to `sigma`.
///
/// Depth-first search over pattern positions. Each new entry is bounded by
/// the already chosen entries whose pattern values are its nearest
/// neighbours from below and above, and the search window stops early
/// enough to leave room for the rest of the pattern.
pub fn contains_pattern(p: &Permutation, sigma: &Permutation) -> bool {
    contains_pattern_slice(p.values(), sigma.values())
}

pub(crate) fn contains_pattern_slice(text: &[u32], pattern: &[u32]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > text.len() {
        return false;
    }
    let bounds: Vec<(Option<usize>, Option<usize>)> = (0..k)
        .map(|t| {
            let below = (0..t)
                .filter(|&s| pattern[s] < pattern[t])
                .max_by_key(|&s| pattern[s]);
            let above = (0..t)
                .filter(|&s| pattern[s] > pattern[t])
                .min_by_key(|&s| pattern[s]);
            (below, above)
        })
        .collect();
    let mut chosen = vec![0u32; k];
    search(text, &bounds, &mut chosen, 0, 0)
}

fn search(
    text: &[u32],
    bounds: &[(Option<usize>, Option<usize>)],
    chosen: &mut [u32],
    t: usize,
    start: usize,
) -> bool {
    let k = bounds.len();
    if t == k {
        return true;
    }
    let (below, above) = bounds[t];
    let lo = below.map_or(0, |s| chosen[s]);
    let hi = above.map_or(u32::MAX, |s| chosen[s]);
    for pos in start..=text.len() - (k - t) {
        let v = text[pos];
        if v > lo && v < hi {
            chosen[t] = v;
            if search(text, bounds, chosen, t + 1, pos + 1) {
                return true;
            }
        }
    }
    false
}

/// Length of the longest increasing subsequence (patience sorting).
pub fn longest_increasing(values: &[u32]) -> usize {
    let mut tails: Vec<u32> = Vec::with_capacity(values.len());
    longest_increasing_with(values, &mut tails)
}

fn longest_increasing_with(values: &[u32], tails: &mut Vec<u32>) -> usize {
    tails.clear();
    for &v in values {
        let at = tails.partition_point(|&t| t < v);
        if at == tails.len() {
            tails.push(v);
        } else {
            tails[at] = v;
        }
    }
    tails.len()
}

/// Specialised matcher for the monotone pattern `12⋯k`.
pub fn contains_increasing(p: &Permutation, k: usize) -> bool {
    longest_increasing(p.values()) >= k
}

/// Specialised matcher for the monotone pattern `k⋯21`.
pub fn contains_decreasing(p: &Permutation, k: usize) -> bool {
    let flipped: Vec<u32> = p.values().iter().rev().copied().collect();
    longest_increasing(&flipped) >= k
}

/// `G_n(sigma)` in lexicographic order.
pub fn enumerate_avoiders(n: usize, sigma: &Permutation) -> Result<Vec<Permutation>> {
    enumerate_avoiders_with_cap(n, sigma, DEFAULT_CAP)
}

pub fn enumerate_avoiders_with_cap(
    n: usize,
    sigma: &Permutation,
    cap: usize,
) -> Result<Vec<Permutation>> {
    Ok(GrassmannianIter::with_cap(n, cap)?
        .filter(|q| !contains_pattern(q, sigma))
        .collect())
}

/// Streaming brute-force `|G_n(sigma)|`.
pub fn count_avoiders_brute(n: usize, sigma: &Permutation, cap: usize) -> Result<u64> {
    let mut count = 0u64;
    GrassmannianIter::with_cap(n, cap)?.for_each_slice(|q| {
        if !contains_pattern_slice(q, sigma.values()) {
            count += 1;
        }
    });
    Ok(count)
}

/// `|G_n(sigma)|` from the descent structure of `sigma`.
///
/// Patterns with two or more descents are avoided by every Grassmannian
/// permutation; one-descent patterns of size `k >= 3` all give
/// `1 + sum_{j=3}^{k} C(n, j-1)`; `21` leaves only the identity. Increasing
/// patterns fall through to [`finite_class_count`].
pub fn count_avoiders_closed_form(n: usize, sigma: &Permutation) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfRange("size must be at least 1".into()));
    }
    if sigma.is_empty() {
        return Err(Error::OutOfRange("pattern must be non-empty".into()));
    }
    let k = sigma.len();
    match sigma.descent_count() {
        0 if k == 1 => Ok(BigUint::zero()),
        0 => finite_class_count(n, k),
        1 if k == 2 => Ok(1u32.into()),
        1 => Ok((3..=k).map(|j| binomial(n, j - 1)).sum::<BigUint>() + 1u32),
        _ => Ok(pow2(n) - n),
    }
}

/// `|G_m(12⋯k)|`, using the known boundary values where they apply and a
/// streaming count otherwise.
pub fn finite_class_count(m: usize, k: usize) -> Result<BigUint> {
    check_finite_args(m, k)?;
    if m < k {
        Ok(pow2(m) - m)
    } else if m == k {
        Ok(pow2(k) - k - 1u32)
    } else if m >= 2 * k - 1 {
        Ok(BigUint::zero())
    } else {
        finite_class_count_brute(m, k)
    }
}

/// Streaming count of `G_m(12⋯k)` with no shortcuts.
pub fn finite_class_count_brute(m: usize, k: usize) -> Result<BigUint> {
    check_finite_args(m, k)?;
    let mut tails = Vec::with_capacity(m);
    let mut count = 0u64;
    GrassmannianIter::with_cap(m, m.max(DEFAULT_CAP))?.for_each_slice(|q| {
        if longest_increasing_with(q, &mut tails) < k {
            count += 1;
        }
    });
    Ok(count.into())
}

fn check_finite_args(m: usize, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::OutOfRange(format!(
            "pattern size {k} must be at least 2"
        )));
    }
    if m == 0 {
        return Err(Error::OutOfRange("size must be at least 1".into()));
    }
    Ok(())
}

/// `sum_{j=1}^{k - floor(m/2)} (-1)^{j-1} j C(2k-m-j, j) C_{k-j}` for
/// `k <= m <= 2k-2`.
pub fn weiner_formula(m: usize, k: usize) -> Result<BigUint> {
    if k < 2 || m < k || m > 2 * k - 2 {
        return Err(Error::OutOfRange(format!(
            "need k >= 2 and k <= m <= 2k-2, got m={m}, k={k}"
        )));
    }
    let mut total = BigInt::zero();
    for j in 1..=k - m / 2 {
        let term = BigInt::from(j) * BigInt::from(binomial(2 * k - m - j, j) * catalan(k - j));
        if j % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    if total.is_negative() {
        return Err(Error::Domain(format!("negative value at m={m}, k={k}")));
    }
    Ok(total.to_biguint().expect("non-negative"))
}

/// One row per `(k, m)` with `2 <= k <= k_max`, `k <= m <= 2k-2`, in that
/// order. Cells are evaluated in parallel.
pub fn verify_weiner(k_max: usize) -> Result<Vec<CountReport>> {
    if k_max < 2 {
        return Err(Error::OutOfRange("k_max must be at least 2".into()));
    }
    let cells: Vec<(usize, usize)> = (2..=k_max)
        .flat_map(|k| (k..=2 * k - 2).map(move |m| (k, m)))
        .collect();
    cells
        .into_par_iter()
        .map(|(k, m)| {
            Ok(CountReport::checked(
                format!("weiner k={k}"),
                m,
                weiner_formula(m, k)?,
                finite_class_count_brute(m, k)?,
            ))
        })
        .collect()
}

/// `|G_n(sigma)|` from the closed form, optionally beside a brute count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternClassSummary {
    pub pattern: String,
    pub n: usize,
    pub formula_count: String,
    pub oracle_count: Option<String>,
    pub agreement: bool,
}

pub fn summarize_pattern_class(
    n: usize,
    sigma: &Permutation,
    with_oracle: bool,
) -> Result<PatternClassSummary> {
    let formula = count_avoiders_closed_form(n, sigma)?;
    let oracle = if with_oracle {
        Some(BigUint::from(count_avoiders_brute(n, sigma, DEFAULT_CAP)?))
    } else {
        None
    };
    let agreement = oracle.as_ref().is_none_or(|o| *o == formula);
    Ok(PatternClassSummary {
        pattern: sigma.to_string(),
        n,
        formula_count: formula.to_string(),
        oracle_count: oracle.map(|o| o.to_string()),
        agreement,
    })
}

/// All permutations of size `k` with exactly one descent, lexicographic.
pub fn one_descent_patterns(k: usize) -> Vec<Permutation> {
    GrassmannianIter::with_cap(k, k)
        .expect("cap equals size")
        .filter(|q| q.descent_count() == 1)
        .collect()
}
