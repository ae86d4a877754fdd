//! Exhaustive sweeps comparing closed forms and bijections against
//! independent brute-force oracles.
//!
//! The oracles generate permutations by depth-first search over `S_n`,
//! pruning on prefix-closed properties (at most one descent, containing a
//! forbidden pattern). They share no code with the lexicographic
//! Grassmannian enumerator.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grassmann::{
    count_bigrassmannian, count_grassmannian, count_involutions, count_union_with_inverse,
    enumerate_involutions_with_cap,
};
use crate::numbers::catalan;
use crate::parity::{even_count, even_count_closed_form, odd_count, odd_count_closed_form};
use crate::paths::{for_each_dyck_path, phi, DyckPath};
use crate::patterns::{
    contains_pattern, contains_pattern_slice, count_avoiders_closed_form, finite_class_count_brute,
    one_descent_patterns, verify_weiner,
};
use crate::permcore::{lehmer_decode, Permutation};
use crate::report::CountReport;
use crate::schroder::{alpha, Letter, SchroderWord};

/// Every permutation of `[n]` all of whose prefixes satisfy `keep`.
///
/// `keep` sees the prefix including the value just placed and must be
/// prefix-closed for the result to be a filter of `S_n`.
pub fn permutations_with_prefix(n: usize, keep: impl Fn(&[u32]) -> bool) -> Vec<Permutation> {
    fn walk(
        n: usize,
        prefix: &mut Vec<u32>,
        used: &mut [bool],
        keep: &impl Fn(&[u32]) -> bool,
        out: &mut Vec<Permutation>,
    ) {
        if prefix.len() == n {
            out.push(Permutation::from_vec_unchecked(prefix.clone()));
            return;
        }
        for v in 1..=n as u32 {
            if used[v as usize] {
                continue;
            }
            prefix.push(v);
            if keep(prefix) {
                used[v as usize] = true;
                walk(n, prefix, used, keep, out);
                used[v as usize] = false;
            }
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    walk(
        n,
        &mut Vec::with_capacity(n),
        &mut vec![false; n + 1],
        &keep,
        &mut out,
    );
    out
}

fn descents(values: &[u32]) -> usize {
    values.windows(2).filter(|w| w[0] > w[1]).count()
}

/// `G_n` by pruned search over `S_n`.
pub fn grassmannian_oracle(n: usize) -> Vec<Permutation> {
    permutations_with_prefix(n, |pre| descents(pre) <= 1)
}

/// `S_n` avoiding every pattern in `patterns`.
pub fn avoiders_oracle(n: usize, patterns: &[Permutation]) -> Vec<Permutation> {
    // containment only compares values, so raw prefixes can be matched directly
    permutations_with_prefix(n, |pre| {
        patterns
            .iter()
            .all(|s| !contains_pattern_slice(pre, s.values()))
    })
}

/// All Schröder words of semilength `n`.
pub fn schroder_words_oracle(n: usize) -> Vec<SchroderWord> {
    fn walk(budget: usize, height: usize, word: &mut Vec<Letter>, out: &mut Vec<SchroderWord>) {
        if budget == 0 {
            if height == 0 {
                out.push(SchroderWord::new(word.clone()).expect("valid by construction"));
            }
            return;
        }
        if height + 1 < budget {
            word.push(Letter::Up);
            walk(budget - 1, height + 1, word, out);
            word.pop();
        }
        if height > 0 {
            word.push(Letter::Down);
            walk(budget - 1, height - 1, word, out);
            word.pop();
        }
        if budget >= 2 {
            word.push(Letter::Level);
            walk(budget - 2, height, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    walk(2 * n, 0, &mut Vec::new(), &mut out);
    out
}

fn grassmannian_paths_oracle(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    for_each_dyck_path(n, |p| {
        if p.long_ascent_count() <= 1 {
            out.push(p.clone());
        }
    });
    out
}

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

fn increasing_tail(k: usize) -> Permutation {
    // k 1 2 ... (k-1)
    let mut v = vec![k as u32];
    v.extend(1..k as u32);
    Permutation::from_vec_unchecked(v)
}

fn rotated(k: usize) -> Permutation {
    // 2 3 ... k 1
    let mut v: Vec<u32> = (2..=k as u32).collect();
    v.push(1);
    Permutation::from_vec_unchecked(v)
}

/// Named sweeps available to [`run`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Weiner,
    Theorem34,
    Prop21,
    Prop22,
    Prop23,
    Prop31,
    Prop41,
    Prop42,
    Prop43,
    Prop46,
    Thm51,
    Prop53,
}

impl Target {
    pub const ALL: [Target; 12] = [
        Target::Weiner,
        Target::Theorem34,
        Target::Prop21,
        Target::Prop22,
        Target::Prop23,
        Target::Prop31,
        Target::Prop41,
        Target::Prop42,
        Target::Prop43,
        Target::Prop46,
        Target::Thm51,
        Target::Prop53,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Weiner => "weiner",
            Target::Theorem34 => "theorem34",
            Target::Prop21 => "prop21",
            Target::Prop22 => "prop22",
            Target::Prop23 => "prop23",
            Target::Prop31 => "prop31",
            Target::Prop41 => "prop41",
            Target::Prop42 => "prop42",
            Target::Prop43 => "prop43",
            Target::Prop46 => "prop46",
            Target::Thm51 => "thm51",
            Target::Prop53 => "prop53",
        }
    }

    /// Bounds used when the caller leaves a field unset.
    pub fn default_bounds(self) -> Bounds {
        let k_min = if self == Target::Weiner { 2 } else { 3 };
        let (k_max, max_size, max_n) = match self {
            Target::Weiner | Target::Prop31 => (10, 0, 0),
            Target::Theorem34 => (0, 5, 10),
            Target::Prop42 | Target::Prop43 => (5, 0, 9),
            Target::Prop41 | Target::Prop46 => (0, 0, 9),
            Target::Prop21 | Target::Prop22 | Target::Prop23 | Target::Prop53 => (0, 0, 10),
            Target::Thm51 => (0, 0, 14),
        };
        Bounds {
            k_min,
            k_max,
            max_size,
            max_n,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown verify target {s:?}")))
    }
}

/// Sweep limits. Each target reads only the fields it needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub k_min: usize,
    pub k_max: usize,
    pub max_size: usize,
    pub max_n: usize,
}

/// Runs `target` and returns its rows in deterministic case order.
pub fn run(target: Target, b: Bounds) -> Result<Vec<CountReport>> {
    match target {
        Target::Weiner => verify_weiner(b.k_max),
        Target::Theorem34 => theorem34(b.max_size, b.max_n),
        Target::Prop21 => per_n(b.max_n, prop21),
        Target::Prop22 => per_n(b.max_n, prop22),
        Target::Prop23 => per_n(b.max_n, prop23),
        Target::Prop31 => prop31(b.k_min, b.k_max),
        Target::Prop41 => per_n(b.max_n, prop41),
        Target::Prop42 => per_k_n(b.k_min, b.k_max, b.max_n, prop42),
        Target::Prop43 => per_k_n(b.k_min, b.k_max, b.max_n, prop43),
        Target::Prop46 => per_n(b.max_n, prop46),
        Target::Thm51 => per_n(b.max_n, thm51),
        Target::Prop53 => per_n(b.max_n, prop53),
    }
}

fn per_n(
    max_n: usize,
    f: impl Fn(usize) -> Result<Vec<CountReport>> + Sync + Send,
) -> Result<Vec<CountReport>> {
    if max_n == 0 {
        return Err(Error::OutOfRange("max-n must be at least 1".into()));
    }
    let rows: Result<Vec<Vec<CountReport>>> = (1..=max_n).into_par_iter().map(f).collect();
    Ok(rows?.into_iter().flatten().collect())
}

fn per_k_n(
    k_min: usize,
    k_max: usize,
    max_n: usize,
    f: impl Fn(usize, usize) -> Result<CountReport> + Sync + Send,
) -> Result<Vec<CountReport>> {
    if k_min < 3 || k_max < k_min || max_n == 0 {
        return Err(Error::OutOfRange(
            "need 3 <= kmin <= kmax and max-n >= 1".into(),
        ));
    }
    let cells: Vec<(usize, usize)> = (k_min..=k_max)
        .flat_map(|k| (1..=max_n).map(move |n| (k, n)))
        .collect();
    cells.into_par_iter().map(|(k, n)| f(k, n)).collect()
}

fn theorem34(max_size: usize, max_n: usize) -> Result<Vec<CountReport>> {
    if max_size < 3 || max_n == 0 {
        return Err(Error::OutOfRange(
            "need max-size >= 3 and max-n >= 1".into(),
        ));
    }
    let perms: Vec<Vec<Permutation>> = (1..=max_n)
        .into_par_iter()
        .map(grassmannian_oracle)
        .collect();
    let cells: Vec<(Permutation, usize)> = (3..=max_size)
        .flat_map(one_descent_patterns)
        .flat_map(|s| (1..=max_n).map(move |n| (s.clone(), n)))
        .collect();
    cells
        .into_par_iter()
        .map(|(sigma, n)| {
            let oracle = perms[n - 1]
                .iter()
                .filter(|q| !contains_pattern(q, &sigma))
                .count();
            Ok(CountReport::checked(
                format!("avoid {sigma}"),
                n,
                count_avoiders_closed_form(n, &sigma)?,
                big(oracle),
            ))
        })
        .collect()
}

fn prop21(n: usize) -> Result<Vec<CountReport>> {
    let g = grassmannian_oracle(n);
    let both = g
        .iter()
        .filter(|q| descents(q.inverse().values()) <= 1)
        .count();
    let sigma: Permutation = "2413".parse()?;
    let avoid: BTreeSet<&Permutation> = g.iter().filter(|q| !contains_pattern(q, &sigma)).collect();
    let same = g
        .iter()
        .all(|q| (descents(q.inverse().values()) <= 1) == avoid.contains(q));
    let formula = count_bigrassmannian(n)?;
    let mut avoid_row = CountReport::checked(
        "grassmannian avoiding 2413",
        n,
        formula.clone(),
        big(avoid.len()),
    );
    avoid_row.agree &= same;
    Ok(vec![
        CountReport::checked("bigrassmannian", n, formula, big(both)),
        avoid_row,
    ])
}

fn prop22(n: usize) -> Result<Vec<CountReport>> {
    let patterns = ["321".parse()?, "2143".parse()?];
    let avoiders = avoiders_oracle(n, &patterns);
    let g: BTreeSet<Permutation> = grassmannian_oracle(n).into_iter().collect();
    let union: BTreeSet<Permutation> = g.iter().flat_map(|q| [q.clone(), q.inverse()]).collect();
    let formula = count_union_with_inverse(n)?;
    let mut row = CountReport::checked("avoid 321,2143", n, formula.clone(), big(avoiders.len()));
    row.agree &= avoiders.iter().cloned().collect::<BTreeSet<_>>() == union;
    Ok(vec![
        row,
        CountReport::checked("union with inverses", n, formula, big(union.len())),
    ])
}

fn prop23(n: usize) -> Result<Vec<CountReport>> {
    let oracle: Vec<Permutation> = grassmannian_oracle(n)
        .into_iter()
        .filter(|q| q.is_involution())
        .collect();
    let mut row = CountReport::checked("involutions", n, count_involutions(n)?, big(oracle.len()));
    row.agree &= enumerate_involutions_with_cap(n, n)? == oracle;
    Ok(vec![row])
}

/// The identities fail at `k = 2`, where `G_1(12)` has one element; the
/// default lower bound is 3.
fn prop31(k_min: usize, k_max: usize) -> Result<Vec<CountReport>> {
    if k_min < 2 || k_max < k_min {
        return Err(Error::OutOfRange("need 2 <= kmin <= kmax".into()));
    }
    let cells: Vec<(usize, usize)> = (k_min..=k_max)
        .flat_map(|k| [(k, 2 * k - 3), (k, 2 * k - 2)])
        .collect();
    cells
        .into_par_iter()
        .map(|(k, m)| {
            let formula = if m == 2 * k - 3 {
                catalan(k - 1) * 2u32
            } else {
                catalan(k - 1)
            };
            Ok(CountReport::checked(
                format!("avoid 1..{k}"),
                m,
                formula,
                finite_class_count_brute(m, k)?,
            ))
        })
        .collect()
}

fn prop41(n: usize) -> Result<Vec<CountReport>> {
    let paths = grassmannian_paths_oracle(n);
    let image: BTreeSet<Permutation> = paths.iter().map(phi).collect();
    let g: BTreeSet<Permutation> = grassmannian_oracle(n).into_iter().collect();
    let formula = count_grassmannian(n)?;
    let mut row = CountReport::checked("grassmannian paths", n, formula.clone(), big(paths.len()));
    row.agree &= image == g;
    Ok(vec![
        row,
        CountReport::checked("grassmannian", n, formula, big(g.len())),
    ])
}

fn path_class_against(
    family: String,
    n: usize,
    path_ok: impl Fn(&DyckPath) -> bool,
    sigma: &Permutation,
) -> CountReport {
    let image: BTreeSet<Permutation> = grassmannian_paths_oracle(n)
        .into_iter()
        .filter(|p| path_ok(p))
        .map(|p| phi(&p))
        .collect();
    let avoiders: BTreeSet<Permutation> = grassmannian_oracle(n)
        .into_iter()
        .filter(|q| !contains_pattern(q, sigma))
        .collect();
    let mut row = CountReport::checked(family, n, big(image.len()), big(avoiders.len()));
    row.agree &= image == avoiders;
    row
}

fn prop42(k: usize, n: usize) -> Result<CountReport> {
    let sigma = increasing_tail(k);
    Ok(path_class_against(
        format!("high peaks <= {} vs avoid {sigma}", k - 2),
        n,
        |p| p.peaks_above_height_one() <= k - 2,
        &sigma,
    ))
}

fn prop43(k: usize, n: usize) -> Result<CountReport> {
    let sigma = rotated(k);
    Ok(path_class_against(
        format!("height <= {} vs avoid {sigma}", k - 1),
        n,
        |p| p.max_height() < k,
        &sigma,
    ))
}

fn prop46(n: usize) -> Result<Vec<CountReport>> {
    let words: Vec<SchroderWord> = schroder_words_oracle(n)
        .into_iter()
        .filter(|w| !w.contains_uudd())
        .collect();
    let sigma: Permutation = "35124".parse()?;
    let avoiders: BTreeSet<Permutation> = grassmannian_oracle(n + 1)
        .into_iter()
        .filter(|q| !contains_pattern(q, &sigma))
        .collect();
    let image = words
        .iter()
        .map(|w| lehmer_decode(&alpha(w)?))
        .collect::<Result<BTreeSet<Permutation>>>()?;
    let mut row = CountReport::checked(
        "schroder avoiding UUDD vs avoid 35124",
        n,
        big(words.len()),
        big(avoiders.len()),
    );
    row.agree &= image.len() == words.len() && image == avoiders;
    Ok(vec![row])
}

fn thm51(n: usize) -> Result<Vec<CountReport>> {
    let g = grassmannian_oracle(n);
    let odd = g.iter().filter(|q| q.inversion_count() % 2 == 1).count();
    let mut odd_row = CountReport::checked("odd", n, odd_count(n)?, big(odd));
    odd_row.agree &= odd_count(n)? == odd_count_closed_form(n)?;
    let mut even_row = CountReport::checked("even", n, even_count(n)?, big(g.len() - odd));
    even_row.agree &= even_count(n)? == even_count_closed_form(n)?;
    Ok(vec![odd_row, even_row])
}

fn prop53(n: usize) -> Result<Vec<CountReport>> {
    let paths = grassmannian_paths_oracle(n);
    let mut matched = true;
    let mut odd_paths = 0usize;
    for p in &paths {
        let peaks_odd = p.peaks_at_even_height() % 2 == 1;
        odd_paths += peaks_odd as usize;
        matched &= peaks_odd == (phi(p).inversion_count() % 2 == 1);
    }
    let mut row = CountReport::checked("odd even-height peaks", n, odd_count(n)?, big(odd_paths));
    row.agree &= matched;
    Ok(vec![row])
}
