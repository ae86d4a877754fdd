//! Grassmannian permutations (at most one descent) and the families built
//! from them: biGrassmannians, the union with inverses, and involutions.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::numbers::{binomial, pow2};
use crate::permcore::Permutation;

/// Largest size the enumerators accept unless a caller passes its own cap.
pub const DEFAULT_CAP: usize = 25;

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::OutOfRange("size must be at least 1".into()))
    } else {
        Ok(())
    }
}

pub fn is_grassmannian(p: &Permutation) -> bool {
    p.descent_count() <= 1
}

pub fn is_bigrassmannian(p: &Permutation) -> bool {
    is_grassmannian(p) && p.dip_pairs().len() <= 1
}

/// Lexicographic stream of the Grassmannian permutations of size `n`.
///
/// Each element is produced from its predecessor in place: a Grassmannian
/// permutation is an increasing prefix followed by the remaining values in
/// increasing order, so the successor changes the rightmost entry of the
/// first run (or the entry just after it) that admits a larger legal value
/// and sorts everything to its right.
#[derive(Debug, Clone)]
pub struct GrassmannianIter {
    current: Option<Vec<u32>>,
}

impl GrassmannianIter {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        check_cap(n, cap)?;
        Ok(GrassmannianIter {
            current: Some((1..=n as u32).collect()),
        })
    }

    /// Visits each permutation as a slice without allocating.
    pub fn for_each_slice(mut self, mut f: impl FnMut(&[u32])) {
        if let Some(mut values) = self.current.take() {
            loop {
                f(&values);
                if !grassmannian_successor(&mut values) {
                    break;
                }
            }
        }
    }
}

impl Iterator for GrassmannianIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let values = self.current.as_mut()?;
        let out = Permutation::from_vec_unchecked(values.clone());
        if !grassmannian_successor(values) {
            self.current = None;
        }
        Some(out)
    }
}

fn grassmannian_successor(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let run = p.windows(2).position(|w| w[0] > w[1]).map_or(n, |i| i + 1);
    for i in (0..=run.min(n - 1)).rev() {
        let floor = if i == 0 { p[0] } else { p[i].max(p[i - 1]) };
        let Some(next) = p[i..].iter().copied().filter(|&v| v > floor).min() else {
            continue;
        };
        let mut rest: Vec<u32> = p[i..].iter().copied().filter(|&v| v != next).collect();
        rest.sort_unstable();
        p[i] = next;
        p[i + 1..].copy_from_slice(&rest);
        return true;
    }
    false
}

pub fn enumerate_grassmannian(n: usize) -> Result<Vec<Permutation>> {
    Ok(GrassmannianIter::new(n)?.collect())
}

/// `|G_n| = 2^n - n`, defined for `n >= 1`.
pub fn count_grassmannian(n: usize) -> Result<BigUint> {
    require_positive(n)?;
    Ok(pow2(n) - n)
}

/// Number of Grassmannian permutations of size `n` whose descent is at `k`.
pub fn count_descent_at(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!(
            "descent position {k} must lie in 1..={}",
            n.saturating_sub(1)
        )));
    }
    Ok((0..k).map(|j| binomial(n - j - 1, k - j)).sum())
}

/// `1 + C(n+1, 3)`.
pub fn count_bigrassmannian(n: usize) -> Result<BigUint> {
    require_positive(n)?;
    Ok(binomial(n + 1, 3) + 1u32)
}

/// `|G_n ∪ G_n^{-1}| = 2^{n+1} - C(n+1, 3) - 2n - 1`.
pub fn count_union_with_inverse(n: usize) -> Result<BigUint> {
    require_positive(n)?;
    let value =
        BigInt::from(pow2(n + 1)) - BigInt::from(binomial(n + 1, 3)) - BigInt::from(2 * n + 1);
    Ok(value
        .to_biguint()
        .expect("union count is positive for n >= 1"))
}

/// Grassmannian involutions `id_a ⊕ (id_b ⊖ id_b) ⊕ id_c` with
/// `a + 2b + c = n`, in lexicographic order, identity included once.
pub fn enumerate_involutions(n: usize) -> Result<Vec<Permutation>> {
    enumerate_involutions_with_cap(n, DEFAULT_CAP)
}

pub fn enumerate_involutions_with_cap(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    check_cap(n, cap)?;
    let mut out = vec![Permutation::identity(n)];
    for block in 1..=n / 2 {
        let core = Permutation::identity(block).skew_sum(&Permutation::identity(block));
        for before in 0..=n - 2 * block {
            let after = n - 2 * block - before;
            out.push(
                Permutation::identity(before)
                    .direct_sum(&core)
                    .direct_sum(&Permutation::identity(after)),
            );
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// `(n^2 + 3)/4` for odd `n`, `(n^2 + 4)/4` for even `n`.
pub fn count_involutions(n: usize) -> Result<BigUint> {
    require_positive(n)?;
    let sq = BigUint::from(n) * n;
    Ok(if n % 2 == 1 {
        (sq + 3u32) / 4u32
    } else {
        (sq + 4u32) / 4u32
    })
}

/// Structural classes of biGrassmannian permutations, organised by where
/// the single descent sits and how the first run is interrupted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BiGrassmannianShape {
    Identity,
    /// Descent at position 1: `i 1 2 ⋯`.
    DescentAtOne,
    /// `i (i+1) ⋯ j | 1 ⋯` with the first run of length at least two.
    RunThenOne,
    /// `1 ⋯ (i-1) j | i ⋯`.
    SingleAboveGap,
    /// `1 ⋯ (i-1) j ⋯ k | i ⋯` with `j < k`.
    RunAboveGap,
}

/// Classifies a biGrassmannian permutation; `None` for anything else.
pub fn bigrassmannian_shape(p: &Permutation) -> Option<BiGrassmannianShape> {
    if !is_bigrassmannian(p) {
        return None;
    }
    let descents = p.descent_positions();
    let Some(&d) = descents.first() else {
        return Some(BiGrassmannianShape::Identity);
    };
    if d == 1 {
        return Some(BiGrassmannianShape::DescentAtOne);
    }
    if p.get(1) != 1 {
        return Some(BiGrassmannianShape::RunThenOne);
    }
    let bottom = p.get(d + 1) as usize;
    // first run is 1..bottom-1 followed by the block above the gap
    let block = d - (bottom - 1);
    Some(if block == 1 {
        BiGrassmannianShape::SingleAboveGap
    } else {
        BiGrassmannianShape::RunAboveGap
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::SymmetricGroup;
    use std::collections::HashMap;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn brute_grassmannian(n: usize) -> Vec<Permutation> {
        SymmetricGroup::new(n)
            .filter(|q| q.descent_count() <= 1)
            .collect()
    }

    #[test]
    fn recognition() {
        assert!(is_grassmannian(&p("2413")));
        assert!(!is_grassmannian(&p("321")));
        assert!(is_grassmannian(&Permutation::identity(9)));
        assert!(!is_bigrassmannian(&p("2413")));
        assert!(is_bigrassmannian(&p("4123")));
        assert!(is_bigrassmannian(&Permutation::identity(5)));
    }

    #[test]
    fn enumerator_matches_filtered_symmetric_group() {
        let three: Vec<String> = enumerate_grassmannian(3)
            .unwrap()
            .iter()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(three, ["123", "132", "213", "231", "312"]);
        assert_eq!(enumerate_grassmannian(1).unwrap(), vec![p("1")]);
        for n in 0..=8 {
            assert_eq!(
                enumerate_grassmannian(n).unwrap(),
                brute_grassmannian(n),
                "n={n}"
            );
        }
        assert_eq!(enumerate_grassmannian(10).unwrap().len(), 1014);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            GrassmannianIter::new(26).unwrap_err(),
            Error::CapExceeded { n: 26, cap: 25 }
        );
        assert!(GrassmannianIter::with_cap(26, 30).is_ok());
        assert!(enumerate_involutions_with_cap(8, 7).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count_grassmannian(5).unwrap(), 27u32.into());
        assert_eq!(count_grassmannian(1).unwrap(), 1u32.into());
        assert!(count_grassmannian(0).is_err());
        for n in 1..=12 {
            let listed = GrassmannianIter::new(n).unwrap().count();
            assert_eq!(count_grassmannian(n).unwrap(), listed.into());
        }
    }

    #[test]
    fn descent_position_counts() {
        assert_eq!(count_descent_at(4, 1).unwrap(), 3u32.into());
        assert_eq!(count_descent_at(2, 1).unwrap(), 1u32.into());
        assert!(count_descent_at(4, 4).is_err());
        assert!(count_descent_at(4, 0).is_err());
        for n in 2..=12 {
            let total: BigUint = (1..n).map(|k| count_descent_at(n, k).unwrap()).sum();
            assert_eq!(total, pow2(n) - n - 1u32);
        }
        for n in 2..=8 {
            for k in 1..n {
                let listed = GrassmannianIter::new(n)
                    .unwrap()
                    .filter(|q| q.descent_positions() == [k])
                    .count();
                assert_eq!(
                    count_descent_at(n, k).unwrap(),
                    listed.into(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn bigrassmannian_counts_and_shapes() {
        assert_eq!(count_bigrassmannian(4).unwrap(), 11u32.into());
        assert_eq!(count_bigrassmannian(1).unwrap(), 1u32.into());
        for n in 1..=10 {
            let listed = GrassmannianIter::new(n)
                .unwrap()
                .filter(|q| is_grassmannian(&q.inverse()))
                .count();
            assert_eq!(count_bigrassmannian(n).unwrap(), listed.into(), "n={n}");
        }
        for n in 3..=9 {
            let mut tally: HashMap<BiGrassmannianShape, usize> = HashMap::new();
            for q in GrassmannianIter::new(n).unwrap() {
                if let Some(shape) = bigrassmannian_shape(&q) {
                    *tally.entry(shape).or_default() += 1;
                }
            }
            let get = |s| BigUint::from(tally.get(&s).copied().unwrap_or(0));
            assert_eq!(get(BiGrassmannianShape::Identity), 1u32.into());
            assert_eq!(get(BiGrassmannianShape::DescentAtOne), binomial(n - 1, 1));
            assert_eq!(get(BiGrassmannianShape::RunThenOne), binomial(n - 1, 2));
            assert_eq!(get(BiGrassmannianShape::SingleAboveGap), binomial(n - 1, 2));
            assert_eq!(get(BiGrassmannianShape::RunAboveGap), binomial(n - 1, 3));
        }
    }

    #[test]
    fn union_count_values() {
        let expect = [1u32, 2, 5, 13, 33, 80, 185, 411, 885, 1862];
        for (i, &v) in expect.iter().enumerate() {
            assert_eq!(count_union_with_inverse(i + 1).unwrap(), v.into());
        }
    }

    #[test]
    fn involutions_of_size_six() {
        let inv = enumerate_involutions(6).unwrap();
        assert_eq!(inv.len(), 10);
        for s in ["213456", "341256", "456123", "123456", "125634"] {
            assert!(inv.contains(&p(s)), "{s}");
        }
        assert_eq!(enumerate_involutions(1).unwrap(), vec![p("1")]);
        assert!(inv.iter().all(|q| q.inverse() == *q));
    }

    #[test]
    fn involution_counts() {
        let expect = [1u32, 2, 3, 5, 7, 10, 13, 17, 21, 26, 31];
        for (i, &v) in expect.iter().enumerate() {
            let n = i + 1;
            assert_eq!(count_involutions(n).unwrap(), v.into());
            let m = n / 2;
            assert_eq!(
                count_involutions(n).unwrap(),
                BigUint::from(1 + m * n - m * m)
            );
        }
        for n in 1..=10 {
            let brute: Vec<Permutation> = GrassmannianIter::new(n)
                .unwrap()
                .filter(|q| q.is_involution())
                .collect();
            assert_eq!(enumerate_involutions(n).unwrap(), brute, "n={n}");
        }
        for n in 1..=12 {
            assert_eq!(
                count_involutions(n).unwrap(),
                enumerate_involutions(n).unwrap().len().into()
            );
        }
    }
}
