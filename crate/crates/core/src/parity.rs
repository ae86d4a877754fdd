//! Odd and even Grassmannian permutations.
//!
//! `a_n` counts Grassmannian permutations of size `n` with an odd number of
//! inversions and `b_n` those with an even number. The maps [`xi_map`] and
//! [`psi_map`] are the injections behind `a_{2m+1} = 2 a_{2m}` and
//! `a_{2m+2} = a_{2m+1} + 2^{2m}`.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::numbers::{binomial, pow2};
use crate::permcore::Permutation;

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::OutOfRange("size must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `a_1 ..= a_n_max` from `a_1 = 0`, `a_2 = 1`, `a_n = 2 a_{n-2} + 2^{n-2}`.
pub fn odd_counts(n_max: usize) -> Vec<BigUint> {
    let mut table: Vec<BigUint> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let value = match n {
            1 => BigUint::from(0u32),
            2 => BigUint::from(1u32),
            _ => &table[n - 3] * 2u32 + pow2(n - 2),
        };
        table.push(value);
    }
    table
}

/// `b_1 ..= b_n_max` from `b_1 = b_2 = 1`, `b_n = 2 b_{n-2} + 2^{n-2} + n - 4`.
pub fn even_counts(n_max: usize) -> Vec<BigUint> {
    let mut table: Vec<BigInt> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let value = match n {
            1 | 2 => BigInt::from(1),
            _ => &table[n - 3] * 2 + BigInt::from(pow2(n - 2)) + BigInt::from(n as i64 - 4),
        };
        table.push(value);
    }
    table
        .into_iter()
        .map(|v| v.to_biguint().expect("even counts are non-negative"))
        .collect()
}

pub fn odd_count(n: usize) -> Result<BigUint> {
    require_positive(n)?;
    Ok(odd_counts(n).pop().expect("n >= 1"))
}

pub fn even_count(n: usize) -> Result<BigUint> {
    require_positive(n)?;
    Ok(even_counts(n).pop().expect("n >= 1"))
}

/// `2^{n-1} - 2^{floor((n-1)/2)}`.
pub fn odd_count_closed_form(n: usize) -> Result<BigUint> {
    require_positive(n)?;
    Ok(pow2(n - 1) - pow2((n - 1) / 2))
}

/// `2^{n-1} + 2^{floor((n-1)/2)} - n`.
pub fn even_count_closed_form(n: usize) -> Result<BigUint> {
    require_positive(n)?;
    Ok(pow2(n - 1) + pow2((n - 1) / 2) - n)
}

/// Odd Grassmannian permutations of even size `n` with descent at odd `k`:
/// `C(n, k) / 2`.
pub fn odd_count_descent_at(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!(
            "size {n} must be even and positive"
        )));
    }
    if k % 2 != 1 || k >= n {
        return Err(Error::OutOfRange(format!(
            "descent position {k} must be odd and below {n}"
        )));
    }
    Ok(binomial(n, k) / 2u32)
}

fn is_odd(p: &Permutation) -> bool {
    p.inversion_count() % 2 == 1
}

fn single_descent(p: &Permutation) -> Result<usize> {
    match p.descent_positions()[..] {
        [d] => Ok(d),
        _ => Err(Error::Domain(format!(
            "{p} is not a non-identity Grassmannian permutation"
        ))),
    }
}

/// `xi : G^odd_{2m} -> G^odd_{2m+1}`, image avoiding a final `2m+1`.
///
/// If `p` does not end with `2m` the image is `1 ⊕ p`. Otherwise the final
/// `2m` is dropped, the other entries are shifted up by one, and the pair
/// `2m+1, 1` is inserted right after the descent top.
pub fn xi_map(p: &Permutation) -> Result<Permutation> {
    let n = p.len();
    if n == 0 || !n.is_multiple_of(2) || !is_odd(p) {
        return Err(Error::Domain(format!(
            "{p} is not an odd permutation of even size"
        )));
    }
    let d = single_descent(p)?;
    let values = p.values();
    if values[n - 1] as usize != n {
        return Ok(Permutation::identity(1).direct_sum(p));
    }
    let shifted: Vec<u32> = values[..n - 1].iter().map(|&v| v + 1).collect();
    let mut out = Vec::with_capacity(n + 1);
    out.extend_from_slice(&shifted[..d]);
    out.push(n as u32 + 1);
    out.push(1);
    out.extend_from_slice(&shifted[d..]);
    Permutation::new(out)
}

/// `psi : G^odd_{2m+1} -> G^odd_{2m+2}`, image = descents at even positions.
///
/// A descent at an even position gives `p ⊕ 1`; at an odd position the new
/// maximum `2m+2` is inserted right after the descent top.
pub fn psi_map(p: &Permutation) -> Result<Permutation> {
    let n = p.len();
    if n % 2 != 1 || !is_odd(p) {
        return Err(Error::Domain(format!(
            "{p} is not an odd permutation of odd size"
        )));
    }
    let d = single_descent(p)?;
    if d % 2 == 0 {
        return Ok(p.direct_sum(&Permutation::identity(1)));
    }
    let mut out = p.values().to_vec();
    out.insert(d, n as u32 + 1);
    Permutation::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{count_grassmannian, GrassmannianIter};
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn odd_grassmannians(n: usize) -> Vec<Permutation> {
        GrassmannianIter::new(n).unwrap().filter(is_odd).collect()
    }

    #[test]
    fn odd_sequence() {
        let expect = [0u32, 1, 2, 6, 12, 28, 56, 120, 240, 496];
        assert_eq!(odd_counts(10), expect.map(BigUint::from));
        assert_eq!(odd_count(1).unwrap(), 0u32.into());
        assert!(odd_count(0).is_err());
    }

    #[test]
    fn even_values() {
        assert_eq!(even_count(6).unwrap(), 30u32.into());
        assert_eq!(even_count(1).unwrap(), 1u32.into());
    }

    #[test]
    fn recurrences_match_closed_forms() {
        let odd = odd_counts(60);
        let even = even_counts(60);
        for n in 1..=60 {
            assert_eq!(odd[n - 1], odd_count_closed_form(n).unwrap(), "a_{n}");
            assert_eq!(even[n - 1], even_count_closed_form(n).unwrap(), "b_{n}");
            assert_eq!(&odd[n - 1] + &even[n - 1], count_grassmannian(n).unwrap());
        }
    }

    #[test]
    fn alternative_recurrence() {
        let a: Vec<BigInt> = odd_counts(40).into_iter().map(BigInt::from).collect();
        for n in 4..=40 {
            let i = n - 1;
            assert_eq!(a[i], &a[i - 1] * 2 + &a[i - 2] * 2 - &a[i - 3] * 4, "n={n}");
        }
    }

    #[test]
    fn split_identities() {
        let a = odd_counts(38);
        for m in 1..=18 {
            let at = |n: usize| &a[n - 1];
            assert_eq!(*at(2 * m + 1), at(2 * m) * 2u32);
            assert_eq!(*at(2 * m + 2), at(2 * m + 1) + pow2(2 * m));
        }
    }

    #[test]
    fn brute_force_counts() {
        for n in 1..=14 {
            let odd = odd_grassmannians(n).len();
            assert_eq!(odd_count(n).unwrap(), odd.into(), "n={n}");
            let even = GrassmannianIter::new(n).unwrap().count() - odd;
            assert_eq!(even_count(n).unwrap(), even.into(), "n={n}");
        }
    }

    #[test]
    fn descent_position_split() {
        assert_eq!(odd_count_descent_at(4, 1).unwrap(), 2u32.into());
        let at_one: Vec<Permutation> = odd_grassmannians(4)
            .into_iter()
            .filter(|q| q.descent_positions() == [1])
            .collect();
        assert_eq!(at_one, vec![p("2134"), p("4123")]);
        assert_eq!(odd_count_descent_at(2, 1).unwrap(), 1u32.into());
        let total: BigUint = (1..8)
            .step_by(2)
            .map(|k| odd_count_descent_at(8, k).unwrap())
            .sum();
        assert_eq!(total, 64u32.into());
        assert!(odd_count_descent_at(5, 1).is_err());
        assert!(odd_count_descent_at(6, 2).is_err());
        assert!(odd_count_descent_at(6, 7).is_err());
        for n in (2..=12).step_by(2) {
            for k in (1..n).step_by(2) {
                let listed = odd_grassmannians(n)
                    .iter()
                    .filter(|q| q.descent_positions() == [k])
                    .count();
                assert_eq!(
                    odd_count_descent_at(n, k).unwrap(),
                    listed.into(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn worked_maps() {
        assert_eq!(xi_map(&p("351246")).unwrap(), p("4671235"));
        assert_eq!(xi_map(&p("21")).unwrap(), p("132"));
        assert_eq!(psi_map(&p("35124")).unwrap(), p("351246"));
        assert_eq!(psi_map(&p("24513")).unwrap(), p("245613"));
    }

    #[test]
    fn maps_reject_outside_domain() {
        assert!(xi_map(&p("12")).is_err());
        assert!(xi_map(&p("213")).is_err());
        assert!(xi_map(&p("3412")).is_err());
        assert!(psi_map(&p("2143")).is_err());
        assert!(psi_map(&p("12345")).is_err());
        assert!(psi_map(&p("32145")).is_err());
    }

    #[test]
    fn xi_is_injective_and_parity_preserving() {
        for m in 1..=5 {
            let domain = odd_grassmannians(2 * m);
            let mut image = BTreeSet::new();
            for q in &domain {
                let r = xi_map(q).unwrap();
                let added = if q.values()[2 * m - 1] as usize == 2 * m {
                    2 * m as u64
                } else {
                    0
                };
                assert_eq!(r.inversion_count(), q.inversion_count() + added, "{q}");
                assert_ne!(r.values()[2 * m] as usize, 2 * m + 1);
                assert_eq!(r.descent_count(), 1);
                image.insert(r);
            }
            assert_eq!(image.len(), domain.len());
            let target: BTreeSet<Permutation> = odd_grassmannians(2 * m + 1)
                .into_iter()
                .filter(|r| r.values()[2 * m] as usize != 2 * m + 1)
                .collect();
            assert_eq!(image, target, "m={m}");
        }
    }

    #[test]
    fn psi_is_a_bijection_onto_even_descents() {
        for m in 0..=5 {
            let domain = odd_grassmannians(2 * m + 1);
            let image: BTreeSet<Permutation> = domain.iter().map(|q| psi_map(q).unwrap()).collect();
            assert_eq!(image.len(), domain.len());
            let target: BTreeSet<Permutation> = odd_grassmannians(2 * m + 2)
                .into_iter()
                .filter(|q| q.descent_positions()[0] % 2 == 0)
                .collect();
            assert_eq!(image, target, "m={m}");
        }
    }
}
