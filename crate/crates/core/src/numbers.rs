//! Exact integer helpers shared by the closed-form counters.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `2^n` as a big integer.
pub fn pow2(n: usize) -> BigUint {
    BigUint::one() << n
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc == C(n, i + 1) after this step
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Catalan number `C_j = C(2j, j) / (j + 1)`.
pub fn catalan(j: usize) -> BigUint {
    binomial(2 * j, j) / (j + 1)
}
