//! Shared exact-arithmetic helpers: counts, rationals, factorials,
//! binomial coefficients, and integer powers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision non-negative count of permutations.
pub type Count = BigUint;

/// Exact rational number, kept in canonical reduced form with a
/// positive denominator.
pub type Ratio = num_rational::BigRational;

/// n! as an exact integer.
pub fn factorial(n: u64) -> Count {
    let mut acc = Count::one();
    for i in 2..=n {
        acc *= Count::from(i);
    }
    acc
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
pub fn binomial(n: u64, k: i64) -> Count {
    if k < 0 || k as u64 > n {
        return Count::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Count::one();
    for i in 0..k {
        acc = acc * Count::from(n - i) / Count::from(i + 1);
    }
    acc
}

/// base^exp over counts, with 0^0 = 1.
pub fn upow(base: u64, exp: u32) -> Count {
    let mut acc = Count::one();
    let b = Count::from(base);
    for _ in 0..exp {
        acc *= &b;
    }
    acc
}

/// Rational p/q from machine integers; q must be nonzero.
pub fn ratio(p: i64, q: i64) -> Ratio {
    Ratio::new(BigInt::from(p), BigInt::from(q))
}

/// Exact rational num/den from two counts; den must be nonzero.
pub fn ratio_of_counts(num: &Count, den: &Count) -> Ratio {
    Ratio::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn count_to_ratio(c: &Count) -> Ratio {
    Ratio::from_integer(BigInt::from(c.clone()))
}

/// Converts an alternating-sum result that is provably a count.
/// Panics if the value is negative, which would indicate a bug.
pub(crate) fn expect_count(value: BigInt, what: &str) -> Count {
    assert!(!value.is_negative(), "negative {what}: {value}");
    value.to_biguint().unwrap()
}
