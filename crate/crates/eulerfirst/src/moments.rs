//! Exact distributional analysis of the first element of a permutation
//! conditioned on its descent count: rising moments, expected
//! endpoints, the seven-case unimodality classification, and exact
//! distances to the geometric law that the distribution approaches when
//! the descent count is small.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::arith::{binomial, count_to_ratio, factorial, ratio, ratio_of_counts, Count, Ratio};
use crate::error::{Error, Result};
use crate::exact::{eulerian, EulerRow, RefinedTable, DEFAULT_METHOD};

/// Exact law of pi(1) over permutations of n with d descents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstDist {
    n: u32,
    d: i64,
    probs: Vec<Ratio>,
}

impl FirstDist {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Probability that the tracked endpoint equals k, indexed by k-1.
    pub fn probs(&self) -> &[Ratio] {
        &self.probs
    }

    pub fn prob(&self, k: u32) -> Ratio {
        self.probs[k as usize - 1].clone()
    }

    /// The law read right to left.
    pub fn reversed(&self) -> Vec<Ratio> {
        self.probs.iter().rev().cloned().collect()
    }
}

fn conditioning(n: u32, d: i64) -> Result<Count> {
    let total = eulerian(n, d)?;
    if total.is_zero() {
        return Err(Error::UndefinedDistribution(format!(
            "no permutation of {n} has {d} descents"
        )));
    }
    Ok(total)
}

/// Law of pi(1) given d descents, as exact probabilities.
pub fn first_dist(n: u32, d: i64) -> Result<FirstDist> {
    let total = conditioning(n, d)?;
    let table = RefinedTable::cached(n, DEFAULT_METHOD)?;
    let probs: Vec<Ratio> = (1..=n as i64)
        .map(|k| ratio_of_counts(&table.count(d, k), &total))
        .collect();
    debug_assert!(probs.iter().sum::<Ratio>().is_one());
    Ok(FirstDist { n, d, probs })
}

/// Law of pi(n) given d descents. By the complement symmetry this is
/// the reversal of [`first_dist`] at the same d, and coincides with
/// [`first_dist`] at n-1-d.
pub fn last_dist(n: u32, d: i64) -> Result<FirstDist> {
    let total = conditioning(n, d)?;
    let table = RefinedTable::cached(n, DEFAULT_METHOD)?;
    let probs: Vec<Ratio> = (1..=n as i64)
        .map(|k| ratio_of_counts(&table.count(n as i64 - 1 - d, k), &total))
        .collect();
    Ok(FirstDist { n, d, probs })
}

/// m-th rising moment of pi(1) given d descents, via the summation
/// formula E(n,d) mu_m = m! sum_j (-1)^(d-j) C(n, d-j) sum_{l<n} C(m+n, l) j^l.
pub fn rising_moment(n: u32, d: i64, m: u32) -> Result<Ratio> {
    let total = conditioning(n, d)?;
    let mut acc = BigInt::zero();
    for j in 0..=d {
        let b = binomial(n as u64, d - j);
        if b.is_zero() {
            continue;
        }
        // truncated binomial expansion of (j+1)^(m+n)
        let mut inner = Count::zero();
        let mut jpow = Count::one();
        for l in 0..n as i64 {
            inner += binomial(m as u64 + n as u64, l) * &jpow;
            jpow *= Count::from(j as u64);
        }
        let term = BigInt::from(b * inner);
        if (d - j) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let numer = BigInt::from(factorial(m as u64)) * acc;
    Ok(Ratio::new(numer, BigInt::from(total)))
}

/// m-th rising moment computed directly from the exact law:
/// sum_k k(k+1)...(k+m-1) P(pi(1) = k). Must agree with
/// [`rising_moment`]; the two routes share no code.
pub fn rising_moment_direct(n: u32, d: i64, m: u32) -> Result<Ratio> {
    let dist = first_dist(n, d)?;
    let mut acc = Ratio::zero();
    for k in 1..=n as u64 {
        let mut rf = Count::one();
        for i in 0..m as u64 {
            rf *= Count::from(k + i);
        }
        acc += count_to_ratio(&rf) * &dist.probs()[k as usize - 1];
    }
    Ok(acc)
}

/// Left side of the lattice-path identity
/// sum_{r=0}^{l} C(r+m, r) C(n-1-r, l-r), which counts north/east
/// paths by where they cross x = m + 1/2 and must equal C(m+n, l).
pub fn lattice_path_sum(m: u32, n: u32, l: u32) -> Count {
    let mut acc = Count::zero();
    for r in 0..=l.min(n.saturating_sub(1)) {
        acc += binomial((r + m) as u64, r as i64) * binomial((n - 1 - r) as u64, (l - r) as i64);
    }
    acc
}

/// Expected value of pi(1) given d descents, computed from the table.
/// The result is exactly d + 1, and that identity is asserted.
pub fn expected_first(n: u32, d: i64) -> Result<Ratio> {
    let value = endpoint_expectation(n, d, false)?;
    assert_eq!(value, ratio(d + 1, 1), "expected first element is d + 1");
    Ok(value)
}

/// Expected value of pi(n) given d descents; exactly n - d, asserted.
pub fn expected_last(n: u32, d: i64) -> Result<Ratio> {
    let value = endpoint_expectation(n, d, true)?;
    assert_eq!(value, ratio(n as i64 - d, 1), "expected last element is n - d");
    Ok(value)
}

fn endpoint_expectation(n: u32, d: i64, last: bool) -> Result<Ratio> {
    let total = conditioning(n, d)?;
    let table = RefinedTable::cached(n, DEFAULT_METHOD)?;
    let row_d = if last { n as i64 - 1 - d } else { d };
    let mut acc = Count::zero();
    for k in 1..=n as i64 {
        acc += table.count(row_d, k) * Count::from(k as u64);
    }
    Ok(ratio_of_counts(&acc, &total))
}

/// Largest relative deviation of the law of pi(1) from the geometric
/// law with parameter p = d/(d+1):
/// max_k | P(pi(1)=k) / ((1-p) p^(k-1)) - 1 |, exact.
pub fn geometric_ratio_sup(n: u32, d: i64) -> Result<Ratio> {
    let dist = geometric_args(n, d)?;
    let p = ratio(d, d + 1);
    let mut geom = ratio(1, d + 1); // (1-p) p^(k-1)
    let mut sup = Ratio::zero();
    for k in 1..=n {
        let rel = (dist.prob(k) / &geom - Ratio::one()).abs();
        if rel > sup {
            sup = rel;
        }
        geom *= &p;
    }
    Ok(sup)
}

/// Total variation distance between the law of pi(1) and the geometric
/// law with parameter p = d/(d+1). The geometric law has unbounded
/// support; its mass p^n beyond n is charged to the distance in full.
pub fn tvd_geometric(n: u32, d: i64) -> Result<Ratio> {
    let dist = geometric_args(n, d)?;
    let p = ratio(d, d + 1);
    let mut geom = ratio(1, d + 1);
    let mut l1 = Ratio::zero();
    for k in 1..=n {
        l1 += (dist.prob(k) - &geom).abs();
        geom *= &p;
    }
    l1 += p.pow(n as i32); // geometric tail mass beyond n
    Ok(l1 / ratio(2, 1))
}

fn geometric_args(n: u32, d: i64) -> Result<FirstDist> {
    if d < 1 || d >= n as i64 {
        return Err(Error::InvalidArgument(format!(
            "geometric comparison needs 1 <= d <= n-1, got n={n}, d={d}"
        )));
    }
    first_dist(n, d)
}

/// The seven shape cases of the sequence F(n,d,n), F(n,d,n-1), ...,
/// F(n,d,1), which is monotone or single-peaked depending on where d
/// sits relative to (n-1)/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnimodalCase {
    /// d = 0: zeros, then a final 1.
    I,
    /// 1 <= d <= (n-3)/2: strictly increasing.
    II,
    /// n even, d = (n-2)/2: strictly increasing, last two equal.
    III,
    /// n odd, d = (n-1)/2: strict peak at k = (n+1)/2.
    IV,
    /// n even, d = n/2: first two equal, then strictly decreasing.
    V,
    /// (n+1)/2 <= d <= n-2: strictly decreasing.
    VI,
    /// d = n-1: an initial 1, then zeros.
    VII,
}

impl UnimodalCase {
    pub fn label(self) -> &'static str {
        match self {
            UnimodalCase::I => "i",
            UnimodalCase::II => "ii",
            UnimodalCase::III => "iii",
            UnimodalCase::IV => "iv",
            UnimodalCase::V => "v",
            UnimodalCase::VI => "vi",
            UnimodalCase::VII => "vii",
        }
    }
}

/// Classifies (n, d) into its shape case and verifies the full chain of
/// comparisons over the row, returning the label and whether the chain
/// holds exactly.
pub fn unimodal_case(n: u32, d: i64) -> Result<(UnimodalCase, bool)> {
    if n < 1 || d < 0 || d >= n as i64 {
        return Err(Error::InvalidArgument(format!(
            "unimodal_case needs 0 <= d <= n-1, got n={n}, d={d}"
        )));
    }
    let table = RefinedTable::cached(n, DEFAULT_METHOD)?;
    // s[i] = F(n, d, n - i): the row read from k = n down to k = 1
    let s: Vec<Count> = (0..n as i64).map(|i| table.count(d, n as i64 - i)).collect();
    let last = s.len() - 1;
    let n64 = n as i64;
    let case = if d == 0 {
        UnimodalCase::I
    } else if d == n64 - 1 {
        UnimodalCase::VII
    } else if 2 * d <= n64 - 3 {
        UnimodalCase::II
    } else if n % 2 == 0 && 2 * d == n64 - 2 {
        UnimodalCase::III
    } else if n % 2 == 1 && 2 * d == n64 - 1 {
        UnimodalCase::IV
    } else if n % 2 == 0 && 2 * d == n64 {
        UnimodalCase::V
    } else if 2 * d >= n64 + 1 && d <= n64 - 2 {
        UnimodalCase::VI
    } else {
        unreachable!("the seven cases cover 0 <= d <= n-1")
    };
    let holds = match case {
        UnimodalCase::I => s[..last].iter().all(|v| v.is_zero()) && s[last] == Count::one(),
        UnimodalCase::II => (0..last).all(|i| s[i] < s[i + 1]),
        UnimodalCase::III => (0..last - 1).all(|i| s[i] < s[i + 1]) && s[last - 1] == s[last],
        UnimodalCase::IV => {
            // peak at k = (n+1)/2, i.e. index (n-1)/2
            let peak = (n as usize - 1) / 2;
            (0..peak).all(|i| s[i] < s[i + 1]) && (peak..last).all(|i| s[i] > s[i + 1])
        }
        UnimodalCase::V => s[0] == s[1] && (1..last).all(|i| s[i] > s[i + 1]),
        UnimodalCase::VI => (0..last).all(|i| s[i] > s[i + 1]),
        UnimodalCase::VII => s[0] == Count::one() && s[1..].iter().all(|v| v.is_zero()),
    };
    Ok((case, holds))
}

/// Mean (n-1)/2 and variance (n+1)/12 of the descent count of a
/// uniform permutation of n. For n >= 2 the pair is verified exactly
/// against the full Eulerian distribution; at n = 1 the variance
/// formula does not apply (the one-point law has variance 0), so the
/// formula value is returned unchecked there.
pub fn des_mean_var(n: u32) -> Result<(Ratio, Ratio)> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "des_mean_var: n must be >= 1, got {n}"
        )));
    }
    let mean = ratio(n as i64 - 1, 2);
    let var = ratio(n as i64 + 1, 12);
    if n >= 2 {
        let row = EulerRow::build(n)?;
        let total = count_to_ratio(&factorial(n as u64));
        let mut m1 = Ratio::zero();
        let mut m2 = Ratio::zero();
        for d in 0..n as i64 {
            let w = count_to_ratio(&row.get(d));
            m1 += ratio(d, 1) * &w;
            m2 += ratio(d * d, 1) * &w;
        }
        m1 /= &total;
        m2 /= &total;
        let dist_var = m2 - &m1 * &m1;
        assert_eq!(m1, mean, "descent mean mismatch at n={n}");
        assert_eq!(dist_var, var, "descent variance mismatch at n={n}");
    }
    Ok((mean, var))
}
