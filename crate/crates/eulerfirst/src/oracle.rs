//! Brute-force ground truth.
//!
//! Everything here is produced by direct enumeration over S_n: the
//! joint counts of (descents, first element, last element), linear
//! extensions of small posets, and descent polynomials of explicit
//! permutation sets. The rest of the crate is validated against these
//! tables, so this module must stay independent of the closed forms
//! and recurrences.

use crate::arith::Count;
use crate::error::{Error, Result};
use crate::perm::{for_each_permutation, Perm};
use crate::poly::Poly;

/// Default bound on exhaustive enumeration (10! is about 3.6M
/// permutations). Callers can override it explicitly.
pub const DEFAULT_ENUM_CAP: u32 = 10;

/// Exact counts of permutations of n by (descents, first, last).
#[derive(Clone, Debug)]
pub struct JointTable {
    n: u32,
    // flattened [d][first-1][last-1]; n! fits u64 comfortably for any
    // enumerable size
    counts: Vec<u64>,
}

impl JointTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    fn idx(&self, d: u32, first: u32, last: u32) -> usize {
        let n = self.n as usize;
        (d as usize * n + first as usize - 1) * n + last as usize - 1
    }

    /// Count of permutations with the given descent number, first and
    /// last value; zero for out-of-range indices.
    pub fn get(&self, d: i64, first: u32, last: u32) -> Count {
        if d < 0 || d >= self.n as i64 || first == 0 || first > self.n || last == 0 || last > self.n
        {
            return Count::from(0u32);
        }
        Count::from(self.counts[self.idx(d as u32, first, last)])
    }

    pub fn total(&self) -> Count {
        Count::from(self.counts.iter().sum::<u64>())
    }

    /// Marginal over the last element: permutations with d descents
    /// beginning with k.
    pub fn refined_first_marginal(&self, d: i64, k: u32) -> Count {
        (1..=self.n).map(|last| self.get(d, k, last)).sum()
    }

    /// Marginal over the first element: permutations with d descents
    /// ending with k.
    pub fn refined_last_marginal(&self, d: i64, k: u32) -> Count {
        (1..=self.n).map(|first| self.get(d, first, k)).sum()
    }

    /// Marginal over both endpoints: the Eulerian number.
    pub fn euler_marginal(&self, d: i64) -> Count {
        let mut acc = Count::from(0u32);
        for first in 1..=self.n {
            for last in 1..=self.n {
                acc += self.get(d, first, last);
            }
        }
        acc
    }
}

/// Enumerates S_n and tabulates (descents, first, last), refusing
/// above [`DEFAULT_ENUM_CAP`].
pub fn enumerate_joint(n: u32) -> Result<JointTable> {
    enumerate_joint_with_cap(n, DEFAULT_ENUM_CAP)
}

/// As [`enumerate_joint`] with an explicit cap override.
pub fn enumerate_joint_with_cap(n: u32, cap: u32) -> Result<JointTable> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "enumerate_joint: n must be >= 1, got {n}"
        )));
    }
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "enumerate_joint: n = {n} exceeds the enumeration cap {cap}; \
             raise the cap explicitly to enumerate {n}! permutations"
        )));
    }
    // u64 totals stay exact for anything remotely enumerable
    if n > 20 {
        return Err(Error::ResourceLimit(format!(
            "enumerate_joint: n = {n} is beyond any feasible enumeration"
        )));
    }
    let nu = n as usize;
    let mut counts = vec![0u64; nu * nu * nu];
    for_each_permutation(nu, |a, des| {
        let first = a[0] as usize;
        let last = a[nu - 1] as usize;
        counts[(des as usize * nu + first - 1) * nu + last - 1] += 1;
    });
    Ok(JointTable { n, counts })
}

/// Linear extensions of the partial order generated by `relations`
/// (pairs (a, b) meaning a precedes b) on the ground set 1..=n,
/// generated in lexicographic order. Rejects cyclic relation sets.
pub fn linear_extensions(n: u32, relations: &[(u32, u32)]) -> Result<Vec<Perm>> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "linear_extensions: n must be >= 1, got {n}"
        )));
    }
    if n > DEFAULT_ENUM_CAP {
        return Err(Error::ResourceLimit(format!(
            "linear_extensions: n = {n} exceeds the enumeration cap {DEFAULT_ENUM_CAP}"
        )));
    }
    let nu = n as usize;
    let mut below = vec![vec![false; nu]; nu]; // below[a][b]: a precedes b
    for &(a, b) in relations {
        if a == 0 || a > n || b == 0 || b > n {
            return Err(Error::InvalidArgument(format!(
                "linear_extensions: relation ({a}, {b}) is outside 1..={n}"
            )));
        }
        below[a as usize - 1][b as usize - 1] = true;
    }
    // transitive closure
    for m in 0..nu {
        let reachable: Vec<usize> = (0..nu).filter(|&b| below[m][b]).collect();
        for a in 0..nu {
            if below[a][m] {
                for &b in &reachable {
                    below[a][b] = true;
                }
            }
        }
    }
    for a in 0..nu {
        if below[a][a] {
            return Err(Error::InvalidArgument(
                "linear_extensions: relations are cyclic".into(),
            ));
        }
        for b in 0..a {
            if below[a][b] && below[b][a] {
                return Err(Error::InvalidArgument(
                    "linear_extensions: relations are cyclic".into(),
                ));
            }
        }
    }
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::with_capacity(nu);
    let mut placed = vec![false; nu];
    extend_rec(nu, &below, &mut prefix, &mut placed, &mut out);
    Ok(out)
}

fn extend_rec(
    n: usize,
    below: &[Vec<bool>],
    prefix: &mut Vec<u32>,
    placed: &mut [bool],
    out: &mut Vec<Perm>,
) {
    if prefix.len() == n {
        out.push(Perm::from_one_line(prefix.clone()).expect("extension is a permutation"));
        return;
    }
    'next: for v in 0..n {
        if placed[v] {
            continue;
        }
        for u in 0..n {
            if below[u][v] && !placed[u] {
                continue 'next;
            }
        }
        placed[v] = true;
        prefix.push(v as u32 + 1);
        extend_rec(n, below, prefix, placed, out);
        prefix.pop();
        placed[v] = false;
    }
}

/// The star poset with k below every other element of 1..=n; its
/// linear extensions are exactly the permutations beginning with k.
pub fn star_poset(n: u32, k: u32) -> Vec<(u32, u32)> {
    (1..=n).filter(|&a| a != k).map(|a| (k, a)).collect()
}

/// The bounded poset with k below everything and l above everything;
/// its linear extensions begin with k and end with l.
pub fn bounded_poset(n: u32, k: u32, l: u32) -> Vec<(u32, u32)> {
    let mut rel = Vec::new();
    for a in 1..=n {
        if a != k {
            rel.push((k, a));
        }
        if a != l && a != k {
            rel.push((a, l));
        }
    }
    rel
}

/// Descent polynomial of an explicit set: the coefficient of x^d is
/// the number of input permutations with exactly d descents.
pub fn descent_poly_of_set(perms: &[Perm]) -> Result<Poly> {
    let Some(first) = perms.first() else {
        return Ok(Poly::zero());
    };
    let n = first.n();
    let mut counts = vec![Count::from(0u32); n.max(1) as usize];
    for p in perms {
        if p.n() != n {
            return Err(Error::InvalidArgument(
                "descent_poly_of_set: permutations have mixed lengths".into(),
            ));
        }
        counts[p.descent_count() as usize] += Count::from(1u32);
    }
    Ok(Poly::from_counts(&counts))
}
