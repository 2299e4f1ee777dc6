//! Permutations in one-line notation.
//!
//! A permutation of n is stored as the sequence pi(1), ..., pi(n) of
//! values 1..=n. All public interfaces are 1-indexed to match the
//! usual combinatorial conventions; internal storage is a zero-based
//! vector.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    image: Vec<u32>,
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.image)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl Perm {
    /// Builds a permutation from its one-line notation, validating that
    /// each of 1..=n appears exactly once.
    pub fn from_one_line(image: Vec<u32>) -> Result<Perm> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation of 1..={n}: {image:?}"
                )));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Perm { image })
    }

    pub fn identity(n: u32) -> Perm {
        Perm {
            image: (1..=n).collect(),
        }
    }

    /// The transposition swapping values a and b (a != b), as a permutation.
    pub fn transposition(n: u32, a: u32, b: u32) -> Result<Perm> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidArgument(format!(
                "transposition needs two distinct values in 1..={n}, got ({a}, {b})"
            )));
        }
        let mut image: Vec<u32> = (1..=n).collect();
        image.swap(a as usize - 1, b as usize - 1);
        Ok(Perm { image })
    }

    pub fn n(&self) -> u32 {
        self.image.len() as u32
    }

    pub fn one_line(&self) -> &[u32] {
        &self.image
    }

    /// pi(i) for a 1-indexed position i.
    pub fn value_at(&self, i: u32) -> u32 {
        self.image[i as usize - 1]
    }

    pub fn first(&self) -> u32 {
        self.image[0]
    }

    pub fn last(&self) -> u32 {
        *self.image.last().expect("empty permutation")
    }

    /// True if pi(i) > pi(i+1), for 1 <= i <= n-1.
    pub fn descent_at(&self, i: u32) -> bool {
        self.image[i as usize - 1] > self.image[i as usize]
    }

    /// Number of positions i with pi(i) > pi(i+1).
    pub fn descent_count(&self) -> u32 {
        self.image.windows(2).filter(|w| w[0] > w[1]).count() as u32
    }

    /// Value complement: replaces every value v by n+1-v. Turns each
    /// ascent into a descent and vice versa.
    pub fn reverse_values(&self) -> Perm {
        let n = self.n();
        Perm {
            image: self.image.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// Position reversal: reads the one-line notation right to left.
    pub fn reverse_positions(&self) -> Perm {
        let mut image = self.image.clone();
        image.reverse();
        Perm { image }
    }

    /// Rollback: decrements every value, sending 1 to n.
    pub fn rollback(&self) -> Perm {
        let n = self.n();
        Perm {
            image: self
                .image
                .iter()
                .map(|&v| if v == 1 { n } else { v - 1 })
                .collect(),
        }
    }

    /// Composition self(other(i)). Panics on length mismatch.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Perm {
            image: other
                .image
                .iter()
                .map(|&v| self.image[v as usize - 1])
                .collect(),
        }
    }
}

/// All permutations of 1..=n in lexicographic order. Intended for
/// small n; the memory footprint is n * n!.
pub fn all_permutations(n: u32) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=n).collect();
    loop {
        out.push(Perm { image: cur.clone() });
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// Advances v to its lexicographic successor, returning false when v
/// was already the last permutation.
fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Visits every permutation of 1..=n exactly once (Heap's order),
/// passing the one-line array together with its descent count. The
/// count is maintained incrementally across swaps, so the callback
/// cost dominates.
pub(crate) fn for_each_permutation<F: FnMut(&[u32], u32)>(n: usize, mut visit: F) {
    let mut a: Vec<u32> = (1..=n as u32).collect();
    let mut des: u32 = 0;
    visit(&a, des);
    if n < 2 {
        return;
    }
    let mut c = vec![0usize; n];
    let mut i = 1usize;
    while i < n {
        if c[i] < i {
            let (p, q) = if i % 2 == 0 { (0, i) } else { (c[i], i) };
            des -= descents_touching(&a, p, q);
            a.swap(p, q);
            des += descents_touching(&a, p, q);
            visit(&a, des);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Descents among the adjacency edges incident to positions p and q
/// (p < q). These are the only edges a swap of p and q can change.
fn descents_touching(a: &[u32], p: usize, q: usize) -> u32 {
    let last_edge = a.len() - 1; // edges are 0..last_edge, edge e joins e and e+1
    let mut edges = [usize::MAX; 4];
    let mut m = 0;
    for cand in [p.wrapping_sub(1), p, q - 1, q] {
        if cand < last_edge && !edges[..m].contains(&cand) {
            edges[m] = cand;
            m += 1;
        }
    }
    edges[..m].iter().filter(|&&e| a[e] > a[e + 1]).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_one_line(vec![1, 1, 3]).is_err());
        assert!(Perm::from_one_line(vec![0, 1]).is_err());
        assert!(Perm::from_one_line(vec![1, 4, 2]).is_err());
        assert!(Perm::from_one_line(vec![2, 3, 1]).is_ok());
    }

    #[test]
    fn descent_counts() {
        assert_eq!(Perm::identity(5).descent_count(), 0);
        let rev = Perm::from_one_line(vec![5, 4, 3, 2, 1]).unwrap();
        assert_eq!(rev.descent_count(), 4);
        let p = Perm::from_one_line(vec![2, 3, 1]).unwrap();
        assert_eq!(p.descent_count(), 1);
    }

    #[test]
    fn transforms() {
        let p = Perm::from_one_line(vec![1, 3, 2]).unwrap();
        assert_eq!(p.reverse_values().one_line(), &[3, 1, 2]);
        let q = Perm::from_one_line(vec![2, 3, 1]).unwrap();
        assert_eq!(q.rollback().one_line(), &[1, 2, 3]);
        assert_eq!(
            Perm::identity(4).reverse_positions().one_line(),
            &[4, 3, 2, 1]
        );
    }

    #[test]
    fn rollback_cycles_back_after_n_steps() {
        let p = Perm::from_one_line(vec![3, 1, 4, 2]).unwrap();
        let mut q = p.clone();
        for _ in 0..4 {
            q = q.rollback();
        }
        assert_eq!(p, q);
    }

    #[test]
    fn compose_transposition_swaps_values() {
        let p = Perm::from_one_line(vec![2, 3, 1]).unwrap();
        let t = Perm::transposition(3, 1, 3).unwrap();
        assert_eq!(t.compose(&p).one_line(), &[2, 1, 3]);
    }

    #[test]
    fn lexicographic_enumeration_is_complete_and_sorted() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 24);
        for w in all.windows(2) {
            assert!(w[0].one_line() < w[1].one_line());
        }
    }

    #[test]
    fn heaps_enumeration_matches_naive_descent_count() {
        for n in 0..=7usize {
            let mut seen = HashSet::new();
            let mut total = 0u64;
            for_each_permutation(n, |a, d| {
                let naive = a.windows(2).filter(|w| w[0] > w[1]).count() as u32;
                assert_eq!(d, naive, "incremental descent count drifted at {a:?}");
                seen.insert(a.to_vec());
                total += 1;
            });
            let fact: u64 = (1..=n as u64).product::<u64>().max(1);
            assert_eq!(total, fact);
            assert_eq!(seen.len() as u64, fact);
        }
    }
}
