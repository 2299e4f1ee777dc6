//! Real-rootedness of descent polynomials.
//!
//! The descent polynomial of the permutations of u+v+1 that begin with
//! u+1 is written c(u, v) here. Dividing by (1-x)^(u+v+1) gives the
//! rational function h(u, v) = sum_j j^u (j+1)^v x^j, and the operator
//! identities (Dx) h(u, v) = h(u, v+1) and (xD) h(u, v) = h(u+1, v)
//! build the whole family from h(0, 0) = 1/(1-x). Rolle's theorem
//! applied along that tower forces every c(u, v) to have distinct real
//! roots, which settles the Neggers-Stanley property for star-shaped
//! posets: their linear-extension descent polynomials are exactly these
//! c(u, v), their reversals, and shifts by x.
//!
//! Root counting is exact: Sturm chains over the rationals, reduced to
//! primitive integer polynomials at every step to control coefficient
//! growth. Interlacing is checked on isolating intervals produced by
//! Sturm bisection, refined until the two root sets are separated.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{count_to_ratio, factorial, ratio, Ratio};
use crate::error::{Error, Result};
use crate::exact::{RefinedTable, DEFAULT_METHOD};
use crate::poly::Poly;

/// Bound on u+v+1 for tower constructions.
pub const DEFAULT_TOWER_CAP: u32 = 40;

/// A rational function N(x) / (1-x)^m with polynomial numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub numerator: Poly,
    pub pole_order: u32,
}

/// Outcome of an exact real-root count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootVerdict {
    /// Degree of the polynomial examined (0 for nonzero constants).
    pub degree: usize,
    /// Number of distinct real roots over the whole line.
    pub distinct_real_roots: usize,
    /// Whether the polynomial has no repeated roots.
    pub squarefree: bool,
    /// True exactly when squarefree and all roots are real.
    pub verdict: bool,
}

/// c(u, v) = sum_d F(u+v+1, d, u+1) x^d: the descent polynomial of the
/// permutations of u+v+1 beginning with u+1. Its degree is u when
/// v = 0 and u+v-1 otherwise; x divides it exactly once when u > 0 and
/// not at all when u = 0; its value at 1 is (u+v)!.
pub fn c_poly(u: u32, v: u32) -> Result<Poly> {
    let n = u + v + 1;
    if n > DEFAULT_TOWER_CAP {
        return Err(Error::ResourceLimit(format!(
            "c_poly: u+v+1 = {n} exceeds the tower cap {DEFAULT_TOWER_CAP}"
        )));
    }
    let table = RefinedTable::cached(n, DEFAULT_METHOD)?;
    let coeffs: Vec<Ratio> = (0..n as i64)
        .map(|d| count_to_ratio(&table.count(d, u as i64 + 1)))
        .collect();
    Ok(Poly::from_coeffs(coeffs))
}

/// Builds h(u, v) by operator recursion from h(0, 0) = 1/(1-x):
/// v applications of Dx followed by u applications of xD, entirely on
/// the numerator/pole representation. The numerator is checked to be
/// nonvanishing at x = 1 (its value there must be (u+v)!), so the pole
/// order is genuine.
pub fn h_numerator(u: u32, v: u32) -> Result<HRep> {
    let n = u + v + 1;
    if n > DEFAULT_TOWER_CAP {
        return Err(Error::ResourceLimit(format!(
            "h_numerator: u+v+1 = {n} exceeds the tower cap {DEFAULT_TOWER_CAP}"
        )));
    }
    let mut num = Poly::one();
    let mut pole = 1u32;
    for _ in 0..v {
        num = dx_step(&num, pole);
        pole += 1;
    }
    for _ in 0..u {
        num = xd_step(&num, pole);
        pole += 1;
    }
    let at_one = num.eval(&ratio(1, 1));
    if at_one != count_to_ratio(&factorial((u + v) as u64)) {
        return Err(Error::Internal(format!(
            "h_numerator({u}, {v}) evaluates to {at_one} at x = 1, expected (u+v)!"
        )));
    }
    Ok(HRep {
        numerator: num,
        pole_order: pole,
    })
}

/// Dx applied to N/(1-x)^m: numerator (1-x)(N + xN') + m x N over
/// (1-x)^(m+1).
fn dx_step(num: &Poly, m: u32) -> Poly {
    let x = Poly::from_i64(&[0, 1]);
    let one_minus_x = Poly::from_i64(&[1, -1]);
    let inner = num + &(&x * &num.derivative());
    let scaled = num.scale(&ratio(m as i64, 1));
    &(&one_minus_x * &inner) + &(&x * &scaled)
}

/// xD applied to N/(1-x)^m: numerator x(1-x)N' + m x N over (1-x)^(m+1).
fn xd_step(num: &Poly, m: u32) -> Poly {
    let x = Poly::from_i64(&[0, 1]);
    let one_minus_x = Poly::from_i64(&[1, -1]);
    let scaled = num.scale(&ratio(m as i64, 1));
    &x * &(&(&one_minus_x * &num.derivative()) + &scaled)
}

/// Rescales to a primitive integer polynomial (coprime integer
/// coefficients), preserving signs. The zero polynomial maps to itself.
fn primitive(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let mut lcm_den = BigInt::one();
    for c in p.coeffs() {
        lcm_den = lcm_den.lcm(c.denom());
    }
    let mut gcd_num = BigInt::zero();
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm_den / c.denom()))
        .collect();
    for v in &ints {
        gcd_num = gcd_num.gcd(v);
    }
    Poly::from_coeffs(
        ints.into_iter()
            .map(|v| Ratio::from_integer(v / &gcd_num))
            .collect(),
    )
}

/// Primitive gcd with positive leading coefficient.
fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut r0 = primitive(a);
    let mut r1 = primitive(b);
    while !r1.is_zero() {
        let r2 = primitive(&r0.div_rem(&r1).1);
        r0 = r1;
        r1 = r2;
    }
    if r0.leading().is_some_and(|c| c.is_negative()) {
        primitive(&-&r0)
    } else {
        r0
    }
}

/// Squarefree part of p together with whether p was already squarefree.
fn squarefree_part(p: &Poly) -> (Poly, bool) {
    let g = poly_gcd(p, &p.derivative());
    if g.degree() == Some(0) {
        return (primitive(p), true);
    }
    let (q, r) = p.div_rem(&g);
    debug_assert!(r.is_zero(), "gcd must divide exactly");
    (primitive(&q), false)
}

/// Sturm chain of a squarefree polynomial, every entry reduced to a
/// primitive integer polynomial. Positive rescaling keeps all signs,
/// so the sign-variation counts are unchanged.
fn sturm_chain(p_sf: &Poly) -> Vec<Poly> {
    let mut chain = vec![primitive(p_sf)];
    let d1 = primitive(&p_sf.derivative());
    if d1.is_zero() {
        return chain;
    }
    chain.push(d1);
    loop {
        let m = chain.len();
        let rem = chain[m - 2].div_rem(&chain[m - 1]).1;
        if rem.is_zero() {
            break;
        }
        chain.push(primitive(&-&rem));
    }
    chain
}

#[derive(Clone, Copy)]
enum Place<'a> {
    NegInf,
    At(&'a Ratio),
    PosInf,
}

fn sign_at(p: &Poly, place: Place) -> i8 {
    if p.is_zero() {
        return 0;
    }
    let s = match place {
        Place::NegInf => {
            let lead = p.leading().unwrap();
            let flip = if p.degree().unwrap() % 2 == 1 { -1 } else { 1 };
            sign_of(lead) * flip
        }
        Place::PosInf => sign_of(p.leading().unwrap()),
        Place::At(x) => sign_of(&p.eval(x)),
    };
    s
}

fn sign_of(r: &Ratio) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

fn variations(chain: &[Poly], place: Place) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for p in chain {
        let s = sign_at(p, place);
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

/// Distinct real roots in the half-open interval (lo, hi].
fn roots_in(chain: &[Poly], lo: &Ratio, hi: &Ratio) -> usize {
    variations(chain, Place::At(lo)) - variations(chain, Place::At(hi))
}

/// Exact count of distinct real roots of p over the whole line,
/// via the squarefree part and its Sturm chain.
pub fn sturm_distinct_real_roots(p: &Poly) -> Result<RootVerdict> {
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "sturm_distinct_real_roots: zero polynomial".into(),
        ));
    }
    let degree = p.degree().unwrap();
    let (sf, squarefree) = squarefree_part(p);
    let distinct = if sf.degree() == Some(0) {
        0
    } else {
        let chain = sturm_chain(&sf);
        variations(&chain, Place::NegInf) - variations(&chain, Place::PosInf)
    };
    Ok(RootVerdict {
        degree,
        distinct_real_roots: distinct,
        squarefree,
        verdict: squarefree && distinct == degree,
    })
}

/// A strict upper bound on the absolute value of every root.
fn root_bound(p: &Poly) -> Ratio {
    let lead = p.leading().unwrap().abs();
    let mut m = Ratio::zero();
    let deg = p.degree().unwrap();
    for c in &p.coeffs()[..deg] {
        let r = c.abs() / &lead;
        if r > m {
            m = r;
        }
    }
    m + ratio(2, 1)
}

/// A cut point in (lo, hi) where p does not vanish. The candidate list
/// holds 91 distinct points, more than any degree the tower cap
/// admits, so some candidate is guaranteed to be a non-root.
fn non_root_cut(p: &Poly, lo: &Ratio, hi: &Ratio) -> Ratio {
    let width = hi - lo;
    for denom in [2i64, 3, 5, 7, 11, 13, 17, 19, 23] {
        for numer in 1..denom {
            let cand = lo + &width * ratio(numer, denom);
            if !p.eval(&cand).is_zero() {
                return cand;
            }
        }
    }
    unreachable!("more candidate cuts than the polynomial has roots");
}

/// Isolating intervals (lo, hi] for every distinct real root of p,
/// sorted left to right. Each interval contains exactly one root and
/// has non-root endpoints.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<(Ratio, Ratio)>> {
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "isolate_real_roots: zero polynomial".into(),
        ));
    }
    let (sf, _) = squarefree_part(p);
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(&sf);
    let bound = root_bound(&sf);
    let lo = -&bound;
    let mut out = Vec::new();
    let mut stack = vec![(lo, bound)];
    while let Some((a, b)) = stack.pop() {
        match roots_in(&chain, &a, &b) {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let cut = non_root_cut(&sf, &a, &b);
                stack.push((a.clone(), cut.clone()));
                stack.push((cut, b));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Halves an isolating interval, keeping the side that holds the root.
fn refine_interval(chain: &[Poly], sf: &Poly, iv: &mut (Ratio, Ratio)) {
    let cut = non_root_cut(sf, &iv.0, &iv.1);
    if roots_in(chain, &iv.0, &cut) == 1 {
        iv.1 = cut;
    } else {
        iv.0 = cut;
    }
}

/// Descent-polynomial reversal within the degree window of S_n:
/// x^(n-1) p(1/x). Roots map to their inverses, with zeros appearing
/// or disappearing as the window bookkeeping dictates.
pub fn reverse_descent_poly(p: &Poly, n: u32) -> Poly {
    assert!(n >= 1, "window size must be positive");
    let w = n as usize - 1;
    assert!(
        p.degree().map_or(0, |d| d) <= w,
        "polynomial does not fit the degree window of S_{n}"
    );
    let coeffs: Vec<Ratio> = (0..=w).map(|i| p.coeff(w - i)).collect();
    Poly::from_coeffs(coeffs)
}

/// Verdict for the descent polynomial of permutations of n beginning
/// with k, which is c(k-1, n-k). Expected true for every valid input.
pub fn check_neggers_first_fixed(n: u32, k: u32) -> Result<RootVerdict> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "check_neggers_first_fixed needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    sturm_distinct_real_roots(&c_poly(k - 1, n - k)?)
}

/// The raw descent polynomial of permutations beginning with k and
/// ending with l: sum_d B(n, d, k, l) x^d.
pub fn both_ends_descent_poly(n: u32, k: u32, l: u32) -> Result<Poly> {
    let coeffs: Vec<Ratio> = (0..n as i64)
        .map(|d| Ok(count_to_ratio(&crate::exact::both_ends(n, d, k, l)?)))
        .collect::<Result<_>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// Verdict for the both-ends-fixed family. The rollback bijection
/// reduces the raw polynomial to a one-endpoint polynomial of S_{n-1}
/// (the reversal of c(m-1, n-1-m) when l = k+m, and c(m-1, n-1-m)
/// itself shifted by x when k = l+m); the verdict is computed on that
/// reduced polynomial. Expected true for every valid input.
pub fn check_neggers_both_fixed(n: u32, k: u32, l: u32) -> Result<RootVerdict> {
    if n < 2 || k < 1 || k > n || l < 1 || l > n {
        return Err(Error::InvalidArgument(format!(
            "check_neggers_both_fixed needs n >= 2 and endpoints in [1, n], got n={n}, k={k}, l={l}"
        )));
    }
    if k == l {
        return Err(Error::InvalidArgument(
            "check_neggers_both_fixed: endpoints must differ".into(),
        ));
    }
    let m = k.abs_diff(l);
    let base = c_poly(m - 1, n - 1 - m)?;
    let reduced = if l > k {
        reverse_descent_poly(&base, n - 1)
    } else {
        base
    };
    sturm_distinct_real_roots(&reduced)
}

/// Checks that the roots of consecutive tower numerators strictly
/// interlace, for the whole tower below (u, v): along
/// h(0,0) -> h(0,1) -> ... -> h(0,v) -> h(1,v) -> ... -> h(u,v).
///
/// Zero roots shared between parent and child are factored out first;
/// the remaining root sets must alternate child, parent, child, ...
/// from the left. Root positions are compared through disjoint
/// isolating intervals, so every comparison is exact.
pub fn interlacing_along_tower(u: u32, v: u32) -> Result<bool> {
    let mut num = Poly::one();
    let mut pole = 1u32;
    let mut parent = num.clone();
    for step in 0..(u + v) {
        if step < v {
            num = dx_step(&num, pole);
        } else {
            num = xd_step(&num, pole);
        }
        pole += 1;
        if !interlace_strictly(&parent, &num)? {
            return Ok(false);
        }
        parent = num.clone();
    }
    Ok(true)
}

/// Strict interlacing of the nonzero roots of child around parent.
pub fn interlace_strictly(parent: &Poly, child: &Poly) -> Result<bool> {
    if parent.is_zero() || child.is_zero() {
        return Err(Error::InvalidArgument(
            "interlace_strictly: zero polynomial".into(),
        ));
    }
    let strip = |p: &Poly| -> Poly {
        let (sf, _) = squarefree_part(p);
        sf.div_x_pow(sf.ord_zero())
    };
    let ps = strip(parent);
    let cs = strip(child);
    let mut p_iv = isolate_real_roots(&ps)?;
    let mut c_iv = isolate_real_roots(&cs)?;
    // all roots must be real for interlacing to make sense
    if p_iv.len() != ps.degree().unwrap_or(0) || c_iv.len() != cs.degree().unwrap_or(0) {
        return Ok(false);
    }
    if c_iv.len() != p_iv.len() && c_iv.len() != p_iv.len() + 1 {
        return Ok(false);
    }
    let p_chain = sturm_chain(&ps);
    let c_chain = sturm_chain(&cs);
    // refine until the isolating intervals of the two sets are disjoint
    for _round in 0..512 {
        let mut overlapping = None;
        'scan: for (i, p) in p_iv.iter().enumerate() {
            for (j, c) in c_iv.iter().enumerate() {
                if p.0.clone().max(c.0.clone()) < p.1.clone().min(c.1.clone()) {
                    overlapping = Some((i, j));
                    break 'scan;
                }
            }
        }
        match overlapping {
            None => break,
            Some((i, j)) => {
                refine_interval(&p_chain, &ps, &mut p_iv[i]);
                refine_interval(&c_chain, &cs, &mut c_iv[j]);
            }
        }
    }
    // a shared root would keep the intervals overlapping forever
    for p in &p_iv {
        for c in &c_iv {
            if p.0.clone().max(c.0.clone()) < p.1.clone().min(c.1.clone()) {
                return Ok(false);
            }
        }
    }
    // merge and require alternation starting with the child
    #[derive(PartialEq, Clone, Copy)]
    enum Tag {
        Parent,
        Child,
    }
    let mut merged: Vec<(Ratio, Tag)> = p_iv
        .into_iter()
        .map(|iv| (iv.0, Tag::Parent))
        .chain(c_iv.into_iter().map(|iv| (iv.0, Tag::Child)))
        .collect();
    merged.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(merged
        .iter()
        .enumerate()
        .all(|(i, (_, tag))| (*tag == Tag::Child) == (i % 2 == 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::eulerian;

    #[test]
    fn c_poly_small_values() {
        // c(0, 2): permutations of 3 beginning with 1: 123, 132
        assert_eq!(c_poly(0, 2).unwrap(), Poly::from_i64(&[1, 1]));
        // c(1, 3) is the n=5, k=2 column of the refined table
        assert_eq!(c_poly(1, 3).unwrap(), Poly::from_i64(&[0, 8, 14, 2]));
        // c(0, 0): the single permutation of 1
        assert_eq!(c_poly(0, 0).unwrap(), Poly::one());
        // c(u, 0) counts permutations of u+1 beginning with the maximum;
        // removing that first element shows it is x times the full
        // Eulerian polynomial of u. Degree u, with the reversal as the
        // unique permutation of maximal descent count.
        assert_eq!(c_poly(2, 0).unwrap(), Poly::from_i64(&[0, 1, 1]));
        for u in 1..=6u32 {
            let c = c_poly(u, 0).unwrap();
            assert_eq!(c.degree(), Some(u as usize));
            assert_eq!(c.coeff(u as usize), ratio(1, 1));
            for d in 1..=u as i64 {
                assert_eq!(
                    c.coeff(d as usize),
                    count_to_ratio(&eulerian(u, d - 1).unwrap())
                );
            }
        }
    }

    #[test]
    fn c_poly_degree_divisibility_and_value_at_one() {
        for u in 0..=19u32 {
            for v in 0..20 - u {
                if u + v == 0 {
                    continue;
                }
                let c = c_poly(u, v).unwrap();
                let expect_deg = if v == 0 { u } else { u + v - 1 } as usize;
                assert_eq!(c.degree(), Some(expect_deg), "u={u} v={v}");
                if u == 0 {
                    assert_eq!(c.ord_zero(), 0, "x must not divide c(0, v)");
                } else {
                    assert_eq!(c.ord_zero(), 1, "x divides c exactly once for u > 0");
                }
                assert_eq!(
                    c.eval(&ratio(1, 1)),
                    count_to_ratio(&factorial((u + v) as u64))
                );
            }
        }
    }

    #[test]
    fn c_poly_cap() {
        assert!(c_poly(20, 20).is_err());
        assert!(c_poly(20, 19).is_ok());
    }

    #[test]
    fn tower_numerators_match_direct_columns() {
        for u in 0..=19u32 {
            for v in 0..20 - u {
                let h = h_numerator(u, v).unwrap();
                assert_eq!(h.pole_order, u + v + 1);
                assert_eq!(h.numerator, c_poly(u, v).unwrap(), "u={u} v={v}");
            }
        }
    }

    #[test]
    fn known_tower_numerators() {
        assert_eq!(h_numerator(0, 0).unwrap().numerator, Poly::one());
        assert_eq!(h_numerator(0, 2).unwrap().numerator, Poly::from_i64(&[1, 1]));
        assert_eq!(h_numerator(0, 3).unwrap().numerator, Poly::from_i64(&[1, 4, 1]));
        assert_eq!(
            h_numerator(1, 3).unwrap().numerator,
            Poly::from_i64(&[0, 8, 14, 2])
        );
        assert_eq!(
            h_numerator(3, 3).unwrap().numerator,
            Poly::from_i64(&[0, 8, 160, 384, 160, 8])
        );
    }

    #[test]
    fn sturm_textbook_cases() {
        let two_real = Poly::from_i64(&[1, 4, 1]);
        let v = sturm_distinct_real_roots(&two_real).unwrap();
        assert_eq!(v.distinct_real_roots, 2);
        assert!(v.verdict);

        let no_real = Poly::from_i64(&[1, 0, 1]);
        let v = sturm_distinct_real_roots(&no_real).unwrap();
        assert_eq!(v.distinct_real_roots, 0);
        assert!(!v.verdict);

        // (x-1)^2 (x+2): squarefree failure detected
        let repeated = Poly::from_i64(&[2, -3, 0, 1]);
        let v = sturm_distinct_real_roots(&repeated).unwrap();
        assert!(!v.squarefree);
        assert_eq!(v.distinct_real_roots, 2);
        assert!(!v.verdict);

        let constant = Poly::one();
        let v = sturm_distinct_real_roots(&constant).unwrap();
        assert_eq!(v.degree, 0);
        assert!(v.verdict, "vacuous verdict for constants");

        assert!(sturm_distinct_real_roots(&Poly::zero()).is_err());
    }

    #[test]
    fn sturm_counts_rational_roots_exactly() {
        // (2x-1)(x+3)(3x+5): rational roots that bisection cuts can hit
        let p = &(&Poly::from_i64(&[-1, 2]) * &Poly::from_i64(&[3, 1])) * &Poly::from_i64(&[5, 3]);
        let v = sturm_distinct_real_roots(&p).unwrap();
        assert_eq!(v.distinct_real_roots, 3);
        assert!(v.verdict);
        let iv = isolate_real_roots(&p).unwrap();
        assert_eq!(iv.len(), 3);
        for w in iv.windows(2) {
            assert!(w[0].1 <= w[1].0, "intervals must be disjoint and sorted");
        }
    }

    #[test]
    fn tower_roots_are_negative() {
        // the nonzero roots of c(3, 3) are negative and distinct
        let c = c_poly(3, 3).unwrap();
        let stripped = c.div_x_pow(1);
        let iv = isolate_real_roots(&stripped).unwrap();
        assert_eq!(iv.len(), 4);
        assert!(iv.iter().all(|(_, hi)| *hi <= ratio(0, 1)));
    }

    #[test]
    fn first_fixed_verdicts_small() {
        for n in 1..=10u32 {
            for k in 1..=n {
                let v = check_neggers_first_fixed(n, k).unwrap();
                assert!(v.verdict, "n={n} k={k}: {v:?}");
            }
        }
        // (n, 1) is the Eulerian polynomial of n-1
        let v = check_neggers_first_fixed(9, 1).unwrap();
        assert!(v.verdict);
        assert_eq!(v.degree, 7);
        // degenerate single-permutation case
        let v = check_neggers_first_fixed(1, 1).unwrap();
        assert_eq!(v.degree, 0);
        assert!(v.verdict);
    }

    #[test]
    fn reverse_descent_poly_examples() {
        let p = Poly::from_i64(&[0, 2]);
        assert_eq!(reverse_descent_poly(&p, 3), p);
        let q = Poly::from_i64(&[1, 4, 1]);
        assert_eq!(reverse_descent_poly(&q, 3), q, "palindromic");
        let r = Poly::from_i64(&[3, 0, 1]);
        assert_eq!(
            reverse_descent_poly(&reverse_descent_poly(&r, 5), 5),
            r,
            "involution"
        );
    }

    #[test]
    fn both_fixed_verdicts_small() {
        for n in 2..=9u32 {
            for k in 1..=n {
                for l in 1..=n {
                    if k == l {
                        assert!(check_neggers_both_fixed(n, k, l).is_err());
                        continue;
                    }
                    let v = check_neggers_both_fixed(n, k, l).unwrap();
                    assert!(v.verdict, "n={n} k={k} l={l}: {v:?}");
                    // endpoint complement symmetry gives the same verdict
                    let w = check_neggers_both_fixed(n, n + 1 - k, n + 1 - l).unwrap();
                    assert_eq!(v.verdict, w.verdict);
                }
            }
        }
    }

    #[test]
    fn both_fixed_reduction_matches_raw_polynomial() {
        // the raw polynomial is the reduced one, shifted by x when the
        // rollback crosses the descent boundary (k > l)
        for n in 2..=8u32 {
            for k in 1..=n {
                for l in 1..=n {
                    if k == l {
                        continue;
                    }
                    let raw = both_ends_descent_poly(n, k, l).unwrap();
                    let m = k.abs_diff(l);
                    let base = c_poly(m - 1, n - 1 - m).unwrap();
                    let expect = if l > k {
                        reverse_descent_poly(&base, n - 1)
                    } else {
                        base.mul_x_pow(1)
                    };
                    assert_eq!(raw, expect, "n={n} k={k} l={l}");
                }
            }
        }
    }

    #[test]
    fn interlacing_small_towers() {
        for u in 0..=4u32 {
            for v in 0..=4u32 {
                assert!(
                    interlacing_along_tower(u, v).unwrap(),
                    "tower to ({u}, {v})"
                );
            }
        }
    }

    #[test]
    fn interlace_rejects_non_interlacing() {
        // roots {-1, -3} vs {-2, -4, -5}: two children in a row below -3
        let parent = &Poly::from_i64(&[1, 1]) * &Poly::from_i64(&[3, 1]);
        let child = &(&Poly::from_i64(&[2, 1]) * &Poly::from_i64(&[4, 1])) * &Poly::from_i64(&[5, 1]);
        assert!(!interlace_strictly(&parent, &child).unwrap());
        // shared root: never separates
        let shared = &Poly::from_i64(&[1, 1]) * &Poly::from_i64(&[2, 1]);
        let child2 = &shared * &Poly::from_i64(&[4, 1]);
        assert!(!interlace_strictly(&shared, &child2).unwrap());
    }
}
