//! Randomized invariants over permutations, polynomials, and the Sturm
//! machinery.

use eulerfirst::arith::{ratio, Ratio};
use eulerfirst::exact::{eulerian, f_window, refined_first};
use eulerfirst::poly::Poly;
use eulerfirst::roots::{reverse_descent_poly, sturm_distinct_real_roots};
use eulerfirst::series::gf_nd;
use eulerfirst::stein::uniform_perm;
use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_perm(n: u32, seed: u64) -> eulerfirst::perm::Perm {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    uniform_perm(&mut rng, n)
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..=9, 0..7).prop_map(|c| Poly::from_i64(&c))
}

proptest! {
    #[test]
    fn reversal_transform_laws(n in 1u32..40, seed: u64) {
        let p = random_perm(n, seed);
        let d = p.descent_count();
        let rv = p.reverse_values();
        prop_assert_eq!(rv.descent_count(), n - 1 - d);
        prop_assert_eq!(rv.first(), n + 1 - p.first());
        let rp = p.reverse_positions();
        prop_assert_eq!(rp.descent_count(), n - 1 - d);
        prop_assert_eq!(rp.last(), p.first());
    }

    #[test]
    fn rollback_n_times_is_identity(n in 1u32..25, seed: u64) {
        let p = random_perm(n, seed);
        let mut q = p.clone();
        for _ in 0..n {
            q = q.rollback();
        }
        prop_assert_eq!(p, q);
    }

    #[test]
    fn rollback_drift_rule(n in 2u32..30, seed: u64) {
        let p = random_perm(n, seed);
        let delta = p.rollback().descent_count() as i64 - p.descent_count() as i64;
        let expected = if p.first() == 1 { 1 } else if p.last() == 1 { -1 } else { 0 };
        prop_assert_eq!(delta, expected);
    }

    #[test]
    fn poly_product_rule(p in small_poly(), q in small_poly()) {
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn poly_division_invariant(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.div_rem(&b);
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.degree() < b.degree() || rem.is_zero());
    }

    #[test]
    fn sturm_counts_constructed_roots(
        nums in prop::collection::btree_set(-9i64..=9, 1..5),
        dens in prop::collection::vec(1i64..=4, 5),
    ) {
        // distinct rationals r_i; the product of (x - r_i) must have
        // exactly that many distinct real roots
        let roots: std::collections::BTreeSet<Ratio> = nums
            .iter()
            .zip(dens.iter().cycle())
            .map(|(&a, &b)| ratio(a, b))
            .collect();
        let mut p = Poly::one();
        for r in &roots {
            p = &p * &Poly::from_coeffs(vec![-r.clone(), ratio(1, 1)]);
        }
        let v = sturm_distinct_real_roots(&p).unwrap();
        prop_assert_eq!(v.distinct_real_roots, roots.len());
        prop_assert!(v.squarefree);
        prop_assert!(v.verdict);
        // squaring one factor breaks squarefreeness but not the count
        let r0 = roots.iter().next().unwrap();
        let sq = &p * &Poly::from_coeffs(vec![-r0.clone(), ratio(1, 1)]);
        let v2 = sturm_distinct_real_roots(&sq).unwrap();
        prop_assert_eq!(v2.distinct_real_roots, roots.len());
        prop_assert!(!v2.squarefree);
        prop_assert!(!v2.verdict);
    }

    #[test]
    fn descent_poly_reversal_is_involutive(p in small_poly(), extra in 0u32..4) {
        let n = p.degree().map_or(0, |d| d) as u32 + 1 + extra;
        prop_assert_eq!(reverse_descent_poly(&reverse_descent_poly(&p, n), n), p);
    }

    #[test]
    fn window_indexing_matches_table(n in 1u32..20, d in 0i64..20, k in 1u32..20) {
        prop_assume!(d < n as i64 && k <= n);
        prop_assert_eq!(
            f_window(n, n as i64 * d - k as i64).unwrap(),
            refined_first(n, d, k).unwrap()
        );
    }

    #[test]
    fn gf_nd_at_one_is_eulerian(n in 1u32..15, d in 0i64..15) {
        prop_assume!(d < n as i64);
        let p = gf_nd(n, d).unwrap();
        prop_assert_eq!(
            p.eval(&ratio(1, 1)),
            eulerfirst::arith::count_to_ratio(&eulerian(n, d).unwrap())
        );
    }
}
