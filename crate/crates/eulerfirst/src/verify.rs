//! Named verification checks over every module, grouped into suites.
//!
//! Each check re-derives one identity or invariant two independent ways
//! and reports the first witness on failure. The CLI `verify` command
//! runs these; the acceptance tests exercise the same ground at pinned
//! bounds.

use num_traits::{ToPrimitive, Zero};

use crate::arith::{binomial, count_to_ratio, factorial, ratio, Count};
use crate::error::{Error, Result};
use crate::exact::{both_ends, eulerian, f_window, refined_first, EulerRow, Method, RefinedTable};
use crate::moments;
use crate::oracle;
use crate::poly::Poly;
use crate::roots;
use crate::series;
use crate::stein;

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Human-readable scope of the check (bounds actually used).
    pub detail: String,
    /// First failing witness, if any.
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn pass(name: &str, detail: String) -> CheckOutcome {
        CheckOutcome {
            name: name.into(),
            passed: true,
            detail,
            witness: None,
        }
    }

    fn fail(name: &str, detail: String, witness: String) -> CheckOutcome {
        CheckOutcome {
            name: name.into(),
            passed: false,
            detail,
            witness: Some(witness),
        }
    }
}

/// A verification suite, one per module group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Core,
    Moments,
    Roots,
    Gf,
    Stein,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "core" => Ok(Suite::Core),
            "moments" => Ok(Suite::Moments),
            "roots" => Ok(Suite::Roots),
            "gf" => Ok(Suite::Gf),
            "stein" => Ok(Suite::Stein),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!("unknown suite: {other}"))),
        }
    }
}

/// Tuning knobs for a suite run.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    /// Main size bound.
    pub nmax: u32,
    /// Enumeration cap for oracle-backed checks (clamped against nmax).
    pub enum_cap: u32,
    /// Worker count for the Monte Carlo checks.
    pub workers: u32,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            nmax: 8,
            enum_cap: oracle::DEFAULT_ENUM_CAP,
            workers: 1,
        }
    }
}

/// Runs one suite and returns one outcome per check.
pub fn run_suite(suite: Suite, bounds: Bounds) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    match suite {
        Suite::Core => core_suite(bounds, &mut out)?,
        Suite::Moments => moments_suite(bounds, &mut out)?,
        Suite::Roots => roots_suite(bounds, &mut out)?,
        Suite::Gf => gf_suite(bounds, &mut out)?,
        Suite::Stein => stein_suite(bounds, &mut out)?,
        Suite::All => {
            core_suite(bounds, &mut out)?;
            moments_suite(bounds, &mut out)?;
            roots_suite(bounds, &mut out)?;
            gf_suite(bounds, &mut out)?;
            stein_suite(bounds, &mut out)?;
        }
    }
    Ok(out)
}

fn core_suite(bounds: Bounds, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let n_max = bounds.nmax;
    out.push(check_four_methods(n_max)?);
    out.push(check_sum_rules(n_max)?);
    out.push(check_symmetries(n_max)?);
    out.push(check_boundaries(n_max)?);
    out.push(check_out_of_range(n_max.min(12))?);
    out.push(check_window_sum_tables(n_max)?);
    out.push(check_both_ends_tables(n_max)?);
    let oracle_n = n_max.min(bounds.enum_cap);
    out.push(check_oracle_marginals(oracle_n)?);
    out.push(check_oracle_both_ends(oracle_n.min(8))?);
    out.push(check_transform_laws(oracle_n.min(8)));
    out.push(check_rollback_drift(oracle_n.min(8)));
    out.push(check_linear_extensions(oracle_n.min(8))?);
    Ok(())
}

fn moments_suite(bounds: Bounds, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let n_max = bounds.nmax;
    out.push(check_moment_routes(n_max.min(25))?);
    out.push(check_lattice_path(n_max.min(12)));
    out.push(check_expected_endpoints(n_max)?);
    out.push(check_dist_normalization(n_max)?);
    out.push(check_dist_symmetries(n_max)?);
    out.push(check_unimodal(n_max)?);
    out.push(check_geometric_monotone()?);
    out.push(check_geometric_threshold()?);
    out.push(check_mean_var(n_max)?);
    Ok(())
}

fn roots_suite(bounds: Bounds, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let n_max = bounds.nmax;
    out.push(check_tower_consistency(n_max.min(20))?);
    out.push(check_c_poly_facts(n_max.min(20))?);
    out.push(check_pinned_tower()?);
    out.push(check_first_fixed(n_max.min(20))?);
    out.push(check_both_fixed(n_max.min(15))?);
    out.push(check_interlacing(n_max.min(12))?);
    Ok(())
}

fn gf_suite(bounds: Bounds, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let n_max = bounds.nmax;
    out.push(check_gf_nk(n_max)?);
    out.push(check_gf_nd(n_max)?);
    out.push(check_gf_n(n_max)?);
    out.push(check_egf(n_max.min(10))?);
    out.push(check_eulerian_gf(n_max.min(15))?);
    out.push(check_pde()?);
    out.push(check_numeric_closed_form()?);
    Ok(())
}

fn stein_suite(bounds: Bounds, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let n_max = bounds.nmax.min(stein::EXACT_PAIR_CAP);
    out.push(check_exchangeability(n_max)?);
    out.push(check_drift_identity(n_max)?);
    out.push(check_telescoping(n_max.min(7)));
    out.push(check_lambda(n_max)?);
    out.push(check_mc_soundness(bounds.workers)?);
    out.push(check_mc_determinism(bounds.workers)?);
    Ok(())
}

fn check_four_methods(n_max: u32) -> Result<CheckOutcome> {
    let name = "core/four_method_agreement";
    for n in 1..=n_max {
        let reference = RefinedTable::cached(n, Method::ClosedForm)?;
        for method in [Method::Rec1, Method::Rec2, Method::Rec3] {
            let t = RefinedTable::cached(n, method)?;
            for d in 0..n as i64 {
                for k in 1..=n as i64 {
                    if t.count(d, k) != reference.count(d, k) {
                        return Ok(CheckOutcome::fail(
                            name,
                            format!("n<={n_max}"),
                            format!(
                                "n={n} d={d} k={k}: {method} gives {}, closed form gives {}",
                                t.count(d, k),
                                reference.count(d, k)
                            ),
                        ));
                    }
                }
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}, all four methods entrywise")))
}

fn check_sum_rules(n_max: u32) -> Result<CheckOutcome> {
    let name = "core/sum_rules";
    for n in 1..=n_max {
        let t = RefinedTable::cached(n, Method::Rec3)?;
        for k in 1..=n {
            if t.col_sum(k) != factorial(n as u64 - 1) {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("column sum at n={n}, k={k} is {}", t.col_sum(k)),
                ));
            }
        }
        for d in 0..n {
            if t.row_sum(d) != eulerian(n, d as i64)? {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("row sum at n={n}, d={d} is {}", t.row_sum(d)),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: columns sum to (n-1)!, rows to the Eulerian numbers"),
    ))
}

fn check_symmetries(n_max: u32) -> Result<CheckOutcome> {
    let name = "core/symmetries";
    for n in 1..=n_max {
        let t = RefinedTable::cached(n, Method::Rec3)?;
        let row = EulerRow::build(n)?;
        for d in 0..n as i64 {
            if row.get(d) != row.get(n as i64 - 1 - d) {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("Eulerian row asymmetry at n={n}, d={d}"),
                ));
            }
            for k in 1..=n as i64 {
                if t.count(d, k) != t.count(n as i64 - 1 - d, n as i64 + 1 - k) {
                    return Ok(CheckOutcome::fail(
                        name,
                        format!("n<={n_max}"),
                        format!("complement symmetry fails at n={n}, d={d}, k={k}"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}: row and complement symmetries")))
}

fn check_boundaries(n_max: u32) -> Result<CheckOutcome> {
    let name = "core/boundaries";
    for n in 2..=n_max {
        let t = RefinedTable::cached(n, Method::Rec3)?;
        let prev = EulerRow::build(n - 1)?;
        for d in 0..n as i64 {
            if t.count(d, 1) != prev.get(d)
                || t.count(d, n as i64) != prev.get(d - 1)
                || t.count(d, 1) != t.count(d + 1, n as i64)
            {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("boundary or plateau identity fails at n={n}, d={d}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: k=1 and k=n boundaries plus the plateau identity"),
    ))
}

fn check_out_of_range(n_max: u32) -> Result<CheckOutcome> {
    let name = "core/closed_form_out_of_range";
    for n in 1..=n_max {
        for k in 1..=n {
            for d in (-3..0).chain(n as i64..n as i64 + 4) {
                let v = crate::exact::refined_first_alternating_sum(n, d, k);
                if !v.is_zero() {
                    return Ok(CheckOutcome::fail(
                        name,
                        format!("n<={n_max}"),
                        format!("raw sum at n={n}, d={d}, k={k} is {v}, expected 0"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: the alternating sum vanishes off 0<=d<n"),
    ))
}

fn check_window_sum_tables(n_max: u32) -> Result<CheckOutcome> {
    let name = "core/window_sum";
    for n in 1..n_max.max(2) {
        for d in 0..=n as i64 {
            for k in 1..=n as i64 + 1 {
                let lhs = refined_first(n + 1, d, k as u32)?;
                let mut rhs = Count::zero();
                for i in 0..n as i64 {
                    rhs += f_window(n, n as i64 * d - k - i)?;
                }
                if lhs != rhs {
                    return Ok(CheckOutcome::fail(
                        name,
                        format!("window sizes < {n_max}"),
                        format!("n={n} d={d} k={k}: {lhs} vs window sum {rhs}"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("window sizes < {n_max} against closed-form tables"),
    ))
}

fn check_both_ends_tables(n_max: u32) -> Result<CheckOutcome> {
    let name = "core/both_ends_row_sums";
    for n in 2..=n_max {
        for d in 0..n as i64 {
            for k in 1..=n {
                let mut acc = Count::zero();
                for l in 1..=n {
                    if l != k {
                        acc += both_ends(n, d, k, l)?;
                    }
                }
                if acc != refined_first(n, d, k)? {
                    return Ok(CheckOutcome::fail(
                        name,
                        format!("n<={n_max}"),
                        format!("n={n} d={d} k={k}: endpoint sum {acc}"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: summing over the last endpoint recovers the refined counts"),
    ))
}

fn check_oracle_marginals(n_max: u32) -> Result<CheckOutcome> {
    let name = "core/oracle_marginals";
    for n in 1..=n_max {
        let joint = oracle::enumerate_joint_with_cap(n, n_max)?;
        for method in Method::ALL {
            let t = RefinedTable::cached(n, method)?;
            for d in 0..n as i64 {
                for k in 1..=n {
                    if joint.refined_first_marginal(d, k) != t.count(d, k as i64) {
                        return Ok(CheckOutcome::fail(
                            name,
                            format!("n<={n_max}"),
                            format!("n={n} d={d} k={k} ({method})"),
                        ));
                    }
                }
            }
        }
        for d in 0..n as i64 {
            if joint.euler_marginal(d) != eulerian(n, d)? {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("Eulerian marginal at n={n}, d={d}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: enumeration marginals match all four table methods"),
    ))
}

fn check_oracle_both_ends(n_max: u32) -> Result<CheckOutcome> {
    let name = "core/oracle_both_ends";
    for n in 2..=n_max {
        let joint = oracle::enumerate_joint(n)?;
        for d in 0..n as i64 {
            let mut partition = Count::zero();
            for k in 1..=n {
                for l in 1..=n {
                    let reduced = both_ends(n, d, k, l)?;
                    if k != l {
                        partition += &reduced;
                    }
                    if joint.get(d, k, l) != reduced {
                        return Ok(CheckOutcome::fail(
                            name,
                            format!("n<={n_max}"),
                            format!("n={n} d={d} k={k} l={l}"),
                        ));
                    }
                }
            }
            if partition != eulerian(n, d)? {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("endpoint partition at n={n}, d={d}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: rollback reductions equal enumeration, and partition the Eulerian counts"),
    ))
}

fn check_transform_laws(n_max: u32) -> CheckOutcome {
    let name = "core/transform_laws";
    for n in 1..=n_max {
        for p in crate::perm::all_permutations(n) {
            let d = p.descent_count();
            let k = p.first();
            let rv = p.reverse_values();
            let rp = p.reverse_positions();
            let both = rv.reverse_positions();
            let ok = rv.descent_count() == n - 1 - d
                && rv.first() == n + 1 - k
                && rp.descent_count() == n - 1 - d
                && rp.last() == k
                && both.descent_count() == d
                && both.last() == n + 1 - k;
            if !ok {
                return CheckOutcome::fail(name, format!("n<={n_max}"), format!("at {p}"));
            }
        }
    }
    CheckOutcome::pass(
        name,
        format!("n<={n_max}: value/position reversals act as expected on endpoints and descents"),
    )
}

fn check_rollback_drift(n_max: u32) -> CheckOutcome {
    let name = "core/rollback_drift";
    for n in 2..=n_max {
        for p in crate::perm::all_permutations(n) {
            let delta = p.rollback().descent_count() as i64 - p.descent_count() as i64;
            let expected = if p.first() == 1 {
                1
            } else if p.last() == 1 {
                -1
            } else {
                0
            };
            if delta != expected {
                return CheckOutcome::fail(name, format!("n<={n_max}"), format!("at {p}"));
            }
        }
    }
    CheckOutcome::pass(name, format!("n<={n_max}: rollback shifts descents by exactly the boundary rule"))
}

fn check_linear_extensions(n_max: u32) -> Result<CheckOutcome> {
    let name = "core/linear_extensions_star";
    for n in 1..=n_max {
        for k in 1..=n {
            let ext = oracle::linear_extensions(n, &oracle::star_poset(n, k))?;
            let poly = oracle::descent_poly_of_set(&ext)?;
            for d in 0..n as i64 {
                if poly.coeff(d as usize) != count_to_ratio(&refined_first(n, d, k)?) {
                    return Ok(CheckOutcome::fail(
                        name,
                        format!("n<={n_max}"),
                        format!("n={n} k={k} d={d}"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: star-poset descent polynomials match refined columns"),
    ))
}

fn check_moment_routes(n_max: u32) -> Result<CheckOutcome> {
    let name = "moments/formula_vs_direct";
    for n in 1..=n_max {
        for d in 0..n as i64 {
            for m in 0..=4 {
                let a = moments::rising_moment(n, d, m)?;
                let b = moments::rising_moment_direct(n, d, m)?;
                if a != b {
                    return Ok(CheckOutcome::fail(
                        name,
                        format!("n<={n_max}, m<=4"),
                        format!("n={n} d={d} m={m}: {a} vs {b}"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}, m<=4, exact")))
}

fn check_lattice_path(n_max: u32) -> CheckOutcome {
    let name = "moments/lattice_path";
    for m in 0..=5 {
        for n in 1..=n_max {
            for l in 0..n {
                if moments::lattice_path_sum(m, n, l) != binomial((m + n) as u64, l as i64) {
                    return CheckOutcome::fail(
                        name,
                        format!("m<=5, n<={n_max}"),
                        format!("m={m} n={n} l={l}"),
                    );
                }
            }
        }
    }
    CheckOutcome::pass(name, format!("m<=5, n<={n_max}, l<=n-1 by exhaustive summation"))
}

fn check_expected_endpoints(n_max: u32) -> Result<CheckOutcome> {
    let name = "moments/expected_endpoints";
    for n in 1..=n_max {
        for d in 0..n as i64 {
            let first = moments::expected_first(n, d)?;
            let last = moments::expected_last(n, d)?;
            if first != ratio(d + 1, 1) || last != ratio(n as i64 - d, 1) {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("n={n} d={d}: E first = {first}, E last = {last}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}: d+1 and n-d exactly")))
}

fn check_dist_normalization(n_max: u32) -> Result<CheckOutcome> {
    let name = "moments/distribution_normalization";
    for n in 1..=n_max {
        for d in 0..n as i64 {
            let dist = moments::first_dist(n, d)?;
            let sum: crate::arith::Ratio = dist.probs().iter().sum();
            if sum != ratio(1, 1) {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("n={n} d={d}: total {sum}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}: exact unit mass")))
}

fn check_dist_symmetries(n_max: u32) -> Result<CheckOutcome> {
    let name = "moments/endpoint_symmetry";
    for n in 1..=n_max {
        for d in 0..n as i64 {
            let first = moments::first_dist(n, d)?;
            let last = moments::last_dist(n, d)?;
            if first.reversed() != last.probs()
                || moments::first_dist(n, n as i64 - 1 - d)?.probs() != last.probs()
            {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("n={n} d={d}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: last-element law is the reversed first-element law"),
    ))
}

fn check_unimodal(n_max: u32) -> Result<CheckOutcome> {
    let name = "moments/unimodal_cases";
    for n in 1..=n_max {
        for d in 0..n as i64 {
            let (case, ok) = moments::unimodal_case(n, d)?;
            if !ok {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("n={n} d={d} case {}", case.label()),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}: all seven case chains hold")))
}

fn check_geometric_monotone() -> Result<CheckOutcome> {
    let name = "moments/geometric_monotone";
    for d in 1..=3i64 {
        let mut prev_sup = None;
        let mut prev_tvd = None;
        for n in [16u32, 32, 64] {
            let sup = moments::geometric_ratio_sup(n, d)?;
            let tvd = moments::tvd_geometric(n, d)?;
            if let (Some(ps), Some(pt)) = (&prev_sup, &prev_tvd) {
                if &sup >= ps || &tvd >= pt {
                    return Ok(CheckOutcome::fail(
                        name,
                        "n in {16,32,64}, d in {1,2,3}".into(),
                        format!("no strict decrease at n={n}, d={d}"),
                    ));
                }
            }
            prev_sup = Some(sup);
            prev_tvd = Some(tvd);
        }
    }
    Ok(CheckOutcome::pass(
        name,
        "sup-ratio and TVD strictly decrease over n = 16, 32, 64 for d <= 3".into(),
    ))
}

fn check_geometric_threshold() -> Result<CheckOutcome> {
    let name = "moments/geometric_threshold";
    for d in 1..=2i64 {
        let sup = moments::geometric_ratio_sup(80, d)?;
        if sup >= ratio(1, 10) {
            return Ok(CheckOutcome::fail(
                name,
                "n=80, d<=2".into(),
                format!("sup ratio {sup} at d={d}"),
            ));
        }
    }
    Ok(CheckOutcome::pass(name, "sup ratio below 1/10 at n=80 for d <= 2".into()))
}

fn check_mean_var(n_max: u32) -> Result<CheckOutcome> {
    let name = "moments/descent_mean_variance";
    // n = 1 is excluded: the variance formula (n+1)/12 does not hold there
    for n in 2..=n_max.max(2) {
        let (mean, var) = moments::des_mean_var(n)?;
        if mean != ratio(n as i64 - 1, 2) || var != ratio(n as i64 + 1, 12) {
            return Ok(CheckOutcome::fail(
                name,
                format!("2<=n<={n_max}"),
                format!("n={n}"),
            ));
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("2<=n<={n_max}: (n-1)/2 and (n+1)/12 match the exact distribution"),
    ))
}

fn check_tower_consistency(n_max: u32) -> Result<CheckOutcome> {
    let name = "roots/tower_consistency";
    for total in 1..=n_max {
        for u in 0..total {
            let v = total - 1 - u;
            let h = roots::h_numerator(u, v)?;
            if h.numerator != roots::c_poly(u, v)? || h.pole_order != total {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("u+v+1<={n_max}"),
                    format!("u={u} v={v}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("u+v+1<={n_max}: operator recursion equals direct table sums"),
    ))
}

fn check_c_poly_facts(n_max: u32) -> Result<CheckOutcome> {
    let name = "roots/degree_and_divisibility";
    for total in 2..=n_max {
        for u in 0..total {
            let v = total - 1 - u;
            let c = roots::c_poly(u, v)?;
            let expect_deg = if v == 0 { u } else { u + v - 1 } as usize;
            let ord = c.ord_zero();
            let ok = c.degree() == Some(expect_deg)
                && ((u == 0 && ord == 0) || (u > 0 && ord == 1))
                && c.eval(&ratio(1, 1)) == count_to_ratio(&factorial((u + v) as u64));
            if !ok {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("u+v+1<={n_max}"),
                    format!("u={u} v={v}: {c}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("u+v+1<={n_max}: degree rule, x-divisibility, value (u+v)! at x=1"),
    ))
}

fn check_pinned_tower() -> Result<CheckOutcome> {
    let name = "roots/pinned_tower_numerators";
    let expected: [(u32, u32, &[i64], u32); 5] = [
        (0, 2, &[1, 1], 3),
        (0, 3, &[1, 4, 1], 4),
        (1, 3, &[0, 8, 14, 2], 5),
        (2, 3, &[0, 8, 60, 48, 4], 6),
        (3, 3, &[0, 8, 160, 384, 160, 8], 7),
    ];
    for (u, v, coeffs, pole) in expected {
        let h = roots::h_numerator(u, v)?;
        if h.numerator != Poly::from_i64(coeffs) || h.pole_order != pole {
            return Ok(CheckOutcome::fail(
                name,
                "five pinned numerators".into(),
                format!("u={u} v={v}: got {} with pole {}", h.numerator, h.pole_order),
            ));
        }
    }
    Ok(CheckOutcome::pass(name, "the five pinned numerators and pole orders".into()))
}

fn check_first_fixed(n_max: u32) -> Result<CheckOutcome> {
    let name = "roots/first_fixed_verdicts";
    for n in 1..=n_max {
        for k in 1..=n {
            let v = roots::check_neggers_first_fixed(n, k)?;
            if !v.verdict {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("n={n} k={k}: {v:?}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}: all distinct-real verdicts true")))
}

fn check_both_fixed(n_max: u32) -> Result<CheckOutcome> {
    let name = "roots/both_fixed_verdicts";
    for n in 2..=n_max {
        for k in 1..=n {
            for l in 1..=n {
                if k == l {
                    continue;
                }
                let v = roots::check_neggers_both_fixed(n, k, l)?;
                if !v.verdict {
                    return Ok(CheckOutcome::fail(
                        name,
                        format!("n<={n_max}"),
                        format!("n={n} k={k} l={l}: {v:?}"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}: all distinct-real verdicts true")))
}

fn check_interlacing(n_max: u32) -> Result<CheckOutcome> {
    let name = "roots/interlacing";
    for total in 1..=n_max {
        for u in 0..total {
            let v = total - 1 - u;
            if !roots::interlacing_along_tower(u, v)? {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("u+v+1<={n_max}"),
                    format!("tower to ({u}, {v})"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("u+v+1<={n_max}: roots strictly interlace along every tower step"),
    ))
}

fn check_gf_nk(n_max: u32) -> Result<CheckOutcome> {
    let name = "gf/nk_matches_tables";
    for n in 1..=n_max {
        let t = RefinedTable::cached(n, Method::Rec3)?;
        for k in 1..=n {
            let p = series::gf_nk(n, k)?;
            for d in 0..n as i64 {
                if p.coeff(d as usize) != count_to_ratio(&t.count(d, k as i64)) {
                    return Ok(CheckOutcome::fail(
                        name,
                        format!("n<={n_max}"),
                        format!("n={n} k={k} d={d}"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}: guarded expansions equal tables")))
}

fn check_gf_nd(n_max: u32) -> Result<CheckOutcome> {
    let name = "gf/nd_matches_tables";
    for n in 1..=n_max {
        let t = RefinedTable::cached(n, Method::Rec3)?;
        for d in 0..n as i64 {
            let p = series::gf_nd(n, d)?;
            if !p.coeff(0).is_zero() {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("nonzero constant term at n={n}, d={d}"),
                ));
            }
            for k in 1..=n as i64 {
                if p.coeff(k as usize) != count_to_ratio(&t.count(d, k)) {
                    return Ok(CheckOutcome::fail(
                        name,
                        format!("n<={n_max}"),
                        format!("n={n} d={d} k={k}"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}: expansions equal tables")))
}

fn check_gf_n(n_max: u32) -> Result<CheckOutcome> {
    let name = "gf/n_matches_tables";
    for n in 1..=n_max {
        let t = RefinedTable::cached(n, Method::Rec3)?;
        let b = series::gf_n(n)?;
        for d in 0..n as usize {
            for k in 1..=n as usize {
                if b.coeff(d, k) != count_to_ratio(&t.count(d as i64, k as i64)) {
                    return Ok(CheckOutcome::fail(
                        name,
                        format!("n<={n_max}"),
                        format!("n={n} d={d} k={k}"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}: bivariate expansion equals tables")))
}

fn check_egf(n_max: u32) -> Result<CheckOutcome> {
    let name = "gf/egf_slices";
    let x_order = n_max as usize + 1;
    let a = series::egf_a(x_order, n_max as usize)?;
    for n in 1..=n_max {
        let row = EulerRow::build(n)?;
        let fact = count_to_ratio(&factorial(n as u64));
        for d in 0..n as i64 {
            if a.get(d as usize + 1, 0, n as usize) != count_to_ratio(&row.get(d)) / &fact {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("slice n={n}, power d+1={}", d + 1),
                ));
            }
        }
        let total: crate::arith::Ratio = (0..=x_order).map(|i| a.get(i, 0, n as usize)).sum();
        if total != ratio(1, 1) {
            return Ok(CheckOutcome::fail(
                name,
                format!("n<={n_max}"),
                format!("slice n={n} sums to {total}, expected 1 (a_n(1) = n!)"),
            ));
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: exponential slices match Eulerian rows, a_n(1) = n!"),
    ))
}

fn check_eulerian_gf(n_max: u32) -> Result<CheckOutcome> {
    let name = "gf/eulerian_polynomial_guard";
    for n in 1..=n_max {
        let p = series::eulerian_poly_gf(n, series::DEFAULT_GUARD)?;
        let row = EulerRow::build(n)?;
        for d in 0..n as i64 {
            if p.coeff(d as usize + 1) != count_to_ratio(&row.get(d)) {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("n={n} d={d}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: guarded geometric-sum route equals the recurrence rows"),
    ))
}

fn check_pde() -> Result<CheckOutcome> {
    let name = "gf/pde";
    if series::pde_check(8, 9, 8)? {
        Ok(CheckOutcome::pass(name, "orders (8, 9, 8), exact coefficients".into()))
    } else {
        Ok(CheckOutcome::fail(
            name,
            "orders (8, 9, 8)".into(),
            "coefficient mismatch".into(),
        ))
    }
}

fn check_numeric_closed_form() -> Result<CheckOutcome> {
    let name = "gf/closed_form_numeric";
    let probes = [
        (0.3, 0.5, 0.2),
        (-0.4, 0.7, 0.15),
        (0.6, 0.25, 0.1),
    ];
    for (x, y, z) in probes {
        let r = series::gfall_numeric_check(x, y, z, 18, 1e-6)?;
        let within = r < 1e-6;
        if !within {
            return Ok(CheckOutcome::fail(
                name,
                "three probe points, n_max=18".into(),
                format!("residual {r:.3e} at ({x}, {y}, {z})"),
            ));
        }
    }
    Ok(CheckOutcome::pass(
        name,
        "integral form matches the triple sum within 1e-6 at three probes".into(),
    ))
}

fn check_exchangeability(n_max: u32) -> Result<CheckOutcome> {
    let name = "stein/exchangeable_symmetry";
    for n in 2..=n_max {
        if !stein::exact_joint_dd(n)?.is_symmetric() {
            return Ok(CheckOutcome::fail(
                name,
                format!("n<={n_max}"),
                format!("asymmetric joint table at n={n}"),
            ));
        }
    }
    Ok(CheckOutcome::pass(name, format!("n<={n_max}: joint descent tables symmetric")))
}

fn check_drift_identity(n_max: u32) -> Result<CheckOutcome> {
    let name = "stein/drift_identity";
    for n in 2..=n_max {
        for d in 0..n as i64 {
            let drift = stein::exact_drift(n, d)?;
            if drift != stein::drift_target(n, d) {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("n<={n_max}"),
                    format!("n={n} d={d}: {drift}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: enumerated drift equals (2(n-1)-4d)/n"),
    ))
}

fn check_telescoping(n_max: u32) -> CheckOutcome {
    let name = "stein/telescoping";
    for n in 2..=n_max {
        for p in crate::perm::all_permutations(n) {
            let total: crate::arith::Ratio = (1..n)
                .map(|i| stein::per_position_drift(&p, i).expect("valid position"))
                .sum();
            if total != stein::telescoped_drift(&p).expect("n >= 2") {
                return CheckOutcome::fail(name, format!("n<={n_max}"), format!("at {p}"));
            }
        }
    }
    CheckOutcome::pass(
        name,
        format!("n<={n_max}: per-position drifts telescope for every permutation"),
    )
}

fn check_lambda(n_max: u32) -> Result<CheckOutcome> {
    let name = "stein/lambda_restatement";
    for n in 2..=n_max {
        if !stein::lambda_check(n)? {
            return Ok(CheckOutcome::fail(
                name,
                format!("n<={n_max}"),
                format!("restatement fails at n={n}"),
            ));
        }
    }
    Ok(CheckOutcome::pass(
        name,
        format!("n<={n_max}: E[W*-W|W] = -(4/n) W exactly"),
    ))
}

fn check_mc_soundness(workers: u32) -> Result<CheckOutcome> {
    let name = "stein/mc_soundness";
    let (n, d, samples) = (20u32, 9i64, 10_000u64);
    let target = stein::drift_target(n, d).to_f64().expect("small rational");
    let mut within = 0u32;
    for seed in 0..100u64 {
        let r = stein::mc_drift(n, d, samples, seed, workers)?;
        if (r.mean - target).abs() <= 4.0 * r.std_error {
            within += 1;
        }
    }
    if within >= 99 {
        Ok(CheckOutcome::pass(
            name,
            format!("{within}/100 seeds within 4 standard errors at (n, d) = (20, 9)"),
        ))
    } else {
        Ok(CheckOutcome::fail(
            name,
            "100 seeds at (n, d, samples) = (20, 9, 1e4)".into(),
            format!("only {within}/100 within 4 standard errors"),
        ))
    }
}

fn check_mc_determinism(workers: u32) -> Result<CheckOutcome> {
    let name = "stein/mc_determinism";
    let a = stein::mc_drift(16, 7, 20_000, 42, workers)?;
    let b = stein::mc_drift(16, 7, 20_000, 42, workers)?;
    if a == b && a.mean.to_bits() == b.mean.to_bits() {
        Ok(CheckOutcome::pass(
            name,
            "repeated runs are bitwise identical for a fixed seed and worker count".into(),
        ))
    } else {
        Ok(CheckOutcome::fail(
            name,
            "two identical runs".into(),
            format!("{} vs {}", a.mean, b.mean),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_bounds_run_clean() {
        let outcomes = run_suite(Suite::Core, Bounds::default()).unwrap();
        assert!(!outcomes.is_empty());
        for o in &outcomes {
            assert!(o.passed, "{}: {:?}", o.name, o.witness);
        }
    }

    #[test]
    fn suite_names_parse() {
        for s in ["core", "moments", "roots", "gf", "stein", "all"] {
            assert!(s.parse::<Suite>().is_ok());
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn stein_suite_small_bounds() {
        let bounds = Bounds {
            nmax: 5,
            enum_cap: 6,
            workers: 2,
        };
        // mc_soundness at 100 seeds is exercised here too; it is the
        // slowest check in the suite.
        let outcomes = run_suite(Suite::Stein, bounds).unwrap();
        for o in &outcomes {
            assert!(o.passed, "{}: {:?}", o.name, o.witness);
        }
    }
}
