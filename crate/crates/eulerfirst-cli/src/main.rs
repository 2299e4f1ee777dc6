//! Command-line front end: table generation, verification suites, and
//! experiment runners with machine-readable output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resource cap exceeded.

mod cache;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use eulerfirst::error::Error;
use eulerfirst::exact::{Method, RefinedTable};
use eulerfirst::verify::{run_suite, Bounds, Suite};
use eulerfirst::{moments, roots, series, stein};

use output::{approx, echo_line, envelope, flo, poly_coeffs, print_json, rat, Format};

#[derive(Parser)]
#[command(
    name = "eulerfirst",
    version,
    about = "Exact Eulerian numbers refined by the first and last element of a permutation",
    after_help = "Counts print as exact decimal integers of arbitrary length and \
                  rationals as p/q strings; floating-point values are explicitly \
                  tagged. Identical invocations produce byte-identical output."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    #[value(name = "closed_form", alias = "closed-form")]
    ClosedForm,
    Rec1,
    Rec2,
    Rec3,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::ClosedForm => Method::ClosedForm,
            MethodArg::Rec1 => Method::Rec1,
            MethodArg::Rec2 => Method::Rec2,
            MethodArg::Rec3 => Method::Rec3,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit the refined table for one n: counts by (descents, endpoint).
    Table(TableArgs),
    /// Run a named verification suite and report each check.
    Verify(VerifyArgs),
    /// Rising moments and expected endpoints of pi(1) given d descents.
    Moments(MomentsArgs),
    /// Exact distances to the geometric law with p = d/(d+1).
    Geom(GeomArgs),
    /// Descent-polynomial real-rootedness reports.
    Roots(RootsArgs),
    /// Exchangeable-pair drift: exact enumeration or Monte Carlo.
    Stein(SteinArgs),
    /// Generating-function expansions and checks.
    Gf(GfArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Permutation size.
    #[arg(long)]
    n: u32,
    /// Table construction method.
    #[arg(long, value_enum, default_value = "closed_form")]
    method: MethodArg,
    /// Tabulate the last element instead of the first.
    #[arg(long)]
    last: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: core, moments, roots, gf, stein, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Main size bound for the suite's checks.
    #[arg(long, default_value_t = 8)]
    nmax: u32,
    /// Enumeration cap for oracle-backed checks.
    #[arg(long, default_value_t = eulerfirst::oracle::DEFAULT_ENUM_CAP)]
    cap: u32,
    /// Worker count for Monte Carlo checks.
    #[arg(long, default_value_t = 1)]
    workers: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct MomentsArgs {
    #[arg(long)]
    n: u32,
    /// Descent count to condition on.
    #[arg(long)]
    d: i64,
    /// Largest rising-moment order to print.
    #[arg(long, default_value_t = 4)]
    max_m: u32,
    /// Also print the full distribution of pi(1).
    #[arg(long)]
    dist: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct GeomArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    d: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct RootsArgs {
    /// Tower coordinates: descent polynomial of permutations of u+v+1
    /// beginning with u+1.
    #[arg(long, requires = "v", conflicts_with_all = ["n", "k", "l"])]
    u: Option<u32>,
    #[arg(long, requires = "u")]
    v: Option<u32>,
    /// Permutation size for endpoint-fixed polynomials.
    #[arg(long, requires = "k")]
    n: Option<u32>,
    /// First element to fix.
    #[arg(long, requires = "n")]
    k: Option<u32>,
    /// Last element to fix (with --k: both ends fixed).
    #[arg(long, requires = "k")]
    l: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct SteinArgs {
    #[arg(long)]
    n: u32,
    /// Exhaustive enumeration of the joint descent table (small n).
    #[arg(long, conflicts_with_all = ["d", "samples", "seed"])]
    exact: bool,
    /// Descent count to condition on (Monte Carlo mode).
    #[arg(long, requires = "samples")]
    d: Option<i64>,
    /// Number of accepted samples to draw.
    #[arg(long, requires = "d")]
    samples: Option<u64>,
    /// Master seed; every report echoes it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; the sample stream depends on this count.
    #[arg(long, default_value_t = 1)]
    workers: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct GfArgs {
    /// Expansion size for the table generating functions.
    #[arg(long, conflicts_with_all = ["egf", "pde", "check"])]
    n: Option<u32>,
    /// With --n: expand sum_d F(n,d,k) x^d for this k.
    #[arg(long, requires = "n", conflicts_with = "d")]
    k: Option<u32>,
    /// With --n: expand sum_k F(n,d,k) y^k for this d.
    #[arg(long, requires = "n")]
    d: Option<i64>,
    /// Print the exponential series of the Eulerian polynomials.
    #[arg(long, conflicts_with_all = ["pde", "check"])]
    egf: bool,
    /// Verify the trivariate series relation coefficientwise.
    #[arg(long, conflicts_with = "check")]
    pde: bool,
    /// Compare the triple sum against the closed integral form at a point.
    #[arg(long)]
    check: bool,
    #[arg(long, default_value_t = 8)]
    x_order: usize,
    #[arg(long, default_value_t = 9)]
    y_order: usize,
    #[arg(long, default_value_t = 8)]
    z_order: usize,
    /// Probe point for --check.
    #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, default_value_t = 0.5)]
    y: f64,
    #[arg(long, default_value_t = 0.2, allow_hyphen_values = true)]
    z: f64,
    /// Truncation order for --check.
    #[arg(long, default_value_t = 18)]
    nmax: u32,
    /// Residual tolerance for --check.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit(_) => ExitCode::from(3),
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Moments(args) => cmd_moments(args),
        Command::Geom(args) => cmd_geom(args),
        Command::Roots(args) => cmd_roots(args),
        Command::Stein(args) => cmd_stein(args),
        Command::Gf(args) => cmd_gf(args),
    }
}

fn format_of(f: FormatArg) -> Format {
    match f {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    }
}

fn params_map(entries: &[(&str, Value)]) -> Map<String, Value> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Text => "text",
        Format::Json => "json",
        Format::Csv => "csv",
    }
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, Error> {
    let format = format_of(args.format);
    let method: Method = args.method.into();
    let kind = if args.last { "last" } else { "first" };
    let params = params_map(&[
        ("format", json!(format_name(format))),
        ("kind", json!(kind)),
        ("method", json!(method.as_str())),
        ("n", json!(args.n)),
    ]);
    let n = args.n;
    let body = match cache::load(kind, n, method.as_str()) {
        Some(cached) => cached,
        None => {
            let table = RefinedTable::cached(n, method)?;
            let mut body = String::from("n,d,k,count\n");
            for d in 0..n as i64 {
                for k in 1..=n {
                    // ending with k is beginning with k at the
                    // complemented descent count
                    let count = if args.last {
                        table.count(n as i64 - 1 - d, k as i64)
                    } else {
                        table.count(d, k as i64)
                    };
                    body.push_str(&format!("{n},{d},{k},{count}\n"));
                }
            }
            cache::store(kind, n, method.as_str(), &body);
            body
        }
    };
    match format {
        Format::Csv => {
            println!("{}", echo_line("table", &params));
            print!("{body}");
        }
        Format::Text => {
            println!("{}", echo_line("table", &params));
            for line in body.lines().skip(1) {
                let f: Vec<&str> = line.split(',').collect();
                println!("F({}, {}, {}) = {}", f[0], f[1], f[2], f[3]);
            }
        }
        Format::Json => {
            let rows: Vec<Value> = body
                .lines()
                .skip(1)
                .map(|line| {
                    let f: Vec<&str> = line.split(',').collect();
                    json!({
                        "d": f[1].parse::<i64>().unwrap(),
                        "k": f[2].parse::<u32>().unwrap(),
                        "count": f[3],
                    })
                })
                .collect();
            print_json(&envelope("table", params, json!({ "rows": rows })));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let format = format_of(args.format);
    if format == Format::Csv {
        return Err(Error::InvalidArgument("verify does not emit CSV".into()));
    }
    let suite: Suite = args.suite.parse()?;
    let params = params_map(&[
        ("cap", json!(args.cap)),
        ("format", json!(format_name(format))),
        ("nmax", json!(args.nmax)),
        ("suite", json!(args.suite)),
        ("workers", json!(args.workers)),
    ]);
    let outcomes = run_suite(
        suite,
        Bounds {
            nmax: args.nmax,
            enum_cap: args.cap,
            workers: args.workers,
        },
    )?;
    let failures = outcomes.iter().filter(|o| !o.passed).count();
    match format {
        Format::Text => {
            println!("{}", echo_line("verify", &params));
            for o in &outcomes {
                if o.passed {
                    println!("PASS {} ({})", o.name, o.detail);
                } else {
                    println!("FAIL {} ({})", o.name, o.detail);
                    // machine-readable failure record with the witness
                    println!(
                        "{}",
                        json!({
                            "check": o.name,
                            "status": "fail",
                            "witness": o.witness,
                        })
                    );
                }
            }
            println!(
                "{} checks, {} failed",
                outcomes.len(),
                failures
            );
        }
        Format::Json | Format::Csv => {
            let checks: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "name": o.name,
                        "status": if o.passed { "pass" } else { "fail" },
                        "detail": o.detail,
                        "witness": o.witness,
                    })
                })
                .collect();
            print_json(&envelope(
                "verify",
                params,
                json!({ "checks": checks, "failures": failures }),
            ));
        }
    }
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_moments(args: MomentsArgs) -> Result<ExitCode, Error> {
    let format = format_of(args.format);
    let params = params_map(&[
        ("d", json!(args.d)),
        ("dist", json!(args.dist)),
        ("format", json!(format_name(format))),
        ("max_m", json!(args.max_m)),
        ("n", json!(args.n)),
    ]);
    let (n, d) = (args.n, args.d);
    let mut ms = Vec::new();
    for m in 0..=args.max_m {
        let formula = moments::rising_moment(n, d, m)?;
        let direct = moments::rising_moment_direct(n, d, m)?;
        if formula != direct {
            return Err(Error::Internal(format!(
                "moment routes disagree at m={m}: {formula} vs {direct}"
            )));
        }
        ms.push(formula);
    }
    let first = moments::expected_first(n, d)?;
    let last = moments::expected_last(n, d)?;
    let dist = args.dist.then(|| moments::first_dist(n, d)).transpose()?;
    match format {
        Format::Text => {
            println!("{}", echo_line("moments", &params));
            for (m, v) in ms.iter().enumerate() {
                println!("rising moment m={m}: {v} (~ {})", approx(v));
            }
            println!("expected first: {first}");
            println!("expected last: {last}");
            if let Some(dist) = &dist {
                for (i, p) in dist.probs().iter().enumerate() {
                    println!("P(first = {}) = {p}", i + 1);
                }
            }
        }
        _ => {
            let result = json!({
                "rising_moments": ms.iter().map(rat).collect::<Vec<_>>(),
                "expected_first": rat(&first),
                "expected_last": rat(&last),
                "first_dist": dist.map(|d| d.probs().iter().map(rat).collect::<Vec<_>>()),
            });
            print_json(&envelope("moments", params, result));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_geom(args: GeomArgs) -> Result<ExitCode, Error> {
    let format = format_of(args.format);
    let params = params_map(&[
        ("d", json!(args.d)),
        ("format", json!(format_name(format))),
        ("n", json!(args.n)),
    ]);
    let p = eulerfirst::arith::ratio(args.d, args.d + 1);
    let sup = moments::geometric_ratio_sup(args.n, args.d)?;
    let tvd = moments::tvd_geometric(args.n, args.d)?;
    match format {
        Format::Text => {
            println!("{}", echo_line("geom", &params));
            println!("p: {p}");
            println!("sup ratio deviation: {sup} (~ {})", approx(&sup));
            println!("total variation distance: {tvd} (~ {})", approx(&tvd));
        }
        _ => {
            print_json(&envelope(
                "geom",
                params,
                json!({
                    "p": rat(&p),
                    "sup_ratio": rat(&sup),
                    "tvd": rat(&tvd),
                }),
            ));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_json(v: &roots::RootVerdict) -> Value {
    json!({
        "degree": v.degree,
        "distinct_real_roots": v.distinct_real_roots,
        "squarefree": v.squarefree,
        "verdict": v.verdict,
    })
}

fn cmd_roots(args: RootsArgs) -> Result<ExitCode, Error> {
    let format = format_of(args.format);
    let (label, params, poly, pole, verdict) = match (args.u, args.v, args.n, args.k, args.l) {
        (Some(u), Some(v), None, None, None) => {
            let h = roots::h_numerator(u, v)?;
            let c = roots::c_poly(u, v)?;
            if h.numerator != c {
                return Err(Error::Internal(
                    "operator tower disagrees with the direct table sums".into(),
                ));
            }
            let verdict = roots::sturm_distinct_real_roots(&c)?;
            let params = params_map(&[
                ("format", json!(format_name(format))),
                ("u", json!(u)),
                ("v", json!(v)),
            ]);
            ("tower", params, c, Some(h.pole_order), verdict)
        }
        (None, None, Some(n), Some(k), None) => {
            let c = roots::c_poly(k - 1, n - k)?;
            let verdict = roots::check_neggers_first_fixed(n, k)?;
            let params = params_map(&[
                ("format", json!(format_name(format))),
                ("k", json!(k)),
                ("n", json!(n)),
            ]);
            ("first_fixed", params, c, None, verdict)
        }
        (None, None, Some(n), Some(k), Some(l)) => {
            let raw = roots::both_ends_descent_poly(n, k, l)?;
            let verdict = roots::check_neggers_both_fixed(n, k, l)?;
            let params = params_map(&[
                ("format", json!(format_name(format))),
                ("k", json!(k)),
                ("l", json!(l)),
                ("n", json!(n)),
            ]);
            ("both_fixed", params, raw, None, verdict)
        }
        _ => {
            return Err(Error::InvalidArgument(
                "roots needs either --u/--v or --n/--k (optionally --l)".into(),
            ));
        }
    };
    match format {
        Format::Text => {
            println!("{}", echo_line("roots", &params));
            println!("mode: {label}");
            println!("polynomial: {poly}");
            if let Some(pole) = pole {
                println!("pole order: {pole}");
            }
            println!(
                "degree {} / distinct real roots {} / squarefree {} => verdict {}",
                verdict.degree, verdict.distinct_real_roots, verdict.squarefree, verdict.verdict
            );
        }
        _ => {
            let mut result = json!({
                "mode": label,
                "polynomial": poly_coeffs(&poly),
                "verdict": verdict_json(&verdict),
            });
            if let Some(pole) = pole {
                result["pole_order"] = json!(pole);
            }
            print_json(&envelope("roots", params, result));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_stein(args: SteinArgs) -> Result<ExitCode, Error> {
    let format = format_of(args.format);
    if args.exact {
        let params = params_map(&[
            ("format", json!(format_name(format))),
            ("mode", json!("exact")),
            ("n", json!(args.n)),
        ]);
        let joint = stein::exact_joint_dd(args.n)?;
        let n = args.n;
        let drifts: Vec<_> = (0..n as i64)
            .map(|d| stein::exact_drift(n, d))
            .collect::<Result<_, _>>()?;
        let lambda = stein::lambda_of(n);
        match format {
            Format::Text => {
                println!("{}", echo_line("stein", &params));
                println!("symmetric: {}", joint.is_symmetric());
                for d in 0..n as i64 {
                    let row: Vec<String> =
                        (0..n as i64).map(|b| joint.count(d, b).to_string()).collect();
                    println!("joint d={d}: {}", row.join(","));
                }
                for (d, v) in drifts.iter().enumerate() {
                    println!("drift d={d}: {v}");
                }
                println!("lambda: {lambda}");
            }
            _ => {
                let matrix: Vec<Value> = (0..n as i64)
                    .map(|d| {
                        Value::Array(
                            (0..n as i64)
                                .map(|b| Value::String(joint.count(d, b).to_string()))
                                .collect(),
                        )
                    })
                    .collect();
                print_json(&envelope(
                    "stein",
                    params,
                    json!({
                        "symmetric": joint.is_symmetric(),
                        "joint": matrix,
                        "drift": drifts.iter().map(rat).collect::<Vec<_>>(),
                        "lambda": rat(&lambda),
                    }),
                ));
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let (Some(d), Some(samples)) = (args.d, args.samples) else {
        return Err(Error::InvalidArgument(
            "stein needs --exact, or --d with --samples".into(),
        ));
    };
    let params = params_map(&[
        ("d", json!(d)),
        ("format", json!(format_name(format))),
        ("mode", json!("mc")),
        ("n", json!(args.n)),
        ("samples", json!(samples)),
        ("seed", json!(args.seed)),
        ("workers", json!(args.workers)),
    ]);
    let report = stein::mc_drift(args.n, d, samples, args.seed, args.workers)?;
    match format {
        Format::Text => {
            println!("{}", echo_line("stein", &params));
            println!("mean: {:e}", report.mean);
            println!("std error: {:e}", report.std_error);
            println!("exact target: {}", report.exact_target);
        }
        _ => {
            print_json(&envelope(
                "stein",
                params,
                json!({
                    "n": report.n,
                    "d": report.d,
                    "samples": report.samples,
                    "workers": report.workers,
                    "seed": report.seed,
                    "mean": flo(report.mean),
                    "std_error": flo(report.std_error),
                    "exact_target": rat(&report.exact_target),
                }),
            ));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gf(args: GfArgs) -> Result<ExitCode, Error> {
    let format = format_of(args.format);
    if args.pde {
        let params = params_map(&[
            ("format", json!(format_name(format))),
            ("mode", json!("pde")),
            ("x_order", json!(args.x_order)),
            ("y_order", json!(args.y_order)),
            ("z_order", json!(args.z_order)),
        ]);
        let holds = series::pde_check(args.x_order, args.y_order, args.z_order)?;
        match format {
            Format::Text => {
                println!("{}", echo_line("gf", &params));
                println!("series relation holds: {holds}");
            }
            _ => print_json(&envelope("gf", params, json!({ "holds": holds }))),
        }
        return Ok(if holds {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    if args.check {
        let params = params_map(&[
            ("format", json!(format_name(format))),
            ("mode", json!("check")),
            ("nmax", json!(args.nmax)),
            ("tol", json!(args.tol)),
            ("x", json!(args.x)),
            ("y", json!(args.y)),
            ("z", json!(args.z)),
        ]);
        let residual = series::gfall_numeric_check(args.x, args.y, args.z, args.nmax, args.tol)?;
        let ok = residual < args.tol;
        match format {
            Format::Text => {
                println!("{}", echo_line("gf", &params));
                println!("residual: {residual:e} (tolerance {:e})", args.tol);
            }
            _ => print_json(&envelope(
                "gf",
                params,
                json!({ "residual": flo(residual), "within_tolerance": ok }),
            )),
        }
        return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    if args.egf {
        let params = params_map(&[
            ("format", json!(format_name(format))),
            ("mode", json!("egf")),
            ("x_order", json!(args.x_order)),
            ("z_order", json!(args.z_order)),
        ]);
        let a = series::egf_a(args.x_order, args.z_order)?;
        let slices: Vec<Value> = (1..=args.z_order)
            .map(|m| {
                let coeffs: Vec<Value> = (0..=args.x_order)
                    .map(|i| Value::String(a.get(i, 0, m).to_string()))
                    .collect();
                json!({ "n": m, "coeffs": coeffs })
            })
            .collect();
        match format {
            Format::Text => {
                println!("{}", echo_line("gf", &params));
                for s in &slices {
                    println!("z^{} / {}!: {:?}", s["n"], s["n"], s["coeffs"]);
                }
            }
            _ => print_json(&envelope("gf", params, json!({ "slices": slices }))),
        }
        return Ok(ExitCode::SUCCESS);
    }
    let Some(n) = args.n else {
        return Err(Error::InvalidArgument(
            "gf needs one of --n, --egf, --pde, or --check".into(),
        ));
    };
    if let Some(k) = args.k {
        let params = params_map(&[
            ("format", json!(format_name(format))),
            ("k", json!(k)),
            ("mode", json!("nk")),
            ("n", json!(n)),
        ]);
        let p = series::gf_nk(n, k)?;
        match format {
            Format::Text => {
                println!("{}", echo_line("gf", &params));
                println!("sum over d of F({n}, d, {k}) x^d = {p}");
            }
            _ => print_json(&envelope("gf", params, json!({ "poly_x": poly_coeffs(&p) }))),
        }
    } else if let Some(d) = args.d {
        let params = params_map(&[
            ("d", json!(d)),
            ("format", json!(format_name(format))),
            ("mode", json!("nd")),
            ("n", json!(n)),
        ]);
        let p = series::gf_nd(n, d)?;
        match format {
            Format::Text => {
                println!("{}", echo_line("gf", &params));
                println!("sum over k of F({n}, {d}, k) y^k = {p}");
            }
            _ => print_json(&envelope("gf", params, json!({ "poly_y": poly_coeffs(&p) }))),
        }
    } else {
        let params = params_map(&[
            ("format", json!(format_name(format))),
            ("mode", json!("n")),
            ("n", json!(n)),
        ]);
        let b = series::gf_n(n)?;
        let coeffs: Vec<Value> = b.x_coeffs().iter().map(poly_coeffs).collect();
        match format {
            Format::Text => {
                println!("{}", echo_line("gf", &params));
                for (d, p) in b.x_coeffs().iter().enumerate() {
                    println!("x^{d}: {p}");
                }
            }
            _ => print_json(&envelope("gf", params, json!({ "x_coeffs": coeffs }))),
        }
    }
    Ok(ExitCode::SUCCESS)
}
