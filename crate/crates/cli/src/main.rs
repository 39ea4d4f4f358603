//! `ctet`: command-line front end for the C(1,1) numerics library.
//!
//! Verbs:
//! - `eval <fn> <args...>`: evaluate one special function at a point;
//! - `verify`: run the identity suite and print a markdown summary;
//! - `ctet`: evaluate C(1,1) by one route or cross-check all four;
//! - `bench`: quick strategy comparison (CSV) for cl2 / li2.
//!
//! Exit codes: 0 success, 1 mathematical failure (domain error, route
//! disagreement, failed assertion), 2 usage error.

use std::f64::consts::PI;
use std::io::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use ctet_core::ctet::{
    all_routes, ctet_clausen, ctet_rajantie, ctet_series, ctet_series_dd, ctet_srp, prop9_psi,
    RouteKind,
};
use ctet_core::identities::run_suite_jobs;
use ctet_core::Complex64;
use ctet_core::quad::integrate_fn;
use ctet_core::specfun::{
    cl2, cl2_f, chi2, lerch_phi, li2_real, lobachevsky, lsn, pfq_series, ti2,
};
use ctet_core::{ExtReal, MathError};

#[derive(Parser)]
#[command(name = "ctet", version, about = "Special-function evaluation and identity verification around the Ising tetrahedron constant C(1,1)")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Evaluate a special function at a point: `eval cl2 1.5707963267948966`.
    Eval {
        /// Function name; run `eval help` to list the registry.
        name: String,
        /// Numeric arguments, one per parameter of the function.
        args: Vec<f64>,
        /// Target tolerance for tolerance-driven evaluators.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Run the identity verification suite.
    Verify {
        /// Only run identities whose id starts with this prefix (e.g. I-02, I-1, I-05a).
        #[arg(long)]
        filter: Option<String>,
        /// Seed for the sample-point generator; the report is a pure function of it.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Multiply every per-identity tolerance by this factor.
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
        /// Also write the full JSON report to this path.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        /// Worker threads; defaults to available parallelism. Output is
        /// identical for any value.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Evaluate C(1,1) by one route, or cross-check all four.
    Ctet {
        #[arg(long, value_enum, default_value_t = RouteArg::All)]
        route: RouteArg,
        /// Significant digits to print; above 15 (series route only) the
        /// value is computed in double-double arithmetic, up to 25.
        #[arg(long, default_value_t = 15)]
        digits: usize,
    },
    /// Compare evaluation strategies for one function; CSV on stdout.
    Bench {
        #[arg(long = "fn", value_enum)]
        function: BenchFn,
        /// Number of evaluation points per strategy (at most 1e6).
        #[arg(long, default_value_t = 1000)]
        points: usize,
    },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum RouteArg {
    All,
    Series,
    Clausen,
    Rajantie,
    Srp,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFn {
    Cl2,
    Li2,
}

fn main() -> ExitCode {
    match Cli::parse().verb {
        Verb::Eval { name, args, tol } => cmd_eval(&name, &args, tol),
        Verb::Verify { filter, seed, tol_scale, json, jobs } => {
            cmd_verify(filter.as_deref(), seed, tol_scale, json.as_deref(), jobs)
        }
        Verb::Ctet { route, digits } => cmd_ctet(route, digits),
        Verb::Bench { function, points } => cmd_bench(function, points),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn math_error(err: &MathError) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(1)
}

// ---------------------------------------------------------------------------
// eval

struct EvalEntry {
    name: &'static str,
    arity: usize,
    signature: &'static str,
    run: fn(&[f64], f64) -> Result<ExtReal, MathError>,
}

fn exact_bound(v: f64) -> ExtReal {
    ExtReal::new(v, 4.0 * f64::EPSILON * v.abs().max(1.0))
}

fn as_index(x: f64, what: &str) -> Result<u32, MathError> {
    if x.fract() == 0.0 && (0.0..=64.0).contains(&x) {
        Ok(x as u32)
    } else {
        Err(MathError::Domain(format!("{what} must be an integer in [0, 64], got {x}")))
    }
}

const REGISTRY: &[EvalEntry] = &[
    EvalEntry {
        name: "cl2",
        arity: 1,
        signature: "cl2 <theta>",
        run: |a, tol| Ok(cl2(a[0], tol)),
    },
    EvalEntry {
        name: "li2",
        arity: 1,
        signature: "li2 <x>   (x <= 1)",
        run: |a, _| {
            if a[0] > 1.0 {
                return Err(MathError::Domain(format!("li2 needs x <= 1, got {}", a[0])));
            }
            Ok(exact_bound(li2_real(a[0])))
        },
    },
    EvalEntry {
        name: "chi2",
        arity: 1,
        signature: "chi2 <x>   (|x| <= 1)",
        run: |a, _| {
            if a[0].abs() > 1.0 {
                return Err(MathError::Domain(format!("chi2 needs |x| <= 1, got {}", a[0])));
            }
            Ok(exact_bound(chi2(Complex64::new(a[0], 0.0)).re))
        },
    },
    EvalEntry {
        name: "ti2",
        arity: 1,
        signature: "ti2 <x>",
        run: |a, _| {
            if !a[0].is_finite() {
                return Err(MathError::NonFiniteInput);
            }
            Ok(exact_bound(ti2(a[0])))
        },
    },
    EvalEntry {
        name: "lerch_phi",
        arity: 3,
        signature: "lerch_phi <z> <s> <a>   (|z| <= 1, integer s >= 0, a > 0)",
        run: |a, _| {
            let s = as_index(a[1], "s")?;
            if a[0].abs() > 1.0 {
                return Err(MathError::Domain(format!("lerch_phi needs |z| <= 1, got {}", a[0])));
            }
            let v = lerch_phi(Complex64::new(a[0], 0.0), s, a[2])?;
            Ok(exact_bound(v.re))
        },
    },
    EvalEntry {
        name: "lobachevsky",
        arity: 1,
        signature: "lobachevsky <x>   (|x| <= pi/2)",
        run: |a, _| Ok(exact_bound(lobachevsky(a[0])?)),
    },
    EvalEntry {
        name: "lsn",
        arity: 2,
        signature: "lsn <n> <theta>   (log-sine integral Ls_n, integer n >= 2)",
        run: |a, tol| lsn(as_index(a[0], "n")?, a[1], tol.max(1e-13)),
    },
    EvalEntry {
        name: "psi",
        arity: 1,
        signature: "psi <x>   (x in (0, 1), the half-integer digamma combination)",
        run: |a, _| Ok(exact_bound(prop9_psi(a[0])?)),
    },
    EvalEntry {
        name: "pfq",
        arity: 6,
        signature: "pfq <a1> <a2> <a3> <b1> <b2> <z>   (3F2 series, |z| <= 1)",
        run: |a, tol| pfq_series(&a[0..3], &a[3..5], a[5], tol.max(1e-12)),
    },
    EvalEntry {
        name: "ctet_series",
        arity: 0,
        signature: "ctet_series",
        run: |_, tol| ctet_series(tol.max(1e-14)),
    },
    EvalEntry {
        name: "ctet_clausen",
        arity: 0,
        signature: "ctet_clausen",
        run: |_, _| Ok(ctet_clausen()),
    },
    EvalEntry {
        name: "ctet_rajantie",
        arity: 0,
        signature: "ctet_rajantie",
        run: |_, tol| ctet_rajantie(tol.max(1e-12)),
    },
    EvalEntry {
        name: "ctet_srp",
        arity: 0,
        signature: "ctet_srp",
        run: |_, _| Ok(ctet_srp()),
    },
];

fn cmd_eval(name: &str, args: &[f64], tol: f64) -> ExitCode {
    if name == "help" {
        println!("available functions:");
        for e in REGISTRY {
            println!("  {}", e.signature);
        }
        return ExitCode::SUCCESS;
    }
    let Some(entry) = REGISTRY.iter().find(|e| e.name == name) else {
        eprintln!("error: unknown function '{name}'; run `ctet eval help` for the registry");
        return ExitCode::from(2);
    };
    if args.len() != entry.arity {
        return usage_error(&format!(
            "{} takes {} argument(s), got {}; usage: {}",
            entry.name,
            entry.arity,
            args.len(),
            entry.signature
        ));
    }
    if args.iter().any(|x| !x.is_finite()) {
        return math_error(&MathError::NonFiniteInput);
    }
    match (entry.run)(args, tol) {
        Ok(r) => {
            println!("fn = {}", entry.name);
            println!("args = {:?}", args);
            println!("value = {:.16e}", r.value);
            println!("bound = {:.3e}", r.bound);
            ExitCode::SUCCESS
        }
        Err(e) => math_error(&e),
    }
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(
    filter: Option<&str>,
    seed: u64,
    tol_scale: f64,
    json: Option<&std::path::Path>,
    jobs: Option<usize>,
) -> ExitCode {
    if !(tol_scale > 0.0) || !tol_scale.is_finite() {
        return usage_error(&format!("--tol-scale must be a positive finite number, got {tol_scale}"));
    }
    let jobs = jobs.unwrap_or_else(|| {
        std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
    });
    if jobs == 0 {
        return usage_error("--jobs must be at least 1");
    }

    let start = Instant::now();
    let report = run_suite_jobs(seed, tol_scale, filter, jobs);
    let wall = start.elapsed();

    if report.identities.is_empty() {
        return usage_error(&format!("filter '{}' matched no identities", filter.unwrap_or("")));
    }

    print!("{}", report.to_markdown());
    let (mut pass, mut fail, mut resolved) = (0usize, 0usize, 0usize);
    for ir in &report.identities {
        match ir.status {
            ctet_core::identities::Status::Pass => pass += 1,
            ctet_core::identities::Status::Fail => fail += 1,
            ctet_core::identities::Status::DiscrepancyResolved => resolved += 1,
        }
    }
    println!();
    println!(
        "suite: {} identities — {pass} pass, {resolved} discrepancy-resolved, {fail} fail \
         (seed {seed}, tol-scale {tol_scale}, {jobs} jobs, {:.2}s)",
        report.identities.len(),
        wall.as_secs_f64()
    );

    if let Some(path) = json {
        let bytes = report.to_json();
        let written = std::fs::File::create(path)
            .and_then(|mut f| f.write_all(bytes.as_bytes()));
        if let Err(e) = written {
            eprintln!("error: cannot write JSON report to {}: {e}", path.display());
            return ExitCode::from(2);
        }
        println!("json report written to {}", path.display());
    }

    if report.all_assert_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

// ---------------------------------------------------------------------------
// ctet

/// Agreement budget per route when cross-checking: the documented accuracy
/// of each evaluation path at the default tolerances.
fn route_budget(route: RouteKind) -> f64 {
    match route {
        RouteKind::Series => 1e-12,
        RouteKind::Clausen => 1e-12,
        RouteKind::Rajantie => 1e-9,
        RouteKind::Srp => 1e-11,
    }
}

fn cmd_ctet(route: RouteArg, digits: usize) -> ExitCode {
    if digits == 0 || digits > 25 {
        return usage_error("--digits must be between 1 and 25");
    }
    if digits > 15 {
        if route != RouteArg::Series {
            return usage_error("--digits above 15 needs the double-double path: use --route series");
        }
        // (1/8)^120 ~ 1e-108: the truncation error is far below pair precision.
        let v = ctet_series_dd(120);
        println!("series C(1,1) = {}", v.decimal_string(digits));
        return ExitCode::SUCCESS;
    }

    let single = |r: Result<ExtReal, MathError>, name: &str| match r {
        Ok(v) => {
            println!("{name} C(1,1) = {:.*e} (bound {:.3e})", digits - 1, v.value, v.bound);
            ExitCode::SUCCESS
        }
        Err(e) => math_error(&e),
    };

    match route {
        RouteArg::Series => single(ctet_series(1e-13), "series"),
        RouteArg::Clausen => single(Ok(ctet_clausen()), "clausen"),
        RouteArg::Rajantie => single(ctet_rajantie(1e-12), "rajantie"),
        RouteArg::Srp => single(Ok(ctet_srp()), "srp"),
        RouteArg::All => {
            let routes = match all_routes(1e-13) {
                Ok(r) => r,
                Err(e) => return math_error(&e),
            };
            for r in &routes {
                println!(
                    "{:<9}C(1,1) = {:.*e} (bound {:.3e})",
                    r.route.name(),
                    digits - 1,
                    r.value.value,
                    r.value.bound
                );
            }
            let mut ok = true;
            for i in 0..routes.len() {
                for j in (i + 1)..routes.len() {
                    let (a, b) = (&routes[i], &routes[j]);
                    let delta = (a.value.value - b.value.value).abs();
                    let budget = route_budget(a.route) + route_budget(b.route);
                    let verdict = if delta <= budget { "ok" } else { "DISAGREE" };
                    println!(
                        "|{} - {}| = {:.3e} (budget {:.1e}) {}",
                        a.route.name(),
                        b.route.name(),
                        delta,
                        budget,
                        verdict
                    );
                    ok &= delta <= budget;
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

// ---------------------------------------------------------------------------
// bench

struct Strategy {
    name: &'static str,
    run: fn(f64) -> f64,
}

fn li2_power_series(x: f64) -> f64 {
    // direct definition sum x^n / n^2; the grid keeps |x| <= 0.9
    let mut sum = 0.0;
    let mut p = x;
    for n in 1..800u32 {
        let term = p / (n as f64 * n as f64);
        sum += term;
        if term.abs() < 1e-17 {
            break;
        }
        p *= x;
    }
    sum
}

fn cmd_bench(function: BenchFn, points: usize) -> ExitCode {
    if points == 0 || points > 1_000_000 {
        return usage_error("--points must be between 1 and 1000000");
    }

    // Fixed evaluation grid so the accuracy column is deterministic.
    let (grid, oracle, strategies): (Vec<f64>, fn(f64) -> f64, &[Strategy]) = match function {
        BenchFn::Cl2 => (
            (0..64).map(|i| 0.05 + (PI - 0.1) * i as f64 / 63.0).collect(),
            cl2_f,
            &[
                Strategy { name: "series", run: |t| cl2(t, 1e-12).value },
                Strategy {
                    name: "quadrature",
                    run: |t| {
                        integrate_fn(|u| -(2.0 * (0.5 * u).sin()).ln(), 0.0, t, 1e-11)
                            .map(|r| r.value)
                            .unwrap_or(f64::NAN)
                    },
                },
            ],
        ),
        BenchFn::Li2 => (
            (0..64).map(|i| -0.9 + 1.8 * i as f64 / 63.0).collect(),
            li2_real,
            &[
                Strategy { name: "series", run: li2_power_series },
                Strategy {
                    name: "quadrature",
                    run: |x| {
                        if x == 0.0 {
                            return 0.0;
                        }
                        integrate_fn(move |v| -(-x * v).ln_1p() / v, 0.0, 1.0, 1e-11)
                            .map(|r| r.value)
                            .unwrap_or(f64::NAN)
                    },
                },
            ],
        ),
    };

    println!("strategy,mean_ns,max_abs_err");
    for s in strategies {
        let mut max_err = 0.0f64;
        for &x in &grid {
            max_err = max_err.max(((s.run)(x) - oracle(x)).abs());
        }
        let start = Instant::now();
        for i in 0..points {
            std::hint::black_box((s.run)(std::hint::black_box(grid[i % grid.len()])));
        }
        let mean_ns = start.elapsed().as_nanos() as f64 / points as f64;
        println!("{},{:.0},{:.3e}", s.name, mean_ns, max_err);
    }
    ExitCode::SUCCESS
}
