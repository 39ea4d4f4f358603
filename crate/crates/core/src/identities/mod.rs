//! Declarative identity registry and deterministic verification runner.
//!
//! Each [`Identity`] pairs two independent evaluation routes for the
//! same quantity together with a seeded sampler over its admissible
//! domain. [`run_suite`] evaluates every registered identity at its
//! sample points and produces a [`Report`] that renders to JSON and
//! markdown. Records with [`Policy::Discrepancy`] carry extra candidate
//! right-hand sides; the runner adjudicates all candidates against the
//! trusted left-hand side and reports which one matched instead of
//! failing.

mod catalog;

pub use catalog::catalog;

use crate::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// How a verification failure is treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    /// A mismatch beyond tolerance fails the record.
    Assert,
    /// A known ambiguity: the runner adjudicates candidate forms and
    /// reports which one matched; the record never fails.
    Discrepancy,
}

/// Evaluator over a flat argument vector (one slot per sampler name).
pub type Eval = Box<dyn Fn(&[f64]) -> Result<f64> + Send + Sync>;

/// Seeded sample-point generator: a set of fixed "interesting" points
/// plus uniformly drawn points that stay a small margin away from the
/// domain boundaries.
pub struct Sampler {
    pub names: Vec<&'static str>,
    pub fixed: Vec<Vec<f64>>,
    pub random: usize,
    pub domain: Vec<(f64, f64)>,
}

impl Sampler {
    pub fn new(
        names: &[&'static str],
        fixed: &[&[f64]],
        random: usize,
        domain: &[(f64, f64)],
    ) -> Self {
        Sampler {
            names: names.to_vec(),
            fixed: fixed.iter().map(|p| p.to_vec()).collect(),
            random,
            domain: domain.to_vec(),
        }
    }

    /// Five dimensionless samples for identities between constants.
    pub fn constant() -> Self {
        Sampler { names: Vec::new(), fixed: vec![Vec::new(); 5], random: 0, domain: Vec::new() }
    }

    pub fn points(&self, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
        let mut pts = self.fixed.clone();
        for _ in 0..self.random {
            let p: Vec<f64> = self
                .domain
                .iter()
                .map(|&(lo, hi)| {
                    let margin = 1e-3 * (hi - lo);
                    lo + margin + rng.gen::<f64>() * (hi - lo - 2.0 * margin)
                })
                .collect();
            pts.push(p);
        }
        pts
    }
}

/// One registered identity.
pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    pub paper_ref: &'static str,
    pub tolerance: f64,
    pub policy: Policy,
    pub sampler: Sampler,
    pub lhs: Eval,
    pub rhs: Eval,
    /// Alternative right-hand-side candidates, used by discrepancy
    /// records to adjudicate ambiguous printed forms.
    pub alternates: Vec<(&'static str, Eval)>,
}

/// Outcome of a single sample evaluation.
#[derive(Clone, Debug)]
pub struct SampleCheck {
    pub inputs: Vec<(String, f64)>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub within_tol: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    DiscrepancyResolved,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DiscrepancyResolved => "discrepancy-resolved",
        }
    }
}

/// Per-identity section of a suite report.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: String,
    pub description: String,
    pub paper_ref: String,
    pub status: Status,
    pub tolerance: f64,
    pub samples: Vec<SampleCheck>,
}

impl IdentityReport {
    pub fn max_abs_err(&self) -> f64 {
        self.samples.iter().map(|s| s.abs_err).fold(0.0, f64::max)
    }
}

/// Full suite report.
#[derive(Clone, Debug)]
pub struct Report {
    pub seed: u64,
    pub tol_scale: f64,
    pub identities: Vec<IdentityReport>,
    /// Pinned to zero so that reports for the same seed are
    /// byte-identical; wall time is printed separately by callers.
    pub wall_ms: u64,
}

impl Report {
    /// True iff no assert-policy identity failed.
    pub fn all_assert_passed(&self) -> bool {
        self.identities.iter().all(|r| r.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"seed\": {},", self.seed);
        let _ = writeln!(out, "  \"tol_scale\": {},", json_f64(self.tol_scale));
        out.push_str("  \"identities\": [");
        for (i, r) in self.identities.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str("\n    {\n");
            let _ = writeln!(out, "      \"id\": {},", json_str(&r.id));
            let _ = writeln!(out, "      \"description\": {},", json_str(&r.description));
            let _ = writeln!(out, "      \"paper_ref\": {},", json_str(&r.paper_ref));
            let _ = writeln!(out, "      \"status\": \"{}\",", r.status.as_str());
            let _ = writeln!(out, "      \"tolerance\": {},", json_f64(r.tolerance));
            out.push_str("      \"samples\": [");
            for (j, s) in r.samples.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                out.push_str("\n        { \"inputs\": {");
                for (k, (name, v)) in s.inputs.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    let _ = write!(out, "{}: {}", json_str(name), json_f64(*v));
                }
                let _ = write!(
                    out,
                    "}}, \"lhs\": {}, \"rhs\": {}, \"abs_err\": {}, \"rel_err\": {}, \"within_tol\": {} }}",
                    json_f64(s.lhs),
                    json_f64(s.rhs),
                    json_f64(s.abs_err),
                    json_f64(s.rel_err),
                    s.within_tol
                );
            }
            if !r.samples.is_empty() {
                out.push_str("\n      ");
            }
            out.push_str("]\n    }");
        }
        if !self.identities.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("],\n");
        let _ = writeln!(out, "  \"wall_ms\": {}", self.wall_ms);
        out.push_str("}\n");
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Identity verification report");
        let _ = writeln!(out);
        let _ = writeln!(out, "seed {}, tolerance scale {}", self.seed, self.tol_scale);
        let _ = writeln!(out);
        let _ = writeln!(out, "| id | status | tolerance | max abs err | samples | description |");
        let _ = writeln!(out, "|----|--------|-----------|-------------|---------|-------------|");
        for r in &self.identities {
            let _ = writeln!(
                out,
                "| {} | {} | {:.1e} | {:.2e} | {} | {} |",
                r.id,
                r.status.as_str(),
                r.tolerance,
                r.max_abs_err(),
                r.samples.len(),
                r.description.replace('|', "\\|")
            );
        }
        out
    }
}

fn json_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{:.16e}", v)
    } else {
        "null".to_string()
    }
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// True when `id` matches the filter: either an exact prefix
/// (`"I-02"` matches `I-02a`, `I-02b`) or a `*`-terminated glob
/// (`"I-0*"` matches `I-01`..`I-09` records).
pub fn filter_matches(id: &str, filter: Option<&str>) -> bool {
    match filter {
        None => true,
        Some(f) => {
            let prefix = f.strip_suffix('*').unwrap_or(f);
            id.starts_with(prefix)
        }
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn eval_guarded(f: &Eval, args: &[f64]) -> std::result::Result<f64, String> {
    match catch_unwind(AssertUnwindSafe(|| f(args))) {
        Ok(Ok(v)) => Ok(v),
        Ok(Err(e)) => Err(format!("evaluator error: {e}")),
        Err(_) => Err("evaluator panicked".to_string()),
    }
}

fn check_sample(
    identity: &Identity,
    args: &[f64],
    rhs: &Eval,
    tol: f64,
) -> (SampleCheck, Option<String>) {
    let inputs: Vec<(String, f64)> = identity
        .sampler
        .names
        .iter()
        .zip(args.iter())
        .map(|(n, v)| (n.to_string(), *v))
        .collect();
    let l = eval_guarded(&identity.lhs, args);
    let r = eval_guarded(rhs, args);
    match (l, r) {
        (Ok(l), Ok(r)) => {
            let abs_err = (l - r).abs();
            let rel_err = abs_err / l.abs().max(r.abs()).max(1e-300);
            let within = abs_err.is_finite() && abs_err <= tol;
            (
                SampleCheck { inputs, lhs: l, rhs: r, abs_err, rel_err, within_tol: within },
                None,
            )
        }
        (l, r) => {
            let msg = l.err().or(r.err()).unwrap();
            (
                SampleCheck {
                    inputs,
                    lhs: f64::NAN,
                    rhs: f64::NAN,
                    abs_err: f64::INFINITY,
                    rel_err: f64::INFINITY,
                    within_tol: false,
                },
                Some(msg),
            )
        }
    }
}

fn run_identity(identity: &Identity, seed: u64, tol_scale: f64) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(identity.id.as_bytes()));
    let points = identity.sampler.points(&mut rng);
    let tol = identity.tolerance * tol_scale;
    let mut description = identity.description.to_string();

    let mut samples = Vec::with_capacity(points.len());
    let mut messages: Vec<String> = Vec::new();
    for p in &points {
        let (s, msg) = check_sample(identity, p, &identity.rhs, tol);
        samples.push(s);
        if let Some(m) = msg {
            messages.push(m);
        }
    }
    let primary_ok = samples.iter().all(|s| s.within_tol);

    let status = match identity.policy {
        Policy::Assert => {
            if primary_ok {
                Status::Pass
            } else {
                Status::Fail
            }
        }
        Policy::Discrepancy => {
            // Adjudicate every candidate form against the trusted side
            // and report which one matched.
            let mut verdicts: Vec<(String, f64, bool)> = Vec::new();
            let primary_max = samples.iter().map(|s| s.abs_err).fold(0.0, f64::max);
            verdicts.push(("as-implemented form".to_string(), primary_max, primary_ok));
            for (name, alt) in &identity.alternates {
                let mut max_err: f64 = 0.0;
                let mut ok = true;
                for p in &points {
                    let (s, msg) = check_sample(identity, p, alt, tol);
                    max_err = max_err.max(s.abs_err);
                    ok &= s.within_tol;
                    if let Some(m) = msg {
                        messages.push(format!("{name}: {m}"));
                    }
                }
                verdicts.push((name.to_string(), max_err, ok));
            }
            let mut note = String::from(" | resolution:");
            for (name, max_err, ok) in &verdicts {
                let _ = write!(
                    note,
                    " {} {} (max abs err {:.2e});",
                    name,
                    if *ok { "matches" } else { "deviates" },
                    max_err
                );
            }
            description.push_str(&note);
            Status::DiscrepancyResolved
        }
    };
    if status == Status::Fail && !messages.is_empty() {
        messages.sort();
        messages.dedup();
        let _ = write!(description, " | errors: {}", messages.join("; "));
    }

    IdentityReport {
        id: identity.id.to_string(),
        description,
        paper_ref: identity.paper_ref.to_string(),
        status,
        tolerance: tol,
        samples,
    }
}

/// Run the full catalog (or the subset matching `filter`) with the
/// given seed and tolerance scale. Deterministic per seed: the same
/// seed produces a byte-identical JSON report.
pub fn run_suite(seed: u64, tol_scale: f64, filter: Option<&str>) -> Report {
    run_suite_jobs(seed, tol_scale, filter, 1)
}

/// Like [`run_suite`], but evaluates identities on `jobs` worker threads.
/// The report lists identities in catalog order regardless of `jobs`, so
/// output is identical for any thread count.
pub fn run_suite_jobs(seed: u64, tol_scale: f64, filter: Option<&str>, jobs: usize) -> Report {
    let selected: Vec<Identity> = catalog()
        .into_iter()
        .filter(|i| filter_matches(i.id, filter))
        .collect();
    let jobs = jobs.max(1).min(selected.len().max(1));

    let identities = if jobs == 1 {
        selected.iter().map(|i| run_identity(i, seed, tol_scale)).collect()
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let slots: Vec<std::sync::Mutex<Option<IdentityReport>>> =
            selected.iter().map(|_| std::sync::Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    let Some(identity) = selected.get(i) else { break };
                    let report = run_identity(identity, seed, tol_scale);
                    *slots[i].lock().unwrap() = Some(report);
                });
            }
        });
        slots
            .into_iter()
            .map(|slot| slot.into_inner().unwrap().expect("worker filled every slot"))
            .collect()
    };
    Report { seed, tol_scale, identities, wall_ms: 0 }
}

#[cfg(test)]
mod tests;
