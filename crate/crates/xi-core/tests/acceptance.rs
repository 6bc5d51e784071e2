//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are
//! exact equalities of integer-coefficient Laurent polynomials or cyclotomic
//! residues; there is no numeric tolerance anywhere.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use xi_core::exec::Exec;
use xi_core::report::VerifyReport;
use xi_core::rou::rou_lemma_checks;
use xi_core::verify::{run_suite, Bounds, Suite};

const TOLERANCE: &str = "exact";

struct Outcome {
    pass: bool,
    detail: String,
}

fn bounds(max_len: u32, max_nu: i64, max_m: u32) -> Bounds {
    Bounds {
        max_len: Some(max_len),
        max_nu: Some(max_nu),
        max_m: Some(max_m),
        max_deg: Some(6),
    }
}

fn suites(list: &[Suite], b: Bounds, exec: Exec, limit: Option<Duration>) -> Outcome {
    let start = Instant::now();
    let reports: Vec<VerifyReport> = list.iter().map(|&s| run_suite(s, &b, exec)).collect();
    let elapsed = start.elapsed();
    let mut pass = reports.iter().all(|r| r.pass);
    let mut parts: Vec<String> = reports
        .iter()
        .map(|r| format!("{} {} checks, {} counterexamples", r.suite, r.checked, r.counterexamples.len()))
        .collect();
    for r in reports.iter().filter(|r| !r.pass) {
        for c in r.counterexamples.iter().take(3) {
            parts.push(format!("first failure {}/{} [{}]: {} vs {}", r.suite, c.check, c.inputs, c.lhs, c.rhs));
        }
    }
    if let Some(limit) = limit {
        if elapsed > limit {
            pass = false;
            parts.push(format!("over time limit {limit:?}"));
        }
    }
    parts.push(format!("{:.2}s", elapsed.as_secs_f64()));
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

/// Every identity family of the root-of-unity lemma suite is exercised.
fn rou_families_present(max_m: u32) -> Outcome {
    let required = [
        "mirror",
        "period_m",
        "period_2m",
        "2m_minus_1",
        "rho_even_split",
        "rho_even_step",
        "rho_odd_square",
        "rho_trig_even",
        "rho_trig_odd",
        "gamma1_at_root",
        "magic0",
        "magic1",
        "magic3",
        "magic_odd_odd",
        "magic_even_even_1",
        "magic_even_even_2",
        "magic_even_even_3",
        "gamma_factors",
        "kappa1_power",
        "kappa2_trivial",
        "lambda5_trivial",
    ];
    let mut seen = BTreeSet::new();
    for m in 2..=max_m {
        match rou_lemma_checks(m) {
            Ok(checks) => seen.extend(checks.iter().map(|c| c.name)),
            Err(e) => {
                return Outcome {
                    pass: false,
                    detail: format!("m={m}: {e}"),
                }
            }
        }
    }
    let missing: Vec<&str> = required.iter().copied().filter(|r| !seen.contains(r)).collect();
    Outcome {
        pass: missing.is_empty(),
        detail: if missing.is_empty() {
            format!("{} identity families present", required.len())
        } else {
            format!("missing families: {}", missing.join(", "))
        },
    }
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    Outcome {
        pass: a.pass && b.pass,
        detail: format!("{}; {}", a.detail, b.detail),
    }
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let par = Exec::Parallel { jobs: Some(8) };
    let criteria: Vec<Criterion> = vec![
        (
            "operator relations, monomials of degree <= 6",
            Box::new(move || suites(&[Suite::Relations], bounds(0, 0, 0), par, None)),
        ),
        (
            "golden magic values, corrected base cases, calibration",
            Box::new(move || suites(&[Suite::MagicGolden, Suite::Calibration], bounds(0, 0, 0), par, None)),
        ),
        (
            "formula = oracle = recursion for l <= 12, 8 workers, under 5 minutes",
            Box::new(move || {
                suites(&[Suite::FormulaVsOracle], bounds(12, 0, 0), par, Some(Duration::from_secs(300)))
            }),
        ),
        (
            "Xi symmetries for l <= 12",
            Box::new(move || suites(&[Suite::Symmetries], bounds(12, 0, 0), par, None)),
        ),
        (
            "magic generating functions for nu <= 10",
            Box::new(move || suites(&[Suite::MagicGenfun], bounds(0, 10, 0), par, None)),
        ),
        (
            "magic symmetry, Chu-Vandermonde, three-term recursion, telescopes for nu <= 8",
            Box::new(move || {
                suites(
                    &[Suite::MagicSymmetry, Suite::ChuVandermonde, Suite::MagicRecursion, Suite::Telescope],
                    bounds(0, 8, 0),
                    par,
                    None,
                )
            }),
        ),
        (
            "root-of-unity values for m in 2..=6, under 10 minutes",
            Box::new(move || suites(&[Suite::RouXi], bounds(0, 0, 6), par, Some(Duration::from_secs(600)))),
        ),
        (
            "root-of-unity lemmas for m <= 8",
            Box::new(move || {
                both(
                    suites(&[Suite::RouLemmas], bounds(0, 0, 8), par, None),
                    rou_families_present(8),
                )
            }),
        ),
        (
            "p -> 1 degenerations: magic for nu <= 10, Xi for 4 <= l <= 10",
            Box::new(move || suites(&[Suite::Q1Degeneration], bounds(10, 10, 0), par, None)),
        ),
    ];

    println!("acceptance: {} criteria, tolerance {TOLERANCE}", criteria.len());
    let mut failed = 0;
    for (n, (title, run)) in criteria.iter().enumerate() {
        let out = run();
        if !out.pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} - {} ({})",
            n + 1,
            if out.pass { "PASS" } else { "FAIL" },
            title,
            out.detail
        );
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
