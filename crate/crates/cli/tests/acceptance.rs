//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are
//! exact (rational or integer equality); the only tolerances are the wall
//! time budgets.

#[path = "../../core/tests/support/props.rs"]
mod props;

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestError, TestRunner};
use trace3_cli::checks::{run_check, CHECKS};

fn property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config::with_cases(props::CASES));
    match runner.run(&strategy, test) {
        Ok(()) => Ok(()),
        Err(TestError::Fail(why, input)) => Err(format!("{name}: {why} for {input:?}")),
        Err(TestError::Abort(why)) => Err(format!("{name}: aborted: {why}")),
    }
}

type Suite = Box<dyn Fn() -> Result<(), String>>;

fn ac9() -> (bool, Vec<String>) {
    let budget = Duration::from_secs(60);
    let mut lines = Vec::new();
    let mut passed = true;
    let suites: Vec<(&str, Suite)> = vec![
        (
            "ring axioms",
            Box::new(|| {
                property(
                    "ring axioms",
                    (props::poly(), props::poly(), props::poly()),
                    |(a, b, c)| props::ring_axioms(&a, &b, &c),
                )
            }),
        ),
        (
            "exp(Delta) = g",
            Box::new(|| {
                let ij = (1u8..=2).prop_flat_map(|i| (Just(i), i + 1..=3));
                property(
                    "exp(Delta) = g",
                    (props::trace_expr(), ij),
                    |(e, (i, j))| props::exp_delta_is_g(&e, i, j),
                )
            }),
        ),
        (
            "SSYT count = Weyl dimension",
            Box::new(|| {
                property("ssyt", props::partition_and_d(), |(l, d)| {
                    props::ssyt_count(&l, d)
                })
            }),
        ),
        (
            "bialternant = tableau sum",
            Box::new(|| {
                property("bialternant", props::partition_and_d(), |(l, d)| {
                    props::bialternant(&l, d)
                })
            }),
        ),
        (
            "nullspace soundness",
            Box::new(|| {
                property("nullspace", props::int_matrix(), |m| {
                    props::nullspace_sound(&m)
                })
            }),
        ),
    ];
    for (name, run) in suites {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let ok = result.is_ok() && elapsed <= budget;
        passed &= ok;
        lines.push(format!(
            "{} {name}: {} cases, {:.2}s{}",
            if ok { "ok  " } else { "FAIL" },
            props::CASES,
            elapsed.as_secs_f64(),
            result.err().map(|e| format!(" ({e})")).unwrap_or_default()
        ));
    }
    (passed, lines)
}

fn main() {
    let mut summary = Vec::new();
    let mut all = true;
    for check in &CHECKS {
        let r = run_check(check, 1, true);
        let secs = r.wall_ms.unwrap_or(0) as f64 / 1000.0;
        let in_budget = secs <= r.budget_s as f64;
        let ok = r.passed && in_budget;
        all &= ok;
        println!("{} {}", r.id, r.name);
        for l in &r.lines {
            println!("  {l}");
        }
        summary.push(format!(
            "{} {} ({}; {secs:.2}s of {}s budget)",
            r.id,
            if ok { "PASS" } else { "FAIL" },
            r.name,
            r.budget_s
        ));
    }
    let start = Instant::now();
    let (ok9, lines) = ac9();
    println!("AC9 property suites");
    for l in &lines {
        println!("  {l}");
    }
    all &= ok9;
    summary.push(format!(
        "AC9 {} (property suites; {:.2}s, 60s budget each)",
        if ok9 { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    ));
    println!();
    for s in &summary {
        println!("{s}");
    }
    if !all {
        eprintln!("acceptance criteria failed");
        std::process::exit(1);
    }
}
