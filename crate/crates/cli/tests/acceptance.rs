//! End-to-end acceptance gate. Prints one line per criterion and exits
//! nonzero if any criterion that is expected to hold fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use malcev_core::suites::{demo_theorem, select, RunConfig, SuiteReport};

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self { passed, detail: detail.into() }
    }
}

fn run(name: &str, cfg: &RunConfig) -> SuiteReport {
    let suites = select(name).expect("suite exists");
    suites[0].run(cfg).expect("suite runs")
}

/// Every assertion passed, ran the expected number of trials and recorded no failures.
fn all_clean(report: &SuiteReport, ids: &[&str], trials: usize) -> Outcome {
    let mut problems = Vec::new();
    for id in ids {
        match report.assertion(id) {
            None => problems.push(format!("{id}: missing")),
            Some(a) if !a.passed || a.failures > 0 => {
                problems.push(format!("{id}: {} of {} failed, first: {:?}", a.failures, a.trials, a.first_failure))
            }
            Some(a) if a.trials != trials => problems.push(format!("{id}: {} trials, expected {trials}", a.trials)),
            Some(_) => {}
        }
    }
    if problems.is_empty() {
        Outcome::new(true, format!("{} assertions x {trials} samples, 0 failures", ids.len()))
    } else {
        Outcome::new(false, problems.join("; "))
    }
}

fn order(cfg: &RunConfig) -> Outcome {
    let start = Instant::now();
    let report = run("order", cfg);
    let elapsed = start.elapsed();
    let ids = ["totality", "antisymmetry", "transitivity", "left-invariance", "right-invariance"];
    let mut out = all_clean(&report, &ids, 1000);
    out.passed &= elapsed <= Duration::from_secs(30);
    out.detail = format!("{}, {:.2} s (limit 30 s)", out.detail, elapsed.as_secs_f64());
    out
}

fn d_hom(cfg: &RunConfig) -> Outcome {
    all_clean(&run("d-hom", cfg), &["d-multiplicative", "leading-coefficient"], 1000)
}

fn ring(cfg: &RunConfig) -> Outcome {
    all_clean(&run("ring", cfg), &["associativity", "left-distributivity", "right-distributivity"], 300)
}

/// The conjugated bound is only valid for the right residual. The left residual
/// is exactly `d(ε)^(n+1)`, which can sit below the conjugate. This criterion is
/// reported as failing as stated, and the gate checks the corrected statement.
fn inverse(cfg: &RunConfig) -> (Outcome, Outcome) {
    let report = run("inverse", cfg);
    let corrected = all_clean(&report, &["right-residual", "left-residual", "residual-exact", "monotone-in-n"], 200);
    let control = report.assertion("left-below-conjugate-explained").expect("control present");
    let note = control.note.clone().unwrap_or_default();
    let literal_holds = note.starts_with("no sample");
    let literal = Outcome::new(
        literal_holds,
        format!("left residual >= u·d(ε)^(n+1)·u^-1 for n = 0..5: {}", note.split("; first").next().unwrap_or("")),
    );
    let corrected = Outcome::new(
        corrected.passed && control.passed,
        format!(
            "right >= u·d(ε)^(n+1)·u^-1, left >= d(ε)^(n+1), both attained, strictly increasing in n: {}; every sample below the conjugated bound sits at d(ε)^(n+1): {}",
            corrected.detail, control.passed
        ),
    );
    (literal, corrected)
}

fn demo(cfg: &RunConfig) -> Outcome {
    let rep = demo_theorem(cfg).expect("demo runs");
    let images = ["(1 2 3)", "(1 2)", "(2 3)"];
    let ok = rep.samples >= 100
        && rep.labels_realized == 3
        && rep.witness.images == images
        && rep.witness.beta_in_n
        && !rep.witness.conjugate_in_n
        && rep.poincare_sixth_power.all_passed
        && rep.poincare_sixth_power.trials == rep.samples
        && rep.x_image == "Id"
        && rep.success;
    Outcome::new(
        ok,
        format!(
            "{} units, labels {:?}, witness images {:?}, sixth powers {}/{}, φ({}) = {}",
            rep.samples,
            rep.coset_label_counts,
            rep.witness.images,
            rep.poincare_sixth_power.passed,
            rep.poincare_sixth_power.trials,
            rep.x,
            rep.x_image
        ),
    )
}

fn normal_forms(cfg: &RunConfig) -> Outcome {
    let report = run("lemma5", cfg);
    // 3 + 9 + 27 + 81 descriptors of depth 1..=4, each with n = 0..=4
    let symbolic = all_clean(&report, &["symbolic", "commutator-form"], 120 * 5);
    let numeric = all_clean(&report, &["numeric"], 20);
    let control = report.assertion("mutated-phi-fails").is_some_and(|a| a.passed);
    Outcome::new(
        symbolic.passed && numeric.passed && control && cfg.depth == 4,
        format!(
            "symbolic: {}; numeric at depth {} and n = {}: {}; mutated φ_1 rejected: {control}",
            symbolic.detail, cfg.depth, cfg.lemma5_n, numeric.detail
        ),
    )
}

fn rewrites(cfg: &RunConfig) -> Outcome {
    all_clean(&run("lemma4", cfg), &["conjugation-rewrite", "power-rewrite"], 500)
}

fn identities(cfg: &RunConfig) -> Outcome {
    let report = run("identities", cfg);
    let pick = |id: &str| report.assertion(id).is_some_and(|a| a.passed);
    let s3 = report.assertion("sixth-powers-in-s3").is_some_and(|a| a.passed && a.trials == 36);
    let ok = pick("conjugate-identity-commuting") && pick("conjugate-identity-free") && s3;
    Outcome::new(
        ok,
        format!(
            "commuting samples give 1: {}; free counterexample found: {}; x^6 y^6 x^-6 y^-6 = 1 on 36 pairs: {s3}",
            pick("conjugate-identity-commuting"),
            pick("conjugate-identity-free")
        ),
    )
}

fn determinism() -> Outcome {
    let once = || {
        Command::new(env!("CARGO_BIN_EXE_malcev"))
            .args(["demo-theorem", "--seed", "7"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (once(), once());
    let ok = a.status.success() && b.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout;
    Outcome::new(ok, format!("two runs with seed 7: {} and {} bytes, identical: {}", a.stdout.len(), b.stdout.len(), a.stdout == b.stdout))
}

fn main() -> ExitCode {
    let cfg = RunConfig::default();
    let (literal, corrected) = inverse(&cfg);
    let results: Vec<(&str, Outcome, bool)> = vec![
        ("1 order axioms", order(&cfg), true),
        ("2 d-homomorphism", d_hom(&cfg), true),
        ("3 ring axioms", ring(&cfg), true),
        ("4 truncated inverse (as stated)", literal, false),
        ("4 truncated inverse (corrected)", corrected, true),
        ("5 demo", demo(&cfg), true),
        ("6 normal forms", normal_forms(&cfg), true),
        ("7 conjugation rewrites", rewrites(&cfg), true),
        ("8 identity evaluation", identities(&cfg), true),
        ("9 determinism", determinism(), true),
    ];
    let mut gate = true;
    for (name, out, required) in &results {
        let tag = match (out.passed, required) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FAIL (known, not gated)",
        };
        println!("criterion {name}: {tag}: {}", out.detail);
        gate &= out.passed || !required;
    }
    if gate {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
