//! Named property suites, looked up at runtime by the `verify` command.
//!
//! Each suite draws all of its samples from the configured seed before any
//! work starts, checks them in parallel, and assembles the results in sample
//! order, so a report depends only on the [`RunConfig`].

mod config;
mod demo;
mod checks;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use config::{parse_weights, RunConfig, SampleCounts};
pub use demo::{demo_theorem, non_normality_witness, DemoReport, NonNormalityWitness, Rate};
pub use checks::{DHomSuite, IdentitiesSuite, InverseSuite, Lemma4Suite, Lemma5Suite, OrderSuite, RingSuite};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub id: String,
    pub claim: String,
    pub trials: usize,
    pub failures: usize,
    pub passed: bool,
    /// The first failing sample, in sample order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Assertion {
    pub fn single(id: &str, claim: &str, ok: bool, detail: Option<String>) -> Self {
        Self {
            id: id.into(),
            claim: claim.into(),
            trials: 1,
            failures: usize::from(!ok),
            passed: ok,
            first_failure: if ok { None } else { detail },
            note: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub assertions: Vec<Assertion>,
}

impl SuiteReport {
    pub fn new(suite: &str, assertions: Vec<Assertion>) -> Self {
        let passed = !assertions.is_empty() && assertions.iter().all(|a| a.passed);
        Self { suite: suite.into(), passed, assertions }
    }

    pub fn assertion(&self, id: &str) -> Option<&Assertion> {
        self.assertions.iter().find(|a| a.id == id)
    }
}

/// Runs `check` on every sample in parallel; `Ok(Some(msg))` marks a failure.
/// An `Err` from a check is counted as a failure and reported with its message.
pub fn tally<T, F>(id: &str, claim: &str, samples: &[T], check: F) -> Assertion
where
    T: Sync,
    F: Fn(&T) -> Result<Option<String>> + Sync,
{
    let outcomes: Vec<Option<String>> = samples
        .par_iter()
        .map(|s| match check(s) {
            Ok(v) => v,
            Err(e) => Some(format!("error: {e}")),
        })
        .collect();
    let failures = outcomes.iter().filter(|o| o.is_some()).count();
    Assertion {
        id: id.into(),
        claim: claim.into(),
        trials: samples.len(),
        failures,
        passed: failures == 0 && !samples.is_empty(),
        first_failure: outcomes.into_iter().flatten().next(),
        note: None,
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn run(&self, cfg: &RunConfig) -> Result<SuiteReport>;
}

pub fn registry() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(OrderSuite),
        Box::new(RingSuite),
        Box::new(DHomSuite),
        Box::new(InverseSuite),
        Box::new(Lemma4Suite),
        Box::new(Lemma5Suite),
        Box::new(IdentitiesSuite),
    ]
}

pub fn suite_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = registry().iter().map(|s| s.name()).collect();
    names.push("all");
    names
}

/// Resolves a suite name (or `all`) to the suites it runs, in registry order.
pub fn select(name: &str) -> Result<Vec<Box<dyn Suite>>> {
    let all = registry();
    if name == "all" {
        return Ok(all);
    }
    let picked: Vec<_> = all.into_iter().filter(|s| s.name() == name).collect();
    if picked.is_empty() {
        return Err(Error::UnknownSuite(format!("`{name}`; expected one of {}", suite_names().join(", "))));
    }
    Ok(picked)
}

pub fn run_suites(name: &str, cfg: &RunConfig) -> Result<Vec<SuiteReport>> {
    cfg.validate()?;
    select(name)?.iter().map(|s| s.run(cfg)).collect()
}
