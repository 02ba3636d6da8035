use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use malcev_core::free_group::MagnusOrder;
use malcev_core::identities::{eval_expr, Env, EvalTarget, FreeGroupTarget, S3Target, SeriesTarget};
use malcev_core::parse::{parse_expr, parse_series, parse_word};
use malcev_core::series::{truncated_inverse, ApproxSeries, InversionSplit};
use malcev_core::subgroups::{CosetLabel, GroupHomToS3};
use malcev_core::suites::{self, parse_weights, RunConfig, SampleCounts};
use malcev_core::{Error, Result};

/// Exact arithmetic and property checks for Mal'cev-Neumann series over a free group.
#[derive(Parser, Debug)]
#[command(name = "malcev", version)]
struct Cli {
    #[command(flatten)]
    cfg: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct ConfigArgs {
    /// TOML file with seed, depth, weights, samples, descriptor, x
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of geometric-series terms kept when inverting
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Twist weights, e.g. "1:1,2:-2"; generator i shifts s by weight_i
    #[arg(long, global = true)]
    weights: Option<String>,
    /// Sample count used by every suite
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Word the maximal subgroup must contain
    #[arg(long, global = true)]
    x: Option<String>,
    /// Series-shape descriptor, e.g. "N,F2,N"
    #[arg(long = "desc", global = true)]
    descriptor: Option<String>,
    /// Recursion depth for the truncated normal-form check
    #[arg(long, global = true)]
    n: Option<usize>,
}

impl ConfigArgs {
    fn resolve(&self) -> Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                RunConfig::from_toml(&text)?
            }
            None => RunConfig::default(),
        };
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(d) = self.depth {
            cfg.depth = d;
        }
        if let Some(w) = &self.weights {
            cfg.weights = parse_weights(w)?;
        }
        if let Some(n) = self.samples {
            cfg.samples = SampleCounts::uniform(n);
        }
        if let Some(x) = &self.x {
            cfg.x = parse_word(x)?;
        }
        if let Some(d) = &self.descriptor {
            cfg.descriptor = d.parse()?;
        }
        if let Some(n) = self.n {
            cfg.lemma5_n = n;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Free,
    S3,
    Series,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare two words in the Magnus order
    Compare { a: String, b: String },
    /// Evaluate a word expression; bindings look like `x=x1*x2` (`?x`) or `a=x3` (constant a)
    Eval {
        expr: String,
        #[arg(long = "bind", short = 'b')]
        bindings: Vec<String>,
        #[arg(long = "in", value_enum, default_value = "free")]
        target: Target,
    },
    /// Least support word and its coefficient
    D { series: String },
    /// Whether a series lies in N = d^-1(H)
    Membership { series: String },
    /// Right coset of N containing a series
    Coset { series: String },
    /// A unit conjugating an element of N outside N
    Witness,
    /// Truncated inverse with its guarantee and residual bounds
    Invert {
        series: String,
        /// Number of correction terms
        #[arg(long = "terms", default_value_t = 4)]
        terms: usize,
    },
    /// Run a named property suite (or `all`)
    Verify { suite: String },
    /// Depth-one demonstration report
    DemoTheorem,
}

enum Outcome {
    Pass(Value),
    Fail(Value),
}

fn print(v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    // a closed pipe downstream is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn split_binding(b: &str) -> Result<(&str, &str)> {
    b.split_once('=')
        .map(|(k, v)| (k.trim(), v.trim()))
        .ok_or_else(|| Error::Config(format!("binding `{b}` must look like name=value")))
}

fn bind<T: EvalTarget>(
    bindings: &[String],
    vars: &std::collections::BTreeSet<String>,
    convert: impl Fn(&str) -> Result<T::Value>,
) -> Result<Env<T::Value>> {
    let mut env = Env::new();
    for b in bindings {
        let (k, v) = split_binding(b)?;
        let name = k.trim_start_matches('?');
        let value = convert(v)?;
        env = if k.starts_with('?') || vars.contains(name) { env.with_var(name, value) } else { env.with_const(name, value) };
    }
    Ok(env)
}

fn run(cmd: Command, cfg_args: &ConfigArgs) -> Result<Outcome> {
    let cfg = cfg_args.resolve()?;
    let tw = &cfg.weights;
    let phi = GroupHomToS3::make_maximal_subgroup(&cfg.x);
    Ok(match cmd {
        Command::Compare { a, b } => {
            let (wa, wb) = (parse_word(&a)?, parse_word(&b)?);
            let c = MagnusOrder::default().compare_with_witness(&wa, &wb)?;
            let witness = c.witness.map(|(m, ca, cb)| {
                json!({ "monomial": m.to_string(), "a": ca.to_string(), "b": cb.to_string() })
            });
            Outcome::Pass(json!({
                "a": wa.to_string(),
                "b": wb.to_string(),
                "relation": format!("{:?}", c.relation),
                "witness": witness,
                "degree_reached": c.degree_reached,
            }))
        }
        Command::Eval { expr, bindings, target } => {
            let e = parse_expr(&expr)?;
            let vars = e.variables();
            let value = match target {
                Target::Free => {
                    let env = bind::<FreeGroupTarget>(&bindings, &vars, parse_word)?;
                    FreeGroupTarget.render(&eval_expr(&e, &FreeGroupTarget, &env)?)
                }
                Target::S3 => {
                    let t = S3Target { phi: Some(phi) };
                    let env = bind::<S3Target>(&bindings, &vars, |v| match v.parse() {
                        Ok(p) => Ok(p),
                        Err(_) => parse_word(v).map(|w| phi.eval(&w)),
                    })?;
                    t.render(&eval_expr(&e, &t, &env)?)
                }
                Target::Series => {
                    let t = SeriesTarget { twist: tw.clone(), depth: cfg.depth };
                    let env = bind::<SeriesTarget>(&bindings, &vars, |v| parse_series(v).map(ApproxSeries::exact))?;
                    let v = eval_expr(&e, &t, &env)?;
                    return Ok(Outcome::Pass(json!({
                        "expr": e.to_string(),
                        "value": v.to_json()?,
                        "is_one_at_truncation": v.is_one_at_truncation()?,
                    })));
                }
            };
            Outcome::Pass(json!({ "expr": e.to_string(), "value": value }))
        }
        Command::D { series } => {
            let s = parse_series(&series)?;
            let (u, c) = s.leading()?;
            Outcome::Pass(json!({ "d": u.to_string(), "coefficient": c.to_string() }))
        }
        Command::Membership { series } => {
            let s = parse_series(&series)?;
            let u = s.d()?;
            Outcome::Pass(json!({
                "lambda": phi.lambda,
                "mu": phi.mu,
                "leading_word": u.to_string(),
                "phi_image": phi.eval(&u).to_string(),
                "in_n": phi.in_h(&u),
            }))
        }
        Command::Coset { series } => {
            let s = parse_series(&series)?;
            let u = s.d()?;
            let p = phi.eval(&u);
            Outcome::Pass(json!({
                "lambda": phi.lambda,
                "mu": phi.mu,
                "leading_word": u.to_string(),
                "phi_image": p.to_string(),
                "label": CosetLabel::of(&p).to_string(),
            }))
        }
        Command::Witness => {
            let w = suites::non_normality_witness(&phi, &cfg)?;
            let v = json!({ "lambda": phi.lambda, "mu": phi.mu, "witness": w });
            if w.beta_in_n && !w.conjugate_in_n {
                Outcome::Pass(v)
            } else {
                Outcome::Fail(v)
            }
        }
        Command::Invert { series, terms } => {
            let s = parse_series(&series)?;
            let inv = truncated_inverse(&s, terms, tw)?;
            let split = InversionSplit::of(&s, tw)?;
            let show = |w: Option<malcev_core::free_group::ReducedWord>| w.map(|w| w.to_string());
            Outcome::Pass(json!({
                "inverse": inv.to_json()?,
                "right_residual_bound": show(split.right_residual_bound(terms)?),
                "left_residual_bound": show(split.left_residual_bound(terms)?),
            }))
        }
        Command::Verify { suite } => {
            let reports = suites::run_suites(&suite, &cfg)?;
            let passed = reports.iter().all(|r| r.passed);
            let v = json!({ "suite": suite, "passed": passed, "reports": reports });
            if passed {
                Outcome::Pass(v)
            } else {
                Outcome::Fail(v)
            }
        }
        Command::DemoTheorem => {
            let rep = suites::demo_theorem(&cfg)?;
            let v = serde_json::to_value(&rep).expect("report serializes");
            if rep.success {
                Outcome::Pass(v)
            } else {
                Outcome::Fail(v)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command, &cli.cfg) {
        Ok(Outcome::Pass(v)) => {
            print(&v);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Fail(v)) => {
            print(&v);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
