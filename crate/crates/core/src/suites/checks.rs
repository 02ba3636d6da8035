use std::cmp::Ordering;

use rand::Rng;
use rayon::prelude::*;

use super::{tally, Assertion, RunConfig, Suite, SuiteReport};
use crate::error::Result;
use crate::free_group::{MagnusOrder, ReducedWord};
use crate::identities::{
    build_w, check_identity, eval_expr, chain_rewrites, mutated_phi_1, phi_n_without_trailing_g,
    verify_alpha_containment, verify_lemma5_numeric, verify_lemma5_numeric_with_phi, verify_lemma5_symbolic,
    verify_lemma5_symbolic_with_phi, Env, FreeGroupTarget, Level, S3Target, SeriesShapeDescriptor, SeriesTarget,
    WordExpr, CONJUGATE_IDENTITY, SIXTH_POWER_COMMUTATOR,
};
use crate::parse::parse_expr;
use crate::sampling::{self, WordShape};
use crate::series::{ApproxSeries, InversionSplit, Series};
use crate::subgroups::{in_h_image, GroupHomToS3, Permutation};

const ORDER_SHAPE: WordShape = WordShape { max_len: 8, max_generator: 5 };
const SERIES_SHAPE: WordShape = WordShape { max_len: 4, max_generator: 3 };

fn cmp(a: &ReducedWord, b: &ReducedWord) -> Result<Ordering> {
    MagnusOrder::default().compare(a, b)
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Option<String> {
    bad.then(msg)
}

pub struct OrderSuite;

impl Suite for OrderSuite {
    fn name(&self) -> &'static str {
        "order"
    }

    fn description(&self) -> &'static str {
        "total, bi-invariant order on reduced words"
    }

    fn run(&self, cfg: &RunConfig) -> Result<SuiteReport> {
        let mut r = sampling::rng(cfg.seed, 1);
        let triples: Vec<[ReducedWord; 3]> = (0..cfg.samples.order)
            .map(|_| std::array::from_fn(|_| sampling::word(&mut r, ORDER_SHAPE)))
            .collect();
        let order = MagnusOrder::default();
        let assertions = vec![
            tally("totality", "exactly one of a < b, a = b, a > b; equality only for equal words", &triples, |[a, b, _]| {
                let c = cmp(a, b)?;
                Ok(fail_if((c == Ordering::Equal) != (a == b), || format!("{a} vs {b}: {c:?}")))
            }),
            tally("antisymmetry", "a < b exactly when b > a", &triples, |[a, b, _]| {
                let (ab, ba) = (cmp(a, b)?, cmp(b, a)?);
                Ok(fail_if(ab != ba.reverse(), || format!("{a} vs {b}: {ab:?} and {ba:?}")))
            }),
            tally("transitivity", "p <= q and q <= r imply p <= r for every arrangement", &triples, |t| {
                for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
                    let (p, q, s) = (&t[i], &t[j], &t[k]);
                    if cmp(p, q)? != Ordering::Greater && cmp(q, s)? != Ordering::Greater && cmp(p, s)? == Ordering::Greater {
                        return Ok(Some(format!("{p} <= {q} <= {s} but {p} > {s}")));
                    }
                }
                Ok(None)
            }),
            tally("left-invariance", "a < b implies c·a < c·b", &triples, |[a, b, c]| {
                let (x, y) = (cmp(a, b)?, cmp(&c.multiply(a), &c.multiply(b))?);
                Ok(fail_if(x != y, || format!("a={a} b={b} c={c}: {x:?} vs {y:?}")))
            }),
            tally("right-invariance", "a < b implies a·c < b·c", &triples, |[a, b, c]| {
                let (x, y) = (cmp(a, b)?, cmp(&a.multiply(c), &b.multiply(c))?);
                Ok(fail_if(x != y, || format!("a={a} b={b} c={c}: {x:?} vs {y:?}")))
            }),
            tally("expansion-oracle", "comparison agrees with comparing both Magnus expansions directly", &triples, |[a, b, _]| {
                let fast = order.compare_with_witness(a, b)?;
                let slow = order.compare_by_expansion(a, b)?;
                Ok(fail_if(fast.relation != slow.relation || fast.witness != slow.witness, || {
                    format!("{a} vs {b}: {:?} vs {:?}", fast.relation, slow.relation)
                }))
            }),
        ];
        Ok(SuiteReport::new(self.name(), assertions))
    }
}

pub struct RingSuite;

impl Suite for RingSuite {
    fn name(&self) -> &'static str {
        "ring"
    }

    fn description(&self) -> &'static str {
        "associativity and distributivity of twisted multiplication"
    }

    fn run(&self, cfg: &RunConfig) -> Result<SuiteReport> {
        let mut r = sampling::rng(cfg.seed, 2);
        let triples: Vec<[Series; 3]> = (0..cfg.samples.ring)
            .map(|_| std::array::from_fn(|_| sampling::series(&mut r, 3, SERIES_SHAPE)))
            .collect();
        let tw = &cfg.weights;
        let assertions = vec![
            tally("associativity", "(αβ)γ = α(βγ)", &triples, |[a, b, c]| {
                let l = a.mul(b, tw).mul(c, tw);
                let rr = a.mul(&b.mul(c, tw), tw);
                Ok(fail_if(l != rr, || format!("α={a} β={b} γ={c}")))
            }),
            tally("left-distributivity", "α(β+γ) = αβ + αγ", &triples, |[a, b, c]| {
                let l = a.mul(&b.add(c), tw);
                let rr = a.mul(b, tw).add(&a.mul(c, tw));
                Ok(fail_if(l != rr, || format!("α={a} β={b} γ={c}")))
            }),
            tally("right-distributivity", "(α+β)γ = αγ + βγ", &triples, |[a, b, c]| {
                let l = a.add(b).mul(c, tw);
                let rr = a.mul(c, tw).add(&b.mul(c, tw));
                Ok(fail_if(l != rr, || format!("α={a} β={b} γ={c}")))
            }),
            tally("unit", "1·α = α·1 = α", &triples, |[a, _, _]| {
                let one = Series::one();
                Ok(fail_if(one.mul(a, tw) != *a || a.mul(&one, tw) != *a, || format!("α={a}")))
            }),
        ];
        Ok(SuiteReport::new(self.name(), assertions))
    }
}

pub struct DHomSuite;

impl Suite for DHomSuite {
    fn name(&self) -> &'static str {
        "d-hom"
    }

    fn description(&self) -> &'static str {
        "the least-support map is multiplicative"
    }

    fn run(&self, cfg: &RunConfig) -> Result<SuiteReport> {
        let mut r = sampling::rng(cfg.seed, 3);
        let pairs: Vec<[Series; 2]> = (0..cfg.samples.d_hom)
            .map(|_| std::array::from_fn(|_| sampling::series(&mut r, 5, SERIES_SHAPE)))
            .collect();
        let tw = &cfg.weights;
        let assertions = vec![
            tally("d-multiplicative", "d(αβ) = d(α)·d(β)", &pairs, |[a, b]| {
                let ab = a.mul(b, tw);
                let (l, rr) = (ab.d()?, a.d()?.multiply(&b.d()?));
                Ok(fail_if(l != rr, || format!("α={a} β={b}: d(αβ)={l}, d(α)d(β)={rr}")))
            }),
            tally("leading-coefficient", "the coefficient at d(αβ) is a_u·Φ_u(b_v) and nonzero", &pairs, |[a, b]| {
                let (u, au) = a.leading()?;
                let (v, bv) = b.leading()?;
                let expected = au.mul(&tw.apply(&u, &bv));
                let got = a.mul(b, tw).coefficient(&u.multiply(&v));
                Ok(fail_if(got != expected || got.is_zero(), || format!("α={a} β={b}: {got} vs {expected}")))
            }),
        ];
        Ok(SuiteReport::new(self.name(), assertions))
    }
}

pub struct InverseSuite;

pub const INVERSE_MAX_N: usize = 5;

/// Exact residuals of the truncated inverse for one `α` and one `n`.
struct InverseCase {
    right_min: Option<ReducedWord>,
    left_min: Option<ReducedWord>,
    right_bound: Option<ReducedWord>,
    left_bound: Option<ReducedWord>,
}

impl InverseCase {
    fn describe(&self) -> String {
        let show = |w: &Option<ReducedWord>| w.as_ref().map_or("none".to_string(), ToString::to_string);
        format!(
            "αT−1 min {}, Tα−1 min {}, u·d(ε)^(n+1)·u^-1 = {}, d(ε)^(n+1) = {}",
            show(&self.right_min),
            show(&self.left_min),
            show(&self.right_bound),
            show(&self.left_bound)
        )
    }
}

fn inverse_cases(alpha: &Series, cfg: &RunConfig) -> Result<Vec<InverseCase>> {
    let tw = &cfg.weights;
    let split = InversionSplit::of(alpha, tw)?;
    (0..=INVERSE_MAX_N)
        .map(|n| {
            let inv = crate::series::truncated_inverse(alpha, n, tw)?;
            let right = alpha.mul(inv.terms(), tw).sub(&Series::one());
            let left = inv.terms().mul(alpha, tw).sub(&Series::one());
            let min = |s: &Series| if s.is_zero() { Ok(None) } else { s.d().map(Some) };
            Ok(InverseCase {
                right_min: min(&right)?,
                left_min: min(&left)?,
                right_bound: split.right_residual_bound(n)?,
                left_bound: split.left_residual_bound(n)?,
            })
        })
        .collect()
}

fn at_least(got: &Option<ReducedWord>, bound: &Option<ReducedWord>) -> Result<bool> {
    match (got, bound) {
        (None, _) => Ok(true),
        (Some(_), None) => Ok(false),
        (Some(g), Some(b)) => Ok(cmp(g, b)? != Ordering::Less),
    }
}

fn strictly_increasing(mins: &[Option<ReducedWord>]) -> Result<bool> {
    for w in mins.windows(2) {
        match (&w[0], &w[1]) {
            (_, None) => {}
            (None, Some(_)) => return Ok(false),
            (Some(a), Some(b)) => {
                if cmp(a, b)? != Ordering::Less {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

impl Suite for InverseSuite {
    fn name(&self) -> &'static str {
        "inverse"
    }

    fn description(&self) -> &'static str {
        "two-sided residual bounds of the truncated inverse"
    }

    fn run(&self, cfg: &RunConfig) -> Result<SuiteReport> {
        let mut r = sampling::rng(cfg.seed, 4);
        let alphas: Vec<Series> = (0..cfg.samples.inverse).map(|_| sampling::series(&mut r, 4, SERIES_SHAPE)).collect();
        let cases: Vec<(Series, Result<Vec<InverseCase>>)> = alphas
            .par_iter()
            .map(|a| (a.clone(), inverse_cases(a, cfg)))
            .collect();
        let check_all = |pred: &dyn Fn(&InverseCase) -> Result<bool>, (a, cs): &(Series, Result<Vec<InverseCase>>)| -> Result<Option<String>> {
            let cs = cs.as_ref().map_err(Clone::clone)?;
            for (n, c) in cs.iter().enumerate() {
                if !pred(c)? {
                    return Ok(Some(format!("α={a} n={n}: {}", c.describe())));
                }
            }
            Ok(None)
        };
        let mut conjugated = tally(
            "left-below-conjugate-explained",
            "whenever inv_n(α)·α − 1 falls below u·d(ε)^(n+1)·u^-1 it sits exactly at d(ε)^(n+1)",
            &cases,
            |case| {
                // a sample fails only if it breaks the conjugated bound for an unexplained reason
                check_all(&|c| Ok(at_least(&c.left_min, &c.right_bound)? || c.left_min == c.left_bound), case)
            },
        );
        let below: Vec<String> = cases
            .iter()
            .filter_map(|(a, cs)| {
                let cs = cs.as_ref().ok()?;
                let (n, c) = cs.iter().enumerate().find(|(_, c)| !at_least(&c.left_min, &c.right_bound).unwrap_or(true))?;
                Some(format!("α={a} n={n}: {}", c.describe()))
            })
            .collect();
        conjugated.note = Some(match below.first() {
            Some(first) => format!("{} of {} samples fall below the conjugated bound; first: {first}", below.len(), cases.len()),
            None => "no sample falls below the conjugated bound".into(),
        });
        let assertions = vec![
            tally(
                "right-residual",
                "α·inv_n(α) − 1 has least support >= u·d(ε)^(n+1)·u^-1, n = 0..5",
                &cases,
                |c| check_all(&|c| at_least(&c.right_min, &c.right_bound), c),
            ),
            tally(
                "left-residual",
                "inv_n(α)·α − 1 has least support >= d(ε)^(n+1), n = 0..5",
                &cases,
                |c| check_all(&|c| at_least(&c.left_min, &c.left_bound), c),
            ),
            tally(
                "residual-exact",
                "both residual bounds are attained whenever ε ≠ 0",
                &cases,
                |c| check_all(&|c| Ok(c.right_min == c.right_bound && c.left_min == c.left_bound), c),
            ),
            tally(
                "monotone-in-n",
                "the least support of each residual strictly increases with n when d(ε) > 1",
                &cases,
                |(a, cs)| {
                    let cs = cs.as_ref().map_err(Clone::clone)?;
                    let rights: Vec<_> = cs.iter().map(|c| c.right_min.clone()).collect();
                    let lefts: Vec<_> = cs.iter().map(|c| c.left_min.clone()).collect();
                    Ok(fail_if(!(strictly_increasing(&rights)? && strictly_increasing(&lefts)?), || format!("α={a}")))
                },
            ),
            conjugated,
        ];
        Ok(SuiteReport::new(self.name(), assertions))
    }
}

pub struct Lemma4Suite;

impl Suite for Lemma4Suite {
    fn name(&self) -> &'static str {
        "lemma4"
    }

    fn description(&self) -> &'static str {
        "conjugation and factorial-power rewrites of the H_n chain"
    }

    fn run(&self, cfg: &RunConfig) -> Result<SuiteReport> {
        let mut r = sampling::rng(cfg.seed, 5);
        let shape = WordShape { max_len: 4, max_generator: 4 };
        // a and c are powers of a common root, so a·c = c·a
        let triples: Vec<(ReducedWord, ReducedWord, ReducedWord, ReducedWord, i64)> = (0..cfg.samples.lemma4)
            .map(|_| {
                let root = sampling::word(&mut r, shape);
                let a = root.power(r.gen_range(-3..=3));
                let c = root.power(r.gen_range(-3..=3));
                let b = sampling::word(&mut r, WordShape { max_len: 6, max_generator: 4 });
                let free_c = sampling::word(&mut r, shape);
                let factorial = if r.gen_bool(0.5) { 2 } else { 6 };
                (a, b, c, free_c, factorial)
            })
            .collect();
        let desc_n: SeriesShapeDescriptor = "N".parse()?;
        let desc_f: SeriesShapeDescriptor = "F3".parse()?;
        let free_failures = triples
            .iter()
            .filter(|(a, b, _, fc, k)| !chain_rewrites(a, b, fc, *k).conjugation_holds)
            .count();
        let assertions = vec![
            tally("conjugation-rewrite", "c(bab^-1)c^-1 = (cbc^-1)a(cbc^-1)^-1 when ac = ca", &triples, |(a, b, c, _, k)| {
                Ok(fail_if(!chain_rewrites(a, b, c, *k).conjugation_holds, || format!("a={a} b={b} c={c}")))
            }),
            tally("power-rewrite", "(cbc^-1)^(ℓ!) = c·b^(ℓ!)·c^-1 for ℓ ∈ {2, 3} and any c", &triples, |(_, b, _, fc, k)| {
                Ok(fail_if(!chain_rewrites(&ReducedWord::identity(), b, fc, *k).power_holds, || format!("b={b} c={fc} ℓ!={k}")))
            }),
            tally("chain-generators", "conjugating an H_n generator by c gives the generator of cbc^-1", &triples, |(a, b, c, _, k)| {
                let cb = b.conjugate_by(c);
                let normal = crate::identities::h_chain_generators(1, &desc_n, a, &[b.clone(), cb.clone()]);
                let power = crate::identities::h_chain_generators(1, &desc_f, a, &[b.clone(), cb.clone()]);
                let ok = normal[0].conjugate_by(c) == normal[1] && power[0].conjugate_by(c) == power[1] && *k > 0;
                Ok(fail_if(!ok, || format!("a={a} b={b} c={c}")))
            }),
            Assertion::single(
                "needs-commuting-c",
                "with an unrelated c the conjugation rewrite fails on some sample (control)",
                free_failures > 0,
                Some("no failure found for non-commuting c".into()),
            ),
        ];
        Ok(SuiteReport::new(self.name(), assertions))
    }
}

pub struct Lemma5Suite;

impl Lemma5Suite {
    fn pairs(cfg: &RunConfig) -> Vec<(Series, Series)> {
        let mut r = sampling::rng(cfg.seed, 6);
        (0..cfg.samples.lemma5)
            .map(|_| {
                let h = sampling::monomial(&mut r, WordShape { max_len: 3, max_generator: 3 });
                let g = Series::monomial(
                    sampling::coefficient(&mut r),
                    sampling::nonidentity_word(&mut r, WordShape { max_len: 2, max_generator: 3 }),
                );
                (h, g)
            })
            .collect()
    }
}

impl Suite for Lemma5Suite {
    fn name(&self) -> &'static str {
        "lemma5"
    }

    fn description(&self) -> &'static str {
        "u_n = (1+g)φ_n(1+g)^-1 and v_n = (1+g)^-1φ_n(1+g), symbolically and at truncation"
    }

    fn run(&self, cfg: &RunConfig) -> Result<SuiteReport> {
        let alphabet = [Level::Normal, Level::FiniteIndex(2), Level::FiniteIndex(3)];
        let cases: Vec<(SeriesShapeDescriptor, usize)> = SeriesShapeDescriptor::enumerate(&alphabet, cfg.symbolic_max)
            .into_iter()
            .flat_map(|d| (0..=cfg.symbolic_max).map(move |n| (d.clone(), n)))
            .collect();
        let target = SeriesTarget { twist: cfg.weights.clone(), depth: cfg.depth };
        let pairs = Self::pairs(cfg);
        let normal: SeriesShapeDescriptor = "N".parse()?;
        let (h0, g0) = pairs.first().cloned().unwrap_or_else(|| {
            (Series::word(ReducedWord::generator(1)), Series::word(ReducedWord::generator(2)))
        });
        let mutated = verify_lemma5_numeric_with_phi(1, &normal, &mutated_phi_1(), &h0, &g0, &target)?;
        let mutated_sym = verify_lemma5_symbolic_with_phi(1, &normal, &mutated_phi_1())?;
        let untrailed = verify_lemma5_symbolic_with_phi(1, &normal, &phi_n_without_trailing_g(1, &normal))?;
        let assertions = vec![
            tally(
                "symbolic",
                "both normal forms hold exactly for every descriptor over {N, F2, F3} and every n up to the cap",
                &cases,
                |(d, n)| {
                    let rep = verify_lemma5_symbolic(*n, d)?;
                    Ok(fail_if(!rep.holds(), || format!("descriptor {d}, n = {n}: {rep:?}")))
                },
            ),
            tally(
                "commutator-form",
                "[φ_n, u_n] = (1+g)[v_n, φ_n](1+g)^-1",
                &cases,
                |(d, n)| Ok(fail_if(!verify_alpha_containment(*n, d)?, || format!("descriptor {d}, n = {n}"))),
            ),
            tally(
                "numeric",
                "(1+g)φ_n − u_n(1+g) and φ_n(1+g) − (1+g)v_n vanish below the propagated guarantee, with verified terms",
                &pairs,
                |(h, g)| {
                    let rep = verify_lemma5_numeric(cfg.lemma5_n, &cfg.descriptor, h, g, &target)?;
                    Ok(fail_if(!rep.success, || serde_json::to_string(&rep).unwrap_or_default()))
                },
            ),
            Assertion::single(
                "mutated-phi-fails",
                "replacing φ_1 by h·g·h breaks both checks (control)",
                !mutated.success && !mutated_sym.holds(),
                Some(serde_json::to_string(&mutated).unwrap_or_default()),
            ),
            Assertion::single(
                "trailing-g-inverse-needed",
                "φ_1 = h·g·h^-1 without the trailing g^-1 does not give the normal form (control)",
                !untrailed.u_form_holds,
                Some(format!("{untrailed:?}")),
            ),
        ];
        Ok(SuiteReport::new(self.name(), assertions))
    }
}

pub struct IdentitiesSuite;

impl Suite for IdentitiesSuite {
    fn name(&self) -> &'static str {
        "identities"
    }

    fn description(&self) -> &'static str {
        "explicit identities, homomorphism pushforwards and the membership cascade"
    }

    fn run(&self, cfg: &RunConfig) -> Result<SuiteReport> {
        let count = cfg.samples.identities;
        let mut r = sampling::rng(cfg.seed, 7);
        let shape = WordShape { max_len: 4, max_generator: 4 };
        let commuting: Vec<(ReducedWord, ReducedWord)> = (0..count)
            .map(|_| {
                let root = sampling::word(&mut r, shape);
                (root.power(r.gen_range(-3..=3)), root.power(r.gen_range(-3..=3)))
            })
            .collect();
        let free: Vec<(ReducedWord, ReducedWord)> = (0..count.max(1))
            .map(|_| (sampling::word(&mut r, shape), sampling::word(&mut r, shape)))
            .collect();
        let phi = GroupHomToS3::make_maximal_subgroup(&cfg.x);
        let word_shape = WordShape { max_len: 5, max_generator: phi.mu.max(4) };
        let exprs: Vec<(WordExpr, ReducedWord, ReducedWord)> = (0..count)
            .map(|_| {
                let e = sampling::expression(&mut r, &["x", "y"], 3);
                (e, sampling::word(&mut r, word_shape), sampling::word(&mut r, word_shape))
            })
            .collect();
        let d_exprs: Vec<(WordExpr, Series, Series)> = (0..count.min(50))
            .map(|_| {
                let e = sampling::expression(&mut r, &["x", "y"], 2);
                (e, sampling::rational_series(&mut r, 2, SERIES_SHAPE), sampling::rational_series(&mut r, 2, SERIES_SHAPE))
            })
            .collect();
        let units: Vec<(Series, Series)> = (0..count.min(50))
            .map(|_| {
                let alpha = sampling::series(&mut r, 2, WordShape { max_len: 3, max_generator: phi.mu });
                let beta = loop {
                    let b = sampling::series(&mut r, 2, WordShape { max_len: 3, max_generator: phi.mu });
                    if phi.in_n(&b).unwrap_or(false) {
                        break b;
                    }
                };
                (alpha, beta)
            })
            .collect();

        let ident = parse_expr(CONJUGATE_IDENTITY)?;
        let sixth = parse_expr(SIXTH_POWER_COMMUTATOR)?;
        let ident_commuting = if commuting.is_empty() {
            None
        } else {
            Some(check_identity(
                &ident,
                &FreeGroupTarget,
                |t| Env::new().with_const("a", commuting[t].0.clone()).with_var("x", commuting[t].1.clone()),
                commuting.len(),
            )?)
        };
        let ident_free = check_identity(
            &ident,
            &FreeGroupTarget,
            |t| Env::new().with_const("a", free[t].0.clone()).with_var("x", free[t].1.clone()),
            free.len(),
        )?;
        let all = Permutation::all();
        let s3_pairs = check_identity(
            &sixth,
            &S3Target::default(),
            |t| Env::new().with_var("x", all[t / 6]).with_var("y", all[t % 6]),
            36,
        )?;
        let s3 = S3Target { phi: Some(phi) };
        let target = SeriesTarget { twist: cfg.weights.clone(), depth: cfg.depth };
        let cascade_descs: Vec<SeriesShapeDescriptor> = vec!["F3".parse()?, "F3,N".parse()?];
        let h_image = [Permutation::IDENTITY, Permutation::TRANSPOSITION_12];
        let cascade: Vec<(SeriesShapeDescriptor, usize)> = cascade_descs
            .iter()
            .flat_map(|d| (d.depth()..=4).map(move |n| (d.clone(), n)))
            .collect();

        let assertions = vec![
            Assertion::single(
                "conjugate-identity-commuting",
                "x a x^-1 a x a^-1 x^-1 a^-1 = 1 when x and a are powers of one word",
                ident_commuting.as_ref().is_some_and(|v| v.holds()),
                Some(serde_json::to_string(&ident_commuting).unwrap_or_default()),
            ),
            Assertion::single(
                "conjugate-identity-free",
                "x a x^-1 a x a^-1 x^-1 a^-1 = 1 has a counterexample on free samples",
                !ident_free.holds(),
                Some("no counterexample found".into()),
            ),
            Assertion {
                trials: 36,
                ..Assertion::single(
                    "sixth-powers-in-s3",
                    "x^6 y^6 x^-6 y^-6 = 1 for all 36 pairs in S3",
                    s3_pairs.holds(),
                    Some(serde_json::to_string(&s3_pairs).unwrap_or_default()),
                )
            },
            tally("phi-pushforward", "φ(e(x, y)) = e(φx, φy) for random expressions", &exprs, |(e, x, y)| {
                let in_g = eval_expr(e, &FreeGroupTarget, &Env::new().with_var("x", x.clone()).with_var("y", y.clone()))?;
                let in_s3 = eval_expr(e, &s3, &Env::new().with_var("x", phi.eval(x)).with_var("y", phi.eval(y)))?;
                Ok(fail_if(phi.eval(&in_g) != in_s3, || format!("{e} at x={x}, y={y}")))
            }),
            tally("d-pushforward", "d(e(α, β)) = e(dα, dβ) for random expressions over series", &d_exprs, |(e, a, b)| {
                let env = Env::new()
                    .with_var("x", ApproxSeries::exact(a.clone()))
                    .with_var("y", ApproxSeries::exact(b.clone()));
                let in_d = eval_expr(e, &target, &env)?;
                let in_g = eval_expr(e, &FreeGroupTarget, &Env::new().with_var("x", a.d()?).with_var("y", b.d()?))?;
                let got = in_d.d()?;
                Ok(fail_if(got != in_g, || format!("{e} at α={a}, β={b}: {got} vs {in_g}")))
            }),
            tally(
                "cascade-in-s3",
                "w_n(α, β) lands in N whenever β ∈ N and n >= r, checked on all φ-images",
                &cascade,
                |(d, n)| {
                    let w = build_w(*n, d);
                    for a in all {
                        for b in h_image {
                            let v = eval_expr(&w, &s3, &Env::new().with_var("x", a).with_var("y", b))?;
                            if !in_h_image(&v) {
                                return Ok(Some(format!("descriptor {d}, n = {n}: w(φα={a}, φβ={b}) = {v}")));
                            }
                        }
                    }
                    Ok(None)
                },
            ),
            tally(
                "cascade-in-series",
                "w_1(α, β) = α^6 lies in N for sampled units α, computed exactly in the series ring",
                &units,
                |(a, b)| {
                    let d: SeriesShapeDescriptor = "F3".parse()?;
                    let env = Env::new()
                        .with_var("x", ApproxSeries::exact(a.clone()))
                        .with_var("y", ApproxSeries::exact(b.clone()));
                    let v = eval_expr(&build_w(1, &d), &target, &env)?;
                    Ok(fail_if(!phi.in_n_approx(&v)?, || format!("α={a}, β={b}: d = {:?}", v.d())))
                },
            ),
        ];
        Ok(SuiteReport::new(self.name(), assertions))
    }
}
