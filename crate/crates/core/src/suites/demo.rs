//! The decidable depth-one instance: `H = φ^-1({Id, (1 2)})` has index 3 in
//! the free group, is not normal, and contains the configured word `x`; its
//! pullback `N = d^-1(H)` inherits all three properties among series units.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::RunConfig;
use crate::error::Result;
use crate::free_group::ReducedWord;
use crate::sampling::{self, WordShape};
use crate::series::{Series, TermJson};
use crate::subgroups::{CosetLabel, GroupHomToS3, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rate {
    pub trials: usize,
    pub passed: usize,
    pub all_passed: bool,
}

impl Rate {
    fn of(results: &[bool]) -> Self {
        let passed = results.iter().filter(|&&b| b).count();
        Self { trials: results.len(), passed, all_passed: !results.is_empty() && passed == results.len() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonNormalityWitness {
    pub alpha: Vec<TermJson>,
    pub beta: Vec<TermJson>,
    /// `α·β·α^-1`, exact.
    pub conjugate: Vec<TermJson>,
    /// φ-images of the leading words of `α`, `β`, `α·β·α^-1`.
    pub images: [String; 3],
    pub beta_in_n: bool,
    pub conjugate_in_n: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DemoReport {
    pub seed: u64,
    pub weights: String,
    pub samples: usize,
    pub x: String,
    pub lambda: u32,
    pub mu: u32,
    pub x_image: String,
    pub x_in_h: bool,
    pub d_homomorphism: Rate,
    pub coset_label_counts: BTreeMap<String, usize>,
    pub labels_realized: usize,
    pub witness: NonNormalityWitness,
    pub poincare_sixth_power: Rate,
    pub success: bool,
}

/// `α = c·x_μ ∈ D^*`, `β = c'·x_λ ∈ N` with `α·β·α^-1 ∉ N`, coefficients drawn from the seed.
pub fn non_normality_witness(phi: &GroupHomToS3, cfg: &RunConfig) -> Result<NonNormalityWitness> {
    let mut r = sampling::rng(cfg.seed, 9);
    let tw = &cfg.weights;
    let alpha = Series::monomial(sampling::coefficient(&mut r), ReducedWord::generator(phi.mu));
    let beta = Series::monomial(sampling::coefficient(&mut r), ReducedWord::generator(phi.lambda));
    let (u, a_u) = alpha.leading()?;
    let alpha_inv = Series::monomial_inverse(&a_u, &u, tw)?;
    let conjugate = alpha.mul(&beta, tw).mul(&alpha_inv, tw);
    let images = [&alpha, &beta, &conjugate].map(|s| s.d().map(|w| phi.eval(&w).to_string()));
    let [a, b, c] = images;
    Ok(NonNormalityWitness {
        alpha: alpha.to_json_terms()?,
        beta: beta.to_json_terms()?,
        conjugate: conjugate.to_json_terms()?,
        images: [a?, b?, c?],
        beta_in_n: phi.in_n(&beta)?,
        conjugate_in_n: phi.in_n(&conjugate)?,
    })
}

pub fn demo_theorem(cfg: &RunConfig) -> Result<DemoReport> {
    cfg.validate()?;
    let phi = GroupHomToS3::make_maximal_subgroup(&cfg.x);
    let tw = &cfg.weights;
    let shape = WordShape { max_len: 3, max_generator: phi.mu.max(4) };
    let mut r = sampling::rng(cfg.seed, 8);
    let units: Vec<Series> = (0..cfg.samples.demo).map(|_| sampling::series(&mut r, 3, shape)).collect();

    let d_hom: Vec<bool> = (0..units.len())
        .into_par_iter()
        .map(|i| {
            let (a, b) = (&units[i], &units[(i + 1) % units.len()]);
            match (a.mul(b, tw).d(), a.d(), b.d()) {
                (Ok(ab), Ok(da), Ok(db)) => ab == da.multiply(&db),
                _ => false,
            }
        })
        .collect();
    let poincare: Vec<bool> = units
        .par_iter()
        .map(|a| phi.poincare_check(a, tw).unwrap_or(false))
        .collect();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for u in &units {
        *counts.entry(phi.coset_label(u)?.to_string()).or_default() += 1;
    }
    let labels_realized = counts.len();
    let witness = non_normality_witness(&phi, cfg)?;
    let x_image = phi.eval(&cfg.x);
    let d_homomorphism = Rate::of(&d_hom);
    let poincare_sixth_power = Rate::of(&poincare);
    let expected = [Permutation::CYCLE_123, Permutation::TRANSPOSITION_12, Permutation::TRANSPOSITION_23]
        .map(|p| p.to_string());
    let success = x_image.is_identity()
        && d_homomorphism.all_passed
        && labels_realized == CosetLabel::ALL.len()
        && witness.images == expected
        && witness.beta_in_n
        && !witness.conjugate_in_n
        && poincare_sixth_power.all_passed;
    Ok(DemoReport {
        seed: cfg.seed,
        weights: cfg.weights.to_string(),
        samples: units.len(),
        x: cfg.x.to_string(),
        lambda: phi.lambda,
        mu: phi.mu,
        x_image: x_image.to_string(),
        x_in_h: phi.in_h(&cfg.x),
        d_homomorphism,
        coset_label_counts: counts,
        labels_realized,
        witness,
        poincare_sixth_power,
        success,
    })
}
