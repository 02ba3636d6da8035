//! The subgroup chain `H_0 ⊇ H_1 ⊇ ...` generated from a word `a`:
//! `H_n = <b·a·b^-1 | b ∈ H_(n-1)>` on normal levels and
//! `H_n = <b^(ℓ_n!) | b ∈ H_(n-1)>` on finite-index levels.

use serde::Serialize;

use super::recursion::SeriesShapeDescriptor;
use crate::free_group::ReducedWord;

/// Images of sampled `b ∈ H_(n-1)` among the generators of `H_n`.
pub fn h_chain_generators(
    n: usize,
    desc: &SeriesShapeDescriptor,
    a: &ReducedWord,
    sample: &[ReducedWord],
) -> Vec<ReducedWord> {
    assert!(n >= 1, "the chain is generated from level 1 on");
    let level = desc.level(n);
    sample
        .iter()
        .map(|b| match level.factorial_exponent() {
            None => a.conjugate_by(b),
            Some(k) => b.power(k),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteCheck {
    pub conjugation_holds: bool,
    pub power_holds: bool,
}

/// `c·(b a b^-1)·c^-1 = (c b c^-1)·a·(c b c^-1)^-1` and
/// `(c b c^-1)^(ℓ!) = c·b^(ℓ!)·c^-1`.
///
/// The first rewrite is an identity only when `a` and `c` commute, which is
/// the situation where it is applied (`c` normalizes the chain built on `a`).
pub fn chain_rewrites(a: &ReducedWord, b: &ReducedWord, c: &ReducedWord, factorial: i64) -> RewriteCheck {
    let bab = a.conjugate_by(b);
    let cb = b.conjugate_by(c);
    let conjugation_holds = bab.conjugate_by(c) == a.conjugate_by(&cb);
    let power_holds = cb.power(factorial) == b.power(factorial).conjugate_by(c);
    RewriteCheck { conjugation_holds, power_holds }
}
