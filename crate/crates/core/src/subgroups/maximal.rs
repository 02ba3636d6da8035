//! The surjection `φ: G -> S3` with `x_λ -> (1 2)`, `x_μ -> (1 2 3)` and every
//! other generator to `Id`, the index-3 non-normal subgroup
//! `H = φ^-1({Id, (1 2)})`, and its pullback `N = d^-1(H)` in the series ring.

use std::fmt;

use serde::Serialize;

use super::perm::Permutation;
use crate::error::Result;
use crate::field::TwistMap;
use crate::free_group::{Generator, ReducedWord};
use crate::series::{ApproxSeries, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupHomToS3 {
    pub lambda: Generator,
    pub mu: Generator,
}

/// Canonical tag of a right coset `H·r`, `r ∈ {Id, (1 2 3), (1 3 2)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CosetLabel {
    #[serde(rename = "H")]
    H,
    #[serde(rename = "H(1 2 3)")]
    HCycle,
    #[serde(rename = "H(1 3 2)")]
    HCycleInverse,
}

impl CosetLabel {
    pub const ALL: [CosetLabel; 3] = [CosetLabel::H, CosetLabel::HCycle, CosetLabel::HCycleInverse];

    pub fn representative(self) -> Permutation {
        match self {
            CosetLabel::H => Permutation::IDENTITY,
            CosetLabel::HCycle => Permutation::CYCLE_123,
            CosetLabel::HCycleInverse => Permutation::CYCLE_132,
        }
    }

    /// The label of `p`, i.e. the `r` with `p·r^-1 ∈ {Id, (1 2)}`.
    pub fn of(p: &Permutation) -> Self {
        Self::ALL
            .into_iter()
            .find(|l| in_h_image(&p.compose(&l.representative().inverse())))
            .expect("the three right cosets cover S3")
    }

    /// Right action of `S3` on right cosets: `label(p·q)` from `label(p)` and `q`.
    pub fn act(self, q: &Permutation) -> Self {
        Self::of(&self.representative().compose(q))
    }
}

impl fmt::Display for CosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CosetLabel::H => "H",
            CosetLabel::HCycle => "H(1 2 3)",
            CosetLabel::HCycleInverse => "H(1 3 2)",
        })
    }
}

/// Membership in the image subgroup `{Id, (1 2)}`.
pub fn in_h_image(p: &Permutation) -> bool {
    p.is_identity() || *p == Permutation::TRANSPOSITION_12
}

impl GroupHomToS3 {
    pub fn new(lambda: Generator, mu: Generator) -> Self {
        assert!(lambda != mu && lambda >= 1 && mu >= 1, "λ and μ must be distinct generators");
        Self { lambda, mu }
    }

    /// Chooses `λ < μ` as the two smallest generator indices not occurring in `x`,
    /// so that `φ(x) = Id` and `x ∈ H`.
    pub fn make_maximal_subgroup(x: &ReducedWord) -> Self {
        let used: std::collections::BTreeSet<Generator> = x.generators().collect();
        let mut fresh = (1..).filter(|i| !used.contains(i));
        let lambda = fresh.next().unwrap();
        let mu = fresh.next().unwrap();
        Self { lambda, mu }
    }

    pub fn image_of_generator(&self, i: Generator) -> Permutation {
        if i == self.lambda {
            Permutation::TRANSPOSITION_12
        } else if i == self.mu {
            Permutation::CYCLE_123
        } else {
            Permutation::IDENTITY
        }
    }

    pub fn eval(&self, w: &ReducedWord) -> Permutation {
        w.syllables().iter().fold(Permutation::IDENTITY, |acc, s| {
            acc.compose(&self.image_of_generator(s.generator).pow(s.exponent))
        })
    }

    pub fn in_h(&self, w: &ReducedWord) -> bool {
        in_h_image(&self.eval(w))
    }

    pub fn in_n(&self, alpha: &Series) -> Result<bool> {
        Ok(self.in_h(&alpha.d()?))
    }

    pub fn in_n_approx(&self, alpha: &ApproxSeries) -> Result<bool> {
        Ok(self.in_h(&alpha.d()?))
    }

    pub fn coset_label(&self, alpha: &Series) -> Result<CosetLabel> {
        Ok(CosetLabel::of(&self.eval(&alpha.d()?)))
    }

    /// Whether `α^6 ∈ N`, computed from the exact sixth power.
    pub fn poincare_check(&self, alpha: &Series, twist: &TwistMap) -> Result<bool> {
        self.in_n(&alpha.pow(6, twist))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElement;

    fn x(i: Generator) -> ReducedWord {
        ReducedWord::generator(i)
    }

    #[test]
    fn evaluation_examples() {
        let phi = GroupHomToS3::new(3, 4);
        assert_eq!(phi.eval(&x(3).multiply(&x(4))), Permutation::TRANSPOSITION_12.compose(&Permutation::CYCLE_123));
        assert_eq!(phi.eval(&ReducedWord::from_pairs([(1, 2), (2, -5), (7, 1)])), Permutation::IDENTITY);
        assert_eq!(phi.eval(&x(4).multiply(&x(3)).multiply(&x(4).invert())), Permutation::TRANSPOSITION_23);
    }

    #[test]
    fn fresh_indices() {
        let phi = GroupHomToS3::make_maximal_subgroup(&ReducedWord::from_pairs([(1, 2), (2, 1)]));
        assert_eq!((phi.lambda, phi.mu), (3, 4));
        let phi = GroupHomToS3::make_maximal_subgroup(&ReducedWord::identity());
        assert_eq!((phi.lambda, phi.mu), (1, 2));
        let w = ReducedWord::from_pairs([(2, 1), (5, -1), (1, 3)]);
        let phi = GroupHomToS3::make_maximal_subgroup(&w);
        assert_eq!((phi.lambda, phi.mu), (3, 4));
        assert!(phi.eval(&w).is_identity());
    }

    #[test]
    fn membership_in_h() {
        let phi = GroupHomToS3::new(1, 2);
        assert!(phi.in_h(&x(1)));
        assert!(!phi.in_h(&x(2)));
        assert!(phi.in_h(&x(1).power(2)));
    }

    #[test]
    fn membership_in_n() {
        let phi = GroupHomToS3::new(1, 2);
        let alpha = Series::one().add(&Series::word(x(1)));
        assert!(phi.in_n(&alpha).unwrap());
        let beta = Series::monomial(FieldElement::s(), x(2));
        assert!(!phi.in_n(&beta).unwrap());
        assert!(phi.in_n(&Series::zero()).is_err());
    }

    #[test]
    fn labels() {
        let phi = GroupHomToS3::new(1, 2);
        assert_eq!(phi.coset_label(&Series::word(x(2))).unwrap(), CosetLabel::HCycle);
        assert_eq!(phi.coset_label(&Series::word(x(1))).unwrap(), CosetLabel::H);
        let labels: std::collections::BTreeSet<CosetLabel> =
            Permutation::all().iter().map(CosetLabel::of).collect();
        assert_eq!(labels.len(), 3);
    }

    #[test]
    fn right_action_table_is_consistent() {
        for p in Permutation::all() {
            for q in Permutation::all() {
                assert_eq!(CosetLabel::of(&p).act(&q), CosetLabel::of(&p.compose(&q)));
            }
        }
    }

    #[test]
    fn labels_alone_do_not_determine_product_label() {
        // H is not normal, so right cosets do not multiply.
        let p = Permutation::CYCLE_123;
        let (q1, q2) = (Permutation::IDENTITY, Permutation::TRANSPOSITION_12);
        assert_eq!(CosetLabel::of(&q1), CosetLabel::of(&q2));
        assert_ne!(CosetLabel::of(&p.compose(&q1)), CosetLabel::of(&p.compose(&q2)));
    }

    #[test]
    fn poincare_on_three_cycle() {
        let phi = GroupHomToS3::new(1, 2);
        let twist = TwistMap::new([(2, 1)]);
        let alpha = Series::monomial(FieldElement::s(), x(2));
        assert!(!phi.in_n(&alpha).unwrap());
        assert!(phi.poincare_check(&alpha, &twist).unwrap());
    }
}
