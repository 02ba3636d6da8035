use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::FieldElement;
use crate::free_group::{Generator, ReducedWord};

/// The automorphism `s -> s + shift` of `Q(s)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct FieldAutomorphism {
    pub shift: i64,
}

impl FieldAutomorphism {
    pub const IDENTITY: Self = Self { shift: 0 };

    pub fn new(shift: i64) -> Self {
        Self { shift }
    }

    /// `self ∘ other`.
    pub fn compose(self, other: Self) -> Self {
        Self { shift: self.shift + other.shift }
    }

    pub fn inverse(self) -> Self {
        Self { shift: -self.shift }
    }

    pub fn apply(self, f: &FieldElement) -> FieldElement {
        f.shifted(self.shift)
    }
}

impl fmt::Display for FieldAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s -> s{:+}", self.shift)
    }
}

/// The twist homomorphism `Φ: G -> Aut(Q(s))`, `Φ(x_i) = shift by weight(i)`.
///
/// Shifts commute, so `Φ` factors through the abelianization of `G`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistMap {
    weights: BTreeMap<Generator, i64>,
}

impl TwistMap {
    /// The trivial twist: every `Φ_g` is the identity.
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn new<I: IntoIterator<Item = (Generator, i64)>>(weights: I) -> Self {
        Self {
            weights: weights.into_iter().filter(|&(_, w)| w != 0).collect(),
        }
    }

    pub fn weight(&self, i: Generator) -> i64 {
        self.weights.get(&i).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> &BTreeMap<Generator, i64> {
        &self.weights
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn twist_of(&self, g: &ReducedWord) -> FieldAutomorphism {
        let shift = g
            .syllables()
            .iter()
            .map(|s| self.weight(s.generator) * s.exponent)
            .sum();
        FieldAutomorphism { shift }
    }

    /// `Φ_g(f)`.
    pub fn apply(&self, g: &ReducedWord, f: &FieldElement) -> FieldElement {
        self.twist_of(g).apply(f)
    }
}

impl fmt::Display for TwistMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Poly;

    fn x(i: Generator) -> ReducedWord {
        ReducedWord::generator(i)
    }

    #[test]
    fn defining_shift() {
        let s = FieldElement::s();
        assert_eq!(FieldAutomorphism::new(1).apply(&s), FieldElement::from_poly(Poly::from_i64s(&[1, 1])));
        let f = FieldElement::from_poly(Poly::from_i64s(&[-1, 1])).invert().unwrap();
        let g = FieldElement::from_poly(Poly::from_i64s(&[1, 1])).invert().unwrap();
        assert_eq!(FieldAutomorphism::new(2).apply(&f), g);
        let id = FieldAutomorphism::new(-1).compose(FieldAutomorphism::new(1));
        assert_eq!(id, FieldAutomorphism::IDENTITY);
        assert_eq!(id.apply(&f), f);
    }

    #[test]
    fn twist_examples() {
        let phi = TwistMap::new([(1, 1)]);
        assert_eq!(phi.twist_of(&x(1).power(3)).shift, 3);
        let phi = TwistMap::new([(1, 1), (2, -2)]);
        assert_eq!(phi.twist_of(&x(1).multiply(&x(2))).shift, -1);
        assert_eq!(phi.twist_of(&ReducedWord::commutator(&x(1), &x(2))).shift, 0);
        assert_eq!(phi.twist_of(&ReducedWord::identity()), FieldAutomorphism::IDENTITY);
    }

    #[test]
    fn display_weights() {
        assert_eq!(TwistMap::new([(2, -2), (1, 1), (3, 0)]).to_string(), "{1: 1, 2: -2}");
    }
}
