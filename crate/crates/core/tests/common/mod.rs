//! Proptest strategies shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use malcev_core::field::{FieldElement, Poly, TwistMap};
use malcev_core::free_group::ReducedWord;
use malcev_core::series::Series;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn letters(max_gen: u32, max_len: usize) -> impl Strategy<Value = Vec<(u32, i64)>> {
    prop::collection::vec((1u32..=max_gen, prop::bool::ANY), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(g, pos)| (g, if pos { 1 } else { -1 })).collect())
}

pub fn word(max_gen: u32, max_len: usize) -> impl Strategy<Value = ReducedWord> {
    letters(max_gen, max_len).prop_map(ReducedWord::from_pairs)
}

pub fn poly(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..=max_terms)
        .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(n, d)| q(n, d)).collect()))
}

pub fn element() -> impl Strategy<Value = FieldElement> {
    (poly(3), poly(2)).prop_filter_map("zero denominator", |(n, d)| FieldElement::new(n, d).ok())
}

pub fn nonzero() -> impl Strategy<Value = FieldElement> {
    element().prop_filter("zero", |e| !e.is_zero())
}

/// A nonzero series with up to `max_support` terms over `x1..x3`, words of length <= 3.
pub fn series(max_support: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec((word(3, 3), nonzero()), 1..=max_support)
        .prop_map(Series::from_terms)
        .prop_filter("zero", |s| !s.is_zero())
}

pub fn twist() -> TwistMap {
    TwistMap::new([(1, 1), (2, -2)])
}
