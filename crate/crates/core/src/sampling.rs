//! Seeded generators for words, coefficients and finite-support series.
//!
//! Every suite draws its samples up front from a `ChaCha8Rng` so that results
//! do not depend on thread scheduling.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldElement, Poly};
use crate::free_group::{Generator, ReducedWord};
use crate::identities::WordExpr;
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordShape {
    pub max_len: usize,
    pub max_generator: Generator,
}

impl Default for WordShape {
    fn default() -> Self {
        Self { max_len: 8, max_generator: 5 }
    }
}

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// A word built from up to `max_len` letters `x_i^±1`, then freely reduced.
pub fn word<R: Rng>(r: &mut R, shape: WordShape) -> ReducedWord {
    let len = r.gen_range(0..=shape.max_len);
    (0..len).fold(ReducedWord::identity(), |acc, _| {
        let i = r.gen_range(1..=shape.max_generator);
        let e = if r.gen_bool(0.5) { 1 } else { -1 };
        acc.multiply(&ReducedWord::generator_power(i, e))
    })
}

pub fn nonidentity_word<R: Rng>(r: &mut R, shape: WordShape) -> ReducedWord {
    loop {
        let w = word(r, shape);
        if !w.is_identity() {
            return w;
        }
    }
}

fn small_rational<R: Rng>(r: &mut R) -> BigRational {
    let num = r.gen_range(-5i64..=5);
    let den = r.gen_range(1i64..=3);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn small_poly<R: Rng>(r: &mut R, max_degree: usize) -> Poly {
    let deg = r.gen_range(0..=max_degree);
    Poly::from_coeffs((0..=deg).map(|_| small_rational(r)).collect())
}

/// A nonzero element of `Q(s)`: a rational constant or a ratio of low-degree polynomials.
pub fn coefficient<R: Rng>(r: &mut R) -> FieldElement {
    loop {
        let c = match r.gen_range(0..4) {
            0 => FieldElement::from_rational(small_rational(r)),
            1 => FieldElement::from_poly(small_poly(r, 2)),
            _ => {
                let den = small_poly(r, 1);
                if den.is_zero() {
                    continue;
                }
                match FieldElement::new(small_poly(r, 2), den) {
                    Ok(c) => c,
                    Err(_) => continue,
                }
            }
        };
        if !c.is_zero() {
            return c;
        }
    }
}

/// A nonzero series with `1..=max_support` terms.
pub fn series<R: Rng>(r: &mut R, max_support: usize, shape: WordShape) -> Series {
    loop {
        let n = r.gen_range(1..=max_support);
        let s = Series::from_terms((0..n).map(|_| (word(r, shape), coefficient(r))));
        if !s.is_zero() {
            return s;
        }
    }
}

/// A nonzero series whose coefficients are rational constants.
pub fn rational_series<R: Rng>(r: &mut R, max_support: usize, shape: WordShape) -> Series {
    loop {
        let n = r.gen_range(1..=max_support);
        let s = Series::from_terms((0..n).map(|_| (word(r, shape), FieldElement::from_rational(small_rational(r)))));
        if !s.is_zero() {
            return s;
        }
    }
}

/// A coefficient times a word.
pub fn monomial<R: Rng>(r: &mut R, shape: WordShape) -> Series {
    Series::monomial(coefficient(r), word(r, shape))
}

/// A random expression over the given variables, nested at most `depth` deep.
pub fn expression<R: Rng>(r: &mut R, vars: &[&str], depth: usize) -> WordExpr {
    if depth == 0 || r.gen_bool(0.3) {
        return WordExpr::var(vars[r.gen_range(0..vars.len())]);
    }
    match r.gen_range(0..4) {
        0 => {
            let k = r.gen_range(2..=3);
            WordExpr::product((0..k).map(|_| expression(r, vars, depth - 1)).collect())
        }
        1 => expression(r, vars, depth - 1).inverse(),
        2 => {
            let k = *[-3i64, -2, -1, 2, 3, 6].get(r.gen_range(0..6)).unwrap();
            expression(r, vars, depth - 1).pow(k)
        }
        _ => WordExpr::commutator(expression(r, vars, depth - 1), expression(r, vars, depth - 1)),
    }
}
