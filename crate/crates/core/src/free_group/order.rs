//! The Magnus order on the free group.
//!
//! `a < b` iff at the first monomial (degree first, then lexicographic with
//! `t_1 < t_2 < ...`) where the Magnus images of `a` and `b` differ, `a` has
//! the smaller coefficient. Under this convention `x_2 < x_1` and
//! `x_1^-1 < 1 < x_1`.
//!
//! The first difference is located through `c = a^-1 b`: the lowest-degree
//! nonzero part of `M(b) - M(a) = M(a)(M(c) - 1)` equals that of `M(c) - 1`,
//! so only the (usually much shorter) word `c` is expanded.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;

use super::magnus::{coefficient_of, MagnusExpansion, Monomial};
use super::word::ReducedWord;
use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_CAP: usize = 64;

/// Outcome of a comparison together with the witnessing monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub relation: Ordering,
    /// First differing monomial with the coefficients of `a` and `b`; `None` iff equal.
    pub witness: Option<(Monomial, BigInt, BigInt)>,
    /// Truncation degree at which the difference was found.
    pub degree_reached: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MagnusOrder {
    pub degree_cap: usize,
}

impl Default for MagnusOrder {
    fn default() -> Self {
        Self { degree_cap: DEFAULT_DEGREE_CAP }
    }
}

impl MagnusOrder {
    pub fn with_cap(degree_cap: usize) -> Self {
        Self { degree_cap: degree_cap.max(1) }
    }

    pub fn compare(&self, a: &ReducedWord, b: &ReducedWord) -> Result<Ordering> {
        self.compare_with_witness(a, b).map(|c| c.relation)
    }

    pub fn compare_with_witness(&self, a: &ReducedWord, b: &ReducedWord) -> Result<Comparison> {
        if a == b {
            return Ok(Comparison { relation: Ordering::Equal, witness: None, degree_reached: 0 });
        }
        let c = a.invert().multiply(b);
        let mut degree = 2.min(self.degree_cap);
        loop {
            let expansion = MagnusExpansion::of(&c, degree);
            let first = expansion
                .terms()
                .find(|(m, _)| m.degree() > 0)
                .map(|(m, coeff)| (m.clone(), coeff.clone()));
            if let Some((m, diff)) = first {
                let ca = coefficient_of(a, &m);
                let cb = &ca + &diff;
                let relation = if diff.is_positive() { Ordering::Less } else { Ordering::Greater };
                return Ok(Comparison { relation, witness: Some((m, ca, cb)), degree_reached: degree });
            }
            if degree >= self.degree_cap {
                return Err(Error::DeepeningCapExceeded {
                    a: a.to_string(),
                    b: b.to_string(),
                    cap: self.degree_cap,
                });
            }
            degree = (degree * 2).min(self.degree_cap);
        }
    }

    /// `compare(a, b) == Less`, panicking only if the deepening cap is hit.
    pub fn less(&self, a: &ReducedWord, b: &ReducedWord) -> bool {
        self.compare(a, b).expect("Magnus comparison cap reached") == Ordering::Less
    }

    /// Direct route: expand both words at `D = 2, 4, 8, ...` and compare
    /// coefficients. Slower than [`MagnusOrder::compare_with_witness`]; kept
    /// as an independent cross-check.
    pub fn compare_by_expansion(&self, a: &ReducedWord, b: &ReducedWord) -> Result<Comparison> {
        if a == b {
            return Ok(Comparison { relation: Ordering::Equal, witness: None, degree_reached: 0 });
        }
        let mut degree = 2.min(self.degree_cap);
        loop {
            let ea = MagnusExpansion::of(a, degree);
            let eb = MagnusExpansion::of(b, degree);
            if let Some((m, ca, cb)) = ea.first_difference(&eb) {
                let relation = ca.cmp(&cb);
                return Ok(Comparison { relation, witness: Some((m, ca, cb)), degree_reached: degree });
            }
            if degree >= self.degree_cap {
                return Err(Error::DeepeningCapExceeded {
                    a: a.to_string(),
                    b: b.to_string(),
                    cap: self.degree_cap,
                });
            }
            degree = (degree * 2).min(self.degree_cap);
        }
    }

    /// Least element of a finite nonempty set of words.
    pub fn min_of_support<'a, I>(&self, words: I) -> Result<ReducedWord>
    where
        I: IntoIterator<Item = &'a ReducedWord>,
    {
        let mut iter = words.into_iter();
        let mut best = iter.next().ok_or(Error::EmptySupport)?;
        for w in iter {
            if self.compare(w, best)? == Ordering::Less {
                best = w;
            }
        }
        Ok(best.clone())
    }

    /// `1 < w`.
    pub fn is_positive(&self, w: &ReducedWord) -> Result<bool> {
        Ok(self.compare(&ReducedWord::identity(), w)? == Ordering::Less)
    }
}

pub fn compare(a: &ReducedWord, b: &ReducedWord) -> Result<Ordering> {
    MagnusOrder::default().compare(a, b)
}

pub fn min_of_support<'a, I>(words: I) -> Result<ReducedWord>
where
    I: IntoIterator<Item = &'a ReducedWord>,
{
    MagnusOrder::default().min_of_support(words)
}

/// Total order wrapper so words can be sorted by the Magnus order.
pub fn sort_words(words: &mut [ReducedWord]) -> Result<()> {
    let order = MagnusOrder::default();
    let mut err = None;
    words.sort_by(|a, b| match order.compare(a, b) {
        Ok(o) => o,
        Err(e) => {
            err.get_or_insert(e);
            Ordering::Equal
        }
    });
    err.map_or(Ok(()), Err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn x(i: u32) -> ReducedWord {
        ReducedWord::generator(i)
    }

    #[test]
    fn identity_below_generator() {
        let c = MagnusOrder::default().compare_with_witness(&ReducedWord::identity(), &x(1)).unwrap();
        assert_eq!(c.relation, Ordering::Less);
        let (m, ca, cb) = c.witness.unwrap();
        assert_eq!(m, Monomial(vec![1]));
        assert_eq!((ca, cb), (BigInt::zero(), BigInt::one()));
    }

    #[test]
    fn inverse_generator_below_identity() {
        let c = MagnusOrder::default()
            .compare_with_witness(&x(1).invert(), &ReducedWord::identity())
            .unwrap();
        assert_eq!(c.relation, Ordering::Less);
        let (m, ca, cb) = c.witness.unwrap();
        assert_eq!(m, Monomial(vec![1]));
        assert_eq!((ca, cb), (BigInt::from(-1), BigInt::zero()));
    }

    #[test]
    fn equal_words() {
        let w = ReducedWord::from_pairs([(1, 2), (3, -1)]);
        assert_eq!(compare(&w, &w).unwrap(), Ordering::Equal);
    }

    #[test]
    fn second_generator_below_first() {
        assert_eq!(compare(&x(2), &x(1)).unwrap(), Ordering::Less);
    }

    #[test]
    fn min_of_support_examples() {
        assert_eq!(min_of_support([&x(1), &x(2)]).unwrap(), x(2));
        let one = ReducedWord::identity();
        let inv = x(1).invert();
        assert_eq!(min_of_support([&one, &x(1), &inv]).unwrap(), inv);
        assert_eq!(min_of_support([&x(5)]).unwrap(), x(5));
        assert_eq!(min_of_support(std::iter::empty::<&ReducedWord>()), Err(Error::EmptySupport));
    }

    #[test]
    fn commutators_need_degree_two() {
        let c = ReducedWord::commutator(&x(1), &x(2));
        let cmp = MagnusOrder::default().compare_with_witness(&ReducedWord::identity(), &c).unwrap();
        assert_eq!(cmp.relation, Ordering::Less);
        assert_eq!(cmp.witness.unwrap().0, Monomial(vec![1, 2]));
    }

    #[test]
    fn deep_commutator_found_by_deepening() {
        let mut c = x(1);
        for _ in 0..4 {
            c = ReducedWord::commutator(&c, &x(2));
        }
        let cmp = MagnusOrder::default().compare_with_witness(&ReducedWord::identity(), &c).unwrap();
        assert_eq!(cmp.witness.as_ref().unwrap().0.degree(), 5);
        assert_eq!(cmp.degree_reached, 8);
        let direct = MagnusOrder::default().compare_by_expansion(&ReducedWord::identity(), &c).unwrap();
        assert_eq!(cmp, direct);
    }

    #[test]
    fn cap_is_reported() {
        let mut c = x(1);
        for _ in 0..3 {
            c = ReducedWord::commutator(&c, &x(2));
        }
        let err = MagnusOrder::with_cap(2).compare(&ReducedWord::identity(), &c).unwrap_err();
        assert!(matches!(err, Error::DeepeningCapExceeded { cap: 2, .. }));
    }
}
