use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, TwistMap};
use crate::free_group::{MagnusOrder, ReducedWord};

/// A finite-support element `Σ a_g g` of the twisted series ring `K((G, Φ))`.
///
/// No zero coefficients are stored, so equality is coefficient-wise equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Series {
    terms: BTreeMap<ReducedWord, FieldElement>,
}

/// One term of a series in report form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub word: String,
    pub coeff: String,
}

impl Series {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(FieldElement::one(), ReducedWord::identity())
    }

    pub fn monomial(coeff: FieldElement, word: ReducedWord) -> Self {
        let mut s = Self::zero();
        s.add_term(word, coeff);
        s
    }

    pub fn word(word: ReducedWord) -> Self {
        Self::monomial(FieldElement::one(), word)
    }

    pub fn from_terms<I: IntoIterator<Item = (ReducedWord, FieldElement)>>(terms: I) -> Self {
        let mut s = Self::zero();
        for (w, c) in terms {
            s.add_term(w, c);
        }
        s
    }

    pub fn add_term(&mut self, word: ReducedWord, coeff: FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(existing) => {
                let sum = existing.add(&coeff);
                if sum.is_zero() {
                    self.terms.remove(&word);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &ReducedWord) -> FieldElement {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &ReducedWord> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ReducedWord, &FieldElement)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Twisted product `Σ_t (Σ_{gh = t} a_g Φ_g(b_h)) t`.
    pub fn mul(&self, other: &Self, twist: &TwistMap) -> Self {
        let mut out = Self::zero();
        for (g, a) in &self.terms {
            let phi = twist.twist_of(g);
            for (h, b) in &other.terms {
                out.add_term(g.multiply(h), a.mul(&phi.apply(b)));
            }
        }
        out
    }

    /// The terms of `self·other` whose word is strictly below `bound`; pairs
    /// landing at or above it are skipped before any coefficient arithmetic.
    pub fn mul_below(&self, other: &Self, twist: &TwistMap, bound: &ReducedWord) -> Result<Self> {
        let order = MagnusOrder::default();
        let mut keep: BTreeMap<ReducedWord, bool> = BTreeMap::new();
        let mut out = Self::zero();
        for (g, a) in &self.terms {
            let phi = twist.twist_of(g);
            for (h, b) in &other.terms {
                let w = g.multiply(h);
                let below = match keep.get(&w) {
                    Some(&k) => k,
                    None => {
                        let k = order.compare(&w, bound)? == Ordering::Less;
                        keep.insert(w.clone(), k);
                        k
                    }
                };
                if below {
                    out.add_term(w, a.mul(&phi.apply(b)));
                }
            }
        }
        Ok(out)
    }

    /// Least word of the support in the Magnus order.
    pub fn d(&self) -> Result<ReducedWord> {
        if self.is_zero() {
            return Err(Error::ZeroHasNoSupport);
        }
        MagnusOrder::default().min_of_support(self.terms.keys())
    }

    /// `(d(α), coefficient at d(α))`.
    pub fn leading(&self) -> Result<(ReducedWord, FieldElement)> {
        let u = self.d()?;
        let c = self.coefficient(&u);
        Ok((u, c))
    }

    /// Exact inverse of a monomial `c·g`: `Φ_{g^-1}(c^-1)·g^-1`.
    pub fn monomial_inverse(coeff: &FieldElement, word: &ReducedWord, twist: &TwistMap) -> Result<Self> {
        let inv_word = word.invert();
        let c = twist.apply(&inv_word, &coeff.invert()?);
        Ok(Self::monomial(c, inv_word))
    }

    /// Terms whose word is strictly below `bound` in the Magnus order.
    pub fn truncated_below(&self, bound: &ReducedWord) -> Result<Self> {
        let order = MagnusOrder::default();
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            if order.compare(w, bound)? == Ordering::Less {
                terms.insert(w.clone(), c.clone());
            }
        }
        Ok(Self { terms })
    }

    /// Terms sorted ascending in the Magnus order.
    pub fn sorted_terms(&self) -> Result<Vec<(ReducedWord, FieldElement)>> {
        let order = MagnusOrder::default();
        let mut v: Vec<(ReducedWord, FieldElement)> =
            self.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut err = None;
        v.sort_by(|a, b| {
            order.compare(&a.0, &b.0).unwrap_or_else(|e| {
                err.get_or_insert(e);
                Ordering::Equal
            })
        });
        err.map_or(Ok(v), Err)
    }

    pub fn to_json_terms(&self) -> Result<Vec<TermJson>> {
        Ok(self
            .sorted_terms()?
            .into_iter()
            .map(|(w, c)| TermJson { word: w.to_string(), coeff: c.to_string() })
            .collect())
    }

    /// Powers by repeated squaring; `k >= 0`.
    pub fn pow(&self, k: u32, twist: &TwistMap) -> Self {
        let mut result = Self::one();
        let mut square = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&square, twist);
            }
            k >>= 1;
            if k > 0 {
                square = square.mul(&square, twist);
            }
        }
        result
    }
}

impl fmt::Display for Series {
    /// Series grammar form, sorted by the Magnus order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms = self.sorted_terms().map_err(|_| fmt::Error)?;
        let parts: Vec<String> = terms.iter().map(|(w, c)| format!("({c})*[{w}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Poly;

    fn x(i: u32) -> ReducedWord {
        ReducedWord::generator(i)
    }

    fn w(i: u32) -> Series {
        Series::word(x(i))
    }

    fn c(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    #[test]
    fn addition() {
        let a = w(1).add(&w(2)).add(&Series::monomial(c(-1), x(2)));
        assert_eq!(a, w(1));
        assert_eq!(a.add(&Series::zero()), a);
        let five = Series::monomial(c(2), ReducedWord::identity()).add(&Series::monomial(c(3), ReducedWord::identity()));
        assert_eq!(five, Series::monomial(c(5), ReducedWord::identity()));
    }

    #[test]
    fn twisted_square() {
        let twist = TwistMap::new([(1, 1)]);
        let a = Series::monomial(FieldElement::s(), x(1));
        let sq = a.mul(&a, &twist);
        let expected = FieldElement::from_poly(Poly::from_i64s(&[0, 1, 1])); // s(s+1)
        assert_eq!(sq, Series::monomial(expected, x(1).power(2)));
    }

    #[test]
    fn identity_and_no_collision() {
        let twist = TwistMap::new([(1, 1), (2, -2)]);
        let a = w(1).add(&w(2));
        assert_eq!(a.mul(&Series::one(), &twist), a);
        assert_eq!(Series::one().mul(&a, &twist), a);
        let p = a.mul(&w(1), &twist);
        assert_eq!(p, Series::word(x(1).power(2)).add(&Series::word(x(2).multiply(&x(1)))));
    }

    #[test]
    fn min_support() {
        assert_eq!(w(1).add(&w(2)).d().unwrap(), x(2));
        let m = Series::monomial(FieldElement::s(), x(3).power(-2));
        assert_eq!(m.d().unwrap(), x(3).power(-2));
        assert_eq!(Series::one().add(&w(1)).d().unwrap(), ReducedWord::identity());
        assert_eq!(Series::zero().d(), Err(Error::ZeroHasNoSupport));
    }

    #[test]
    fn leading_terms() {
        let twist = TwistMap::trivial();
        let p = w(1).add(&w(2)).mul(&w(1), &twist);
        assert_eq!(p.leading().unwrap(), (x(2).multiply(&x(1)), c(1)));
        let five = Series::monomial(c(5), ReducedWord::identity());
        assert_eq!(five.leading().unwrap(), (ReducedWord::identity(), c(5)));
    }

    #[test]
    fn monomial_inverse_is_exact() {
        let twist = TwistMap::new([(1, 1), (2, -2)]);
        let g = x(1).multiply(&x(2).power(3));
        let coeff = FieldElement::from_poly(Poly::from_i64s(&[1, 2]));
        let m = Series::monomial(coeff.clone(), g.clone());
        let inv = Series::monomial_inverse(&coeff, &g, &twist).unwrap();
        assert_eq!(m.mul(&inv, &twist), Series::one());
        assert_eq!(inv.mul(&m, &twist), Series::one());
    }

    #[test]
    fn display_is_sorted() {
        let a = w(1).add(&Series::monomial(FieldElement::s(), x(2)));
        assert_eq!(a.to_string(), "(s)*[x2] + (1)*[x1]");
    }
}
