//! Truncated series with an order-of-error guarantee word.
//!
//! An [`ApproxSeries`] stands for an exact element `terms + E` where every
//! word in the support of the unknown remainder `E` is `>= guarantee` in the
//! Magnus order. A missing guarantee means the value is exact.

use std::cmp::Ordering;

use serde::Serialize;

use super::series::{Series, TermJson};
use crate::error::{Error, Result};
use crate::field::{FieldElement, TwistMap};
use crate::free_group::{MagnusOrder, ReducedWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxSeries {
    terms: Series,
    guarantee: Option<ReducedWord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproxJson {
    pub terms: Vec<TermJson>,
    /// `null` for an exact value.
    pub guarantee: Option<String>,
}

fn min_word(a: Option<ReducedWord>, b: Option<ReducedWord>) -> Result<Option<ReducedWord>> {
    Ok(match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            if MagnusOrder::default().compare(&a, &b)? == Ordering::Greater {
                Some(b)
            } else {
                Some(a)
            }
        }
    })
}

impl ApproxSeries {
    pub fn exact(terms: Series) -> Self {
        Self { terms, guarantee: None }
    }

    /// Keeps only the terms strictly below `guarantee`.
    pub fn new(terms: Series, guarantee: Option<ReducedWord>) -> Result<Self> {
        let terms = match &guarantee {
            Some(g) => terms.truncated_below(g)?,
            None => terms,
        };
        Ok(Self { terms, guarantee })
    }

    pub fn one() -> Self {
        Self::exact(Series::one())
    }

    pub fn terms(&self) -> &Series {
        &self.terms
    }

    pub fn guarantee(&self) -> Option<&ReducedWord> {
        self.guarantee.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.guarantee.is_none()
    }

    /// Least support word of the represented value. Needs a nonzero truncation,
    /// whose least word is then below the guarantee by construction.
    pub fn d(&self) -> Result<ReducedWord> {
        if self.terms.is_zero() {
            return match &self.guarantee {
                None => Err(Error::ZeroHasNoSupport),
                Some(g) => Err(Error::GuaranteeTooCoarse { leading: "0".into(), guarantee: g.to_string() }),
            };
        }
        let u = self.terms.d()?;
        if let Some(g) = &self.guarantee {
            if MagnusOrder::default().compare(&u, g)? != Ordering::Less {
                return Err(Error::GuaranteeTooCoarse { leading: u.to_string(), guarantee: g.to_string() });
            }
        }
        Ok(u)
    }

    pub fn leading(&self) -> Result<(ReducedWord, FieldElement)> {
        let u = self.d()?;
        let c = self.terms.coefficient(&u);
        Ok((u, c))
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.neg(), guarantee: self.guarantee.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let g = min_word(self.guarantee.clone(), other.guarantee.clone())?;
        Self::new(self.terms.add(&other.terms), g)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Product with guarantee `min(g1·d(T_b), d(T_a)·g2, g1·g2)`; terms at or
    /// beyond it are dropped.
    pub fn mul(&self, other: &Self, twist: &TwistMap) -> Result<Self> {
        let mut candidates: Vec<ReducedWord> = Vec::new();
        if let Some(g1) = &self.guarantee {
            if !other.terms.is_zero() {
                candidates.push(g1.multiply(&other.terms.d()?));
            }
        }
        if let Some(g2) = &other.guarantee {
            if !self.terms.is_zero() {
                candidates.push(self.terms.d()?.multiply(g2));
            }
        }
        if let (Some(g1), Some(g2)) = (&self.guarantee, &other.guarantee) {
            candidates.push(g1.multiply(g2));
        }
        let mut g = None;
        for c in candidates {
            g = min_word(g, Some(c))?;
        }
        let g = match (&self.guarantee, &other.guarantee, g) {
            // an exact zero factor makes the product exactly zero
            (None, _, _) if self.terms.is_zero() => None,
            (_, None, _) if other.terms.is_zero() => None,
            (_, _, g) => g,
        };
        match g {
            None => Ok(Self::exact(self.terms.mul(&other.terms, twist))),
            Some(g) => Ok(Self { terms: self.terms.mul_below(&other.terms, twist, &g)?, guarantee: Some(g) }),
        }
    }

    /// Inverse via an `depth`-term geometric expansion of the truncation,
    /// with the truncation's own error folded into the guarantee.
    pub fn inverse(&self, depth: usize, twist: &TwistMap) -> Result<Self> {
        if self.terms.is_zero() {
            return match &self.guarantee {
                None => Err(Error::ZeroInversion),
                Some(_) => Err(Error::GuaranteeTooCoarse {
                    leading: "0".into(),
                    guarantee: self.guarantee.as_ref().unwrap().to_string(),
                }),
            };
        }
        let inv = truncated_inverse(&self.terms, depth, twist)?;
        match &self.guarantee {
            None => Ok(inv),
            Some(g) => {
                // a^-1 - t^-1 = -a^-1 (a - t) t^-1 has support >= u^-1 g u^-1
                let u_inv = self.d()?.invert();
                let err = u_inv.multiply(g).multiply(&u_inv);
                let guarantee = min_word(inv.guarantee, Some(err))?;
                Self::new(inv.terms, guarantee)
            }
        }
    }

    pub fn pow(&self, k: i64, depth: usize, twist: &TwistMap) -> Result<Self> {
        let base = if k < 0 { self.inverse(depth, twist)? } else { self.clone() };
        let mut result = Self::one();
        let mut square = base;
        let mut k = k.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&square, twist)?;
            }
            k >>= 1;
            if k > 0 {
                square = square.mul(&square, twist)?;
            }
        }
        Ok(result)
    }

    /// True iff the represented value minus `1` is known to lie entirely at or
    /// beyond the guarantee, i.e. the value equals 1 at this truncation.
    pub fn is_one_at_truncation(&self) -> Result<bool> {
        Ok(self.sub(&Self::one())?.terms.is_zero())
    }

    pub fn to_json(&self) -> Result<ApproxJson> {
        Ok(ApproxJson {
            terms: self.terms.to_json_terms()?,
            guarantee: self.guarantee.as_ref().map(ToString::to_string),
        })
    }
}

/// Decomposition `α = (a_u·u)(1 + ε)` with `u = d(α)` and `d(ε) > 1`.
#[derive(Clone, Debug)]
pub struct InversionSplit {
    pub leading_word: ReducedWord,
    pub leading_coeff: FieldElement,
    /// `(a_u·u)^-1`, exact.
    pub leading_inverse: Series,
    pub eps: Series,
}

impl InversionSplit {
    pub fn of(alpha: &Series, twist: &TwistMap) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::ZeroInversion);
        }
        let (u, a_u) = alpha.leading()?;
        let leading_inverse = Series::monomial_inverse(&a_u, &u, twist)?;
        let rest = alpha.sub(&Series::monomial(a_u.clone(), u.clone()));
        let eps = leading_inverse.mul(&rest, twist);
        Ok(Self { leading_word: u, leading_coeff: a_u, leading_inverse, eps })
    }

    /// `d(ε)`, or `None` when `α` is a monomial.
    pub fn eps_min(&self) -> Result<Option<ReducedWord>> {
        if self.eps.is_zero() {
            Ok(None)
        } else {
            self.eps.d().map(Some)
        }
    }

    /// Bound on `α·inv_n − 1`: `u·d(ε)^(n+1)·u^-1`.
    pub fn right_residual_bound(&self, n: usize) -> Result<Option<ReducedWord>> {
        Ok(self.eps_min()?.map(|e| {
            e.power(n as i64 + 1).conjugate_by(&self.leading_word)
        }))
    }

    /// Bound on `inv_n·α − 1`: `d(ε)^(n+1)`.
    pub fn left_residual_bound(&self, n: usize) -> Result<Option<ReducedWord>> {
        Ok(self.eps_min()?.map(|e| e.power(n as i64 + 1)))
    }
}

/// `(Σ_{k=0..n} (−ε)^k)·(a_u·u)^-1` for `α = (a_u·u)(1 + ε)`.
///
/// The guarantee is `d(ε)^(n+1)·u^-1`, the least possible support word of the
/// dropped tail `Σ_{k>n} (−ε)^k (a_u·u)^-1`. Consequently `α·inv − 1` has
/// support `>= u·d(ε)^(n+1)·u^-1` and `inv·α − 1` has support `>= d(ε)^(n+1)`.
pub fn truncated_inverse(alpha: &Series, n: usize, twist: &TwistMap) -> Result<ApproxSeries> {
    let split = InversionSplit::of(alpha, twist)?;
    let Some(e) = split.eps_min()? else {
        return Ok(ApproxSeries::exact(split.leading_inverse));
    };
    let bound = e.power(n as i64 + 1);
    let neg_eps = split.eps.neg();
    let mut sum = Series::one();
    let mut power = Series::one();
    for _ in 0..n {
        // terms >= bound stay >= bound after right multiplication by ε (all > 1)
        power = power.mul_below(&neg_eps, twist, &bound)?;
        if power.is_zero() {
            break;
        }
        sum = sum.add(&power);
    }
    let terms = sum.mul(&split.leading_inverse, twist);
    let guarantee = bound.multiply(&split.leading_word.invert());
    ApproxSeries::new(terms, Some(guarantee))
}
