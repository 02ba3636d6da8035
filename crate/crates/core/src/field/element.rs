use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// An element of `Q(s)`: `numerator / denominator` in lowest terms with a
/// monic denominator. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    num: Poly,
    den: Poly,
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl FieldElement {
    pub fn zero() -> Self {
        Self { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self { num: Poly::one(), den: Poly::one() }
    }

    pub fn s() -> Self {
        Self { num: Poly::s(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    /// `num / den`, normalized. Fails on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInversion);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero denominator").recip();
        Self { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Constant elements are fixed by every shift automorphism.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator
        let g = self.den.gcd(&other.den);
        let (b1, _) = self.den.div_rem(&g);
        let (d1, _) = other.den.div_rem(&g);
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = self.den.mul(&d1);
        if g.is_constant() {
            return Self { num, den };
        }
        let h = num.gcd(&g);
        let (num, _) = num.div_rem(&h);
        let (den, _) = den.div_rem(&h);
        Self { num, den }
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // cancel across before multiplying; inputs are already in lowest terms
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (a, _) = self.num.div_rem(&g1);
        let (d, _) = other.den.div_rem(&g1);
        let (c, _) = other.num.div_rem(&g2);
        let (b, _) = self.den.div_rem(&g2);
        Self { num: a.mul(&c), den: b.mul(&d) }
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInversion);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        Ok(Self::normalized(base.num.pow(k), base.den.pow(k)))
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// `f(s) -> f(s + c)`.
    pub fn shifted(&self, c: i64) -> Self {
        if c == 0 || self.is_constant() {
            return self.clone();
        }
        Self::normalized(self.num.shift(c), self.den.shift(c))
    }
}

fn needs_parens(s: &str) -> bool {
    !(s == "s" || s.chars().all(|c| c.is_ascii_digit()))
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            return write!(f, "{}", self.num);
        }
        let n = self.num.to_string();
        let d = self.den.to_string();
        let n = if needs_parens(&n) { format!("({n})") } else { n };
        let d = if needs_parens(&d) { format!("({d})") } else { d };
        write!(f, "{n}/{d}")
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}
