//! Magnus embedding of the free group into truncated noncommutative integer
//! power series: `x_i -> 1 + t_i`, `x_i^-1 -> 1 - t_i + t_i^2 - ...`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::word::{Generator, ReducedWord};

/// A noncommutative monomial `t_{i_1} t_{i_2} ... t_{i_k}`.
///
/// Ordered degree first, then lexicographically with `t_1 < t_2 < ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub Vec<Generator>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<String> = self.0.iter().map(|i| format!("t{i}")).collect();
        f.write_str(&names.join("*"))
    }
}

/// `C(e, k)` for any integer `e`, i.e. the coefficient of `t^k` in `(1 + t)^e`.
pub(crate) fn binomial_coefficients(e: i64, up_to: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(up_to + 1);
    let mut c = BigInt::one();
    out.push(c.clone());
    for k in 1..=up_to as i64 {
        c = c * BigInt::from(e - k + 1) / BigInt::from(k);
        out.push(c.clone());
    }
    out
}

/// Degree-truncated Magnus image of a word. Only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusExpansion {
    degree_bound: usize,
    coefficients: BTreeMap<Monomial, BigInt>,
}

impl MagnusExpansion {
    pub fn one(degree_bound: usize) -> Self {
        let mut coefficients = BTreeMap::new();
        coefficients.insert(Monomial::default(), BigInt::one());
        Self { degree_bound, coefficients }
    }

    pub fn of(word: &ReducedWord, degree_bound: usize) -> Self {
        assert!(degree_bound >= 1, "degree bound must be positive");
        let mut current: HashMap<Vec<Generator>, BigInt> = HashMap::new();
        current.insert(Vec::new(), BigInt::one());
        for s in word.syllables() {
            let coeffs = binomial_coefficients(s.exponent, degree_bound);
            let mut next: HashMap<Vec<Generator>, BigInt> = HashMap::with_capacity(current.len() * 2);
            for (mono, c) in &current {
                for (k, ck) in coeffs.iter().enumerate().take(degree_bound - mono.len() + 1) {
                    if ck.is_zero() {
                        continue;
                    }
                    let mut m = mono.clone();
                    m.extend(std::iter::repeat(s.generator).take(k));
                    *next.entry(m).or_insert_with(BigInt::zero) += c * ck;
                }
            }
            next.retain(|_, c| !c.is_zero());
            current = next;
        }
        Self {
            degree_bound,
            coefficients: current.into_iter().map(|(m, c)| (Monomial(m), c)).collect(),
        }
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.coefficients.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero coefficients in degree-then-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.coefficients.iter()
    }

    /// Product of two expansions, truncated at the smaller degree bound.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.coefficients {
            for (m2, c2) in &other.coefficients {
                if m1.degree() + m2.degree() > bound {
                    continue;
                }
                let mut m = m1.0.clone();
                m.extend_from_slice(&m2.0);
                *out.entry(Monomial(m)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self { degree_bound: bound, coefficients: out }
    }

    /// First monomial (in degree-then-lex order) whose coefficients differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, BigInt, BigInt)> {
        let mut keys: Vec<&Monomial> = self
            .coefficients
            .keys()
            .chain(other.coefficients.keys())
            .collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coefficient(m), other.coefficient(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }
}

impl fmt::Display for MagnusExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in &self.coefficients {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (m.degree(), abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "{m}")?,
                _ => write!(f, "{abs}*{m}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Coefficient of a single monomial in the untruncated Magnus image of `word`,
/// by dynamic programming over the syllables.
pub fn coefficient_of(word: &ReducedWord, m: &Monomial) -> BigInt {
    let target = &m.0;
    let n = target.len();
    let mut dp = vec![BigInt::zero(); n + 1];
    dp[0] = BigInt::one();
    for s in word.syllables() {
        let coeffs = binomial_coefficients(s.exponent, n);
        let mut next = vec![BigInt::zero(); n + 1];
        for j in 0..=n {
            // consume target[j-k..j], all equal to this syllable's generator
            let mut k = 0;
            loop {
                if !dp[j - k].is_zero() && !coeffs[k].is_zero() {
                    next[j] += &dp[j - k] * &coeffs[k];
                }
                if k == j || target[j - k - 1] != s.generator {
                    break;
                }
                k += 1;
            }
        }
        dp = next;
    }
    dp.pop().unwrap()
}
