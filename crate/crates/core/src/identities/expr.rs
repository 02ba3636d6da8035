use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::free_group::{Generator, ReducedWord};

/// Generalized group monomial over variables (`?x`) and named constants.
///
/// Generator literals `x3` are constants whose default meaning is supplied by
/// the evaluation target. The identity is the empty product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WordExpr {
    Var(String),
    Const(String),
    Product(Vec<WordExpr>),
    Inverse(Box<WordExpr>),
    Power(Box<WordExpr>, i64),
    Commutator(Box<WordExpr>, Box<WordExpr>),
}

impl WordExpr {
    pub fn var(name: &str) -> Self {
        WordExpr::Var(name.to_string())
    }

    pub fn constant(name: &str) -> Self {
        WordExpr::Const(name.to_string())
    }

    pub fn generator(i: Generator) -> Self {
        WordExpr::Const(format!("x{i}"))
    }

    pub fn identity() -> Self {
        WordExpr::Product(Vec::new())
    }

    pub fn product(factors: Vec<WordExpr>) -> Self {
        WordExpr::Product(factors)
    }

    pub fn inverse(self) -> Self {
        WordExpr::Inverse(Box::new(self))
    }

    pub fn pow(self, k: i64) -> Self {
        WordExpr::Power(Box::new(self), k)
    }

    pub fn commutator(a: WordExpr, b: WordExpr) -> Self {
        WordExpr::Commutator(Box::new(a), Box::new(b))
    }

    /// Rewrites every `Commutator(a, b)` as `a·b·a^-1·b^-1`.
    pub fn expand_commutators(&self) -> Self {
        match self {
            WordExpr::Var(_) | WordExpr::Const(_) => self.clone(),
            WordExpr::Product(fs) => WordExpr::Product(fs.iter().map(Self::expand_commutators).collect()),
            WordExpr::Inverse(a) => a.expand_commutators().inverse(),
            WordExpr::Power(a, k) => a.expand_commutators().pow(*k),
            WordExpr::Commutator(a, b) => {
                let (a, b) = (a.expand_commutators(), b.expand_commutators());
                WordExpr::Product(vec![a.clone(), b.clone(), a.inverse(), b.inverse()])
            }
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect(&mut out, true);
        out
    }

    pub fn constants(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect(&mut out, false);
        out
    }

    fn collect(&self, out: &mut BTreeSet<String>, vars: bool) {
        match self {
            WordExpr::Var(v) if vars => {
                out.insert(v.clone());
            }
            WordExpr::Const(c) if !vars => {
                out.insert(c.clone());
            }
            WordExpr::Var(_) | WordExpr::Const(_) => {}
            WordExpr::Product(fs) => fs.iter().for_each(|f| f.collect(out, vars)),
            WordExpr::Inverse(a) | WordExpr::Power(a, _) => a.collect(out, vars),
            WordExpr::Commutator(a, b) => {
                a.collect(out, vars);
                b.collect(out, vars);
            }
        }
    }

    /// Replaces variables by expressions.
    pub fn substitute(&self, bindings: &BTreeMap<String, WordExpr>) -> Self {
        match self {
            WordExpr::Var(v) => bindings.get(v).cloned().unwrap_or_else(|| self.clone()),
            WordExpr::Const(_) => self.clone(),
            WordExpr::Product(fs) => WordExpr::Product(fs.iter().map(|f| f.substitute(bindings)).collect()),
            WordExpr::Inverse(a) => a.substitute(bindings).inverse(),
            WordExpr::Power(a, k) => a.substitute(bindings).pow(*k),
            WordExpr::Commutator(a, b) => WordExpr::commutator(a.substitute(bindings), b.substitute(bindings)),
        }
    }

    /// Converts a variable-free expression built from generator literals into a reduced word.
    pub fn to_word(&self) -> Result<ReducedWord> {
        Ok(match self {
            WordExpr::Var(v) => return Err(Error::Unbound(format!("?{v}"))),
            WordExpr::Const(c) => {
                ReducedWord::generator(generator_index(c).ok_or_else(|| Error::Unbound(c.clone()))?)
            }
            WordExpr::Product(fs) => {
                let mut w = ReducedWord::identity();
                for f in fs {
                    w = w.multiply(&f.to_word()?);
                }
                w
            }
            WordExpr::Inverse(a) => a.to_word()?.invert(),
            WordExpr::Power(a, k) => a.to_word()?.power(*k),
            WordExpr::Commutator(a, b) => ReducedWord::commutator(&a.to_word()?, &b.to_word()?),
        })
    }

    pub fn from_word(w: &ReducedWord) -> Self {
        let factors: Vec<WordExpr> = w
            .syllables()
            .iter()
            .map(|s| match s.exponent {
                1 => WordExpr::generator(s.generator),
                e => WordExpr::generator(s.generator).pow(e),
            })
            .collect();
        if factors.len() == 1 {
            factors.into_iter().next().unwrap()
        } else {
            WordExpr::Product(factors)
        }
    }
}

/// `x12 -> Some(12)`.
pub fn generator_index(name: &str) -> Option<Generator> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&i: &Generator| i >= 1)
}

fn is_atom(e: &WordExpr) -> bool {
    matches!(e, WordExpr::Var(_) | WordExpr::Const(_) | WordExpr::Commutator(..))
        || matches!(e, WordExpr::Product(fs) if fs.is_empty())
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordExpr::Var(v) => write!(f, "?{v}"),
            WordExpr::Const(c) => f.write_str(c),
            WordExpr::Product(fs) if fs.is_empty() => f.write_str("1"),
            WordExpr::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            WordExpr::Inverse(a) if is_atom(a) => write!(f, "{a}^-1"),
            WordExpr::Inverse(a) => write!(f, "({a})^-1"),
            WordExpr::Power(a, k) if is_atom(a) => write!(f, "{a}^{k}"),
            WordExpr::Power(a, k) => write!(f, "({a})^{k}"),
            WordExpr::Commutator(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}
