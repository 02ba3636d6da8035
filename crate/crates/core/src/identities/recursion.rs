//! The series-shape descriptor of an almost normal series and the word
//! recursions built from it: `w_n(x, y)`, `φ_n(h, g)`, and the elements
//! `u_n = w_n((1+g)h(1+g)^-1, g)`, `v_n = w_n((1+g)^-1 h(1+g), g)`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::eval::{eval_expr, Env, SeriesTarget};
use super::expr::WordExpr;
use crate::error::{Error, Result};
use crate::series::{truncated_inverse, ApproxSeries, Series};

pub const MAX_INDEX: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    /// `N_i` is normal in `N_(i-1)`.
    Normal,
    /// `[N_(i-1) : N_i] = ℓ`.
    FiniteIndex(u32),
}

impl Level {
    pub fn factorial_exponent(self) -> Option<i64> {
        match self {
            Level::Normal => None,
            Level::FiniteIndex(l) => Some((1..=l as i64).product()),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Normal => f.write_str("N"),
            Level::FiniteIndex(l) => write!(f, "F{l}"),
        }
    }
}

/// Levels `1..=r` of an almost normal series `N = N_r ≤ ... ≤ N_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesShapeDescriptor {
    levels: Vec<Level>,
}

impl SeriesShapeDescriptor {
    pub fn new(levels: Vec<Level>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidDescriptor("at least one level is required".into()));
        }
        for l in &levels {
            if let Level::FiniteIndex(ell) = l {
                if !(2..=MAX_INDEX).contains(ell) {
                    return Err(Error::InvalidDescriptor(format!(
                        "finite index {ell} outside 2..={MAX_INDEX}"
                    )));
                }
            }
        }
        Ok(Self { levels })
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Level governing step `n >= 1`; every `n > r` behaves as `Normal`.
    pub fn level(&self, n: usize) -> Level {
        assert!(n >= 1, "levels are numbered from 1");
        self.levels.get(n - 1).copied().unwrap_or(Level::Normal)
    }

    /// Every descriptor of length `1..=max_len` over the given levels.
    pub fn enumerate(alphabet: &[Level], max_len: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current: Vec<Vec<Level>> = vec![Vec::new()];
        for _ in 0..max_len {
            current = current
                .iter()
                .flat_map(|p| {
                    alphabet.iter().map(move |l| {
                        let mut q = p.clone();
                        q.push(*l);
                        q
                    })
                })
                .collect();
            out.extend(current.iter().map(|l| Self { levels: l.clone() }));
        }
        out
    }
}

impl fmt::Display for SeriesShapeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.levels.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for SeriesShapeDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for SeriesShapeDescriptor {
    type Err = Error;

    /// Comma-separated levels: `N` or `F<ℓ>`, e.g. `N,F2,N`.
    fn from_str(s: &str) -> Result<Self> {
        let levels = s
            .split(',')
            .map(|part| {
                let p = part.trim();
                if p.eq_ignore_ascii_case("n") {
                    Ok(Level::Normal)
                } else if let Some(l) = p.strip_prefix('F').or_else(|| p.strip_prefix('f')) {
                    l.parse::<u32>()
                        .map(Level::FiniteIndex)
                        .map_err(|_| Error::InvalidDescriptor(format!("bad finite-index level `{p}`")))
                } else {
                    Err(Error::InvalidDescriptor(format!("unknown level `{p}`; use N or F<index>")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(levels)
    }
}

fn step(prev: WordExpr, level: Level, partner: &str) -> WordExpr {
    match level.factorial_exponent() {
        None => WordExpr::commutator(prev, WordExpr::var(partner)),
        Some(k) => prev.pow(k),
    }
}

/// `w_0 = x`; `w_n = [w_(n-1), y]` on normal levels (and for `n > r`),
/// `w_n = w_(n-1)^(ℓ_n!)` on finite-index levels.
pub fn build_w(n: usize, desc: &SeriesShapeDescriptor) -> WordExpr {
    (1..=n).fold(WordExpr::var("x"), |acc, i| step(acc, desc.level(i), "y"))
}

/// `φ_0 = h`; `φ_n = [φ_(n-1), g]` on normal levels, `φ_(n-1)^(ℓ_n!)` otherwise.
///
/// This is the word satisfying `u_n = (1+g)·φ_n·(1+g)^-1`: expanding
/// `[u_(n-1), g]` gives `(1+g)·φ_(n-1)·g·φ_(n-1)^-1·(1+g)^-1·g^-1`, and the
/// trailing `g^-1` moves inside because it commutes with `(1+g)^-1`.
pub fn phi_n(n: usize, desc: &SeriesShapeDescriptor) -> WordExpr {
    (1..=n).fold(WordExpr::var("h"), |acc, i| step(acc, desc.level(i), "g"))
}

/// The normal-level recursion `φ_n = φ_(n-1)·g·φ_(n-1)^-1` without the
/// trailing `g^-1`. It does not satisfy the conjugation normal form for
/// `n >= 1` on a normal level; kept as a reference point for the checks.
pub fn phi_n_without_trailing_g(n: usize, desc: &SeriesShapeDescriptor) -> WordExpr {
    (1..=n).fold(WordExpr::var("h"), |acc, i| match desc.level(i).factorial_exponent() {
        None => WordExpr::product(vec![acc.clone(), WordExpr::var("g"), acc.inverse()]),
        Some(k) => acc.pow(k),
    })
}

/// `(u_n, v_n)` evaluated in the series ring with `(1+g)^-1` truncated at `depth` terms.
pub fn build_u_v(
    n: usize,
    desc: &SeriesShapeDescriptor,
    h: &Series,
    g: &Series,
    target: &SeriesTarget,
) -> Result<(ApproxSeries, ApproxSeries)> {
    if target.depth < 1 {
        return Err(Error::Config("truncation depth must be at least 1".into()));
    }
    let one_plus_g = Series::one().add(g);
    if one_plus_g.is_zero() {
        return Err(Error::ZeroInversion);
    }
    let twist = &target.twist;
    let opg = ApproxSeries::exact(one_plus_g.clone());
    let opg_inv = truncated_inverse(&one_plus_g, target.depth, twist)?;
    let h = ApproxSeries::exact(h.clone());
    let g = ApproxSeries::exact(g.clone());
    let x_u = opg.mul(&h, twist)?.mul(&opg_inv, twist)?;
    let x_v = opg_inv.mul(&h, twist)?.mul(&opg, twist)?;
    let w = build_w(n, desc);
    let u = eval_expr(&w, target, &Env::new().with_var("x", x_u).with_var("y", g.clone()))?;
    let v = eval_expr(&w, target, &Env::new().with_var("x", x_v).with_var("y", g))?;
    Ok((u, v))
}
