use std::collections::BTreeMap;

use super::expr::{generator_index, WordExpr};
use super::pcword::PartiallyCommutativeWord;
use crate::error::{Error, Result};
use crate::field::TwistMap;
use crate::free_group::{Generator, ReducedWord};
use crate::series::{ApproxSeries, Series};
use crate::subgroups::{GroupHomToS3, Permutation};

/// A group in which word expressions can be evaluated.
pub trait EvalTarget {
    type Value: Clone;

    fn identity(&self) -> Self::Value;

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;

    fn invert(&self, a: &Self::Value) -> Result<Self::Value>;

    /// Whether `a` is the identity (for series: at the current truncation).
    fn is_identity(&self, a: &Self::Value) -> Result<bool>;

    fn render(&self, a: &Self::Value) -> String;

    /// Default meaning of the generator literal `x_i`, if the target has one.
    fn generator(&self, _i: Generator) -> Option<Self::Value> {
        None
    }

    fn pow(&self, a: &Self::Value, k: i64) -> Result<Self::Value> {
        let base = if k < 0 { self.invert(a)? } else { a.clone() };
        let mut result = self.identity();
        let mut square = base;
        let mut k = k.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(&result, &square)?;
            }
            k >>= 1;
            if k > 0 {
                square = self.mul(&square, &square)?;
            }
        }
        Ok(result)
    }
}

/// Values for variables (`?x`) and named constants.
#[derive(Clone, Debug)]
pub struct Env<V> {
    pub vars: BTreeMap<String, V>,
    pub consts: BTreeMap<String, V>,
}

impl<V> Default for Env<V> {
    fn default() -> Self {
        Self { vars: BTreeMap::new(), consts: BTreeMap::new() }
    }
}

impl<V: Clone> Env<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_var(mut self, name: &str, v: V) -> Self {
        self.vars.insert(name.to_string(), v);
        self
    }

    pub fn with_const(mut self, name: &str, v: V) -> Self {
        self.consts.insert(name.to_string(), v);
        self
    }

    /// Pushes every binding through a homomorphism.
    pub fn map<W: Clone>(&self, f: impl Fn(&V) -> W) -> Env<W> {
        Env {
            vars: self.vars.iter().map(|(k, v)| (k.clone(), f(v))).collect(),
            consts: self.consts.iter().map(|(k, v)| (k.clone(), f(v))).collect(),
        }
    }
}

pub fn eval_expr<T: EvalTarget>(e: &WordExpr, target: &T, env: &Env<T::Value>) -> Result<T::Value> {
    match e {
        WordExpr::Var(v) => env.vars.get(v).cloned().ok_or_else(|| Error::Unbound(format!("?{v}"))),
        WordExpr::Const(c) => {
            if let Some(v) = env.consts.get(c) {
                return Ok(v.clone());
            }
            generator_index(c)
                .and_then(|i| target.generator(i))
                .ok_or_else(|| Error::Unbound(c.clone()))
        }
        WordExpr::Product(fs) => {
            let mut acc = target.identity();
            for f in fs {
                acc = target.mul(&acc, &eval_expr(f, target, env)?)?;
            }
            Ok(acc)
        }
        WordExpr::Inverse(a) => target.invert(&eval_expr(a, target, env)?),
        WordExpr::Power(a, k) => target.pow(&eval_expr(a, target, env)?, *k),
        WordExpr::Commutator(a, b) => {
            let a = eval_expr(a, target, env)?;
            let b = eval_expr(b, target, env)?;
            let ab = target.mul(&a, &b)?;
            let ai = target.invert(&a)?;
            let bi = target.invert(&b)?;
            target.mul(&target.mul(&ab, &ai)?, &bi)
        }
    }
}

/// The free group `G`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeGroupTarget;

impl EvalTarget for FreeGroupTarget {
    type Value = ReducedWord;

    fn identity(&self) -> ReducedWord {
        ReducedWord::identity()
    }

    fn mul(&self, a: &ReducedWord, b: &ReducedWord) -> Result<ReducedWord> {
        Ok(a.multiply(b))
    }

    fn invert(&self, a: &ReducedWord) -> Result<ReducedWord> {
        Ok(a.invert())
    }

    fn is_identity(&self, a: &ReducedWord) -> Result<bool> {
        Ok(a.is_identity())
    }

    fn render(&self, a: &ReducedWord) -> String {
        a.to_string()
    }

    fn generator(&self, i: Generator) -> Option<ReducedWord> {
        Some(ReducedWord::generator(i))
    }

    fn pow(&self, a: &ReducedWord, k: i64) -> Result<ReducedWord> {
        Ok(a.power(k))
    }
}

/// `S3`; generator literals are read through `φ` when one is attached.
#[derive(Clone, Copy, Debug, Default)]
pub struct S3Target {
    pub phi: Option<GroupHomToS3>,
}

impl EvalTarget for S3Target {
    type Value = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::IDENTITY
    }

    fn mul(&self, a: &Permutation, b: &Permutation) -> Result<Permutation> {
        Ok(a.compose(b))
    }

    fn invert(&self, a: &Permutation) -> Result<Permutation> {
        Ok(a.inverse())
    }

    fn is_identity(&self, a: &Permutation) -> Result<bool> {
        Ok(a.is_identity())
    }

    fn render(&self, a: &Permutation) -> String {
        a.to_string()
    }

    fn generator(&self, i: Generator) -> Option<Permutation> {
        self.phi.map(|phi| phi.image_of_generator(i))
    }

    fn pow(&self, a: &Permutation, k: i64) -> Result<Permutation> {
        Ok(a.pow(k))
    }
}

/// The partially commutative group on `h, g, G1`.
#[derive(Clone, Copy, Debug, Default)]
pub struct PcTarget;

impl EvalTarget for PcTarget {
    type Value = PartiallyCommutativeWord;

    fn identity(&self) -> PartiallyCommutativeWord {
        PartiallyCommutativeWord::identity()
    }

    fn mul(&self, a: &PartiallyCommutativeWord, b: &PartiallyCommutativeWord) -> Result<PartiallyCommutativeWord> {
        Ok(a.multiply(b))
    }

    fn invert(&self, a: &PartiallyCommutativeWord) -> Result<PartiallyCommutativeWord> {
        Ok(a.invert())
    }

    fn is_identity(&self, a: &PartiallyCommutativeWord) -> Result<bool> {
        Ok(a.is_identity())
    }

    fn render(&self, a: &PartiallyCommutativeWord) -> String {
        a.to_string()
    }
}

/// Units of the series ring, with inverses truncated at `depth` terms.
#[derive(Clone, Debug)]
pub struct SeriesTarget {
    pub twist: TwistMap,
    pub depth: usize,
}

impl EvalTarget for SeriesTarget {
    type Value = ApproxSeries;

    fn identity(&self) -> ApproxSeries {
        ApproxSeries::one()
    }

    fn mul(&self, a: &ApproxSeries, b: &ApproxSeries) -> Result<ApproxSeries> {
        a.mul(b, &self.twist)
    }

    fn invert(&self, a: &ApproxSeries) -> Result<ApproxSeries> {
        a.inverse(self.depth, &self.twist)
    }

    fn is_identity(&self, a: &ApproxSeries) -> Result<bool> {
        a.is_one_at_truncation()
    }

    fn render(&self, a: &ApproxSeries) -> String {
        match a.guarantee() {
            Some(g) => format!("{} + O({g})", a.terms()),
            None => a.terms().to_string(),
        }
    }

    fn generator(&self, i: Generator) -> Option<ApproxSeries> {
        Some(ApproxSeries::exact(Series::word(ReducedWord::generator(i))))
    }
}
