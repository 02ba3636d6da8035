//! Element certificates for the iterated normal closures
//! `G = <x>_0 ⊵ <x>_1 ⊵ ...`, where `<x>_n` is the normal closure of `x` in `<x>_(n-1)`.
//!
//! Membership in `<x>_n` is not decided for arbitrary words; instead an element
//! is produced together with a tree that proves it lies in `<x>_n`.

use crate::error::{Error, Result};
use crate::free_group::ReducedWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureNode {
    /// The fixed word `x`; lies in every `<x>_n`.
    Base,
    /// An arbitrary element of `G = <x>_0`.
    Word(ReducedWord),
    /// `c·e·c^-1` with `c ∈ <x>_(n-1)` and `e ∈ <x>_n`.
    Conj { conjugator: Box<ClosureExpression>, core: Box<ClosureExpression> },
    Product(Vec<ClosureExpression>),
    Inverse(Box<ClosureExpression>),
}

/// A certificate claiming membership in `<x>_level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureExpression {
    pub level: usize,
    pub node: ClosureNode,
}

impl ClosureExpression {
    pub fn base(level: usize) -> Self {
        Self { level, node: ClosureNode::Base }
    }

    pub fn word(w: ReducedWord) -> Self {
        Self { level: 0, node: ClosureNode::Word(w) }
    }

    pub fn conj(level: usize, conjugator: ClosureExpression, core: ClosureExpression) -> Self {
        Self {
            level,
            node: ClosureNode::Conj { conjugator: Box::new(conjugator), core: Box::new(core) },
        }
    }

    pub fn product(level: usize, factors: Vec<ClosureExpression>) -> Self {
        Self { level, node: ClosureNode::Product(factors) }
    }

    pub fn inverse(self) -> Self {
        Self { level: self.level, node: ClosureNode::Inverse(Box::new(self)) }
    }

    /// Checks the level discipline of the whole tree.
    pub fn validate(&self) -> Result<()> {
        let n = self.level;
        match &self.node {
            ClosureNode::Base => Ok(()),
            ClosureNode::Word(w) if n > 0 => Err(Error::MalformedCertificate(format!(
                "bare word {w} claimed at level {n}; only level 0 admits arbitrary words"
            ))),
            ClosureNode::Word(_) => Ok(()),
            ClosureNode::Conj { conjugator, core } => {
                if conjugator.level + 1 < n {
                    return Err(Error::MalformedCertificate(format!(
                        "conjugator at level {} cannot witness level {n}",
                        conjugator.level
                    )));
                }
                if core.level < n {
                    return Err(Error::MalformedCertificate(format!(
                        "conjugated element at level {} cannot witness level {n}",
                        core.level
                    )));
                }
                conjugator.validate()?;
                core.validate()
            }
            ClosureNode::Product(fs) => fs.iter().try_for_each(|f| self.child(f)),
            ClosureNode::Inverse(a) => self.child(a),
        }
    }

    fn child(&self, c: &ClosureExpression) -> Result<()> {
        if c.level < self.level {
            return Err(Error::MalformedCertificate(format!(
                "factor at level {} inside a level-{} node",
                c.level, self.level
            )));
        }
        c.validate()
    }

    /// Evaluates the certificate with `x` substituted; the result lies in `<x>_level`.
    pub fn eval(&self, x: &ReducedWord) -> Result<ReducedWord> {
        self.validate()?;
        Ok(self.eval_unchecked(x))
    }

    fn eval_unchecked(&self, x: &ReducedWord) -> ReducedWord {
        match &self.node {
            ClosureNode::Base => x.clone(),
            ClosureNode::Word(w) => w.clone(),
            ClosureNode::Conj { conjugator, core } => {
                core.eval_unchecked(x).conjugate_by(&conjugator.eval_unchecked(x))
            }
            ClosureNode::Product(fs) => fs
                .iter()
                .fold(ReducedWord::identity(), |acc, f| acc.multiply(&f.eval_unchecked(x))),
            ClosureNode::Inverse(a) => a.eval_unchecked(x).invert(),
        }
    }
}

/// `closure_eval`: evaluates a certificate for the word `x`.
pub fn closure_eval(e: &ClosureExpression, x: &ReducedWord) -> Result<ReducedWord> {
    e.eval(x)
}
