//! Words in `h`, `g` and `G1 = (1 + g)` subject only to `G1·g = g·G1`.
//!
//! The group presented this way is the free product `<h> * (<G1> × <g>)`, so
//! every element has a unique normal form: alternating nonzero blocks
//! `h^k` and `G1^a·g^b`, with the `G1` letters written to the left of the
//! `g` letters inside each commuting block.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PcLetter {
    H,
    G,
    G1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Block {
    H(i64),
    /// `G1^a · g^b`
    Commuting(i64, i64),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartiallyCommutativeWord {
    blocks: Vec<Block>,
}

impl PartiallyCommutativeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn letter(l: PcLetter, exponent: i64) -> Self {
        let mut w = Self::identity();
        w.push(match l {
            PcLetter::H => Block::H(exponent),
            PcLetter::G => Block::Commuting(0, exponent),
            PcLetter::G1 => Block::Commuting(exponent, 0),
        });
        w
    }

    pub fn h() -> Self {
        Self::letter(PcLetter::H, 1)
    }

    pub fn g() -> Self {
        Self::letter(PcLetter::G, 1)
    }

    pub fn one_plus_g() -> Self {
        Self::letter(PcLetter::G1, 1)
    }

    pub fn from_letters<I: IntoIterator<Item = (PcLetter, i64)>>(letters: I) -> Self {
        letters
            .into_iter()
            .fold(Self::identity(), |acc, (l, e)| acc.multiply(&Self::letter(l, e)))
    }

    fn push(&mut self, b: Block) {
        let is_zero = |b: &Block| matches!(b, Block::H(0) | Block::Commuting(0, 0));
        if is_zero(&b) {
            return;
        }
        let merged = match (self.blocks.last(), b) {
            (Some(Block::H(k)), Block::H(j)) => Some(Block::H(k + j)),
            (Some(Block::Commuting(a, c)), Block::Commuting(a2, c2)) => Some(Block::Commuting(a + a2, c + c2)),
            _ => None,
        };
        match merged {
            Some(m) => {
                self.blocks.pop();
                if !is_zero(&m) {
                    self.blocks.push(m);
                }
            }
            None => self.blocks.push(b),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &b in &other.blocks {
            out.push(b);
        }
        out
    }

    pub fn invert(&self) -> Self {
        Self {
            blocks: self
                .blocks
                .iter()
                .rev()
                .map(|b| match *b {
                    Block::H(k) => Block::H(-k),
                    Block::Commuting(a, c) => Block::Commuting(-a, -c),
                })
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn conjugate_by(&self, c: &Self) -> Self {
        c.multiply(self).multiply(&c.invert())
    }

    /// Normal form as a letter sequence.
    pub fn letters(&self) -> Vec<(PcLetter, i64)> {
        let mut out = Vec::new();
        for b in &self.blocks {
            match *b {
                Block::H(k) => out.push((PcLetter::H, k)),
                Block::Commuting(a, c) => {
                    if a != 0 {
                        out.push((PcLetter::G1, a));
                    }
                    if c != 0 {
                        out.push((PcLetter::G, c));
                    }
                }
            }
        }
        out
    }

    /// Number of letters counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.letters().iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// True iff no `G1` letter occurs, i.e. the element lies in `<h, g>`.
    pub fn is_in_h_g_subgroup(&self) -> bool {
        self.blocks.iter().all(|b| !matches!(b, Block::Commuting(a, _) if *a != 0))
    }
}

impl fmt::Display for PartiallyCommutativeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = letters
            .iter()
            .map(|(l, e)| {
                let name = match l {
                    PcLetter::H => "h",
                    PcLetter::G => "g",
                    PcLetter::G1 => "G1",
                };
                if *e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}
