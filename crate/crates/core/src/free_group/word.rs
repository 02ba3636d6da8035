use std::fmt;

/// Generator index of the free group. Indices are positive and may be sparse.
pub type Generator = u32;

/// A syllable `x_i^e` with `e != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: i64,
}

/// A freely reduced word in the generators `x_1, x_2, ...`.
///
/// Adjacent syllables always carry distinct generators and nonzero
/// exponents, so structural equality is equality in the free group.
///
/// The derived `Ord` is a structural order used only for deterministic
/// storage in maps. The group order lives in [`crate::free_group::order`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    syllables: Vec<Syllable>,
}

impl ReducedWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(i: Generator) -> Self {
        Self::generator_power(i, 1)
    }

    pub fn generator_power(i: Generator, exponent: i64) -> Self {
        assert!(i >= 1, "generator indices start at 1");
        let mut w = Self::identity();
        w.push(i, exponent);
        w
    }

    /// Builds the reduced form of an arbitrary sequence of `(generator, exponent)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (Generator, i64)>>(pairs: I) -> Self {
        let mut w = Self::identity();
        for (g, e) in pairs {
            assert!(g >= 1, "generator indices start at 1");
            w.push(g, e);
        }
        w
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Total number of letters, `sum |e|`.
    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|s| s.exponent.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Exponent sum of generator `i`, i.e. the image in the abelianization.
    pub fn exponent_sum(&self, i: Generator) -> i64 {
        self.syllables
            .iter()
            .filter(|s| s.generator == i)
            .map(|s| s.exponent)
            .sum()
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.syllables.iter().map(|s| s.generator)
    }

    fn push(&mut self, generator: Generator, exponent: i64) {
        if exponent == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.generator == generator => {
                last.exponent += exponent;
                if last.exponent == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable { generator, exponent }),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.generator, s.exponent);
        }
        out
    }

    pub fn invert(&self) -> Self {
        Self {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable { generator: s.generator, exponent: -s.exponent })
                .collect(),
        }
    }

    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut result = Self::identity();
        let mut square = base;
        let mut k = k.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.multiply(&square);
            }
            k >>= 1;
            if k > 0 {
                square = square.multiply(&square);
            }
        }
        result
    }

    pub fn conjugate_by(&self, c: &Self) -> Self {
        c.multiply(self).multiply(&c.invert())
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.multiply(b).multiply(&a.invert()).multiply(&b.invert())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if s.exponent == 1 {
                write!(f, "x{}", s.generator)?;
            } else {
                write!(f, "x{}^{}", s.generator, s.exponent)?;
            }
        }
        Ok(())
    }
}
