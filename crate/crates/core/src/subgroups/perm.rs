use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, 2, 3}`. Composition is right to left:
/// `(p ∘ q)(i) = p(q(i))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: [u8; 3],
}

impl Permutation {
    pub const IDENTITY: Self = Self { images: [1, 2, 3] };
    /// `(1 2)`
    pub const TRANSPOSITION_12: Self = Self { images: [2, 1, 3] };
    /// `(1 3)`
    pub const TRANSPOSITION_13: Self = Self { images: [3, 2, 1] };
    /// `(2 3)`
    pub const TRANSPOSITION_23: Self = Self { images: [1, 3, 2] };
    /// `(1 2 3)`
    pub const CYCLE_123: Self = Self { images: [2, 3, 1] };
    /// `(1 3 2)`
    pub const CYCLE_132: Self = Self { images: [3, 1, 2] };

    pub fn from_images(images: [u8; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &i in &images {
            if !(1..=3).contains(&i) || seen[(i - 1) as usize] {
                return Err(Error::Config(format!("{images:?} is not a permutation of 1..3")));
            }
            seen[(i - 1) as usize] = true;
        }
        Ok(Self { images })
    }

    pub fn images(&self) -> [u8; 3] {
        self.images
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.images[(i - 1) as usize]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: [1, 2, 3].map(|i| self.apply(other.apply(i))) }
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0; 3];
        for i in 1..=3u8 {
            images[(self.apply(i) - 1) as usize] = i;
        }
        Self { images }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { *self };
        (0..k.unsigned_abs() % 6).fold(Self::IDENTITY, |acc, _| acc.compose(&base))
    }

    pub fn conjugate_by(&self, c: &Self) -> Self {
        c.compose(self).compose(&c.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn order(&self) -> u32 {
        (1..=6u32).find(|&k| self.pow(k as i64).is_identity()).unwrap()
    }

    /// All six elements of `S3`.
    pub fn all() -> [Self; 6] {
        [
            Self::IDENTITY,
            Self::TRANSPOSITION_12,
            Self::TRANSPOSITION_13,
            Self::TRANSPOSITION_23,
            Self::CYCLE_123,
            Self::CYCLE_132,
        ]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("Id");
        }
        let mut seen = [false; 3];
        for start in 1..=3u8 {
            if seen[(start - 1) as usize] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[(start - 1) as usize] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[(i - 1) as usize] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            let parts: Vec<String> = cycle.iter().map(u8::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// `Id`, `()` or a product of cycles such as `(1 2)(1 2 3)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("id") || t == "()" {
            return Ok(Self::IDENTITY);
        }
        let mut result = Self::IDENTITY;
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| Error::parse(t.len() - rest.len(), "expected `(`"))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::parse(t.len() - rest.len(), "unexpected text between cycles"));
            }
            let close = rest.find(')').ok_or_else(|| Error::parse(t.len(), "unclosed cycle"))?;
            let body = &rest[open + 1..close];
            let points: Vec<u8> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(t.len() - rest.len() + open, "cycle entries must be 1, 2 or 3"))?;
            let distinct: BTreeSet<u8> = points.iter().copied().collect();
            if distinct.len() != points.len() {
                return Err(Error::parse(t.len() - rest.len() + open, "repeated point in cycle"));
            }
            let mut images = [1, 2, 3];
            for (k, &p) in points.iter().enumerate() {
                if !(1..=3).contains(&p) {
                    return Err(Error::parse(t.len() - rest.len() + open, "cycle entries must be 1, 2 or 3"));
                }
                images[(p - 1) as usize] = points[(k + 1) % points.len()];
            }
            let cycle = Self::from_images(images)
                .map_err(|_| Error::parse(t.len() - rest.len() + open, "repeated point in cycle"))?;
            result = result.compose(&cycle);
            rest = rest[close + 1..].trim_start();
        }
        Ok(result)
    }
}

pub type PermSet = BTreeSet<Permutation>;

pub fn is_subgroup(s: &PermSet) -> bool {
    s.contains(&Permutation::IDENTITY) && s.iter().all(|a| s.iter().all(|b| s.contains(&a.compose(b))))
}

pub fn subgroup_generated_by(gens: &[Permutation]) -> PermSet {
    let mut set: PermSet = [Permutation::IDENTITY].into_iter().collect();
    loop {
        let next: PermSet = set
            .iter()
            .flat_map(|a| gens.iter().map(move |g| a.compose(g)))
            .chain(set.iter().copied())
            .collect();
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// Largest normal subgroup of `S3` contained in `s`: the intersection of all conjugates.
pub fn core_in_s3(s: &PermSet) -> Result<PermSet> {
    if !is_subgroup(s) {
        let listed: Vec<String> = s.iter().map(ToString::to_string).collect();
        return Err(Error::NotASubgroup(format!("{{{}}}", listed.join(", "))));
    }
    Ok(Permutation::all().iter().fold(s.clone(), |acc, c| {
        let conj: PermSet = s.iter().map(|p| p.conjugate_by(c)).collect();
        acc.intersection(&conj).copied().collect()
    }))
}
