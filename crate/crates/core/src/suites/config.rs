use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::TwistMap;
use crate::free_group::ReducedWord;
use crate::identities::SeriesShapeDescriptor;
use crate::parse::parse_word;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct SampleCounts {
    pub order: usize,
    pub ring: usize,
    pub d_hom: usize,
    pub inverse: usize,
    pub lemma4: usize,
    pub lemma5: usize,
    pub identities: usize,
    pub demo: usize,
}

impl Default for SampleCounts {
    fn default() -> Self {
        Self { order: 1000, ring: 300, d_hom: 1000, inverse: 200, lemma4: 500, lemma5: 20, identities: 200, demo: 200 }
    }
}

impl SampleCounts {
    pub fn uniform(n: usize) -> Self {
        Self { order: n, ring: n, d_hom: n, inverse: n, lemma4: n, lemma5: n, identities: n, demo: n }
    }
}

/// Everything a suite or the demo needs; equal configs give equal reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub depth: usize,
    pub weights: TwistMap,
    pub samples: SampleCounts,
    pub descriptor: SeriesShapeDescriptor,
    /// The word the maximal subgroup must contain.
    pub x: ReducedWord,
    /// Recursion depth `n` for the truncated normal-form check.
    pub lemma5_n: usize,
    /// Longest descriptor and largest `n` for the exhaustive symbolic check.
    pub symbolic_max: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            depth: 4,
            weights: TwistMap::new([(1, 1), (2, -2)]),
            samples: SampleCounts::default(),
            descriptor: "F3".parse().expect("valid default descriptor"),
            x: ReducedWord::generator(1),
            lemma5_n: 2,
            symbolic_max: 4,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct RawConfig {
    seed: Option<u64>,
    depth: Option<usize>,
    weights: Option<BTreeMap<String, i64>>,
    samples: Option<SampleCounts>,
    descriptor: Option<String>,
    x: Option<String>,
    lemma5_n: Option<usize>,
    symbolic_max: Option<usize>,
}

/// Rewrites `{1: 1, 2: -2}` inline maps into TOML's `{1 = 1, 2 = -2}`.
fn normalize_inline_maps(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut depth = 0usize;
    let mut in_string = false;
    for ch in text.chars() {
        match ch {
            '"' => in_string = !in_string,
            '{' if !in_string => depth += 1,
            '}' if !in_string => depth = depth.saturating_sub(1),
            ':' if depth > 0 && !in_string => {
                out.push_str(" =");
                continue;
            }
            _ => {}
        }
        out.push(ch);
    }
    out
}

/// Parses `"1:1,2:-2"` or `"1=1, 2=-2"`.
pub fn parse_weights(text: &str) -> Result<TwistMap> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut pairs = Vec::new();
    for part in t.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once([':', '='])
            .ok_or_else(|| Error::Config(format!("weight `{part}` must look like `index:shift`")))?;
        let k: u32 = k.trim().trim_start_matches('x').parse().map_err(|_| Error::Config(format!("bad generator index in `{part}`")))?;
        let v: i64 = v.trim().parse().map_err(|_| Error::Config(format!("bad shift in `{part}`")))?;
        if k == 0 {
            return Err(Error::Config("generator indices start at 1".into()));
        }
        pairs.push((k, v));
    }
    Ok(TwistMap::new(pairs))
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawConfig =
            toml::from_str(&normalize_inline_maps(text)).map_err(|e| Error::Config(e.message().to_string()))?;
        let mut cfg = Self::default();
        if let Some(s) = raw.seed {
            cfg.seed = s;
        }
        if let Some(d) = raw.depth {
            cfg.depth = d;
        }
        if let Some(w) = raw.weights {
            let mut pairs = Vec::new();
            for (k, v) in w {
                let k: u32 = k.parse().map_err(|_| Error::Config(format!("bad generator index `{k}`")))?;
                if k == 0 {
                    return Err(Error::Config("generator indices start at 1".into()));
                }
                pairs.push((k, v));
            }
            cfg.weights = TwistMap::new(pairs);
        }
        if let Some(s) = raw.samples {
            cfg.samples = s;
        }
        if let Some(d) = raw.descriptor {
            cfg.descriptor = d.parse()?;
        }
        if let Some(x) = raw.x {
            cfg.x = parse_word(&x)?;
        }
        if let Some(n) = raw.lemma5_n {
            cfg.lemma5_n = n;
        }
        if let Some(m) = raw.symbolic_max {
            cfg.symbolic_max = m;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.depth == 0 {
            return Err(Error::Config("depth must be at least 1".into()));
        }
        Ok(())
    }
}
