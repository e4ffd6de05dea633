//! Finite incidence structures and `t`-design verification.
//!
//! A [`Design`] is kept in canonical form: every block is a strictly
//! increasing list of point indices and the family is sorted
//! lexicographically, so two designs are equal exactly when they have the
//! same points, blocks and labels.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, subsets_of, Budget, Combinations};
use crate::error::{CountWitness, Error, Result};
use crate::matrix::IntMatrix;

/// A family of equal-sized blocks over the points `0..v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Design {
    v: usize,
    k: usize,
    blocks: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Design {
    /// Builds a design with block size `k`, canonicalizing block order.
    ///
    /// An empty family is accepted (it is the degenerate design) as long as
    /// `k <= v`.
    pub fn new(v: usize, k: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if k > v {
            return Err(Error::MalformedDesign(format!(
                "block size {k} exceeds point count {v}"
            )));
        }
        let mut canonical = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            block.sort_unstable();
            if block.len() != k {
                return Err(Error::MalformedDesign(format!(
                    "block {block:?} has size {}, expected {k}",
                    block.len()
                )));
            }
            if k == 0 {
                return Err(Error::MalformedDesign("blocks must be nonempty".into()));
            }
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedDesign(format!(
                    "block {block:?} repeats a point"
                )));
            }
            if let Some(&bad) = block.iter().find(|&&p| p >= v) {
                return Err(Error::MalformedDesign(format!(
                    "point {bad} out of range 0..{v}"
                )));
            }
            canonical.push(block);
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedDesign(format!(
                "duplicate block {:?}",
                w[0]
            )));
        }
        Ok(Design {
            v,
            k,
            blocks: canonical,
            labels: None,
        })
    }

    /// Builds a design, taking the block size from the first block.
    pub fn from_blocks(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let k = blocks.first().map_or(0, Vec::len);
        Self::new(v, k, blocks)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.v {
            return Err(Error::MalformedDesign(format!(
                "{} labels for {} points",
                labels.len(),
                self.v
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, point: usize) -> String {
        match &self.labels {
            Some(l) => l[point].clone(),
            None => point.to_string(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of blocks containing every point of `subset`.
    pub fn count_containing(&self, subset: &[usize]) -> usize {
        self.blocks
            .iter()
            .filter(|b| subset.iter().all(|p| b.binary_search(p).is_ok()))
            .count()
    }

    /// Blocks replaced by their complements in the point set.
    pub fn complement(&self) -> Result<Design> {
        if self.k >= self.v {
            return Err(Error::MalformedDesign(format!(
                "complement needs k < v (k = {}, v = {})",
                self.k, self.v
            )));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| (0..self.v).filter(|p| b.binary_search(p).is_err()).collect())
            .collect();
        let mut d = Design::new(self.v, self.v - self.k, blocks)?;
        d.labels = self.labels.clone();
        Ok(d)
    }

    /// The `k`-subsets that are not blocks.
    pub fn supplement(&self) -> Result<Design> {
        self.supplement_within(Budget::default())
    }

    pub fn supplement_within(&self, budget: Budget) -> Result<Design> {
        budget.check(&binomial(self.v as u64, self.k as u64))?;
        let present: HashSet<&[usize]> = self.blocks.iter().map(Vec::as_slice).collect();
        let blocks: Vec<Vec<usize>> = Combinations::new(self.v, self.k)
            .filter(|s| !present.contains(s.as_slice()))
            .collect();
        if blocks.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let mut d = Design::new(self.v, self.k, blocks)?;
        d.labels = self.labels.clone();
        Ok(d)
    }

    /// Blocks through `point`, with `point` removed and the rest reindexed.
    pub fn derived(&self, point: usize) -> Result<Design> {
        if point >= self.v {
            return Err(Error::MalformedDesign(format!(
                "point {point} out of range 0..{}",
                self.v
            )));
        }
        let shift = |p: usize| if p > point { p - 1 } else { p };
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .filter(|b| b.binary_search(&point).is_ok())
            .map(|b| b.iter().filter(|&&p| p != point).map(|&p| shift(p)).collect())
            .collect();
        if blocks.is_empty() {
            return Err(Error::IsolatedPoint(point));
        }
        let mut d = Design::new(self.v - 1, self.k - 1, blocks)?;
        d.labels = self.labels.as_ref().map(|l| {
            l.iter()
                .enumerate()
                .filter(|&(i, _)| i != point)
                .map(|(_, s)| s.clone())
                .collect()
        });
        Ok(d)
    }

    /// The `b × v` incidence matrix, one row per block.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.blocks.len(), self.v);
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                m.set(j, p, BigInt::from(1));
            }
        }
        m
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DesignJson::from(self)).expect("design JSON serialization")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&DesignJson::from(self)).expect("design JSON serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: DesignJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

/// Wire form: `{"version":1,"v":..,"blocks":[[..],..],"labels":[..]?}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct DesignJson {
    pub version: u32,
    pub v: usize,
    pub blocks: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Design> for DesignJson {
    fn from(d: &Design) -> Self {
        DesignJson {
            version: 1,
            v: d.v,
            blocks: d.blocks.clone(),
            labels: d.labels.clone(),
        }
    }
}

impl TryFrom<DesignJson> for Design {
    type Error = Error;

    fn try_from(raw: DesignJson) -> Result<Self> {
        if raw.version != 1 {
            return Err(Error::MalformedDesign(format!(
                "unsupported version {}",
                raw.version
            )));
        }
        let d = Design::from_blocks(raw.v, raw.blocks)?;
        match raw.labels {
            Some(labels) => d.with_labels(labels),
            None => Ok(d),
        }
    }
}

/// Parameters of a verified `t-(v, k, r_t)` design.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub r_t: u64,
    pub b: u64,
    pub r: u64,
    /// `r_2`; absent for 1-designs.
    pub lambda: Option<u64>,
}

impl DesignParams {
    pub fn is_symmetric(&self) -> bool {
        self.t >= 2 && self.v as u64 == self.b
    }
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-({},{},{}), b={}, r={}",
            self.t, self.v, self.k, self.r_t, self.b, self.r
        )?;
        if let Some(l) = self.lambda {
            write!(f, ", lambda={l}")?;
        }
        Ok(())
    }
}

/// How many blocks contain each `s`-subset that occurs at all.
fn subset_counts(design: &Design, s: usize) -> HashMap<Vec<usize>, u64> {
    let mut counts = HashMap::new();
    for block in &design.blocks {
        for sub in subsets_of(block, s) {
            *counts.entry(sub).or_insert(0) += 1;
        }
    }
    counts
}

/// Checks that every `s`-subset lies in the same number of blocks and returns it.
fn uniform_count(design: &Design, s: usize) -> Result<u64> {
    let counts = subset_counts(design, s);
    let total = binomial(design.v as u64, s as u64);
    let mut iter = counts.iter();
    let (first, &first_count) = iter.next().ok_or(Error::EmptyFamily)?;
    if let Some((other, &c)) = iter.find(|&(_, &c)| c != first_count) {
        return Err(Error::NotADesign(CountWitness {
            first: first.clone(),
            first_count,
            second: other.clone(),
            second_count: c,
        }));
    }
    if BigUint::from(counts.len()) != total {
        let missing = Combinations::new(design.v, s)
            .find(|sub| !counts.contains_key(sub))
            .expect("some s-subset is uncovered");
        return Err(Error::NotADesign(CountWitness {
            first: first.clone(),
            first_count,
            second: missing,
            second_count: 0,
        }));
    }
    Ok(first_count)
}

/// Verifies that `design` is a `t`-design and returns its parameters.
///
/// Each `r_s` for `s < t` is both derived from `r_t` and counted directly;
/// the two must agree.
pub fn verify_design(design: &Design, t: usize) -> Result<DesignParams> {
    if design.blocks.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if t == 0 || t > design.k {
        return Err(Error::InvalidStrength { t, k: design.k });
    }
    let r_t = uniform_count(design, t)?;
    let mut params = DesignParams {
        t,
        v: design.v,
        k: design.k,
        r_t,
        b: design.blocks.len() as u64,
        r: r_t,
        lambda: (t == 2).then_some(r_t),
    };
    for s in 0..t {
        let derived = level_parameters(&params, s)?;
        let counted = uniform_count(design, s)?;
        if derived != counted {
            return Err(Error::audit(
                format!("r_{s}"),
                format!("formula gives {derived}, direct count gives {counted}"),
            ));
        }
        match s {
            0 => params.b = counted,
            1 => params.r = counted,
            2 => params.lambda = Some(counted),
            _ => {}
        }
    }
    if params.r * params.v as u64 != params.b * params.k as u64 {
        return Err(Error::audit(
            "v·r = b·k",
            format!("{}·{} != {}·{}", params.v, params.r, params.b, params.k),
        ));
    }
    Ok(params)
}

/// `r_s = r_t · (v−s)···(v−t+1) / ((k−s)···(k−t+1))` for `s < t`.
pub fn level_parameters(params: &DesignParams, s: usize) -> Result<u64> {
    if s >= params.t {
        return Err(Error::InvalidStrength {
            t: s,
            k: params.k,
        });
    }
    let mut num = BigUint::from(params.r_t);
    let mut den = BigUint::from(1u32);
    for i in s..params.t {
        num *= (params.v - i) as u64;
        den *= (params.k - i) as u64;
    }
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::NonIntegral {
            s,
            numerator: num,
            denominator: den,
        });
    }
    q.to_u64().ok_or(Error::NonIntegral {
        s,
        numerator: num,
        denominator: den,
    })
}

/// Outcome of checking `AᵀA = (r−λ)I + λJ` and `det AᵀA = r·k·(r−λ)^(v−1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramReport {
    pub gram: IntMatrix,
    pub determinant: BigInt,
    pub expected_determinant: BigInt,
    /// Whether `AAᵀ = AᵀA` was also checked (symmetric designs only).
    pub symmetric_checked: bool,
}

pub fn gram_audit(design: &Design, params: &DesignParams) -> Result<GramReport> {
    let lambda = params.lambda.ok_or(Error::InvalidStrength {
        t: params.t,
        k: params.k,
    })?;
    let a = design.incidence_matrix();
    let at = a.transpose();
    let gram = &at * &a;
    let (r, l) = (BigInt::from(params.r), BigInt::from(lambda));
    for i in 0..design.v {
        for j in 0..design.v {
            let expected = if i == j { &r } else { &l };
            if gram.get(i, j) != expected {
                return Err(Error::audit(
                    "AᵀA = (r−λ)I + λJ",
                    format!("entry ({i},{j}) is {}, expected {expected}", gram.get(i, j)),
                ));
            }
        }
    }
    let determinant = gram.determinant()?;
    let expected_determinant =
        &r * BigInt::from(params.k) * num_traits::pow(&r - &l, design.v - 1);
    if determinant != expected_determinant {
        return Err(Error::audit(
            "det AᵀA = r·k·(r−λ)^(v−1)",
            format!("determinant {determinant}, expected {expected_determinant}"),
        ));
    }
    let symmetric_checked = params.is_symmetric();
    if symmetric_checked {
        let aat = &a * &at;
        if aat != gram {
            return Err(Error::audit("AAᵀ = AᵀA", "products differ"));
        }
    }
    Ok(GramReport {
        gram,
        determinant,
        expected_determinant,
        symmetric_checked,
    })
}
