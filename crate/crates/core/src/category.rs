//! Partitions, dimension profiles and bounds on the stable systolic category.
//!
//! A profile is a symbolic manifold: dimension, rational Betti numbers and what is known
//! about its cup-product structure. Bounds are assembled from independent rules, each
//! recorded with the value it contributed, so a verdict always shows where it came from.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cohomology::CohomologyRing;
use crate::complex::{CellKind, WeightedCellComplex};
use crate::error::{Error, Result};
use crate::homology::homology;

/// Non-decreasing tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable();
        Ok(Self { parts })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']')
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::InvalidPartition(format!("bad part `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer this partitions.
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn size(&self) -> usize {
        self.parts.len()
    }

    /// Multiplicity of `p` among the parts.
    pub fn duplicated_number(&self, p: u32) -> usize {
        self.parts.iter().filter(|&&x| x == p).count()
    }

    /// Whether the parts can be obtained by summing disjoint groups of `pieces`.
    pub fn is_coarsening_of(&self, pieces: &[u32]) -> bool {
        fn assign(parts: &[u32], remaining: &mut [u32], pieces: &[u32], i: usize) -> bool {
            if i == pieces.len() {
                return remaining.iter().all(|&r| r == 0);
            }
            let mut tried = BTreeSet::new();
            for j in 0..remaining.len() {
                // identical remaining capacity on an identical part is a symmetric branch
                if remaining[j] >= pieces[i] && tried.insert((parts[j], remaining[j])) {
                    remaining[j] -= pieces[i];
                    if assign(parts, remaining, pieces, i + 1) {
                        return true;
                    }
                    remaining[j] += pieces[i];
                }
            }
            false
        }
        if pieces.iter().sum::<u32>() != self.total() {
            return false;
        }
        let mut pieces = pieces.to_vec();
        pieces.sort_unstable_by(|a, b| b.cmp(a));
        let mut remaining = self.parts.clone();
        assign(&self.parts, &mut remaining, &pieces, 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n` with parts in `admissible`, longest first, then lexicographic.
pub fn enumerate_partitions(n: u32, admissible: &BTreeSet<u32>) -> Vec<Partition> {
    fn go(rest: u32, min: u32, degrees: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for &d in degrees.iter().filter(|&&d| d >= min && d <= rest) {
            cur.push(d);
            go(rest - d, d, degrees, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let degrees: Vec<u32> = admissible.iter().copied().filter(|&d| d >= 1).collect();
    let mut out = Vec::new();
    go(n, 1, &degrees, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out.into_iter().map(|parts| Partition { parts }).collect()
}

/// `MOD(m, lpd_m) + MOD(n, lpd_n) < max(lpd_m, lpd_n)`.
pub fn mod_condition(m: u32, lpd_m: u32, n: u32, lpd_n: u32) -> bool {
    assert!(lpd_m >= 1 && lpd_n >= 1, "least positive dimensions are at least 1");
    m % lpd_m + n % lpd_n < lpd_m.max(lpd_n)
}

/// Growth exponent with which a partition's systole-to-volume ratio blows up on a
/// product of homology spheres of the given dimensions.
///
/// Parts and sphere dimensions are grouped by value `r_1 < ... < r_l` with
/// multiplicities `s'_i` (partition) and `s_i` (spheres). At the first value where they
/// differ, an excess `s'_p > s_p` yields `w = sum_{i <= p} r_i (s'_i - s_i) > 0` when the
/// first `p` groups are scaled by `t`. Returns `None` when there is no excess or a part
/// is not a sphere dimension.
pub fn sphere_product_exponent(sphere_dims: &[u32], partition: &Partition) -> Option<u64> {
    let mut ranges: BTreeMap<u32, (i64, i64)> = BTreeMap::new();
    for &d in sphere_dims {
        ranges.entry(d).or_default().0 += 1;
    }
    for &p in partition.parts() {
        ranges.get_mut(&p)?.1 += 1;
    }
    let mut w: i64 = 0;
    for (&r, &(s, s_prime)) in &ranges {
        w += r as i64 * (s_prime - s);
        if s_prime != s {
            return (s_prime > s).then_some(w as u64);
        }
    }
    None
}

/// Symbolic description of a closed manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionProfile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: u32,
    /// Rational Betti numbers in degrees `0..=dim`.
    pub betti: Vec<u64>,
    #[serde(default = "yes")]
    pub orientable: bool,
    /// Has maximal real cup length; `None` when not determined.
    #[serde(default)]
    pub max_cup: Option<bool>,
    #[serde(default)]
    pub cup_length: Option<u32>,
    /// Degrees of classes with a nonzero top-degree product.
    #[serde(default)]
    pub cup_witness: Option<Vec<u32>>,
    #[serde(default)]
    pub homology_sphere: bool,
    /// Leaf factors of a product; empty for a prime profile.
    #[serde(default)]
    pub factors: Vec<DimensionProfile>,
}

fn yes() -> bool {
    true
}

impl DimensionProfile {
    /// A real homology sphere of dimension `m >= 1`.
    pub fn sphere(m: u32) -> Self {
        assert!(m >= 1);
        let mut betti = vec![0; m as usize + 1];
        betti[0] = 1;
        betti[m as usize] = 1;
        Self {
            name: Some(format!("S{m}")),
            dim: m,
            betti,
            orientable: true,
            max_cup: Some(true),
            cup_length: Some(1),
            cup_witness: Some(vec![m]),
            homology_sphere: true,
            factors: Vec::new(),
        }
    }

    /// A profile with only Betti data; cup-product facts left undetermined.
    pub fn from_betti(betti: Vec<u64>, orientable: bool) -> Result<Self> {
        if betti.is_empty() {
            return Err(Error::InvalidProfile("empty Betti list".into()));
        }
        let dim = betti.len() as u32 - 1;
        let homology_sphere =
            dim >= 1 && betti.iter().enumerate().all(|(q, &b)| b == u64::from(q == 0 || q == dim as usize));
        let p = Self {
            name: None,
            dim,
            betti,
            orientable,
            max_cup: None,
            cup_length: None,
            cup_witness: None,
            homology_sphere,
            factors: Vec::new(),
        };
        let p = if homology_sphere { Self { name: None, ..Self::sphere(dim) } } else { p };
        p.validate()?;
        Ok(p)
    }

    /// Reads Betti numbers from a complex, and the cup structure when it is simplicial.
    pub fn from_complex(k: &WeightedCellComplex) -> Result<Self> {
        let h = homology(k);
        let betti: Vec<u64> = h.betti_numbers().into_iter().map(|b| b as u64).collect();
        let n = k.top_dim();
        let orientable = h.betti(n) == 1 && h.torsion(n.saturating_sub(1)).is_empty();
        let mut p = Self::from_betti(betti, orientable)?;
        if k.kind() == CellKind::Simplicial {
            let ring = CohomologyRing::new(k)?;
            let max = ring.maximal_cup_length();
            p.cup_length = Some(ring.cup_length() as u32);
            p.max_cup = Some(max.holds);
            p.cup_witness = max.witness.map(|w| w.into_iter().map(|d| d as u32).collect());
        }
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidProfile(m));
        if self.betti.len() != self.dim as usize + 1 {
            return bad(format!("{} Betti numbers for dimension {}", self.betti.len(), self.dim));
        }
        if self.betti[0] != 1 {
            return bad("profile must be connected (betti_0 = 1)".into());
        }
        if self.orientable && self.betti[self.dim as usize] != 1 {
            return bad("orientable profile needs betti_n = 1".into());
        }
        if self.homology_sphere
            && !self.betti.iter().enumerate().all(|(q, &b)| b == u64::from(q == 0 || q == self.dim as usize))
        {
            return bad("homology sphere must have Betti numbers 1 at 0 and n only".into());
        }
        if let Some(w) = &self.cup_witness {
            if w.iter().sum::<u32>() != self.dim || w.iter().any(|&d| self.betti.get(d as usize).is_none_or(|&b| b == 0)) {
                return bad("cup witness must use admissible degrees summing to the dimension".into());
            }
        }
        if let (Some(true), Some(l)) = (self.max_cup, self.lpd()) {
            let r = self.dim / l;
            if self.cup_length.is_some_and(|c| c != r) {
                return bad(format!("maximal cup length requires cup length {r}"));
            }
            if self.cup_witness.as_ref().is_some_and(|w| w.len() != r as usize) {
                return bad(format!("maximal cup length requires a witness of length {r}"));
            }
        }
        Ok(())
    }

    pub fn label(&self) -> String {
        if let Some(n) = &self.name {
            return n.clone();
        }
        if !self.factors.is_empty() {
            return self.factors.iter().map(|f| f.label()).collect::<Vec<_>>().join(" x ");
        }
        format!("M^{}", self.dim)
    }

    pub fn betti_at(&self, q: u32) -> u64 {
        self.betti.get(q as usize).copied().unwrap_or(0)
    }

    /// Least positive degree with nonzero rational cohomology.
    pub fn lpd(&self) -> Option<u32> {
        (1..=self.dim).find(|&q| self.betti_at(q) > 0)
    }

    pub fn admissible_degrees(&self) -> BTreeSet<u32> {
        (1..=self.dim).filter(|&q| self.betti_at(q) > 0).collect()
    }

    /// Leaf factors: itself for a prime profile.
    pub fn leaves(&self) -> Vec<&DimensionProfile> {
        if self.factors.is_empty() {
            vec![self]
        } else {
            self.factors.iter().collect()
        }
    }

    /// Witness degrees for a maximal cup length, when known.
    pub fn maximal_witness(&self) -> Option<Vec<u32>> {
        if self.max_cup != Some(true) {
            return None;
        }
        self.cup_witness.clone()
    }
}

/// Künneth product of two profiles.
pub fn kunneth_product(p: &DimensionProfile, q: &DimensionProfile) -> DimensionProfile {
    let dim = p.dim + q.dim;
    let mut betti = vec![0u64; dim as usize + 1];
    for (i, a) in p.betti.iter().enumerate() {
        for (j, b) in q.betti.iter().enumerate() {
            betti[i + j] += a * b;
        }
    }
    let lpd = (1..=dim).find(|&d| betti[d as usize] > 0);
    let cup_length = p.cup_length.zip(q.cup_length).map(|(a, b)| a + b);
    let cap = lpd.map_or(0, |l| dim / l);
    let max_cup = match (p.maximal_witness(), q.maximal_witness()) {
        (Some(a), Some(b)) => Some(a.len() + b.len() == cap as usize),
        _ => match cup_length {
            Some(c) if c < cap => Some(false),
            _ => None,
        },
    };
    let cup_witness = match (&p.cup_witness, &q.cup_witness) {
        (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
        _ => None,
    };
    let factors = p.leaves().into_iter().chain(q.leaves()).cloned().collect();
    DimensionProfile {
        name: None,
        dim,
        betti,
        orientable: p.orientable && q.orientable,
        max_cup,
        cup_length,
        cup_witness,
        homology_sphere: false,
        factors,
    }
}

pub fn product_of(profiles: &[DimensionProfile]) -> Result<DimensionProfile> {
    let (first, rest) = profiles.split_first().ok_or_else(|| Error::InvalidProfile("empty product".into()))?;
    Ok(rest.iter().fold(first.clone(), |acc, p| kunneth_product(&acc, p)))
}

/// Parses `S1 x S2 x S7`, `(S2 x S2) x S3`, or `T3` (the 3-torus).
pub fn parse_product_expr(expr: &str) -> Result<DimensionProfile> {
    let tokens: Vec<String> = {
        let spaced = expr.replace('(', " ( ").replace(')', " ) ").replace(['×', '*'], " x ");
        spaced.split_whitespace().map(str::to_string).collect()
    };
    let mut pos = 0;
    let p = parse_product(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::Parse(format!("unexpected `{}` in `{expr}`", tokens[pos])));
    }
    Ok(p)
}

fn parse_product(tokens: &[String], pos: &mut usize) -> Result<DimensionProfile> {
    let mut acc = parse_atom(tokens, pos)?;
    while tokens.get(*pos).is_some_and(|t| t.eq_ignore_ascii_case("x")) {
        *pos += 1;
        let rhs = parse_atom(tokens, pos)?;
        acc = kunneth_product(&acc, &rhs);
    }
    Ok(acc)
}

fn parse_atom(tokens: &[String], pos: &mut usize) -> Result<DimensionProfile> {
    let tok = tokens.get(*pos).ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
    *pos += 1;
    if tok == "(" {
        let inner = parse_product(tokens, pos)?;
        if tokens.get(*pos).map(String::as_str) != Some(")") {
            return Err(Error::Parse("missing `)`".into()));
        }
        *pos += 1;
        return Ok(inner);
    }
    let (head, digits) = tok.split_at(1);
    let n: u32 = digits.parse().map_err(|_| Error::Parse(format!("bad factor `{tok}`")))?;
    match head {
        "S" | "s" if n >= 1 => Ok(DimensionProfile::sphere(n)),
        "T" | "t" if n >= 1 => product_of(&vec![DimensionProfile::sphere(1); n as usize]),
        _ => Err(Error::Parse(format!("bad factor `{tok}` (use S<n> or T<n>, n >= 1)"))),
    }
}

/// Which argument produced a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// The single-part partition `(n)` with the fundamental class: `catstsys >= 1`.
    FundamentalClass,
    /// A nonzero cup product of length `c` gives `catstsys >= c`.
    CupLength,
    /// Products of maximal-cup-length factors: sum of the factor values.
    FactorSum,
    /// Every part has degree `>= lpd`, so at most `floor(n / lpd)` parts.
    AdmissibleDegreeCap,
    /// Maximal real cup length closes the gap at `floor(n / lpd)`.
    MaximalCupLength,
    /// Two maximal-cup-length factors satisfying the remainder condition.
    ModCondition,
    /// Products of real homology spheres: the number of spheres.
    SphereProduct,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::FundamentalClass => "fundamental-class",
            Rule::CupLength => "cup-length",
            Rule::FactorSum => "factor-sum",
            Rule::AdmissibleDegreeCap => "admissible-degree-cap",
            Rule::MaximalCupLength => "maximal-cup-length",
            Rule::ModCondition => "mod-condition",
            Rule::SphereProduct => "sphere-product",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleOutcome {
    pub rule: Rule,
    pub applicable: bool,
    pub lower: Option<u32>,
    pub upper: Option<u32>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "kebab-case")]
pub enum PartitionVerdict {
    Categorical(String),
    RuledOut(String),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryVerdict {
    pub lower: u32,
    pub upper: u32,
    pub exact: bool,
    pub lower_from: Vec<Rule>,
    pub upper_from: Vec<Rule>,
    pub outcomes: Vec<RuleOutcome>,
}

impl CategoryVerdict {
    pub fn outcome(&self, rule: Rule) -> Option<&RuleOutcome> {
        self.outcomes.iter().find(|o| o.rule == rule)
    }
}

fn outcome(rule: Rule, lower: Option<u32>, upper: Option<u32>, note: impl Into<String>) -> RuleOutcome {
    RuleOutcome { rule, applicable: true, lower, upper, note: note.into() }
}

fn skipped(rule: Rule, note: impl Into<String>) -> RuleOutcome {
    RuleOutcome { rule, applicable: false, lower: None, upper: None, note: note.into() }
}

fn mod_condition_rule(p: &DimensionProfile) -> RuleOutcome {
    let leaves = p.leaves();
    if leaves.len() < 2 {
        return skipped(Rule::ModCondition, "not a product");
    }
    if leaves.len() > 16 {
        return skipped(Rule::ModCondition, "too many factors to split");
    }
    let mut reasons = Vec::new();
    // leaf 0 always on the first side; the condition is symmetric in the two sides.
    // Splits that respect the written factor order are tried first.
    let k = leaves.len() as u32;
    let full = (1u32 << (k - 1)) - 1;
    let mut masks: Vec<u32> = (1..=full).collect();
    // a mask whose set bits run up to the top bit puts a trailing block on the second side
    let is_suffix = |m: u32| m | (m - 1) == full;
    masks.sort_by_key(|&m| !is_suffix(m));
    for mask in masks {
        let (mut a, mut b) = (vec![leaves[0].clone()], Vec::new());
        for (i, leaf) in leaves.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 { b.push((*leaf).clone()) } else { a.push((*leaf).clone()) }
        }
        let (m, n) = (product_of(&a).expect("nonempty"), product_of(&b).expect("nonempty"));
        let split = format!("{} | {}", m.label(), n.label());
        if m.max_cup != Some(true) || n.max_cup != Some(true) {
            reasons.push(format!("{split}: a side lacks maximal real cup length"));
            continue;
        }
        let (lm, ln) = (m.lpd().expect("max cup"), n.lpd().expect("max cup"));
        if !mod_condition(m.dim, lm, n.dim, ln) {
            reasons.push(format!("{split}: remainder condition fails"));
            continue;
        }
        let (r, s) = (m.dim / lm, n.dim / ln);
        let cap = p.dim / lm.min(ln);
        if r + s != cap {
            reasons.push(format!(
                "{split}: remainder condition holds but the product lacks maximal real cup length ({} < {cap})",
                r + s
            ));
            continue;
        }
        return outcome(Rule::ModCondition, Some(r + s), Some(r + s), format!("{split}: {r} + {s}"));
    }
    skipped(Rule::ModCondition, reasons.join("; "))
}

/// Combines every applicable rule into lower and upper bounds.
pub fn catstsys_bounds(p: &DimensionProfile) -> Result<CategoryVerdict> {
    p.validate()?;
    let mut outcomes = Vec::new();
    let lpd = p.lpd();

    if p.orientable && p.dim >= 1 {
        outcomes.push(outcome(Rule::FundamentalClass, Some(1), None, "partition (n)"));
    } else {
        outcomes.push(skipped(Rule::FundamentalClass, "no fundamental class"));
    }

    match p.cup_length {
        Some(c) if p.orientable && c > 0 => {
            outcomes.push(outcome(Rule::CupLength, Some(c), None, format!("cup length {c}")))
        }
        _ => outcomes.push(skipped(Rule::CupLength, "cup length unknown")),
    }

    let leaves = p.leaves();
    if leaves.len() >= 2 && leaves.iter().all(|l| l.max_cup == Some(true)) {
        let sum: u32 = leaves.iter().map(|l| l.dim / l.lpd().expect("max cup implies lpd")).sum();
        outcomes.push(outcome(Rule::FactorSum, Some(sum), None, format!("{} maximal factors", leaves.len())));
    } else {
        outcomes.push(skipped(Rule::FactorSum, "needs >= 2 factors, all with maximal real cup length"));
    }

    let cap = enumerate_partitions(p.dim, &p.admissible_degrees()).first().map_or(0, |q| q.size() as u32);
    outcomes.push(outcome(Rule::AdmissibleDegreeCap, None, Some(cap), match lpd {
        Some(l) => format!("parts >= {l}"),
        None => "no admissible degrees".into(),
    }));

    match (p.max_cup, lpd) {
        (Some(true), Some(l)) => {
            let r = p.dim / l;
            outcomes.push(outcome(Rule::MaximalCupLength, Some(r), Some(r), format!("floor({}/{l})", p.dim)));
        }
        _ => outcomes.push(skipped(Rule::MaximalCupLength, "maximal real cup length not established")),
    }

    outcomes.push(mod_condition_rule(p));

    if leaves.iter().all(|l| l.homology_sphere) && p.orientable {
        let n = leaves.len() as u32;
        outcomes.push(outcome(Rule::SphereProduct, Some(n), Some(n), format!("{n} homology spheres")));
    } else {
        outcomes.push(skipped(Rule::SphereProduct, "not a product of real homology spheres"));
    }

    let lower = outcomes.iter().filter(|o| o.applicable).filter_map(|o| o.lower).max().unwrap_or(0);
    let upper = outcomes.iter().filter(|o| o.applicable).filter_map(|o| o.upper).min().unwrap_or(cap);
    if lower > upper {
        return Err(Error::InvalidProfile(format!("inconsistent profile: lower bound {lower} > upper bound {upper}")));
    }
    let from = |pick: fn(&RuleOutcome) -> Option<u32>, v: u32| -> Vec<Rule> {
        outcomes.iter().filter(|o| o.applicable && pick(o) == Some(v)).map(|o| o.rule).collect()
    };
    Ok(CategoryVerdict {
        lower,
        upper,
        exact: lower == upper,
        lower_from: from(|o| o.lower, lower),
        upper_from: from(|o| o.upper, upper),
        outcomes,
    })
}

/// Classifies every admissible partition of the dimension.
pub fn partition_verdicts(p: &DimensionProfile) -> Result<Vec<(Partition, PartitionVerdict)>> {
    let verdict = catstsys_bounds(p)?;
    let leaves = p.leaves();
    let spheres: Option<Vec<u32>> =
        leaves.iter().all(|l| l.homology_sphere).then(|| leaves.iter().map(|l| l.dim).collect());
    let witness = p.cup_witness.clone();
    Ok(enumerate_partitions(p.dim, &p.admissible_degrees())
        .into_iter()
        .map(|part| {
            let v = if part.size() as u32 > verdict.upper {
                let rules: Vec<String> = verdict.upper_from.iter().map(ToString::to_string).collect();
                let mut why = format!("size {} > {} ({})", part.size(), verdict.upper, rules.join(", "));
                if let Some(w) = spheres.as_ref().and_then(|d| sphere_product_exponent(d, &part)) {
                    why.push_str(&format!("; ratio grows like t^{w}"));
                }
                PartitionVerdict::RuledOut(why)
            } else if let Some(w) = spheres.as_ref().and_then(|d| sphere_product_exponent(d, &part)) {
                PartitionVerdict::RuledOut(format!("ratio grows like t^{w}"))
            } else if part.size() == 1 && p.orientable {
                PartitionVerdict::Categorical("fundamental class".into())
            } else if witness.as_ref().is_some_and(|w| part.is_coarsening_of(w)) {
                PartitionVerdict::Categorical(format!(
                    "nonzero cup product of degrees {:?}",
                    witness.as_ref().expect("checked")
                ))
            } else {
                PartitionVerdict::Unknown
            };
            (part, v)
        })
        .collect())
}
