//! Sweeps of systole-product-to-volume ratios along a deformation family.
//!
//! The exponent is read off exactly: for consecutive samples the ratio of ratios must be
//! an integer power of `t_{j+1} / t_j`. A divergent sweep is evidence against a partition
//! for this family of metrics, not a proof over all metrics.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::category::Partition;
use crate::complex::{mass, DeformationFamily, WeightedCellComplex};
use crate::error::{Error, Result};
use crate::maps::fundamental_cycle;
use crate::rational::{exact_log, fmt_rational, parse_rational, rat, Rational};
use crate::stable_norm::{stable_systole, SearchStatus, DEFAULT_SEARCH_RADIUS};

/// Largest exponent magnitude tried when extracting growth rates.
const MAX_EXPONENT: u32 = 64;

/// Mass of the fundamental cycle, i.e. the total top-dimensional volume.
pub fn fundamental_class_mass(k: &WeightedCellComplex) -> Result<Rational> {
    mass(&fundamental_cycle(k)?, k)
}

/// Sample ladder and search radius for a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    samples: Vec<Rational>,
    pub radius: u32,
}

impl SweepConfig {
    pub fn new(samples: Vec<Rational>, radius: u32) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidSamples("no samples".into()));
        }
        if let Some(t) = samples.iter().find(|t| **t < rat(1)) {
            return Err(Error::InvalidSamples(format!("sample {} is below 1", fmt_rational(t))));
        }
        if samples.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSamples("samples must be strictly increasing".into()));
        }
        Ok(Self { samples, radius })
    }

    pub fn samples(&self) -> &[Rational] {
        &self.samples
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { samples: [1, 2, 4, 8].into_iter().map(rat).collect(), radius: DEFAULT_SEARCH_RADIUS }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub t: Rational,
    /// One systole per part, in partition order.
    pub systoles: Vec<Rational>,
    pub product: Rational,
    pub volume: Rational,
    pub ratio: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "exponent", rename_all = "kebab-case")]
pub enum SweepVerdict {
    Bounded,
    Diverges(i64),
    /// Too few samples, or the ratios do not follow a single power law on the tail.
    Inconclusive,
}

impl fmt::Display for SweepVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepVerdict::Bounded => write!(f, "bounded"),
            SweepVerdict::Diverges(w) => write!(f, "diverges(w = {w})"),
            SweepVerdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DeformationReport {
    pub partition: Partition,
    pub rows: Vec<SweepRow>,
    /// Power of `t` followed by the ratio on the tail of the ladder.
    pub exponent: Option<i64>,
    pub verdict: SweepVerdict,
    /// False when some systole came from a bounded search rather than a certified one.
    pub certified: bool,
}

impl DeformationReport {
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        write_rows(&self.partition, &self.rows, w)
    }
}

impl fmt::Display for DeformationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "partition {}", self.partition)?;
        for r in &self.rows {
            let sys: Vec<String> = r.systoles.iter().map(fmt_rational).collect();
            writeln!(
                f,
                "t = {}: systoles [{}], product {}, volume {}, ratio {}",
                fmt_rational(&r.t),
                sys.join(", "),
                fmt_rational(&r.product),
                fmt_rational(&r.volume),
                fmt_rational(&r.ratio)
            )?;
        }
        match self.exponent {
            Some(w) => writeln!(f, "exponent {w}")?,
            None => writeln!(f, "exponent undetermined")?,
        }
        write!(f, "verdict {}", self.verdict)?;
        if !self.certified {
            write!(f, " (some systoles from a bounded search)")?;
        }
        Ok(())
    }
}

/// Integer `w` with `rho(t_{j+1}) / rho(t_j) = (t_{j+1} / t_j)^w` on every tail pair.
pub fn growth_exponent(rows: &[SweepRow]) -> Option<i64> {
    let pairs: Vec<Option<i64>> = rows
        .windows(2)
        .map(|w| exact_log(&(&w[1].t / &w[0].t), &(&w[1].ratio / &w[0].ratio), MAX_EXPONENT))
        .collect();
    let tail = &pairs[pairs.len() / 2..];
    let first = (*tail.first()?)?;
    tail.iter().all(|&e| e == Some(first)).then_some(first)
}

/// Evaluates the partition's ratio at every sample of the family.
pub fn deformation_sweep(
    family: &DeformationFamily,
    partition: &Partition,
    config: &SweepConfig,
) -> Result<DeformationReport> {
    let n = family.base().top_dim();
    if partition.total() as usize != n {
        return Err(Error::InvalidPartition(format!("{partition} does not partition {n}")));
    }
    let mut rows = Vec::with_capacity(config.samples.len());
    let mut certified = true;
    for t in &config.samples {
        let k = family.at(t)?;
        let mut by_degree: BTreeMap<u32, Rational> = BTreeMap::new();
        for &d in partition.parts() {
            if by_degree.contains_key(&d) {
                continue;
            }
            let s = stable_systole(&k, d as usize, config.radius)?;
            certified &= !matches!(s.status(), Some(SearchStatus::BoundedSearch(_)));
            let v = s.value().cloned().ok_or(Error::TrivialSystole(d as usize))?;
            by_degree.insert(d, v);
        }
        let systoles: Vec<Rational> = partition.parts().iter().map(|d| by_degree[d].clone()).collect();
        let product = systoles.iter().fold(rat(1), |acc, s| acc * s);
        let volume = fundamental_class_mass(&k)?;
        let ratio = &product / &volume;
        rows.push(SweepRow { t: t.clone(), systoles, product, volume, ratio });
    }
    let exponent = growth_exponent(&rows);
    let verdict = match exponent {
        Some(w) if w >= 1 => SweepVerdict::Diverges(w),
        Some(_) => SweepVerdict::Bounded,
        None => SweepVerdict::Inconclusive,
    };
    Ok(DeformationReport { partition: partition.clone(), rows, exponent, verdict, certified })
}

fn header(partition: &Partition) -> Vec<String> {
    let mut h = vec!["t".to_string()];
    h.extend(partition.parts().iter().enumerate().map(|(i, d)| format!("stsys_{d}#{}", i + 1)));
    h.extend(["product", "volume", "ratio"].map(String::from));
    h
}

pub fn write_rows<W: Write>(partition: &Partition, rows: &[SweepRow], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    let csv_err = |e: csv::Error| Error::Parse(e.to_string());
    out.write_record(header(partition)).map_err(csv_err)?;
    for r in rows {
        let mut rec = vec![fmt_rational(&r.t)];
        rec.extend(r.systoles.iter().map(fmt_rational));
        rec.extend([&r.product, &r.volume, &r.ratio].map(fmt_rational));
        out.write_record(rec).map_err(csv_err)?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a report written by [`write_rows`], recovering the partition from the header.
pub fn read_rows<R: Read>(r: R) -> Result<(Partition, Vec<SweepRow>)> {
    let mut input = csv::Reader::from_reader(r);
    let csv_err = |e: csv::Error| Error::Parse(e.to_string());
    let head = input.headers().map_err(csv_err)?.clone();
    if head.len() < 5 || &head[0] != "t" {
        return Err(Error::Parse("expected columns t, stsys_*, product, volume, ratio".into()));
    }
    let parts = (1..head.len() - 3)
        .map(|i| {
            head[i]
                .strip_prefix("stsys_")
                .and_then(|s| s.split('#').next())
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad column `{}`", &head[i])))
        })
        .collect::<Result<Vec<u32>>>()?;
    let partition = Partition::new(parts)?;
    let mut rows = Vec::new();
    for rec in input.records() {
        let rec = rec.map_err(csv_err)?;
        let vals = rec
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| Error::Parse(format!("bad number `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if vals.len() != head.len() {
            return Err(Error::Parse(format!("row has {} fields, expected {}", vals.len(), head.len())));
        }
        let m = vals.len();
        rows.push(SweepRow {
            t: vals[0].clone(),
            systoles: vals[1..m - 3].to_vec(),
            product: vals[m - 3].clone(),
            volume: vals[m - 2].clone(),
            ratio: vals[m - 1].clone(),
        });
    }
    Ok((partition, rows))
}
