//! Finite weighted cell complexes, cellular chains and the operations on them.
//!
//! A complex stores, per degree, an ordered list of cells with a positive rational
//! weight (the cell's volume under a piecewise-linear metric) and, for degrees >= 1, a
//! sparse integer boundary column per cell. Vertices default to weight 1.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::rational::{fmt_rational, pow_i, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Simplicial,
    Cubical,
    General,
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellKind::Simplicial => "simplicial",
            CellKind::Cubical => "cubical",
            CellKind::General => "general",
        })
    }
}

/// Degrees of the two factor cells a product cell came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorTag {
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub id: String,
    pub weight: Rational,
    /// Sorted vertex labels, present for simplicial complexes.
    pub vertices: Option<Vec<usize>>,
    pub factor: Option<FactorTag>,
}

impl Cell {
    pub fn new(id: impl Into<String>, weight: Rational) -> Self {
        Self { id: id.into(), weight, vertices: None, factor: None }
    }
}

/// Sparse boundary column: `(row index in degree q-1, incidence)`.
pub type BoundaryColumn = Vec<(usize, i64)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCellComplex {
    kind: CellKind,
    cells: Vec<Vec<Cell>>,
    // boundary[q][j] is the boundary of cell j in degree q; boundary[0] is empty.
    boundary: Vec<Vec<BoundaryColumn>>,
}

impl WeightedCellComplex {
    /// Validates shapes, weights, `d o d = 0`, and the simplicial face rule.
    pub fn new(
        kind: CellKind,
        cells: Vec<Vec<Cell>>,
        mut boundary: Vec<Vec<BoundaryColumn>>,
    ) -> Result<Self> {
        if cells.is_empty() || cells[0].is_empty() {
            return Err(Error::Malformed("a complex needs at least one vertex".into()));
        }
        if boundary.len() == cells.len() - 1 {
            boundary.insert(0, Vec::new());
        }
        if boundary.len() != cells.len() {
            return Err(Error::Malformed(format!(
                "{} boundary blocks for {} degrees",
                boundary.len(),
                cells.len()
            )));
        }
        let complex = Self { kind, cells, boundary };
        complex.validate()?;
        Ok(complex)
    }

    fn validate(&self) -> Result<()> {
        for (q, cells) in self.cells.iter().enumerate() {
            for c in cells {
                if !c.weight.is_positive() {
                    return Err(Error::NonPositiveWeight {
                        id: c.id.clone(),
                        weight: fmt_rational(&c.weight),
                    });
                }
            }
            if q == 0 {
                if !self.boundary[0].is_empty() {
                    return Err(Error::Malformed("vertices cannot have a boundary".into()));
                }
                continue;
            }
            if self.boundary[q].len() != cells.len() {
                return Err(Error::Malformed(format!(
                    "degree {q}: {} boundary columns for {} cells",
                    self.boundary[q].len(),
                    cells.len()
                )));
            }
            let rows = self.cells[q - 1].len();
            for col in &self.boundary[q] {
                if let Some(&(r, _)) = col.iter().find(|(r, _)| *r >= rows) {
                    return Err(Error::Malformed(format!("degree {q}: face index {r} out of range")));
                }
            }
        }
        for q in 2..self.cells.len() {
            let dd = self.boundary_matrix(q - 1)?.mul(&self.boundary_matrix(q)?);
            if !dd.is_zero() {
                return Err(Error::BoundaryNotNilpotent(q - 1, q));
            }
        }
        if self.kind == CellKind::Simplicial {
            self.validate_simplicial()?;
        }
        Ok(())
    }

    fn validate_simplicial(&self) -> Result<()> {
        let mut index: Vec<BTreeMap<&[usize], usize>> = Vec::new();
        for (q, cells) in self.cells.iter().enumerate() {
            let mut map = BTreeMap::new();
            for (j, c) in cells.iter().enumerate() {
                let v = c.vertices.as_deref().ok_or_else(|| {
                    Error::Malformed(format!("simplicial cell `{}` has no vertex list", c.id))
                })?;
                if v.len() != q + 1 || v.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Malformed(format!(
                        "simplicial cell `{}` needs {} strictly increasing vertices",
                        c.id,
                        q + 1
                    )));
                }
                if map.insert(v, j).is_some() {
                    return Err(Error::Malformed(format!("duplicate simplex {v:?}")));
                }
            }
            index.push(map);
        }
        for q in 1..self.cells.len() {
            for (j, c) in self.cells[q].iter().enumerate() {
                let v = c.vertices.as_ref().expect("checked above");
                let mut expected: Vec<(usize, i64)> = Vec::with_capacity(q + 1);
                for i in 0..=q {
                    let mut face = v.clone();
                    face.remove(i);
                    let row = *index[q - 1].get(face.as_slice()).ok_or_else(|| {
                        Error::Malformed(format!("face {face:?} of `{}` is missing", c.id))
                    })?;
                    expected.push((row, if i % 2 == 0 { 1 } else { -1 }));
                }
                expected.sort_unstable();
                let mut got = self.boundary[q][j].clone();
                got.sort_unstable();
                if got != expected {
                    return Err(Error::Malformed(format!(
                        "boundary of `{}` does not follow the alternating face rule",
                        c.id
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> CellKind {
        self.kind
    }

    pub fn top_dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn num_cells(&self, q: usize) -> usize {
        self.cells.get(q).map_or(0, Vec::len)
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn cells(&self, q: usize) -> &[Cell] {
        self.cells.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn weights(&self, q: usize) -> Vec<Rational> {
        self.cells(q).iter().map(|c| c.weight.clone()).collect()
    }

    pub fn boundary_column(&self, q: usize, j: usize) -> &[(usize, i64)] {
        &self.boundary[q][j]
    }

    pub fn has_factor_tags(&self) -> bool {
        self.cells.iter().flatten().all(|c| c.factor.is_some())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells.iter().enumerate().map(|(q, c)| if q % 2 == 0 { 1 } else { -1 } * c.len() as i64).sum()
    }

    fn check_degree(&self, q: usize) -> Result<()> {
        if q > self.top_dim() {
            return Err(Error::DegreeOutOfRange { degree: q, top: self.top_dim() });
        }
        Ok(())
    }

    /// Dense boundary matrix of degree `q` (rows = (q-1)-cells, columns = q-cells).
    ///
    /// Degree 0 gives the `0 x n_0` zero map; one past the top gives an `n_top x 0` matrix.
    pub fn boundary_matrix(&self, q: usize) -> Result<IntMatrix> {
        if q == self.top_dim() + 1 {
            return Ok(IntMatrix::zeros(self.num_cells(q - 1), 0));
        }
        self.check_degree(q)?;
        if q == 0 {
            return Ok(IntMatrix::zeros(0, self.num_cells(0)));
        }
        let mut m = IntMatrix::zeros(self.num_cells(q - 1), self.num_cells(q));
        for (j, col) in self.boundary[q].iter().enumerate() {
            for &(i, x) in col {
                m[(i, j)] += BigInt::from(x);
            }
        }
        Ok(m)
    }

    /// Product complex with cells `a x b`, weights multiplied, Koszul-signed boundary.
    ///
    /// Every product cell carries a [`FactorTag`] recording the degrees of its factors.
    pub fn product(&self, other: &Self) -> Self {
        let top = self.top_dim() + other.top_dim();
        // index[(a, b, i, j)] -> position of cell_i^a x cell_j^b within degree a + b
        let mut index: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
        let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); top + 1];
        for (d, slot) in cells.iter_mut().enumerate() {
            for a in 0..=d.min(self.top_dim()) {
                let b = d - a;
                if b > other.top_dim() {
                    continue;
                }
                for (i, x) in self.cells[a].iter().enumerate() {
                    for (j, y) in other.cells[b].iter().enumerate() {
                        index.insert((a, b, i, j), slot.len());
                        slot.push(Cell {
                            id: format!("{}x{}", x.id, y.id),
                            weight: &x.weight * &y.weight,
                            vertices: None,
                            factor: Some(FactorTag { first: a, second: b }),
                        });
                    }
                }
            }
        }
        let mut boundary: Vec<Vec<BoundaryColumn>> = vec![Vec::new(); top + 1];
        for d in 1..=top {
            let mut cols = vec![Vec::new(); cells[d].len()];
            for a in 0..=d.min(self.top_dim()) {
                let b = d - a;
                if b > other.top_dim() {
                    continue;
                }
                let sign: i64 = if a % 2 == 0 { 1 } else { -1 };
                for i in 0..self.cells[a].len() {
                    for j in 0..other.cells[b].len() {
                        let col = &mut cols[index[&(a, b, i, j)]];
                        if a > 0 {
                            for &(fi, x) in &self.boundary[a][i] {
                                col.push((index[&(a - 1, b, fi, j)], x));
                            }
                        }
                        if b > 0 {
                            for &(fj, y) in &other.boundary[b][j] {
                                col.push((index[&(a, b - 1, i, fj)], sign * y));
                            }
                        }
                    }
                }
            }
            boundary[d] = cols;
        }
        let kind = if self.kind == CellKind::Cubical && other.kind == CellKind::Cubical {
            CellKind::Cubical
        } else {
            CellKind::General
        };
        Self { kind, cells, boundary }
    }

    /// Rescales weights: a q-cell picks up `t^q` (uniform) or `t^a` where `a` is the
    /// degree of its first-factor part (factor-tagged).
    pub fn rescale(&self, t: &Rational, scaling: Scaling) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::NonPositiveScale(fmt_rational(t)));
        }
        if scaling == Scaling::FactorTagged && !self.has_factor_tags() {
            return Err(Error::MissingFactorTags);
        }
        let mut out = self.clone();
        for (q, cells) in out.cells.iter_mut().enumerate() {
            for c in cells {
                let exp = match scaling {
                    Scaling::Uniform => q,
                    Scaling::FactorTagged => c.factor.expect("checked").first,
                };
                c.weight *= pow_i(t, exp as i64);
            }
        }
        Ok(out)
    }

    /// Replaces the weights of degree `q`.
    pub fn with_weights(mut self, q: usize, weights: Vec<Rational>) -> Result<Self> {
        self.check_degree(q)?;
        if weights.len() != self.num_cells(q) {
            return Err(Error::ChainLength { degree: q, got: weights.len(), expected: self.num_cells(q) });
        }
        for (c, w) in self.cells[q].iter_mut().zip(weights) {
            if !w.is_positive() {
                return Err(Error::NonPositiveWeight { id: c.id.clone(), weight: fmt_rational(&w) });
            }
            c.weight = w;
        }
        Ok(self)
    }

    pub fn with_uniform_weight(self, q: usize, w: Rational) -> Result<Self> {
        let n = self.num_cells(q);
        self.with_weights(q, vec![w; n])
    }

    /// Disjoint union; cell ids get `a:` / `b:` prefixes.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let top = self.top_dim().max(other.top_dim());
        let mut cells = vec![Vec::new(); top + 1];
        let mut boundary: Vec<Vec<BoundaryColumn>> = vec![Vec::new(); top + 1];
        for q in 0..=top {
            for (prefix, k) in [("a", self), ("b", other)] {
                for c in k.cells(q) {
                    let mut c = c.clone();
                    c.id = format!("{prefix}:{}", c.id);
                    c.vertices = None;
                    c.factor = None;
                    cells[q].push(c);
                }
            }
            if q > 0 {
                let shift = self.num_cells(q - 1);
                if q <= self.top_dim() {
                    boundary[q].extend(self.boundary[q].iter().cloned());
                }
                if q <= other.top_dim() {
                    boundary[q].extend(
                        other.boundary[q]
                            .iter()
                            .map(|col| col.iter().map(|&(r, x)| (r + shift, x)).collect()),
                    );
                }
            }
        }
        Self { kind: CellKind::General, cells, boundary }
    }

    /// Simplicial complex generated by `facets` (vertex labels), all weights 1.
    pub fn from_facets(facets: &[Vec<usize>]) -> Result<Self> {
        let mut faces: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                return Err(Error::Malformed("empty facet".into()));
            }
            let n = f.len();
            if faces.len() < n {
                faces.resize(n, BTreeSet::new());
            }
            // all nonempty subsets
            for mask in 1u64..(1u64 << n) {
                let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                faces[s.len() - 1].insert(s);
            }
        }
        let cells: Vec<Vec<Cell>> = faces
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|s| Cell {
                        id: simplex_id(s),
                        weight: Rational::one(),
                        vertices: Some(s.clone()),
                        factor: None,
                    })
                    .collect()
            })
            .collect();
        let mut boundary: Vec<Vec<BoundaryColumn>> = vec![Vec::new()];
        for q in 1..faces.len() {
            let lower: BTreeMap<&Vec<usize>, usize> =
                faces[q - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
            let cols = faces[q]
                .iter()
                .map(|s| {
                    (0..=q)
                        .map(|i| {
                            let mut face = s.clone();
                            face.remove(i);
                            (lower[&face], if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                })
                .collect();
            boundary.push(cols);
        }
        Self::new(CellKind::Simplicial, cells, boundary)
    }

    /// Position of the simplex with the given (sorted) vertices.
    pub fn simplex_index(&self, vertices: &[usize]) -> Option<usize> {
        let q = vertices.len().checked_sub(1)?;
        self.cells(q).iter().position(|c| c.vertices.as_deref() == Some(vertices))
    }
}

pub(crate) fn simplex_id(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scaling {
    Uniform,
    FactorTagged,
}

/// A cellular chain with rational coefficients indexed by the cells of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub degree: usize,
    pub coeffs: Vec<Rational>,
}

impl Chain {
    pub fn zero(k: &WeightedCellComplex, degree: usize) -> Self {
        Self { degree, coeffs: vec![Rational::zero(); k.num_cells(degree)] }
    }

    pub fn new(k: &WeightedCellComplex, degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        let c = Self { degree, coeffs };
        c.check(k)?;
        Ok(c)
    }

    pub fn from_integers(k: &WeightedCellComplex, degree: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(k, degree, coeffs.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn check(&self, k: &WeightedCellComplex) -> Result<()> {
        k.check_degree(self.degree)?;
        if self.coeffs.len() != k.num_cells(self.degree) {
            return Err(Error::ChainLength {
                degree: self.degree,
                got: self.coeffs.len(),
                expected: k.num_cells(self.degree),
            });
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { degree: self.degree, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn boundary(&self, k: &WeightedCellComplex) -> Result<Chain> {
        self.check(k)?;
        if self.degree == 0 {
            return Ok(Chain { degree: 0, coeffs: Vec::new() });
        }
        let mut out = Chain::zero(k, self.degree - 1);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, x) in k.boundary_column(self.degree, j) {
                out.coeffs[i] += c * Rational::from_integer(x.into());
            }
        }
        Ok(out)
    }

    pub fn is_cycle(&self, k: &WeightedCellComplex) -> Result<bool> {
        Ok(self.boundary(k)?.is_zero())
    }
}

/// Weighted L1 size: the sum over cells of `|coefficient| * weight`.
pub fn mass(c: &Chain, k: &WeightedCellComplex) -> Result<Rational> {
    c.check(k)?;
    Ok(c.coeffs
        .iter()
        .zip(k.cells(c.degree))
        .filter(|(x, _)| !x.is_zero())
        .map(|(x, cell)| x.abs() * &cell.weight)
        .sum())
}

/// One-parameter family of product metrics scaling the first factor: at parameter `t`
/// a cell of factor degrees `(a, b)` has weight `t^a` times its base weight.
#[derive(Clone, Debug)]
pub struct DeformationFamily {
    base: WeightedCellComplex,
}

impl DeformationFamily {
    pub fn new(base: WeightedCellComplex) -> Result<Self> {
        if !base.has_factor_tags() {
            return Err(Error::MissingFactorTags);
        }
        Ok(Self { base })
    }

    pub fn from_factors(first: &WeightedCellComplex, second: &WeightedCellComplex) -> Self {
        Self { base: first.product(second) }
    }

    pub fn base(&self) -> &WeightedCellComplex {
        &self.base
    }

    pub fn at(&self, t: &Rational) -> Result<WeightedCellComplex> {
        self.base.rescale(t, Scaling::FactorTagged)
    }
}
