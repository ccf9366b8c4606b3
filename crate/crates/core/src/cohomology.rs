//! Rational cohomology ring of a simplicial complex.
//!
//! Cohomology classes are identified with their values on the integral homology
//! generators (over a field, `H^q = Hom(H_q, Q)`), so each class has a coordinate vector
//! and the cup product can be evaluated in cohomology without choosing complements.

use std::collections::HashMap;

use num_traits::Zero;

use crate::complex::{CellKind, WeightedCellComplex};
use crate::error::{Error, Result};
use crate::homology::{homology, HomologySummary};
use crate::matrix::{solve, IndependentSet, RatMatrix};
use crate::rational::Rational;

/// A cochain: one rational value per simplex of the given degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<Rational>,
}

impl Cochain {
    pub fn zero(k: &WeightedCellComplex, degree: usize) -> Self {
        Self { degree, values: vec![Rational::zero(); k.num_cells(degree)] }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        Self { degree: self.degree, values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { degree: self.degree, values: self.values.iter().map(|v| v * s).collect() }
    }

    /// `(delta phi)(sigma) = phi(d sigma)`.
    pub fn coboundary(&self, k: &WeightedCellComplex) -> Cochain {
        let q = self.degree + 1;
        let mut out = Cochain::zero(k, q);
        if q > k.top_dim() {
            return out;
        }
        for (j, v) in out.values.iter_mut().enumerate() {
            for &(i, x) in k.boundary_column(q, j) {
                if !self.values[i].is_zero() {
                    *v += &self.values[i] * Rational::from_integer(x.into());
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}

/// A nonzero product found by the filtration, with the degrees of its factors.
#[derive(Clone, Debug)]
struct Product {
    cochain: Cochain,
    factors: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CohomologyRing<'a> {
    complex: &'a WeightedCellComplex,
    homology: HomologySummary,
    // per degree: sorted vertex list -> simplex index
    index: Vec<HashMap<Vec<usize>, usize>>,
    // per degree: cocycles dual to the homology generators
    basis: Vec<Vec<Cochain>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingProfile {
    pub dimension: usize,
    pub lpd: Option<usize>,
    pub cup_length: usize,
    pub max_cup_length: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalCupLength {
    pub holds: bool,
    /// `floor(n / lpd)`, the length the top-degree product must reach.
    pub required: usize,
    /// Degrees of factors whose product is nonzero in top degree.
    pub witness: Option<Vec<usize>>,
}

impl<'a> CohomologyRing<'a> {
    pub fn new(complex: &'a WeightedCellComplex) -> Result<Self> {
        if complex.kind() != CellKind::Simplicial {
            return Err(Error::NotSimplicial);
        }
        let homology = homology(complex);
        let index = (0..=complex.top_dim())
            .map(|q| {
                complex
                    .cells(q)
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (c.vertices.clone().expect("simplicial"), j))
                    .collect()
            })
            .collect();
        let mut ring = Self { complex, homology, index, basis: Vec::new() };
        ring.basis = (0..=complex.top_dim()).map(|q| ring.dual_basis(q)).collect();
        Ok(ring)
    }

    fn dual_basis(&self, q: usize) -> Vec<Cochain> {
        let k = self.complex;
        let gens = self.homology.generators(q);
        let n = k.num_cells(q);
        let next = if q < k.top_dim() { k.num_cells(q + 1) } else { 0 };
        // rows: cocycle condition on each (q+1)-simplex, then pairing with each generator
        let mut a = RatMatrix::zeros(next + gens.len(), n);
        for j in 0..next {
            for &(i, x) in k.boundary_column(q + 1, j) {
                a[(j, i)] += Rational::from_integer(x.into());
            }
        }
        for (g, gen) in gens.iter().enumerate() {
            for (i, x) in gen.coeffs.iter().enumerate() {
                a[(next + g, i)] = x.clone();
            }
        }
        (0..gens.len())
            .map(|g| {
                let mut rhs = vec![Rational::zero(); next + gens.len()];
                rhs[next + g] = Rational::from_integer(1.into());
                let values = solve(&a, &rhs).expect("universal coefficients give a dual cocycle");
                Cochain { degree: q, values }
            })
            .collect()
    }

    pub fn complex(&self) -> &WeightedCellComplex {
        self.complex
    }

    pub fn homology(&self) -> &HomologySummary {
        &self.homology
    }

    pub fn dimension(&self) -> usize {
        self.complex.top_dim()
    }

    /// Cocycles representing the basis of `H^q` dual to the homology generators.
    pub fn basis(&self, q: usize) -> &[Cochain] {
        self.basis.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn is_cocycle(&self, phi: &Cochain) -> bool {
        phi.coboundary(self.complex).is_zero()
    }

    /// Coordinates of the class of a cocycle in the dual basis.
    pub fn coordinates(&self, phi: &Cochain) -> Result<Vec<Rational>> {
        if phi.values.len() != self.complex.num_cells(phi.degree) {
            return Err(Error::ChainLength {
                degree: phi.degree,
                got: phi.values.len(),
                expected: self.complex.num_cells(phi.degree),
            });
        }
        if !self.is_cocycle(phi) {
            return Err(Error::NotACycle(phi.degree));
        }
        Ok(self
            .homology
            .generators(phi.degree)
            .iter()
            .map(|g| g.coeffs.iter().zip(&phi.values).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Front-face/back-face cup product on cochains.
    pub fn cup(&self, alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
        let (p, q) = (alpha.degree, beta.degree);
        let d = p + q;
        if d > self.dimension() {
            return Err(Error::DegreeOutOfRange { degree: d, top: self.dimension() });
        }
        let mut out = Cochain::zero(self.complex, d);
        for (j, cell) in self.complex.cells(d).iter().enumerate() {
            let v = cell.vertices.as_ref().expect("simplicial");
            let a = &alpha.values[self.index[p][&v[..=p]]];
            if a.is_zero() {
                continue;
            }
            let b = &beta.values[self.index[q][&v[p..]]];
            if !b.is_zero() {
                out.values[j] = a * b;
            }
        }
        Ok(out)
    }

    /// The unit class: 1 on every vertex.
    pub fn unit(&self) -> Cochain {
        Cochain { degree: 0, values: vec![Rational::from_integer(1.into()); self.complex.num_cells(0)] }
    }

    /// Successive powers `A_1, A_2, ...` of reduced cohomology, each as representatives of
    /// a basis; stops at the first zero level.
    fn filtration(&self) -> Vec<Vec<Product>> {
        let n = self.dimension();
        let first: Vec<Product> = (1..=n)
            .flat_map(|q| self.basis(q).iter().map(move |c| Product { cochain: c.clone(), factors: vec![q] }))
            .collect();
        if first.is_empty() {
            return Vec::new();
        }
        let mut levels = vec![first];
        loop {
            let prev = levels.last().expect("nonempty");
            let mut spans: Vec<IndependentSet> = vec![IndependentSet::new(); n + 1];
            let mut next = Vec::new();
            for a in prev {
                for b in &levels[0] {
                    let d = a.cochain.degree + b.cochain.degree;
                    if d > n {
                        continue;
                    }
                    let c = self.cup(&a.cochain, &b.cochain).expect("degree checked");
                    let coords = self.coordinates(&c).expect("cup of cocycles is a cocycle");
                    if spans[d].insert(&coords) {
                        let mut factors = a.factors.clone();
                        factors.extend(&b.factors);
                        next.push(Product { cochain: c, factors });
                    }
                }
            }
            if next.is_empty() {
                return levels;
            }
            levels.push(next);
        }
    }

    /// Longest nonzero product of reduced classes.
    pub fn cup_length(&self) -> usize {
        self.filtration().len()
    }

    /// Least positive degree with nonzero rational cohomology.
    pub fn lpd(&self) -> Option<usize> {
        (1..=self.dimension()).find(|&q| self.homology.betti(q) > 0)
    }

    pub fn maximal_cup_length(&self) -> MaximalCupLength {
        let n = self.dimension();
        let Some(l) = self.lpd() else {
            return MaximalCupLength { holds: false, required: 0, witness: None };
        };
        let r = n / l;
        let levels = self.filtration();
        let witness = levels
            .get(r - 1)
            .and_then(|lv| lv.iter().find(|p| p.cochain.degree == n))
            .map(|p| p.factors.clone());
        MaximalCupLength { holds: witness.is_some(), required: r, witness }
    }

    pub fn profile(&self) -> RingProfile {
        RingProfile {
            dimension: self.dimension(),
            lpd: self.lpd(),
            cup_length: self.cup_length(),
            max_cup_length: self.maximal_cup_length().holds,
        }
    }
}

pub fn cup_length(k: &WeightedCellComplex) -> Result<usize> {
    Ok(CohomologyRing::new(k)?.cup_length())
}

/// LPD from rational homology; works for any complex, not only simplicial ones.
pub fn lpd(k: &WeightedCellComplex) -> Option<usize> {
    let h = homology(k);
    (1..=k.top_dim()).find(|&q| h.betti(q) > 0)
}

pub fn has_maximal_real_cup_length(k: &WeightedCellComplex) -> Result<MaximalCupLength> {
    Ok(CohomologyRing::new(k)?.maximal_cup_length())
}
