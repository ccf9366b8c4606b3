//! Non-degenerate simplicial maps, their local degrees, and pulled-back metrics.

use num_traits::{Signed, Zero};

use crate::complex::{Chain, CellKind, WeightedCellComplex};
use crate::error::{Error, Result};
use crate::homology::homology;
use crate::matrix::{rank, RatMatrix};
use crate::rational::{rat, Rational};
use crate::stable_norm::{stable_systole, VerificationReport};

#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: WeightedCellComplex,
    target: WeightedCellComplex,
    /// `vertex_map[i]` is the target label of the source vertex with label `i`.
    vertex_map: Vec<usize>,
    // per degree, per source simplex: (target simplex index, orientation sign)
    images: Vec<Vec<(usize, i64)>>,
}

/// Sign of the permutation sorting `v`; `None` if `v` has repeats.
fn sort_sign(v: &[usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] == v[j] {
                return None;
            }
            if v[i] > v[j] {
                sign = -sign;
            }
        }
    }
    Some(sign)
}

impl SimplicialMap {
    /// Checks that every simplex maps onto a simplex of the same dimension.
    pub fn new(
        source: WeightedCellComplex,
        target: WeightedCellComplex,
        vertex_map: Vec<usize>,
    ) -> Result<Self> {
        if source.kind() != CellKind::Simplicial || target.kind() != CellKind::Simplicial {
            return Err(Error::NotSimplicial);
        }
        let mut images = Vec::new();
        for q in 0..=source.top_dim() {
            let mut level = Vec::with_capacity(source.num_cells(q));
            for c in source.cells(q) {
                let verts = c.vertices.as_ref().expect("simplicial cells carry vertices");
                let img: Vec<usize> = verts
                    .iter()
                    .map(|&v| vertex_map.get(v).copied())
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::DegenerateMap(verts.clone()))?;
                let sign = sort_sign(&img).ok_or_else(|| Error::DegenerateMap(verts.clone()))?;
                let mut sorted = img;
                sorted.sort_unstable();
                let idx = target.simplex_index(&sorted).ok_or_else(|| Error::DegenerateMap(verts.clone()))?;
                level.push((idx, sign));
            }
            images.push(level);
        }
        Ok(Self { source, target, vertex_map, images })
    }

    pub fn source(&self) -> &WeightedCellComplex {
        &self.source
    }

    pub fn target(&self) -> &WeightedCellComplex {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// Chain-level image of a source chain.
    pub fn push_forward(&self, c: &Chain) -> Result<Chain> {
        c.check(&self.source)?;
        let mut out = Chain::zero(&self.target, c.degree);
        if c.degree > self.target.top_dim() {
            return Err(Error::DegreeOutOfRange { degree: c.degree, top: self.target.top_dim() });
        }
        for (x, &(idx, sign)) in c.coeffs.iter().zip(&self.images[c.degree]) {
            if !x.is_zero() {
                out.coeffs[idx] += x * rat(sign);
            }
        }
        Ok(out)
    }

    /// Largest absolute local degree over the top simplices of the target.
    ///
    /// The local degree at `e` sums, over the source top simplices mapping onto `e`, the
    /// orientation sign relative to the fundamental cycles of both complexes.
    pub fn degree_bound(&self) -> Result<u64> {
        let n = self.source.top_dim();
        if self.target.top_dim() != n {
            return Err(Error::DegreeOutOfRange { degree: n, top: self.target.top_dim() });
        }
        let fk = fundamental_cycle(&self.source)?;
        let fl = fundamental_cycle(&self.target)?;
        let pushed = self.push_forward(&fk)?;
        let mut d = 0u64;
        for (x, o) in pushed.coeffs.iter().zip(&fl.coeffs) {
            let local = x * o;
            let a: u64 = local.abs().to_integer().try_into().unwrap_or(u64::MAX);
            d = d.max(a);
        }
        Ok(d)
    }

    /// The source complex with every simplex given the weight of its image.
    pub fn pullback_metric(&self) -> Result<WeightedCellComplex> {
        let mut k = self.source.clone();
        for q in 0..=k.top_dim() {
            let w: Vec<Rational> =
                self.images[q].iter().map(|&(idx, _)| self.target.cells(q)[idx].weight.clone()).collect();
            k = k.with_weights(q, w)?;
        }
        Ok(k)
    }

    /// Whether the induced map on degree-`q` rational homology is injective.
    pub fn is_monomorphism(&self, q: usize) -> Result<bool> {
        let hk = homology(&self.source);
        let hl = homology(&self.target);
        let gens = hk.generators(q);
        let rows: Vec<Vec<Rational>> = gens
            .iter()
            .map(|g| hl.class_coordinates(&self.target, &self.push_forward(g)?))
            .collect::<Result<_>>()?;
        if rows.is_empty() {
            return Ok(true);
        }
        Ok(rank(&RatMatrix::from_rows(rows)) == gens.len())
    }
}

/// The top-degree generator, required to have all coefficients `+-1`.
pub fn fundamental_cycle(k: &WeightedCellComplex) -> Result<Chain> {
    let h = homology(k);
    let n = k.top_dim();
    if h.betti(n) != 1 {
        return Err(Error::NoFundamentalClass(format!("betti_{n} = {}", h.betti(n))));
    }
    let z = h.generators(n)[0].clone();
    if z.coeffs.iter().any(|c| c.abs() != rat(1)) {
        return Err(Error::NoFundamentalClass("top cells are not coherently oriented".into()));
    }
    Ok(z)
}

/// `stsys_q(L) <= stsys_q(K, g*G_L) <= D(g) stsys_q(L)`.
pub fn verify_degree_sandwich(g: &SimplicialMap, q: usize, radius: u32) -> Result<VerificationReport> {
    if !g.is_monomorphism(q)? {
        return Err(Error::NotMonomorphism(q));
    }
    let d = g.degree_bound()?;
    let pulled = g.pullback_metric()?;
    let sl = stable_systole(g.target(), q, radius)?.value().cloned().ok_or(Error::TrivialSystole(q))?;
    let sk = stable_systole(&pulled, q, radius)?.value().cloned().ok_or(Error::TrivialSystole(q))?;
    let upper = rat(d as i64) * &sl;
    let holds = sl <= sk && sk <= upper;
    Ok(VerificationReport {
        check: format!("degree-sandwich q={q} D={d}"),
        quantities: vec![
            ("stsys_q(L)".into(), sl),
            ("stsys_q(K, g*G_L)".into(), sk),
            ("D(g)".into(), rat(d as i64)),
            ("D(g)*stsys_q(L)".into(), upper),
        ],
        verdict: if holds { crate::stable_norm::Verdict::Pass } else { crate::stable_norm::Verdict::Fail },
    })
}

/// The standard `k`-fold cover `circle(k*n) -> circle(n)`, `i -> i mod n`.
pub fn circle_cover(n: usize, k: usize) -> Result<SimplicialMap> {
    let src = crate::library::circle(n * k);
    let dst = crate::library::circle(n);
    SimplicialMap::new(src, dst, (0..n * k).map(|i| i % n).collect())
}
