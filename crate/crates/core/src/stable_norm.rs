//! Stable norms of homology classes and stable systoles.
//!
//! The stable norm of a rational class is the least mass of a rational cycle in it:
//!
//! ```text
//! minimize  sum_i w_i |x_i|   subject to   x = z + d_{q+1} y,  y free
//! ```
//!
//! with `|x_i|` split into `x_i+ + x_i-`. Systoles minimize that norm over nonzero
//! integral classes: exactly when `betti_q = 1`, otherwise by a box search whose result
//! is certified by per-coordinate slab constants when the box is provably large enough.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::complex::{Chain, Scaling, WeightedCellComplex};
use crate::error::{Error, Result};
use crate::homology::{homology, HomologyClass, HomologySummary};
use crate::lp::LinearProgram;
use crate::rational::{fmt_rational, pow_i, rat, Rational};

pub const DEFAULT_SEARCH_RADIUS: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormCertificate {
    OptimalLp,
    TrivialZeroClass,
}

#[derive(Clone, Debug)]
pub struct StableNormResult {
    pub value: Rational,
    pub optimal_cycle: Chain,
    pub certificate: NormCertificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    /// One-dimensional homology: the generator is optimal by homogeneity.
    Exact,
    /// Box search plus slab constants rule out every lattice point outside the box.
    Certified,
    /// Best value inside `[-R, R]^b`; points outside were not excluded.
    BoundedSearch(u32),
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchStatus::Exact => f.write_str("exact"),
            SearchStatus::Certified => f.write_str("certified"),
            SearchStatus::BoundedSearch(r) => write!(f, "bounded-search({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystoleResult {
    /// No rational homology in this degree: the systole is infinite.
    Trivial,
    Finite {
        value: Rational,
        /// Integer coordinates of a minimizing class in the generator basis.
        witness: Vec<i64>,
        status: SearchStatus,
    },
}

impl SystoleResult {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            SystoleResult::Trivial => None,
            SystoleResult::Finite { value, .. } => Some(value),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, SystoleResult::Trivial)
    }

    pub fn status(&self) -> Option<SearchStatus> {
        match self {
            SystoleResult::Trivial => None,
            SystoleResult::Finite { status, .. } => Some(*status),
        }
    }
}

impl fmt::Display for SystoleResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystoleResult::Trivial => f.write_str("trivial"),
            SystoleResult::Finite { value, status, .. } => {
                write!(f, "{} ({status})", fmt_rational(value))
            }
        }
    }
}

/// A complex together with its homology, ready for repeated norm queries.
#[derive(Clone, Debug)]
pub struct NormSolver<'a> {
    complex: &'a WeightedCellComplex,
    homology: HomologySummary,
}

impl<'a> NormSolver<'a> {
    pub fn new(complex: &'a WeightedCellComplex) -> Self {
        Self { complex, homology: homology(complex) }
    }

    pub fn with_homology(complex: &'a WeightedCellComplex, homology: HomologySummary) -> Self {
        Self { complex, homology }
    }

    pub fn complex(&self) -> &WeightedCellComplex {
        self.complex
    }

    pub fn homology(&self) -> &HomologySummary {
        &self.homology
    }

    /// Least mass of a cycle `base + sum_k v_k free_k + d y` with `v`, `y` rational.
    fn min_mass(&self, q: usize, base: &Chain, free: &[&Chain]) -> Result<StableNormResult> {
        let k = self.complex;
        let n = k.num_cells(q);
        let m = if q < k.top_dim() { k.num_cells(q + 1) } else { 0 };
        let e = free.len();
        let weights = k.weights(q);
        let mut objective = vec![Rational::zero(); 2 * n + 2 * m + 2 * e];
        for (i, w) in weights.iter().enumerate() {
            objective[i] = w.clone();
            objective[n + i] = w.clone();
        }
        let mut rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = vec![Rational::zero(); objective.len()];
                r[i] = Rational::one();
                r[n + i] = -Rational::one();
                r
            })
            .collect();
        for j in 0..m {
            for &(i, x) in k.boundary_column(q + 1, j) {
                let x = rat(x);
                rows[i][2 * n + j] -= &x;
                rows[i][2 * n + m + j] += x;
            }
        }
        for (kk, c) in free.iter().enumerate() {
            for (i, x) in c.coeffs.iter().enumerate() {
                if !x.is_zero() {
                    rows[i][2 * n + 2 * m + kk] -= x;
                    rows[i][2 * n + 2 * m + e + kk] += x;
                }
            }
        }
        let mut lp = LinearProgram::new(objective);
        for (r, b) in rows.into_iter().zip(&base.coeffs) {
            lp.add_eq(r, b.clone())?;
        }
        let sol = lp.solve()?;
        let coeffs = (0..n).map(|i| &sol.x[i] - &sol.x[n + i]).collect();
        Ok(StableNormResult {
            value: sol.value,
            optimal_cycle: Chain { degree: q, coeffs },
            certificate: NormCertificate::OptimalLp,
        })
    }

    fn check_class(&self, class: &HomologyClass) -> Result<()> {
        let d = self.homology.degree(class.degree)?;
        if class.coords.len() != d.betti {
            return Err(Error::CoordinateLength { got: class.coords.len(), expected: d.betti });
        }
        Ok(())
    }

    /// Exact stable norm of a rational class.
    pub fn stable_norm(&self, class: &HomologyClass) -> Result<StableNormResult> {
        self.check_class(class)?;
        if class.is_zero() {
            return Ok(StableNormResult {
                value: Rational::zero(),
                optimal_cycle: Chain::zero(self.complex, class.degree),
                certificate: NormCertificate::TrivialZeroClass,
            });
        }
        let z = match &class.representative {
            Some(z) => z.clone(),
            None => self.homology.representative(self.complex, class)?,
        };
        self.min_mass(class.degree, &z, &[])
    }

    /// Least norm over classes whose `i`-th coordinate is 1, the others rational.
    pub fn slab_constant(&self, q: usize, i: usize) -> Result<Rational> {
        let gens = self.homology.generators(q);
        if i >= gens.len() {
            return Err(Error::CoordinateLength { got: i + 1, expected: gens.len() });
        }
        let free: Vec<&Chain> = gens.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g).collect();
        Ok(self.min_mass(q, &gens[i], &free)?.value)
    }

    /// Degrees above the top dimension have no homology and give `Trivial`.
    pub fn stable_systole(&self, q: usize, radius: u32) -> Result<SystoleResult> {
        let betti = self.homology.betti(q);
        if betti == 0 {
            return Ok(SystoleResult::Trivial);
        }
        if betti == 1 {
            let v = self.stable_norm(&HomologyClass::from_integers(q, &[1]))?.value;
            return Ok(SystoleResult::Finite { value: v, witness: vec![1], status: SearchStatus::Exact });
        }
        let radius = radius.max(1);
        let mut best: Option<(Rational, Vec<i64>)> = None;
        for v in primitive_box(betti, radius as i64) {
            let norm = self.stable_norm(&HomologyClass::from_integers(q, &v))?.value;
            if best.as_ref().is_none_or(|(b, _)| norm < *b) {
                best = Some((norm, v));
            }
        }
        let (value, witness) = best.expect("box contains a primitive vector");
        let mut c_min: Option<Rational> = None;
        for i in 0..betti {
            let c = self.slab_constant(q, i)?;
            if c_min.as_ref().is_none_or(|m| c < *m) {
                c_min = Some(c);
            }
        }
        let bound = c_min.expect("betti >= 2") * rat(radius as i64);
        let status = if value <= bound { SearchStatus::Certified } else { SearchStatus::BoundedSearch(radius) };
        Ok(SystoleResult::Finite { value, witness, status })
    }
}

/// Nonzero integer vectors in `[-r, r]^dim` that are primitive and whose first nonzero
/// entry is positive (norms are even and homogeneous, so nothing else can be smaller).
pub fn primitive_box(dim: usize, r: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * r + 1) as u64;
    let total = side.pow(dim as u32);
    (0..total).filter_map(move |mut idx| {
        let mut v = vec![0i64; dim];
        for x in v.iter_mut().rev() {
            *x = (idx % side) as i64 - r;
            idx /= side;
        }
        let first = *v.iter().find(|x| **x != 0)?;
        if first < 0 {
            return None;
        }
        let g = v.iter().fold(0i64, |g, x| g.gcd(x));
        (g == 1).then_some(v)
    })
}

pub fn stable_norm(k: &WeightedCellComplex, class: &HomologyClass) -> Result<StableNormResult> {
    NormSolver::new(k).stable_norm(class)
}

pub fn stable_systole(k: &WeightedCellComplex, q: usize, radius: u32) -> Result<SystoleResult> {
    NormSolver::new(k).stable_systole(q, radius)
}

fn finite(k: &WeightedCellComplex, q: usize, radius: u32) -> Result<Rational> {
    match stable_systole(k, q, radius)? {
        SystoleResult::Trivial => Err(Error::TrivialSystole(q)),
        SystoleResult::Finite { value, .. } => Ok(value),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable(String),
}

impl Verdict {
    /// Process exit status: 0 pass, 1 failed relation, 2 hypotheses not met.
    pub fn exit_code(&self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inapplicable(_) => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::Fail => f.write_str("FAIL"),
            Verdict::Inapplicable(why) => write!(f, "INAPPLICABLE ({why})"),
        }
    }
}

/// Named exact quantities and the relation checked between them.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check: String,
    pub quantities: Vec<(String, Rational)>,
    pub verdict: Verdict,
}

impl VerificationReport {
    fn new(check: impl Into<String>, quantities: Vec<(String, Rational)>, holds: bool) -> Self {
        let verdict = if holds { Verdict::Pass } else { Verdict::Fail };
        Self { check: check.into(), quantities, verdict }
    }

    fn inapplicable(check: impl Into<String>, why: impl Into<String>) -> Self {
        Self { check: check.into(), quantities: Vec::new(), verdict: Verdict::Inapplicable(why.into()) }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn quantity(&self, name: &str) -> Option<&Rational> {
        self.quantities.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.check, self.verdict)?;
        for (name, v) in &self.quantities {
            writeln!(f, "  {name} = {}", fmt_rational(v))?;
        }
        Ok(())
    }
}

/// `stsys_q(t K) = t^q stsys_q(K)` for the uniformly rescaled metric.
pub fn verify_rescaling(
    k: &WeightedCellComplex,
    q: usize,
    t: &Rational,
    radius: u32,
) -> Result<VerificationReport> {
    let base = finite(k, q, radius)?;
    let scaled = finite(&k.rescale(t, Scaling::Uniform)?, q, radius)?;
    let predicted = pow_i(t, q as i64) * &base;
    let holds = scaled == predicted;
    Ok(VerificationReport::new(
        format!("rescale q={q} t={}", fmt_rational(t)),
        vec![
            ("stsys(K)".into(), base),
            ("stsys(tK)".into(), scaled),
            ("t^q * stsys(K)".into(), predicted),
        ],
        holds,
    ))
}

/// `stsys_{p+q}(K x L) <= stsys_p(K) * stsys_q(L)` with product weights.
pub fn verify_product_inequality(
    k: &WeightedCellComplex,
    l: &WeightedCellComplex,
    p: usize,
    q: usize,
    radius: u32,
) -> Result<VerificationReport> {
    let sk = finite(k, p, radius)?;
    let sl = finite(l, q, radius)?;
    let prod = finite(&k.product(l), p + q, radius)?;
    let rhs = &sk * &sl;
    let holds = prod <= rhs;
    Ok(VerificationReport::new(
        format!("product p={p} q={q}"),
        vec![
            ("stsys_p(K)".into(), sk),
            ("stsys_q(L)".into(), sl),
            ("stsys_{p+q}(KxL)".into(), prod),
            ("stsys_p(K)*stsys_q(L)".into(), rhs),
        ],
        holds,
    ))
}

/// `stsys_q(K x L) = stsys_q(K)` when degree-q homology of the product is `H_q(K) x H_0(L)`.
pub fn verify_projection_equality(
    k: &WeightedCellComplex,
    l: &WeightedCellComplex,
    q: usize,
    radius: u32,
) -> Result<VerificationReport> {
    let check = format!("projection q={q}");
    let hk = homology(k);
    let hl = homology(l);
    if hk.betti(q) == 0 {
        return Ok(VerificationReport::inapplicable(check, format!("betti_{q}(K) = 0")));
    }
    if hl.betti(0) != 1 {
        return Ok(VerificationReport::inapplicable(check, "second factor is not connected"));
    }
    let mixed: usize = (1..=q).map(|b| hk.betti(q - b) * hl.betti(b)).sum();
    if mixed > 0 {
        return Ok(VerificationReport::inapplicable(
            check,
            format!("{mixed} product classes in degree {q} involve positive-degree classes of L"),
        ));
    }
    let kl = k.product(l);
    let solver = NormSolver::new(&kl);
    let b_prod = solver.homology().betti(q);
    if b_prod != hk.betti(q) {
        return Ok(VerificationReport::inapplicable(
            check,
            format!("betti_{q}(KxL) = {b_prod} != betti_{q}(K) = {}", hk.betti(q)),
        ));
    }
    let lhs = finite(k, q, radius)?;
    let rhs = solver.stable_systole(q, radius)?.value().cloned().ok_or(Error::TrivialSystole(q))?;
    let holds = lhs == rhs;
    Ok(VerificationReport::new(
        check,
        vec![("stsys_q(K)".into(), lhs), ("stsys_q(KxL)".into(), rhs)],
        holds,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use num_traits::Signed;
    use crate::rational::frac;

    #[test]
    fn circle_generator_norm() {
        let k = library::circle(3);
        let r = stable_norm(&k, &HomologyClass::from_integers(1, &[1])).unwrap();
        assert_eq!(r.value, rat(3));
        assert!(r.optimal_cycle.coeffs.iter().all(|c| c.abs() == rat(1)));
        assert!(r.optimal_cycle.is_cycle(&k).unwrap());
    }

    #[test]
    fn zero_class() {
        let k = library::circle(3);
        let r = stable_norm(&k, &HomologyClass::from_integers(1, &[0])).unwrap();
        assert_eq!(r.value, rat(0));
        assert_eq!(r.certificate, NormCertificate::TrivialZeroClass);
    }

    #[test]
    fn wrong_coordinate_length() {
        let k = library::circle(3);
        let e = stable_norm(&k, &HomologyClass::from_integers(1, &[1, 0]));
        assert!(matches!(e, Err(Error::CoordinateLength { got: 2, expected: 1 })));
        assert!(matches!(
            stable_norm(&k, &HomologyClass::from_integers(4, &[1])),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn torus_meridian_has_unit_length() {
        let k = library::flat_torus(4, frac(1, 4));
        let solver = NormSolver::new(&k);
        for i in 0..2 {
            let mut v = vec![0; 2];
            v[i] = 1;
            let r = solver.stable_norm(&HomologyClass::from_integers(1, &v)).unwrap();
            assert_eq!(r.value, rat(1));
        }
        let s = solver.stable_systole(1, DEFAULT_SEARCH_RADIUS).unwrap();
        assert_eq!(s.value(), Some(&rat(1)));
        assert_eq!(s.status(), Some(SearchStatus::Certified));
    }

    #[test]
    fn degree_zero_is_one() {
        for k in [library::circle(5), library::sphere(2), library::torus9(), library::point()] {
            assert_eq!(stable_systole(&k, 0, 5).unwrap().value(), Some(&rat(1)));
        }
    }

    #[test]
    fn verdict_exit_codes() {
        assert_eq!(Verdict::Pass.exit_code(), 0);
        assert_eq!(Verdict::Fail.exit_code(), 1);
        assert_eq!(Verdict::Inapplicable("x".into()).exit_code(), 2);
    }

    #[test]
    fn torsion_only_is_trivial() {
        assert!(stable_systole(&library::rp2(), 1, 5).unwrap().is_trivial());
        assert!(stable_systole(&library::sphere(2), 1, 5).unwrap().is_trivial());
        assert!(stable_systole(&library::circle(3), 2, 5).unwrap().is_trivial());
    }

    #[test]
    fn primitive_box_counts() {
        // primitive vectors in [-1,1]^2 up to sign: (0,1), (1,-1), (1,0), (1,1)
        assert_eq!(primitive_box(2, 1).count(), 4);
        assert!(primitive_box(2, 3).all(|v| v.iter().fold(0i64, |g, x| g.gcd(x)) == 1));
    }

    #[test]
    fn rescaling_circle() {
        let k = library::circle(3);
        let r = verify_rescaling(&k, 1, &rat(2), 5).unwrap();
        assert!(r.passed());
        assert_eq!(r.quantity("stsys(tK)"), Some(&rat(6)));
        assert!(matches!(verify_rescaling(&k, 2, &rat(2), 5), Err(Error::TrivialSystole(2))));
        assert!(matches!(
            verify_rescaling(&library::sphere(2), 1, &rat(2), 5),
            Err(Error::TrivialSystole(1))
        ));
    }

    #[test]
    fn projection_inapplicable_on_torus() {
        let r = verify_projection_equality(&library::circle(3), &library::circle(3), 1, 5).unwrap();
        assert!(matches!(r.verdict, Verdict::Inapplicable(_)));
    }
}
