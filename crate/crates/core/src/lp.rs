//! Exact rational simplex method.
//!
//! Solves `minimize c·x subject to A·x = b, x >= 0` with a dense tableau, a two-phase
//! start and Bland's rule for pivot selection, so it terminates on degenerate problems.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("constraint {row} has {got} coefficients, expected {expected}")]
    Shape { row: usize, got: usize, expected: usize },
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    objective: Vec<Rational>,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
    pub pivots: usize,
}

impl LinearProgram {
    pub fn new(objective: Vec<Rational>) -> Self {
        Self { objective, rows: Vec::new(), rhs: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// Adds the equality `coeffs · x = rhs`.
    pub fn add_eq(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<(), LpError> {
        if coeffs.len() != self.num_vars() {
            return Err(LpError::Shape {
                row: self.rows.len(),
                got: coeffs.len(),
                expected: self.num_vars(),
            });
        }
        self.rows.push(coeffs);
        self.rhs.push(rhs);
        Ok(())
    }

    pub fn solve(&self) -> Result<LpSolution, LpError> {
        Tableau::build(self).run(&self.objective)
    }
}

struct Tableau {
    // m constraint rows, each with `width` coefficients followed by the rhs.
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    // reduced costs for the active objective, same layout as a row
    obj: Vec<Rational>,
    n: usize,
    width: usize,
    pivots: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let n = lp.num_vars();
        let m = lp.rows.len();
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
        for (row, b) in lp.rows.iter().zip(&lp.rhs) {
            let mut r = row.clone();
            let mut b = b.clone();
            if b.is_negative() {
                r.iter_mut().for_each(|x| *x = -x.clone());
                b = -b;
            }
            r.push(b);
            rows.push(r);
        }
        // A column that is a unit vector can start in the basis; other rows get an artificial.
        let mut basis = vec![usize::MAX; m];
        for j in 0..n {
            let mut hit = None;
            let mut unit = true;
            for (i, r) in rows.iter().enumerate() {
                if r[j].is_zero() {
                    continue;
                }
                if hit.is_some() || !r[j].is_one() {
                    unit = false;
                    break;
                }
                hit = Some(i);
            }
            if let (true, Some(i)) = (unit, hit) {
                if basis[i] == usize::MAX {
                    basis[i] = j;
                }
            }
        }
        let artificial_rows: Vec<usize> = (0..m).filter(|&i| basis[i] == usize::MAX).collect();
        let width = n + artificial_rows.len();
        let mut t = Vec::with_capacity(m);
        for r in rows {
            let mut full = r[..n].to_vec();
            full.resize(width, Rational::zero());
            full.push(r[n].clone());
            t.push(full);
        }
        for (k, &i) in artificial_rows.iter().enumerate() {
            t[i][n + k] = Rational::one();
            basis[i] = n + k;
        }
        Self { t, basis, obj: Vec::new(), n, width, pivots: 0 }
    }

    fn rhs(&self, i: usize) -> &Rational {
        &self.t[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.t[r][c].recip();
        if !inv.is_one() {
            for x in self.t[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let prow = std::mem::take(&mut self.t[r]);
        let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
        for (i, row) in self.t.iter_mut().chain(std::iter::once(&mut self.obj)).enumerate() {
            if i == r || row.is_empty() || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                let v = &f * &prow[j];
                row[j] -= v;
            }
        }
        self.t[r] = prow;
        self.basis[r] = c;
        self.pivots += 1;
    }

    /// Minimizes `cost` over the columns in `allowed`; Bland's rule throughout.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Result<(), LpError> {
        let mut obj = cost.to_vec();
        obj.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (o, a) in obj.iter_mut().zip(&self.t[i]) {
                if !a.is_zero() {
                    *o -= &cost[b] * a;
                }
            }
        }
        self.obj = obj;
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Err(LpError::Unbounded);
            };
            self.pivot(r, c);
        }
    }

    fn run(mut self, objective: &[Rational]) -> Result<LpSolution, LpError> {
        let n = self.n;
        if self.width > n {
            let mut phase1 = vec![Rational::zero(); self.width];
            for c in phase1.iter_mut().skip(n) {
                *c = Rational::one();
            }
            self.optimize(&phase1, self.width)?;
            let infeasibility: Rational = (0..self.t.len())
                .filter(|&i| self.basis[i] >= n)
                .map(|i| self.rhs(i).clone())
                .sum();
            if !infeasibility.is_zero() {
                return Err(LpError::Infeasible);
            }
            // Drive zero-level artificials out; rows with nothing to pivot on are redundant.
            let mut i = 0;
            while i < self.t.len() {
                if self.basis[i] >= n {
                    if let Some(c) = (0..n).find(|&j| !self.t[i][j].is_zero()) {
                        self.pivot(i, c);
                    } else {
                        self.t.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
                i += 1;
            }
        }
        let mut cost = objective.to_vec();
        cost.resize(self.width, Rational::zero());
        self.optimize(&cost, n)?;
        let mut x = vec![Rational::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rhs(i).clone();
            }
        }
        let value = x.iter().zip(objective).map(|(a, c)| a * c).sum();
        Ok(LpSolution { value, x, pivots: self.pivots })
    }
}
