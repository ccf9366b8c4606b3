//! Fixtures and independent oracles shared by the integration tests.
//!
//! The oracles here deliberately avoid the crate's matrix, SNF and LP code: cycles are
//! enumerated directly from boundary columns and classes are tested with a separate
//! rational elimination.

#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stsys::complex::WeightedCellComplex;
use stsys::library;
use stsys::rational::{frac, rat, Rational};

pub struct Fixture {
    pub name: &'static str,
    pub complex: WeightedCellComplex,
    pub q: usize,
}

fn fixture(name: &'static str, complex: WeightedCellComplex, q: usize) -> Fixture {
    Fixture { name, complex, q }
}

/// Small complexes (at most 30 cells, betti_q at most 2) for the brute-force comparison.
pub fn small_fixtures() -> Vec<Fixture> {
    let lengths = [frac(1, 2), rat(3), frac(7, 5), rat(2), rat(1)];
    let sphere = library::sphere(2).with_weights(2, vec![rat(1), rat(2), rat(3), rat(4)]).unwrap();
    let sphere3 = library::sphere(3)
        .with_weights(3, vec![frac(1, 2), rat(1), frac(3, 2), rat(2), frac(5, 2)])
        .unwrap();
    let uneven = library::circle_with_lengths(&[rat(1), rat(2), rat(3)]).unwrap();
    vec![
        fixture("circle(3)", library::circle(3), 1),
        fixture("weighted circle(5)", library::circle_with_lengths(&lengths).unwrap(), 1),
        fixture("cubical circle(2)", library::cubical_circle(2, frac(3, 2)), 1),
        fixture("cubical circle(1)", library::cubical_circle(1, rat(5)), 1),
        fixture("weighted sphere(2)", sphere, 2),
        fixture("cubical sphere(2), q=2", library::cubical_sphere(2), 2),
        fixture("sphere(2), q=1", library::sphere(2), 1),
        fixture("uneven circle x cubical circle, q=1", uneven.product(&library::cubical_circle(2, frac(1, 2))), 1),
        fixture("circle(3) x cubical circle(2), q=2", library::circle(3).product(&library::cubical_circle(2, rat(1))), 2),
        fixture("circle(3) x cubical circle(2), q=1", library::circle(3).product(&library::cubical_circle(2, rat(1))), 1),
        fixture(
            "theta graph",
            library::graph(2, &[(0, 1), (0, 1), (0, 1)], &[rat(1), rat(2), rat(3)]).unwrap(),
            1,
        ),
        fixture("wedge of two loops", library::graph(1, &[(0, 0), (0, 0)], &[rat(2), frac(5, 2)]).unwrap(), 1),
        fixture("weighted sphere(3)", sphere3, 3),
        fixture("two disjoint circles, q=0", library::circle(3).disjoint_union(&library::circle(4)), 0),
    ]
}

/// Rank of a rational matrix by plain Gaussian elimination.
pub fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                let src = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&src).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Columns of the degree-`q` boundary, as dense rational vectors over `(q-1)`-cells.
fn boundary_columns(k: &WeightedCellComplex, q: usize) -> Vec<Vec<Rational>> {
    if q == 0 || q > k.top_dim() {
        return Vec::new();
    }
    (0..k.num_cells(q))
        .map(|j| {
            let mut v = vec![Rational::zero(); k.num_cells(q - 1)];
            for &(r, s) in k.boundary_column(q, j) {
                v[r] += rat(s);
            }
            v
        })
        .collect()
}

/// Echelon basis of the rational boundary space in degree `q`, for membership tests.
pub struct BoundarySpace {
    // (pivot column, row with a 1 there and zeros at earlier pivots)
    rows: Vec<(usize, Vec<Rational>)>,
}

impl BoundarySpace {
    pub fn new(k: &WeightedCellComplex, q: usize) -> Self {
        let mut rows: Vec<(usize, Vec<Rational>)> = Vec::new();
        for mut v in boundary_columns(k, q + 1) {
            for (p, r) in &rows {
                if !v[*p].is_zero() {
                    let f = v[*p].clone();
                    for (x, y) in v.iter_mut().zip(r) {
                        *x -= &f * y;
                    }
                }
            }
            if let Some(p) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[p].recip();
                v.iter_mut().for_each(|x| *x *= &inv);
                for (_, r) in rows.iter_mut() {
                    if !r[p].is_zero() {
                        let f = r[p].clone();
                        for (x, y) in r.iter_mut().zip(&v) {
                            *x -= &f * y;
                        }
                    }
                }
                rows.push((p, v));
            }
        }
        Self { rows }
    }

    pub fn contains(&self, c: &[i64]) -> bool {
        let mut v: Vec<Rational> = c.iter().map(|&x| rat(x)).collect();
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= &f * y;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Whether the integer chain `c` is a rational boundary.
pub fn is_boundary(k: &WeightedCellComplex, q: usize, c: &[i64]) -> bool {
    let mut rows = boundary_columns(k, q + 1);
    let base = rational_rank(rows.clone());
    rows.push(c.iter().map(|&x| rat(x)).collect());
    rational_rank(rows) == base
}

/// Least mass of an integral `q`-cycle with coefficients in `[-bound, bound]` that is not
/// a rational boundary; `None` when every such cycle bounds.
///
/// Depth-first over cells with two prunings: a boundary row must vanish once its last
/// cell is fixed, and a partial mass at or above the best found stops the branch. Only
/// cycles whose first nonzero coefficient is positive are visited (mass and boundary
/// membership are invariant under negation).
pub fn brute_force_systole(k: &WeightedCellComplex, q: usize, bound: i64) -> Option<Rational> {
    let n = k.num_cells(q);
    let faces: Vec<Vec<(usize, i64)>> =
        (0..n).map(|j| if q == 0 { Vec::new() } else { k.boundary_column(q, j).to_vec() }).collect();
    let rows = if q == 0 { 0 } else { k.num_cells(q - 1) };
    let mut last = vec![None; rows];
    for (j, col) in faces.iter().enumerate() {
        for &(r, _) in col {
            last[r] = Some(j);
        }
    }
    let mut values = vec![0i64];
    for v in 1..=bound {
        values.extend([v, -v]);
    }

    struct Search {
        boundaries: BoundarySpace,
        weights: Vec<Rational>,
        faces: Vec<Vec<(usize, i64)>>,
        last: Vec<Option<usize>>,
        values: Vec<i64>,
        coeffs: Vec<i64>,
        partial: Vec<i64>,
        best: Option<Rational>,
    }

    impl Search {
        fn go(&mut self, j: usize, mass: Rational, started: bool) {
            if self.best.as_ref().is_some_and(|b| mass >= *b) {
                return;
            }
            if j == self.coeffs.len() {
                if started && !self.boundaries.contains(&self.coeffs) {
                    self.best = Some(mass);
                }
                return;
            }
            for vi in 0..self.values.len() {
                let v = self.values[vi];
                if !started && v < 0 {
                    continue;
                }
                self.coeffs[j] = v;
                for &(r, s) in &self.faces[j] {
                    self.partial[r] += s * v;
                }
                let closed_ok =
                    self.faces[j].iter().all(|&(r, _)| self.last[r] != Some(j) || self.partial[r] == 0);
                if closed_ok {
                    let m = &mass + rat(v.abs()) * &self.weights[j];
                    self.go(j + 1, m, started || v != 0);
                }
                for &(r, s) in &self.faces[j] {
                    self.partial[r] -= s * v;
                }
            }
            self.coeffs[j] = 0;
        }
    }

    let mut s = Search {
        boundaries: BoundarySpace::new(k, q),
        weights: k.weights(q),
        faces,
        last,
        values,
        coeffs: vec![0; n],
        partial: vec![0; rows],
        best: None,
    };
    s.go(0, Rational::zero(), false);
    s.best
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_coords(rng: &mut ChaCha8Rng, len: usize, range: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(-range..=range)).collect()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Freudenthal triangulation of the 3-torus on a `3 x 3 x 3` vertex grid.
pub fn torus3() -> WeightedCellComplex {
    const N: usize = 3;
    let idx = |p: [usize; 3]| p[0] % N + N * (p[1] % N) + N * N * (p[2] % N);
    let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut facets = Vec::new();
    for x in 0..N {
        for y in 0..N {
            for z in 0..N {
                for order in &orders {
                    let mut p = [x, y, z];
                    let mut simplex = vec![idx(p)];
                    for &axis in order {
                        p[axis] += 1;
                        simplex.push(idx(p));
                    }
                    facets.push(simplex);
                }
            }
        }
    }
    WeightedCellComplex::from_facets(&facets).expect("Freudenthal 3-torus is a valid triangulation")
}
