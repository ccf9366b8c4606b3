//! Smith normal form over arbitrary-precision integers.
//!
//! For an `m x n` matrix `M` the decomposition is `M = U · D · V` where `U`, `V` are
//! unimodular and `D` is diagonal with `d_1 | d_2 | ...`. The inverses of `U` and `V`
//! are tracked alongside so that homology can change bases in either direction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct Reducer {
    a: IntMatrix,
    // p · M · q = a throughout; p_inv and q_inv are kept in step.
    p: IntMatrix,
    p_inv: IntMatrix,
    q: IntMatrix,
    q_inv: IntMatrix,
}

impl Reducer {
    // row_i -= f · row_t
    fn row_sub(&mut self, i: usize, t: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for m in [&mut self.a, &mut self.p] {
            for j in 0..m.cols() {
                let v = &m[(i, j)] - f * &m[(t, j)];
                m[(i, j)] = v;
            }
        }
        // p_inv: column t += f · column i
        let m = &mut self.p_inv;
        for r in 0..m.rows() {
            let v = &m[(r, t)] + f * &m[(r, i)];
            m[(r, t)] = v;
        }
    }

    // col_j -= f · col_t
    fn col_sub(&mut self, j: usize, t: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for m in [&mut self.a, &mut self.q] {
            for r in 0..m.rows() {
                let v = &m[(r, j)] - f * &m[(r, t)];
                m[(r, j)] = v;
            }
        }
        // q_inv: row t += f · row j
        let m = &mut self.q_inv;
        for c in 0..m.cols() {
            let v = &m[(t, c)] + f * &m[(j, c)];
            m[(t, c)] = v;
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.p.swap_rows(i, j);
        self.p_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.q.swap_cols(i, j);
        self.q_inv.swap_rows(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.a.cols() {
            let v = -&self.a[(i, j)];
            self.a[(i, j)] = v;
        }
        for j in 0..self.p.cols() {
            let v = -&self.p[(i, j)];
            self.p[(i, j)] = v;
        }
        for r in 0..self.p_inv.rows() {
            let v = -&self.p_inv[(r, i)];
            self.p_inv[(r, i)] = v;
        }
    }

    fn smallest_in(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn reduce_at(&mut self, t: usize) -> bool {
        let Some((pi, pj)) = self.smallest_in(t) else {
            return false;
        };
        self.swap_rows(t, pi);
        self.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..self.a.rows() {
                if self.a[(i, t)].is_zero() {
                    continue;
                }
                let f = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                self.row_sub(i, t, &f);
                if !self.a[(i, t)].is_zero() {
                    // remainder is smaller than the pivot: promote it
                    self.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..self.a.cols() {
                if self.a[(t, j)].is_zero() {
                    continue;
                }
                let f = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                self.col_sub(j, t, &f);
                if !self.a[(t, j)].is_zero() {
                    self.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            let pivot = self.a[(t, t)].clone();
            let offender = (t + 1..self.a.rows()).find(|&i| {
                (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    // row_t += row_i, then re-clear
                    self.row_sub(t, i, &-BigInt::one());
                }
                None => break,
            }
        }
        if self.a[(t, t)].is_negative() {
            self.negate_row(t);
        }
        true
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = Reducer {
        a: m.clone(),
        p: IntMatrix::identity(rows),
        p_inv: IntMatrix::identity(rows),
        q: IntMatrix::identity(cols),
        q_inv: IntMatrix::identity(cols),
    };
    for t in 0..rows.min(cols) {
        if !r.reduce_at(t) {
            break;
        }
    }
    SmithForm { u: r.p_inv, u_inv: r.p, d: r.a, v: r.q_inv, v_inv: r.q }
}
