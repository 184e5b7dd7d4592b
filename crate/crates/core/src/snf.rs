//! Smith normal form over the integers with tracked unimodular transforms.
//!
//! For an integer matrix `M` this computes `U * M * V = D` with `U`, `V`
//! unimodular and `D` diagonal with `d_1 | d_2 | ... | d_r ≥ 0`. The
//! diagonal is the single source of truth for every lattice quotient in
//! this crate; no per-type center table exists outside the tests.

use crate::matrix::IntMatrix;

#[derive(Debug, Clone)]
pub struct Snf {
    /// Diagonal entries, nonnegative, each dividing the next.
    pub diagonal: Vec<i64>,
    /// Left transform: `u * m * v` is diagonal.
    pub u: IntMatrix,
    /// Inverse of `u`, maintained alongside it.
    pub u_inv: IntMatrix,
    /// Right transform.
    pub v: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut calc = Calc {
        a: m.clone(),
        u: IntMatrix::identity(m.nrows()),
        u_inv: IntMatrix::identity(m.nrows()),
        v: IntMatrix::identity(m.ncols()),
    };
    calc.run();
    let n = m.nrows().min(m.ncols());
    let diagonal = (0..n).map(|i| calc.a[(i, i)]).collect();
    Snf {
        diagonal,
        u: calc.u,
        u_inv: calc.u_inv,
        v: calc.v,
    }
}

struct Calc {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl Calc {
    fn run(&mut self) {
        let n = self.a.nrows().min(self.a.ncols());
        let mut t = 0;
        while t < n {
            if !self.move_pivot(t) {
                break; // submatrix is zero
            }
            self.clear_cross(t);
            // The pivot must divide every remaining entry; if not, fold the
            // offending row in and clear again.
            if let Some(i) = self.non_divisible_row(t) {
                self.add_row(t, i, 1);
                continue;
            }
            t += 1;
        }
        for i in 0..n {
            if self.a[(i, i)] < 0 {
                self.negate_row(i);
            }
        }
    }

    /// Moves a minimal-magnitude nonzero entry of the trailing submatrix
    /// to `(t, t)`. Returns false if the submatrix vanishes.
    fn move_pivot(&mut self, t: usize) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.nrows() {
            for j in t..self.a.ncols() {
                let x = self.a[(i, j)].abs();
                if x != 0 && best.map_or(true, |b| x < self.a[b].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((i, j)) = best else { return false };
        if i != t {
            self.swap_rows(t, i);
        }
        if j != t {
            self.swap_cols(t, j);
        }
        true
    }

    /// Zeroes row `t` and column `t` off the pivot by Euclidean steps.
    fn clear_cross(&mut self, t: usize) {
        loop {
            let mut progressed = false;
            for i in t + 1..self.a.nrows() {
                if self.a[(i, t)] != 0 {
                    let q = self.a[(i, t)].div_euclid(self.a[(t, t)]);
                    if q != 0 {
                        self.add_row(i, t, -q);
                    }
                    if self.a[(i, t)] != 0 {
                        self.swap_rows(t, i); // remainder becomes the smaller pivot
                    }
                    progressed = true;
                }
            }
            for j in t + 1..self.a.ncols() {
                if self.a[(t, j)] != 0 {
                    let q = self.a[(t, j)].div_euclid(self.a[(t, t)]);
                    if q != 0 {
                        self.add_col(j, t, -q);
                    }
                    if self.a[(t, j)] != 0 {
                        self.swap_cols(t, j);
                    }
                    progressed = true;
                }
            }
            if !progressed {
                return;
            }
        }
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let d = self.a[(t, t)];
        for i in t + 1..self.a.nrows() {
            for j in t + 1..self.a.ncols() {
                if self.a[(i, j)] % d != 0 {
                    return Some(i);
                }
            }
        }
        None
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for k in 0..self.a.ncols() {
            let (x, y) = (self.a[(i, k)], self.a[(j, k)]);
            self.a[(i, k)] = y;
            self.a[(j, k)] = x;
        }
        for k in 0..self.u.ncols() {
            let (x, y) = (self.u[(i, k)], self.u[(j, k)]);
            self.u[(i, k)] = y;
            self.u[(j, k)] = x;
        }
        for k in 0..self.u_inv.nrows() {
            let (x, y) = (self.u_inv[(k, i)], self.u_inv[(k, j)]);
            self.u_inv[(k, i)] = y;
            self.u_inv[(k, j)] = x;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for k in 0..self.a.nrows() {
            let (x, y) = (self.a[(k, i)], self.a[(k, j)]);
            self.a[(k, i)] = y;
            self.a[(k, j)] = x;
        }
        for k in 0..self.v.nrows() {
            let (x, y) = (self.v[(k, i)], self.v[(k, j)]);
            self.v[(k, i)] = y;
            self.v[(k, j)] = x;
        }
    }

    /// row(i) += c * row(j), mirrored into U and U⁻¹.
    fn add_row(&mut self, i: usize, j: usize, c: i64) {
        for k in 0..self.a.ncols() {
            self.a[(i, k)] += c * self.a[(j, k)];
        }
        for k in 0..self.u.ncols() {
            self.u[(i, k)] += c * self.u[(j, k)];
        }
        for k in 0..self.u_inv.nrows() {
            let sub = c * self.u_inv[(k, i)];
            self.u_inv[(k, j)] -= sub;
        }
    }

    /// col(i) += c * col(j), mirrored into V.
    fn add_col(&mut self, i: usize, j: usize, c: i64) {
        for k in 0..self.a.nrows() {
            self.a[(k, i)] += c * self.a[(k, j)];
        }
        for k in 0..self.v.nrows() {
            self.v[(k, i)] += c * self.v[(k, j)];
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.a.ncols() {
            self.a[(i, k)] = -self.a[(i, k)];
        }
        for k in 0..self.u.ncols() {
            self.u[(i, k)] = -self.u[(i, k)];
        }
        for k in 0..self.u_inv.nrows() {
            self.u_inv[(k, i)] = -self.u_inv[(k, i)];
        }
    }
}
