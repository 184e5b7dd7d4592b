//! Small dense integer matrices.
//!
//! Everything in this crate happens at Lie-algebra rank (at most a few
//! dozen), so a row-major `Vec<i64>` is all we need. Exact rational
//! solves are provided for the few places that invert a Cartan matrix.

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matvec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Places `block` on the diagonal starting at `(offset, offset)`.
    pub fn insert_block(&mut self, offset: usize, block: &IntMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(offset + i, offset + j)] = block[(i, j)];
            }
        }
    }

    /// Exact determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                    return 0;
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        i64::try_from(sign * m[n - 1][n - 1]).expect("determinant overflows i64")
    }

    /// Solves `self * x = b` exactly over the rationals.
    ///
    /// Errors with [`Error::RankMismatch`] on shape problems and panics if
    /// the matrix is singular (callers only invert Cartan matrices, which
    /// are invertible by construction).
    pub fn solve(&self, b: &[Ratio<i64>]) -> Result<Vec<Ratio<i64>>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if b.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: b.len(),
            });
        }
        let mut aug: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&x| Ratio::from_integer(x))
                    .chain(std::iter::once(b[i]))
                    .collect()
            })
            .collect();
        for k in 0..n {
            let pivot = (k..n)
                .find(|&i| !aug[i][k].is_zero())
                .expect("singular matrix in exact solve");
            aug.swap(k, pivot);
            let inv = aug[k][k].recip();
            for j in k..=n {
                aug[k][j] *= inv;
            }
            for i in 0..n {
                if i != k && !aug[i][k].is_zero() {
                    let factor = aug[i][k];
                    for j in k..=n {
                        let sub = factor * aug[k][j];
                        aug[i][j] -= sub;
                    }
                }
            }
        }
        Ok(aug.into_iter().map(|row| row[n]).collect())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}
