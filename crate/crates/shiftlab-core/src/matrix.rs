//! Dense matrices over a [`FieldSpec`] with exact row reduction.
//!
//! Two elimination kernels are deliberately kept side by side: plain
//! Gauss–Jordan (`rref`, any field, naive fractions over ℚ) and a
//! fraction-free Bareiss elimination used by `rank` over ℚ to keep
//! intermediate integers at minor-sized growth. They are cross-checked
//! against each other in the test suite.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixError {
    /// An entry does not belong to the matrix's field.
    FieldMismatch { row: usize, col: usize },
    /// Rows of unequal length were supplied.
    RaggedRows,
    /// The supplied column order is not a permutation of `0..cols`.
    BadColumnOrder,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::FieldMismatch { row, col } => {
                write!(f, "FieldMismatch: entry ({row}, {col}) does not belong to the field")
            }
            MatrixError::RaggedRows => write!(f, "RaggedRows: rows have unequal lengths"),
            MatrixError::BadColumnOrder => {
                write!(f, "BadColumnOrder: not a permutation of the column indices")
            }
        }
    }
}

impl core::error::Error for MatrixError {}

/// Row-major dense matrix with entries in one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let zero = field.zero();
        Matrix {
            entries: vec![zero; rows * cols],
            field,
            rows,
            cols,
        }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(MatrixError::RaggedRows);
            }
            for (j, s) in row.into_iter().enumerate() {
                if !field.check(&s) {
                    return Err(MatrixError::FieldMismatch { row: i, col: j });
                }
                entries.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        debug_assert!(self.field.check(&s), "scalar does not belong to the field");
        self.entries[i * self.cols + j] = s;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Reduced row echelon form, visiting columns in the given order.
    ///
    /// Pivots are the first nonzero candidate in each visited column
    /// (deterministic), normalized to 1, with their column eliminated above
    /// and below. Returns the reduced matrix and the pivot column of each
    /// nonzero row, in row order.
    pub fn rref(&self, column_order: &[usize]) -> Result<(Matrix, Vec<usize>), MatrixError> {
        if column_order.len() != self.cols {
            return Err(MatrixError::BadColumnOrder);
        }
        let mut seen = vec![false; self.cols];
        for &c in column_order {
            if c >= self.cols || seen[c] {
                return Err(MatrixError::BadColumnOrder);
            }
            seen[c] = true;
        }

        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in column_order {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, pr);
            let pivot_inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = f.mul(m.get(r, j), &pivot_inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in 0..m.cols {
                    let s = m.get(r, j);
                    if f.is_zero(s) {
                        continue;
                    }
                    let v = f.sub(m.get(i, j), &f.mul(&factor, s));
                    m.set(i, j, v);
                }
                m.set(i, c, f.zero());
            }
            pivots.push(c);
            r += 1;
        }
        Ok((m, pivots))
    }

    /// `rref` with the natural column order `0, 1, 2, …`.
    pub fn rref_natural(&self) -> (Matrix, Vec<usize>) {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref(&order).expect("natural order is a permutation")
    }

    /// Exact rank. Over ℚ this runs fraction-free (Bareiss) elimination on
    /// the denominator-cleared integer matrix; over the finite fields it
    /// counts pivots of a plain elimination.
    pub fn rank(&self) -> usize {
        match self.field {
            FieldSpec::Rationals => self.rank_fraction_free(),
            _ => self.rref_natural().1.len(),
        }
    }

    fn rank_fraction_free(&self) -> usize {
        // clear denominators row by row; row scaling preserves rank
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    if let Scalar::Rational(r) = self.get(i, j) {
                        if !r.is_zero() {
                            lcm = lcm.lcm(r.denom());
                        }
                    } else {
                        unreachable!("rational matrix expected");
                    }
                }
                (0..self.cols)
                    .map(|j| match self.get(i, j) {
                        Scalar::Rational(r) => r.numer() * (&lcm / r.denom()),
                        _ => unreachable!(),
                    })
                    .collect()
            })
            .collect();

        // Bareiss: after step k every entry is a (k+1)×(k+1) minor of the
        // column-permuted input, and the division by the previous pivot is
        // exact
        let mut rank = 0;
        let mut prev = BigInt::one();
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pr) = (rank..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, pr);
            for i in rank + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                    m[i][j] = num / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[rank][c].clone();
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
