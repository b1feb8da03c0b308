//! Exact dense linear algebra over the rationals: rank, determinant,
//! kernel and image bases, greedy minor selection, and an opt-in
//! multi-modular determinant.
//!
//! The reference determinant is fraction-free Bareiss elimination on the
//! integer matrix obtained by clearing row denominators; intermediate
//! entries stay minors of the input, which keeps coefficient growth under
//! control compared to naive elimination over Q.

mod modular;

pub use modular::det_multimodular;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::Rat;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("independent column selection impossible: needed {needed}, found {found}")]
    SelectionImpossible { needed: usize, found: usize },
}

/// Dense rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(rows: usize, cols: Vec<Vec<Rat>>) -> Self {
        let c = cols.len();
        assert!(cols.iter().all(|col| col.len() == rows), "ragged columns");
        Self::from_fn(rows, c, |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + a * b;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += self.get(i, j) * x;
                    }
                }
                acc
            })
            .collect())
    }

    /// Kronecker product with the k-by-k identity: entry (i,j) becomes an
    /// identity-scaled k-block. det(A (x) I_k) = det(A)^k.
    pub fn kron_identity(&self, k: usize) -> Self {
        Self::from_fn(self.rows * k, self.cols * k, |r, c| {
            if r % k == c % k {
                self.get(r / k, c / k).clone()
            } else {
                Rat::zero()
            }
        })
    }

    /// Submatrix from sorted row and column index lists.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Self::from_fn(row_idx.len(), col_idx.len(), |r, c| {
            self.get(row_idx[r], col_idx[c]).clone()
        })
    }

    /// Exact row rank, via fraction-free elimination on the denominator-
    /// cleared integer matrix.
    pub fn rank(&self) -> usize {
        let (int_rows, _) = to_integer_rows(self);
        bareiss_echelon(int_rows).pivots.len()
    }

    /// Exact determinant by Bareiss elimination.
    pub fn det(&self) -> Result<Rat, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(Rat::one());
        }
        let (int_rows, scales) = to_integer_rows(self);
        let ech = bareiss_echelon(int_rows);
        if ech.pivots.len() < self.rows {
            return Ok(Rat::zero());
        }
        let det_int = if ech.sign < 0 { -ech.last_pivot } else { ech.last_pivot };
        let mut denom = BigInt::one();
        for s in scales {
            denom *= s;
        }
        Ok(Rat::new(det_int, denom))
    }

    /// Basis of the right null space; empty iff the matrix is injective.
    /// Deterministic: computed from the reduced row echelon form with
    /// lowest-index pivots, one basis vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m: Vec<Vec<Rat>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut row = 0usize;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].clone().recip();
            for x in m[row][col..].iter_mut() {
                *x *= &inv;
            }
            for r in 0..self.rows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..self.cols {
                        let delta = &m[row][c] * &f;
                        m[r][c] -= delta;
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == self.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for &(r, c) in &pivots {
                v[c] = -m[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse via Gauss-Jordan; errors on singular input.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| {
                    if c == r {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Err(LinalgError::Singular);
            };
            m.swap(col, p);
            let inv = m[col][col].clone().recip();
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..2 * n {
                        let delta = &m[col][c] * &f;
                        m[r][c] -= delta;
                    }
                }
            }
        }
        Ok(Self::from_fn(n, n, |r, c| m[r][n + c].clone()))
    }
}

/// Clear denominators row by row; returns integer rows plus the factor each
/// row was multiplied by.
fn to_integer_rows(m: &QMatrix) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut rows = Vec::with_capacity(m.rows);
    let mut scales = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let mut l = BigInt::one();
        for c in 0..m.cols {
            l = l.lcm(m.get(r, c).denom());
        }
        let row: Vec<BigInt> = (0..m.cols)
            .map(|c| {
                let x = m.get(r, c);
                x.numer() * (&l / x.denom())
            })
            .collect();
        rows.push(row);
        scales.push(l);
    }
    (rows, scales)
}

struct Echelon {
    pivots: Vec<(usize, usize)>,
    sign: i32,
    /// Final Bareiss pivot; for a full-rank square matrix this is the
    /// determinant of the (sign-adjusted) integer matrix.
    last_pivot: BigInt,
}

/// One-step fraction-free (Bareiss) row echelon on an integer matrix.
/// All divisions are exact.
fn bareiss_echelon(mut m: Vec<Vec<BigInt>>) -> Echelon {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if p != row {
            m.swap(row, p);
            sign = -sign;
        }
        let pivot = m[row][col].clone();
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &pivot * &m[r][c] - &m[r][col] * &m[row][c];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        pivots.push((row, col));
        prev = pivot;
        row += 1;
    }
    Echelon {
        pivots,
        sign,
        last_pivot: prev,
    }
}

/// Chosen square submatrix: sorted row and column indices of equal length
/// whose intersection is invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorSelection {
    pub row_indices: Vec<usize>,
    pub col_indices: Vec<usize>,
}

/// Greedy lowest-index choice of rank(M) columns with independent images,
/// skipping `forbidden`. Errors when the allowed columns cannot reach the
/// full rank.
pub fn select_independent_columns(
    m: &QMatrix,
    forbidden: &[usize],
) -> Result<MinorSelection, LinalgError> {
    let order: Vec<usize> = (0..m.cols()).filter(|c| !forbidden.contains(c)).collect();
    select_independent_columns_ordered(m, &order)
}

/// Same greedy selection, but scanning candidate columns in the supplied
/// order. Every order that can reach rank(M) yields a valid selection;
/// different orders exercise the choice-independence of downstream torsions.
pub fn select_independent_columns_ordered(
    m: &QMatrix,
    order: &[usize],
) -> Result<MinorSelection, LinalgError> {
    let target = m.rank();
    // incremental elimination state: reduced vectors with their pivot rows
    let mut reduced: Vec<(usize, Vec<Rat>)> = Vec::new();
    let mut cols = Vec::new();
    let mut pivot_rows = Vec::new();
    for &c in order {
        if cols.len() == target {
            break;
        }
        let mut v = m.column(c);
        for (p, u) in &reduced {
            if !v[*p].is_zero() {
                let f = &v[*p] / &u[*p];
                for (x, y) in v.iter_mut().zip(u) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            reduced.push((p, v));
            cols.push(c);
            pivot_rows.push(p);
        }
    }
    if cols.len() < target {
        return Err(LinalgError::SelectionImpossible {
            needed: target,
            found: cols.len(),
        });
    }
    cols.sort_unstable();
    pivot_rows.sort_unstable();
    Ok(MinorSelection {
        row_indices: pivot_rows,
        col_indices: cols,
    })
}
