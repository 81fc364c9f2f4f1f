//! Square matrices over arbitrary-precision integers: products, powers,
//! trace and an exact fraction-free determinant.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must be non-empty and square ({rows} rows, row {row} has {cols} entries)")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("bad matrix entry {text:?} at row {row}, column {column}")]
    BadEntry { text: String, row: usize, column: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(MatrixError::NotSquare {
                    rows: dim,
                    row: i + 1,
                    cols: r.len(),
                });
            }
        }
        if dim == 0 {
            return Err(MatrixError::NotSquare { rows: 0, row: 0, cols: 0 });
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        Self::new(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Parses rows separated by `;` with entries separated by `,`, e.g. `"1,1;1,0"`.
    /// Columns in errors are 1-based character offsets into `text`.
    pub fn parse(text: &str) -> Result<Self, MatrixError> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for (r, row_text) in text.split(';').enumerate() {
            let mut row = Vec::new();
            let mut col_offset = offset;
            for entry in row_text.split(',') {
                let trimmed = entry.trim();
                let lead = entry.len() - entry.trim_start().len();
                let value = trimmed.parse::<BigInt>().map_err(|_| MatrixError::BadEntry {
                    text: trimmed.to_string(),
                    row: r + 1,
                    column: col_offset + lead + 1,
                })?;
                row.push(value);
                col_offset += entry.len() + 1;
            }
            rows.push(row);
            offset += row_text.len() + 1;
        }
        Self::new(rows)
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// `self^e` by repeated multiplication.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn minus_identity(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            out.entries[i * self.dim + i] -= 1;
        }
        out
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        let mut m: Vec<Vec<BigInt>> = self.entries.chunks(n).map(|r| r.to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        IntMatrix { dim: n, entries }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}
