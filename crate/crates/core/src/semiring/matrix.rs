use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{trop_add, trop_mul, ExtScalar, Scalar, TropVector};

/// Element types that support the two semiring operations.
pub trait MaxPlus: Clone + Ord + fmt::Display {
    fn oplus(&self, other: &Self) -> Self;
    fn otimes(&self, other: &Self) -> Self;
}

impl MaxPlus for Scalar {
    fn oplus(&self, other: &Self) -> Self {
        Scalar::oplus(self, other)
    }

    fn otimes(&self, other: &Self) -> Self {
        Scalar::otimes(self, other)
    }
}

impl MaxPlus for ExtScalar {
    fn oplus(&self, other: &Self) -> Self {
        trop_add(self, other)
    }

    fn otimes(&self, other: &Self) -> Self {
        trop_mul(self, other)
    }
}

/// Dense row-major matrix over a max-plus element type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix over the finite semiring.
pub type TropMatrix = Matrix<Scalar>;
/// Matrix over the extended semiring (entries may be −∞).
pub type ExtMatrix = Matrix<ExtScalar>;

impl<T: MaxPlus> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::shape(
                "matrices must have at least one row and column",
            ));
        }
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::shape("ragged rows"));
        }
        Matrix::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let data = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j));
        Matrix::new(rows, cols, data.collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Returns `n` for an n×n matrix, or `Error::NotSquare`.
    pub fn square_dim(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row_entries(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone()).expect("shape")
    }

    pub fn map<U: MaxPlus>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Tropical product `self ⊗ other`.
    pub fn tmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|l| self.get(i, l).otimes(other.get(l, j)))
                .reduce(|a, b| a.oplus(&b))
                .expect("inner dimension >= 1")
        })
    }

    /// Entrywise maximum.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape("entrywise sum needs equal shapes"));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.oplus(b))
                .collect(),
        })
    }
}

/// `A ⊗ B` over the extended semiring.
pub fn mat_mul(a: &ExtMatrix, b: &ExtMatrix) -> Result<ExtMatrix> {
    a.tmul(b)
}

impl ExtMatrix {
    /// Tropical identity `I_n`: zeros on the diagonal, −∞ elsewhere.
    pub fn identity(n: usize) -> Result<Self> {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                ExtScalar::Finite(Scalar::zero())
            } else {
                ExtScalar::Bottom
            }
        })
    }

    /// Diagonal matrix with the given finite diagonal.
    pub fn diagonal(values: &[Scalar]) -> Result<Self> {
        let n = values.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                ExtScalar::Finite(values[i].clone())
            } else {
                ExtScalar::Bottom
            }
        })
    }

    /// `λ ⊗ I_n`.
    pub fn scalar(n: usize, lambda: &Scalar) -> Result<Self> {
        ExtMatrix::diagonal(&vec![lambda.clone(); n])
    }

    /// Some(finite matrix) when no entry is −∞.
    pub fn to_finite(&self) -> Option<TropMatrix> {
        let data: Option<Vec<Scalar>> = self.data.iter().map(|e| e.finite().cloned()).collect();
        data.map(|data| Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl TropMatrix {
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn to_ext(&self) -> ExtMatrix {
        self.map(|s| ExtScalar::Finite(s.clone()))
    }

    pub fn row(&self, i: usize) -> TropVector {
        TropVector::new(self.row_entries(i).to_vec()).expect("cols >= 1")
    }

    pub fn col(&self, j: usize) -> TropVector {
        TropVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
            .expect("rows >= 1")
    }

    pub fn row_vectors(&self) -> Vec<TropVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn col_vectors(&self) -> Vec<TropVector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[TropVector]) -> Result<Self> {
        let m = cols.len();
        let n = cols.first().map_or(0, TropVector::len);
        if cols.iter().any(|c| c.len() != n) {
            return Err(Error::shape("columns of differing length"));
        }
        Matrix::from_fn(n, m, |i, j| cols[j].get(i).clone())
    }

    /// `A ⊗ x`.
    pub fn mul_vec(&self, x: &TropVector) -> Result<TropVector> {
        if x.len() != self.cols {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} matrix by vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        TropVector::new(
            (0..self.rows)
                .map(|i| {
                    self.row_entries(i)
                        .iter()
                        .zip(x.entries())
                        .map(|(a, b)| a + b)
                        .max()
                        .expect("cols >= 1")
                })
                .collect(),
        )
    }

    pub fn scale(&self, lambda: &Scalar) -> TropMatrix {
        self.map(|v| v + lambda)
    }

    pub fn negate(&self) -> TropMatrix {
        self.map(|v| -v)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn diagonal_entries(&self) -> Result<Vec<Scalar>> {
        let n = self.square_dim()?;
        Ok((0..n).map(|i| self.get(i, i).clone()).collect())
    }

    pub fn has_zero_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| self.get(i, i).is_zero())
    }
}

impl<T: MaxPlus> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<T: MaxPlus> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
