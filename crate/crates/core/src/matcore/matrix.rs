use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{LmeError, Result};

pub type Complex = Complex64;

/// Dense complex matrix.
///
/// Entries are always finite; every public constructor checks this.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    data: DMatrix<Complex>,
}

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(LmeError::DimensionMismatch(format!(
                "matrix must be non-empty, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(LmeError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(LmeError::NonFinite);
        }
        Ok(ComplexMatrix {
            data: DMatrix::from_row_slice(rows, cols, &entries),
        })
    }

    pub fn from_rows(rows: &[Vec<Complex>]) -> Result<Self> {
        let r = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != cols) {
            return Err(LmeError::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, cols, rows.iter().flatten().copied().collect())
    }

    /// Real matrix from row slices. Panics on ragged or non-finite input; meant for literals.
    pub fn from_real(rows: &[&[f64]]) -> Self {
        let rows: Vec<Vec<Complex>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| c(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows).expect("valid real matrix literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            data: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        ComplexMatrix {
            data: DMatrix::identity(n, n),
        }
    }

    pub fn from_diagonal(values: &[Complex]) -> Self {
        let n = values.len();
        let mut data = DMatrix::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            data[(i, i)] = *v;
        }
        ComplexMatrix { data }
    }

    pub fn from_real_diagonal(values: &[f64]) -> Self {
        let v: Vec<Complex> = values.iter().map(|&x| c(x, 0.0)).collect();
        Self::from_diagonal(&v)
    }

    /// `u · vᵀ` (no conjugation).
    pub fn outer(u: &[Complex], v: &[Complex]) -> Self {
        ComplexMatrix {
            data: DMatrix::from_fn(u.len(), v.len(), |i, j| u[i] * v[j]),
        }
    }

    pub(crate) fn from_nalgebra(data: DMatrix<Complex>) -> Self {
        ComplexMatrix { data }
    }

    pub(crate) fn as_nalgebra(&self) -> &DMatrix<Complex> {
        &self.data
    }

    pub fn rows(&self) -> usize {
        self.data.nrows()
    }

    pub fn cols(&self) -> usize {
        self.data.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    /// Side length of a square matrix, or `NonSquare`.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows())
        } else {
            Err(LmeError::NonSquare {
                rows: self.rows(),
                cols: self.cols(),
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.data[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex) {
        self.data[(i, j)] = value;
    }

    pub fn to_row_major(&self) -> Vec<Complex> {
        let mut out = Vec::with_capacity(self.rows() * self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.push(self.data[(i, j)]);
            }
        }
        out
    }

    pub fn row_vecs(&self) -> Vec<Vec<Complex>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.data[(i, j)]).collect())
            .collect()
    }

    pub fn diagonal(&self) -> Vec<Complex> {
        (0..self.rows().min(self.cols()))
            .map(|i| self.data[(i, i)])
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Complex> {
        self.data.column(j).iter().copied().collect()
    }

    pub fn row(&self, i: usize) -> Vec<Complex> {
        self.data.row(i).iter().copied().collect()
    }

    /// Column-stacked vectorization.
    pub fn vec_columns(&self) -> Vec<Complex> {
        self.data.as_slice().to_vec()
    }

    pub fn from_vec_columns(rows: usize, cols: usize, v: &[Complex]) -> Result<Self> {
        if v.len() != rows * cols {
            return Err(LmeError::DimensionMismatch(format!(
                "vector of length {} cannot be reshaped to {rows}x{cols}",
                v.len()
            )));
        }
        Ok(ComplexMatrix {
            data: DMatrix::from_column_slice(rows, cols, v),
        })
    }

    pub fn adjoint(&self) -> Self {
        ComplexMatrix {
            data: self.data.adjoint(),
        }
    }

    pub fn transpose(&self) -> Self {
        ComplexMatrix {
            data: self.data.transpose(),
        }
    }

    pub fn scale(&self, factor: Complex) -> Self {
        ComplexMatrix {
            data: self.data.map(|z| z * factor),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Frobenius norm of everything off the main diagonal.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                if i != j {
                    acc += self.data[(i, j)].norm_sqr();
                }
            }
        }
        acc.sqrt()
    }

    pub fn distance(&self, other: &ComplexMatrix) -> f64 {
        (self - other).frobenius_norm()
    }

    pub fn try_mul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols() != other.rows() {
            return Err(LmeError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        Ok(self * other)
    }

    pub fn inverse(&self) -> Result<ComplexMatrix> {
        self.order()?;
        self.data
            .clone()
            .try_inverse()
            .map(Self::from_nalgebra)
            .ok_or(LmeError::Singular)
    }

    pub fn pow(&self, q: usize) -> Result<ComplexMatrix> {
        let n = self.order()?;
        let mut out = ComplexMatrix::identity(n);
        for _ in 0..q {
            out = &out * self;
        }
        Ok(out)
    }

    /// `A ⊗ B`.
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            data: self.data.kronecker(&other.data),
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        ComplexMatrix {
            data: self
                .data
                .view((rows.start, cols.start), (rows.len(), cols.len()))
                .into_owned(),
        }
    }

    /// Columns in the given order.
    pub fn select_columns(&self, indices: &[usize]) -> Self {
        ComplexMatrix {
            data: self.data.select_columns(indices.iter()),
        }
    }

    pub fn set_columns(&mut self, start: usize, block: &ComplexMatrix) {
        self.data
            .view_mut((0, start), (block.rows(), block.cols()))
            .copy_from(&block.data);
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows(), self.cols())?;
        for i in 0..self.rows() {
            write!(f, "  ")?;
            for j in 0..self.cols() {
                let z = self.data[(i, j)];
                write!(f, "{:>10.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix { data: &self.data $op &rhs.data }
            }
        }
        impl $trait<ComplexMatrix> for ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix { data: self.data $op rhs.data }
            }
        }
        impl $trait<&ComplexMatrix> for ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix { data: self.data $op &rhs.data }
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix { data: -&self.data }
    }
}

impl Neg for ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix { data: -self.data }
    }
}
