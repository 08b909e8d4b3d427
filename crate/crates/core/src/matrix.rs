//! Dense row-major matrices with two interchangeable element layouts.
//!
//! The `Flat` backend keeps all elements in one buffer, the `Nested`
//! backend keeps one buffer per row. The two exist only as a measurable
//! axis for the benchmark harness: every operation walks elements in the
//! same order regardless of backend, so results are bit-identical and
//! equality ignores the layout.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::MatrixError;

/// Element layout of a [`DenseMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Single contiguous row-major buffer.
    Flat,
    /// One buffer per matrix row.
    Nested,
}

impl Backend {
    pub fn as_str(self) -> &'static str {
        match self {
            Backend::Flat => "flat",
            Backend::Nested => "nested",
        }
    }
}

impl core::fmt::Display for Backend {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
enum Storage {
    Flat(Vec<f64>),
    Nested(Vec<Vec<f64>>),
}

/// An `m x n` real matrix with finite binary64 elements.
///
/// Immutable after construction; all operations return new matrices.
/// The result of a binary operation inherits the backend of `self`.
#[derive(Debug, Clone)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Storage,
}

impl DenseMatrix {
    /// Builds a matrix from row-major elements in the [`Backend::Flat`] layout.
    pub fn new(rows: usize, cols: usize, elements: Vec<f64>) -> Result<Self, MatrixError> {
        Self::with_backend(rows, cols, elements, Backend::Flat)
    }

    /// Builds a matrix from row-major elements in the given layout.
    pub fn with_backend(
        rows: usize,
        cols: usize,
        elements: Vec<f64>,
        backend: Backend,
    ) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        if elements.len() != rows * cols {
            return Err(MatrixError::InvalidData {
                expected: rows * cols,
                got: elements.len(),
            });
        }
        for (idx, &v) in elements.iter().enumerate() {
            if !v.is_finite() {
                return Err(MatrixError::NonFinite {
                    row: idx / cols,
                    col: idx % cols,
                });
            }
        }
        let data = match backend {
            Backend::Flat => Storage::Flat(elements),
            Backend::Nested => Storage::Nested(
                elements
                    .chunks(cols)
                    .map(|chunk| chunk.to_vec())
                    .collect(),
            ),
        };
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from row slices (panics on ragged input; test helper).
    pub fn from_rows(rows: &[&[f64]]) -> Self {
        assert!(!rows.is_empty(), "at least one row required");
        let cols = rows[0].len();
        let mut elements = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "all rows must have equal length");
            elements.extend_from_slice(row);
        }
        Self::new(rows.len(), cols, elements).expect("valid row data")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::zeros_in(rows, cols, Backend::Flat)
    }

    pub fn zeros_in(rows: usize, cols: usize, backend: Backend) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        Self::with_backend(rows, cols, vec![0.0; rows * cols], backend)
            .expect("zero matrix is always valid")
    }

    pub fn identity(n: usize) -> Self {
        Self::identity_in(n, Backend::Flat)
    }

    pub fn identity_in(n: usize, backend: Backend) -> Self {
        let mut m = Self::zeros_in(n, n, backend);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Evaluates `f(i, j)` in row-major order and stores the results.
    ///
    /// All operations funnel through this so both backends perform the
    /// exact same arithmetic in the exact same order.
    pub(crate) fn from_fn_in<F>(rows: usize, cols: usize, backend: Backend, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> f64,
    {
        let mut m = Self::zeros_in(rows, cols, backend);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn backend(&self) -> Backend {
        match self.data {
            Storage::Flat(_) => Backend::Flat,
            Storage::Nested(_) => Backend::Nested,
        }
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        debug_assert!(row < self.rows && col < self.cols);
        match &self.data {
            Storage::Flat(v) => v[row * self.cols + col],
            Storage::Nested(v) => v[row][col],
        }
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, value: f64) {
        match &mut self.data {
            Storage::Flat(v) => v[row * self.cols + col] = value,
            Storage::Nested(v) => v[row][col] = value,
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major copy of all elements.
    pub fn to_vec(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.push(self.get(i, j));
            }
        }
        out
    }

    /// Same elements in the requested layout.
    pub fn to_backend(&self, backend: Backend) -> Self {
        if backend == self.backend() {
            self.clone()
        } else {
            Self::with_backend(self.rows, self.cols, self.to_vec(), backend)
                .expect("existing matrix is valid")
        }
    }

    /// Column `j` as a plain vector.
    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// The `m x k` matrix of the first `k` columns.
    pub fn leading_columns(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.cols);
        Self::from_fn_in(self.rows, k, self.backend(), |i, j| self.get(i, j))
    }

    /// The leading principal `k x k` submatrix.
    pub fn leading_principal(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.rows && k <= self.cols);
        Self::from_fn_in(k, k, self.backend(), |i, j| self.get(i, j))
    }

    /// Largest absolute element.
    pub fn max_abs(&self) -> f64 {
        let mut best = 0.0_f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = libm::fabs(self.get(i, j));
                if a > best {
                    best = a;
                }
            }
        }
        best
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                sum += v * v;
            }
        }
        libm::sqrt(sum)
    }

    /// Symmetry check with tolerance relative to the element scale.
    pub fn is_symmetric(&self, rel_tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let scale = self.max_abs().max(1.0);
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if libm::fabs(self.get(i, j) - self.get(j, i)) > rel_tol * scale {
                    return false;
                }
            }
        }
        true
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn_in(self.cols, self.rows, self.backend(), |i, j| self.get(j, i))
    }

    /// Elementwise `r * self + s * other`.
    ///
    /// Covers addition (`r = s = 1`), subtraction (`r = 1, s = -1`) and
    /// scaling (`s = 0`, `other = self`).
    pub fn linear_combine(&self, r: f64, s: f64, other: &Self) -> Result<Self, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch {
                expected: (self.rows, self.cols),
                got: (other.rows, other.cols),
            });
        }
        Ok(Self::from_fn_in(
            self.rows,
            self.cols,
            self.backend(),
            |i, j| r * self.get(i, j) + s * other.get(i, j),
        ))
    }

    /// Matrix product, accumulating each entry in binary64.
    pub fn multiply(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch {
                expected: (self.cols, self.cols),
                got: (other.rows, other.cols),
            });
        }
        Ok(Self::from_fn_in(
            self.rows,
            other.cols,
            self.backend(),
            |i, j| {
                let mut acc = 0.0;
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                acc
            },
        ))
    }

    /// `self^p * other^q` by repeated multiplication.
    ///
    /// A power other than one requires a square base; an exponent of zero
    /// contributes the identity factor.
    pub fn power_product(&self, p: u32, other: &Self, q: u32) -> Result<Self, MatrixError> {
        let a = self.matrix_power(p)?;
        let b = other.matrix_power(q)?;
        a.multiply(&b)
    }

    fn matrix_power(&self, p: u32) -> Result<Self, MatrixError> {
        if p == 1 {
            return Ok(self.clone());
        }
        if !self.is_square() {
            return Err(MatrixError::NonSquarePower {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Self::identity_in(self.rows, self.backend());
        for _ in 0..p {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }
}

/// Equality is dimensions plus bitwise element identity, independent of
/// backend. NaN is excluded at construction, so this only distinguishes
/// `0.0` from `-0.0` beyond ordinary `==` — exactly the distinction the
/// canonical string serialization makes.
impl PartialEq for DenseMatrix {
    fn eq(&self, other: &Self) -> bool {
        if self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j).to_bits() != other.get(i, j).to_bits() {
                    return false;
                }
            }
        }
        true
    }
}

impl Eq for DenseMatrix {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            DenseMatrix::new(0, 2, vec![]),
            Err(MatrixError::EmptyMatrix)
        );
        assert_eq!(
            DenseMatrix::new(2, 2, vec![1.0, 2.0]),
            Err(MatrixError::InvalidData {
                expected: 4,
                got: 2
            })
        );
        assert_eq!(
            DenseMatrix::new(1, 2, vec![1.0, f64::NAN]),
            Err(MatrixError::NonFinite { row: 0, col: 1 })
        );
        assert_eq!(
            DenseMatrix::new(2, 1, vec![f64::INFINITY, 1.0]),
            Err(MatrixError::NonFinite { row: 0, col: 0 })
        );
    }

    #[test]
    fn backends_are_observationally_identical() {
        let data = vec![1.0, 2.5, -3.0, 4.0, 0.0, -0.5];
        let flat = DenseMatrix::with_backend(2, 3, data.clone(), Backend::Flat).unwrap();
        let nested = DenseMatrix::with_backend(2, 3, data, Backend::Nested).unwrap();
        assert_eq!(flat, nested);
        assert_eq!(flat.transpose(), nested.transpose());
        assert_eq!(flat.get(1, 2), -0.5);
        assert_eq!(nested.get(1, 2), -0.5);
        assert_eq!(nested.backend(), Backend::Nested);
        assert_eq!(nested.to_backend(Backend::Flat).backend(), Backend::Flat);
    }

    #[test]
    fn multiply_hand_expansion() {
        // [[1,2],[3,4]] * [[5,6],[7,8]] worked out by the definition.
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let b = DenseMatrix::from_rows(&[&[5.0, 6.0], &[7.0, 8.0]]);
        let c = a.multiply(&b).unwrap();
        assert_eq!(c, DenseMatrix::from_rows(&[&[19.0, 22.0], &[43.0, 50.0]]));
    }

    #[test]
    fn multiply_identity_is_exact() {
        let a = DenseMatrix::from_rows(&[&[1.5, -2.0, 3.25], &[0.125, 4.0, -6.5]]);
        assert_eq!(a.multiply(&DenseMatrix::identity(3)).unwrap(), a);
        assert_eq!(DenseMatrix::identity(2).multiply(&a).unwrap(), a);
    }

    #[test]
    fn multiply_dimension_mismatch() {
        let a = DenseMatrix::zeros(2, 3);
        let b = DenseMatrix::zeros(2, 3);
        assert!(matches!(
            a.multiply(&b),
            Err(MatrixError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn linear_combine_covers_special_cases() {
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let zero = DenseMatrix::zeros(2, 2);
        assert_eq!(a.linear_combine(1.0, 1.0, &zero).unwrap(), a);
        assert_eq!(a.linear_combine(1.0, -1.0, &a).unwrap(), zero);
        let scaled = a.linear_combine(3.0, 0.0, &a).unwrap();
        assert_eq!(scaled.get(1, 1), 12.0);
        assert!(matches!(
            a.linear_combine(1.0, 1.0, &DenseMatrix::zeros(3, 2)),
            Err(MatrixError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn power_product_reductions() {
        let a = DenseMatrix::from_rows(&[&[2.0]]);
        let b = DenseMatrix::from_rows(&[&[1.0]]);
        assert_eq!(a.power_product(3, &b, 1).unwrap().get(0, 0), 8.0);

        let c = DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let d = DenseMatrix::from_rows(&[&[5.0, 6.0], &[7.0, 8.0]]);
        assert_eq!(
            c.power_product(1, &d, 1).unwrap(),
            c.multiply(&d).unwrap()
        );
        // p = 0 contributes the identity factor.
        assert_eq!(c.power_product(0, &d, 1).unwrap(), d);

        let rect = DenseMatrix::zeros(2, 3);
        assert!(matches!(
            rect.power_product(2, &DenseMatrix::zeros(3, 3), 1),
            Err(MatrixError::NonSquarePower { .. })
        ));
        // p = 1 never requires a square base.
        assert!(rect.power_product(1, &DenseMatrix::zeros(3, 3), 1).is_ok());
    }

    #[test]
    fn transpose_shapes() {
        let row = DenseMatrix::from_rows(&[&[1.0, 2.0, 3.0]]);
        let col = row.transpose();
        assert_eq!((col.rows(), col.cols()), (3, 1));
        assert_eq!(col.transpose(), row);
    }

    #[test]
    fn leading_slices() {
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0], &[7.0, 8.0, 9.0]]);
        let first_two = a.leading_columns(2);
        assert_eq!((first_two.rows(), first_two.cols()), (3, 2));
        assert_eq!(first_two.get(2, 1), 8.0);
        let lp = a.leading_principal(2);
        assert_eq!(lp, DenseMatrix::from_rows(&[&[1.0, 2.0], &[4.0, 5.0]]));
        assert_eq!(a.column(2), vec![3.0, 6.0, 9.0]);
    }
}
