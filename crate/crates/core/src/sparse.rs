//! Coordinate-format sparse matrices: three parallel vectors holding the
//! row indices, column indices and values of the nonzero entries, sorted
//! lexicographically by coordinate.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::MatrixError;
use crate::matrix::{Backend, DenseMatrix};
use crate::text::canonical_f64;

/// A sparse matrix in coordinate (COO) format.
///
/// Invariants enforced at construction: the three vectors have equal
/// length, entries are sorted by `(row, col)` with no duplicates, indices
/// are in range and no stored value is zero or non-finite.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseCoo {
    rows: usize,
    cols: usize,
    row_idx: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<f64>,
}

impl SparseCoo {
    /// Validates and wraps already-canonical coordinate data.
    pub fn new(
        rows: usize,
        cols: usize,
        row_idx: Vec<usize>,
        col_idx: Vec<usize>,
        values: Vec<f64>,
    ) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        if row_idx.len() != values.len() || col_idx.len() != values.len() {
            return Err(MatrixError::InvalidCoo(format!(
                "component lengths differ: {}/{}/{}",
                row_idx.len(),
                col_idx.len(),
                values.len()
            )));
        }
        for k in 0..values.len() {
            if row_idx[k] >= rows || col_idx[k] >= cols {
                return Err(MatrixError::IndexOutOfRange {
                    row: row_idx[k],
                    col: col_idx[k],
                });
            }
            if values[k] == 0.0 {
                return Err(MatrixError::InvalidCoo(format!(
                    "explicit zero stored at ({}, {})",
                    row_idx[k], col_idx[k]
                )));
            }
            if !values[k].is_finite() {
                return Err(MatrixError::NonFinite {
                    row: row_idx[k],
                    col: col_idx[k],
                });
            }
            if k > 0 {
                let prev = (row_idx[k - 1], col_idx[k - 1]);
                let cur = (row_idx[k], col_idx[k]);
                if prev == cur {
                    return Err(MatrixError::InvalidCoo(format!(
                        "duplicate coordinate ({}, {})",
                        cur.0, cur.1
                    )));
                }
                if prev > cur {
                    return Err(MatrixError::InvalidCoo(String::from(
                        "entries not sorted by (row, col)",
                    )));
                }
            }
        }
        Ok(Self {
            rows,
            cols,
            row_idx,
            col_idx,
            values,
        })
    }

    /// Builds from arbitrary-order triplets, sorting them; duplicates and
    /// explicit zeros are rejected.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        mut triplets: Vec<(usize, usize, f64)>,
    ) -> Result<Self, MatrixError> {
        triplets.sort_by_key(|&(r, c, _)| (r, c));
        let row_idx = triplets.iter().map(|t| t.0).collect();
        let col_idx = triplets.iter().map(|t| t.1).collect();
        let values = triplets.iter().map(|t| t.2).collect();
        Self::new(rows, cols, row_idx, col_idx, values)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row_indices(&self) -> &[usize] {
        &self.row_idx
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_idx
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The three comma-separated component strings (row indices, column
    /// indices, values) used as the stored form of a sparse matrix.
    pub fn component_strings(&self) -> (String, String, String) {
        let join_usize = |v: &[usize]| {
            let mut s = String::new();
            for (i, x) in v.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&format!("{x}"));
            }
            s
        };
        let mut vals = String::new();
        for (i, x) in self.values.iter().enumerate() {
            if i > 0 {
                vals.push(',');
            }
            vals.push_str(&canonical_f64(*x));
        }
        (join_usize(&self.row_idx), join_usize(&self.col_idx), vals)
    }

    /// Expands to a dense matrix, filling unlisted positions with zero.
    pub fn to_dense(&self) -> DenseMatrix {
        self.to_dense_in(Backend::Flat)
    }

    pub fn to_dense_in(&self, backend: Backend) -> DenseMatrix {
        let mut elements = alloc::vec![0.0; self.rows * self.cols];
        for k in 0..self.values.len() {
            elements[self.row_idx[k] * self.cols + self.col_idx[k]] = self.values[k];
        }
        DenseMatrix::with_backend(self.rows, self.cols, elements, backend)
            .expect("validated coordinates produce a valid matrix")
    }

    /// Extracts the entries of a dense matrix with magnitude above
    /// `zero_tol` (entries with `|value| <= zero_tol` are dropped).
    pub fn from_dense(a: &DenseMatrix, zero_tol: f64) -> Result<Self, MatrixError> {
        if zero_tol < 0.0 || !zero_tol.is_finite() {
            return Err(MatrixError::InvalidTolerance);
        }
        let mut row_idx = Vec::new();
        let mut col_idx = Vec::new();
        let mut values = Vec::new();
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let v = a.get(i, j);
                if libm::fabs(v) > zero_tol {
                    row_idx.push(i);
                    col_idx.push(j);
                    values.push(v);
                }
            }
        }
        Self::new(a.rows(), a.cols(), row_idx, col_idx, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn dense_round_trip() {
        let a = DenseMatrix::from_rows(&[&[1.0, 0.0, 2.0], &[0.0, -3.0, 0.0]]);
        let coo = SparseCoo::from_dense(&a, 0.0).unwrap();
        assert_eq!(coo.nnz(), 3);
        assert_eq!(coo.to_dense(), a);
    }

    #[test]
    fn zero_matrix_has_no_entries() {
        let z = DenseMatrix::zeros(10, 10);
        let coo = SparseCoo::from_dense(&z, 0.0).unwrap();
        assert_eq!(coo.nnz(), 0);
        assert_eq!(coo.to_dense(), z);
    }

    #[test]
    fn zero_tol_drops_small_entries() {
        let a = DenseMatrix::from_rows(&[&[1.0, 1e-12], &[-1e-12, 2.0]]);
        let coo = SparseCoo::from_dense(&a, 1e-9).unwrap();
        assert_eq!(coo.nnz(), 2);
        assert_eq!(coo.values(), &[1.0, 2.0]);
    }

    #[test]
    fn validation_rejects_malformed_data() {
        assert!(matches!(
            SparseCoo::new(2, 2, vec![0, 2], vec![0, 0], vec![1.0, 1.0]),
            Err(MatrixError::IndexOutOfRange { row: 2, col: 0 })
        ));
        assert!(matches!(
            SparseCoo::new(2, 2, vec![0], vec![0, 1], vec![1.0, 2.0]),
            Err(MatrixError::InvalidCoo(_))
        ));
        assert!(matches!(
            SparseCoo::new(2, 2, vec![0, 0], vec![1, 0], vec![1.0, 2.0]),
            Err(MatrixError::InvalidCoo(_))
        ));
        assert!(matches!(
            SparseCoo::new(2, 2, vec![0, 0], vec![0, 0], vec![1.0, 2.0]),
            Err(MatrixError::InvalidCoo(_))
        ));
        assert!(matches!(
            SparseCoo::new(2, 2, vec![0], vec![0], vec![0.0]),
            Err(MatrixError::InvalidCoo(_))
        ));
    }

    #[test]
    fn from_triplets_sorts() {
        let coo =
            SparseCoo::from_triplets(3, 3, vec![(2, 1, 5.0), (0, 2, 1.0), (0, 0, -1.0)]).unwrap();
        assert_eq!(coo.row_indices(), &[0, 0, 2]);
        assert_eq!(coo.col_indices(), &[0, 2, 1]);
        assert_eq!(coo.values(), &[-1.0, 1.0, 5.0]);
    }

    #[test]
    fn component_strings_are_canonical() {
        let coo = SparseCoo::from_triplets(4, 4, vec![(0, 1, 2.5), (3, 3, -1.0)]).unwrap();
        let (r, c, v) = coo.component_strings();
        assert_eq!(r, "0,3");
        assert_eq!(c, "1,3");
        assert_eq!(v, "2.5,-1");
    }
}
