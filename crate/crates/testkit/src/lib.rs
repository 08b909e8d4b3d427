//! Test support for the pinv workspace: reference implementations that are
//! algorithmically independent of the production engine (Gauss-Jordan
//! elimination, Jacobi eigendecomposition, one-sided Jacobi SVD), seeded
//! random matrix generators, and the fixture matrices used across suites.
//!
//! This crate is a dev-dependency only; nothing here ships in the product.

pub mod fixtures;
pub mod gen;
pub mod oracle;

use pinv_core::DenseMatrix;

/// Largest absolute entrywise difference.
pub fn max_abs_diff(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
    assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    let mut best = 0.0_f64;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            best = best.max((a.get(i, j) - b.get(i, j)).abs());
        }
    }
    best
}
