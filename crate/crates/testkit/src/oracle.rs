//! Reference algorithms used as independent oracles. None of them share a
//! code path with the production engine: inversion is Gauss-Jordan with
//! partial pivoting, the pseudo-inverse is SVD-based, and the weighted
//! pseudo-inverse goes through symmetric square roots of the weights.

use pinv_core::DenseMatrix;

/// Inverse by Gauss-Jordan elimination with partial pivoting.
pub fn gauss_jordan_inverse(a: &DenseMatrix) -> Result<DenseMatrix, String> {
    if !a.is_square() {
        return Err("matrix must be square".into());
    }
    let n = a.rows();
    let width = 2 * n;
    let mut aug = vec![0.0_f64; n * width];
    for i in 0..n {
        for j in 0..n {
            aug[i * width + j] = a.get(i, j);
        }
        aug[i * width + n + i] = 1.0;
    }
    let pivot_tol = 1e-14 * a.frobenius_norm().max(f64::MIN_POSITIVE);

    for k in 0..n {
        let mut max_val = aug[k * width + k].abs();
        let mut max_row = k;
        for i in (k + 1)..n {
            let v = aug[i * width + k].abs();
            if v > max_val {
                max_val = v;
                max_row = i;
            }
        }
        if max_val <= pivot_tol {
            return Err("matrix is singular".into());
        }
        if max_row != k {
            for j in 0..width {
                aug.swap(k * width + j, max_row * width + j);
            }
        }
        let pivot = aug[k * width + k];
        for j in 0..width {
            aug[k * width + j] /= pivot;
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            let factor = aug[i * width + k];
            if factor == 0.0 {
                continue;
            }
            for j in 0..width {
                aug[i * width + j] -= factor * aug[k * width + j];
            }
        }
    }

    let mut inv = vec![0.0_f64; n * n];
    for i in 0..n {
        for j in 0..n {
            inv[i * n + j] = aug[i * width + n + j];
        }
    }
    Ok(DenseMatrix::new(n, n, inv).expect("finite inverse"))
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns `(eigenvalues, V)` with eigenvalues descending and the matching
/// eigenvectors in the columns of `V`.
pub fn sym_eigen(a: &DenseMatrix) -> (Vec<f64>, DenseMatrix) {
    assert!(a.is_square(), "symmetric eigendecomposition needs a square matrix");
    let n = a.rows();
    let mut w = vec![0.0_f64; n * n];
    for i in 0..n {
        for j in 0..n {
            w[i * n + j] = a.get(i, j);
        }
    }
    let mut v = vec![0.0_f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += w[p * n + q] * w[p * n + q];
            }
        }
        if off.sqrt() <= 1e-14 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = w[p * n + q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = w[p * n + p];
                let aqq = w[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for r in 0..n {
                    let wrp = w[r * n + p];
                    let wrq = w[r * n + q];
                    w[r * n + p] = c * wrp - s * wrq;
                    w[r * n + q] = s * wrp + c * wrq;
                }
                for r in 0..n {
                    let wpr = w[p * n + r];
                    let wqr = w[q * n + r];
                    w[p * n + r] = c * wpr - s * wqr;
                    w[q * n + r] = s * wpr + c * wqr;
                }
                w[p * n + q] = 0.0;
                w[q * n + p] = 0.0;
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| w[j * n + j].partial_cmp(&w[i * n + i]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| w[i * n + i]).collect();
    let mut vectors = vec![0.0_f64; n * n];
    for (col, &src) in order.iter().enumerate() {
        for r in 0..n {
            vectors[r * n + col] = v[r * n + src];
        }
    }
    (
        eigenvalues,
        DenseMatrix::new(n, n, vectors).expect("finite eigenvectors"),
    )
}

/// `S^exponent` for a symmetric positive (semi)definite matrix via its
/// eigendecomposition. Used for the square roots of the weight matrices.
pub fn spd_power(s: &DenseMatrix, exponent: f64) -> DenseMatrix {
    let (eigs, v) = sym_eigen(s);
    let n = s.rows();
    let powered: Vec<f64> = eigs.iter().map(|&e| e.powf(exponent)).collect();
    let mut out = vec![0.0_f64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += v.get(i, k) * powered[k] * v.get(j, k);
            }
            out[i * n + j] = acc;
        }
    }
    DenseMatrix::new(n, n, out).expect("finite power")
}

/// Pseudo-inverse by one-sided Jacobi SVD. Singular values below
/// `rcond * sigma_max` count as zero.
pub fn svd_pinv(a: &DenseMatrix, rcond: f64) -> DenseMatrix {
    if a.rows() < a.cols() {
        return svd_pinv(&a.transpose(), rcond).transpose();
    }
    let (m, n) = (a.rows(), a.cols());
    // Columns of w are orthogonalized in place; v accumulates rotations.
    let mut w: Vec<Vec<f64>> = (0..n).map(|j| a.column(j)).collect();
    let mut v = vec![0.0_f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let col_dot = |x: &[f64], y: &[f64]| -> f64 { x.iter().zip(y).map(|(a, b)| a * b).sum() };

    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha = col_dot(&w[p], &w[p]);
                let beta = col_dot(&w[q], &w[q]);
                let gamma = col_dot(&w[p], &w[q]);
                if gamma.abs() <= 1e-15 * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for r in 0..m {
                    let wp = w[p][r];
                    let wq = w[q][r];
                    w[p][r] = c * wp - s * wq;
                    w[q][r] = s * wp + c * wq;
                }
                for r in 0..n {
                    let vp = v[r * n + p];
                    let vq = v[r * n + q];
                    v[r * n + p] = c * vp - s * vq;
                    v[r * n + q] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let sigmas: Vec<f64> = (0..n).map(|j| col_dot(&w[j], &w[j]).sqrt()).collect();
    let sigma_max = sigmas.iter().cloned().fold(0.0_f64, f64::max);
    let cutoff = rcond * sigma_max;

    // pinv = V * diag(1/sigma) * U^T with u_j = w_j / sigma_j.
    let mut out = vec![0.0_f64; n * m];
    for k in 0..n {
        if sigmas[k] <= cutoff || sigmas[k] == 0.0 {
            continue;
        }
        let inv_sigma = 1.0 / sigmas[k];
        for i in 0..n {
            let vik = v[i * n + k];
            if vik == 0.0 {
                continue;
            }
            let coeff = vik * inv_sigma * inv_sigma;
            for j in 0..m {
                out[i * m + j] += coeff * w[k][j];
            }
        }
    }
    DenseMatrix::new(n, m, out).expect("finite pseudo-inverse")
}

/// Two-sided square-root oracle for the weighted pseudo-inverse:
/// `N^{-1/2} (M^{1/2} A N^{-1/2})^+ M^{1/2}`.
pub fn weighted_pinv_oracle(
    a: &DenseMatrix,
    m_weight: &DenseMatrix,
    n_weight: &DenseMatrix,
) -> DenseMatrix {
    let m_half = spd_power(m_weight, 0.5);
    let n_inv_half = spd_power(n_weight, -0.5);
    let core = m_half
        .multiply(a)
        .and_then(|t| t.multiply(&n_inv_half))
        .expect("conforming shapes");
    let core_pinv = svd_pinv(&core, 1e-10);
    n_inv_half
        .multiply(&core_pinv)
        .and_then(|t| t.multiply(&m_half))
        .expect("conforming shapes")
}
