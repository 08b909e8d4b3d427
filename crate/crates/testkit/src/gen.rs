//! Seeded random matrix generators.

use pinv_core::{Backend, DenseMatrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Matrix with entries uniform in `[lo, hi)`.
pub fn uniform_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, lo: f64, hi: f64) -> DenseMatrix {
    let data: Vec<f64> = (0..rows * cols).map(|_| rng.gen_range(lo..hi)).collect();
    DenseMatrix::new(rows, cols, data).expect("finite uniform entries")
}

/// Same entries replayed into both backends.
pub fn uniform_matrix_in(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    lo: f64,
    hi: f64,
    backend: Backend,
) -> DenseMatrix {
    let data: Vec<f64> = (0..rows * cols).map(|_| rng.gen_range(lo..hi)).collect();
    DenseMatrix::with_backend(rows, cols, data, backend).expect("finite uniform entries")
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; u1 bounded away from zero.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (core::f64::consts::TAU * u2).cos()
}

/// Random orthogonal matrix from modified Gram-Schmidt over Gaussian columns.
pub fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    loop {
        let mut cols: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..n).map(|_| normal(rng)).collect())
            .collect();
        let mut ok = true;
        for j in 0..n {
            for i in 0..j {
                let proj: f64 = (0..n).map(|r| cols[j][r] * cols[i][r]).sum();
                for r in 0..n {
                    cols[j][r] -= proj * cols[i][r];
                }
            }
            let norm: f64 = (0..n).map(|r| cols[j][r] * cols[j][r]).sum::<f64>().sqrt();
            if norm < 1e-8 {
                ok = false;
                break;
            }
            for r in 0..n {
                cols[j][r] /= norm;
            }
        }
        if ok {
            let mut data = vec![0.0_f64; n * n];
            for i in 0..n {
                for j in 0..n {
                    data[i * n + j] = cols[j][i];
                }
            }
            return DenseMatrix::new(n, n, data).expect("orthogonal matrix");
        }
    }
}

/// Symmetric positive definite matrix with the given eigenvalues,
/// conjugated by a random orthogonal matrix and symmetrized exactly.
pub fn spd_with_eigenvalues(rng: &mut ChaCha8Rng, eigenvalues: &[f64]) -> DenseMatrix {
    let n = eigenvalues.len();
    let q = random_orthogonal(rng, n);
    let mut data = vec![0.0_f64; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut acc = 0.0;
            for k in 0..n {
                acc += q.get(i, k) * eigenvalues[k] * q.get(j, k);
            }
            data[i * n + j] = acc;
            data[j * n + i] = acc;
        }
    }
    DenseMatrix::new(n, n, data).expect("finite SPD matrix")
}

/// SPD matrix with eigenvalues uniform in `[lo, hi)` (modest condition).
pub fn spd_uniform_spectrum(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> DenseMatrix {
    let eigs: Vec<f64> = (0..n).map(|_| rng.gen_range(lo..hi)).collect();
    spd_with_eigenvalues(rng, &eigs)
}

/// SPD matrix with smallest eigenvalue 1 and condition number `cond`:
/// eigenvalues log-spaced across `[1, cond]`.
pub fn spd_with_condition(rng: &mut ChaCha8Rng, n: usize, cond: f64) -> DenseMatrix {
    assert!(cond >= 1.0);
    let eigs: Vec<f64> = (0..n)
        .map(|i| {
            if n == 1 {
                1.0
            } else {
                cond.powf(i as f64 / (n - 1) as f64)
            }
        })
        .collect();
    spd_with_eigenvalues(rng, &eigs)
}

/// Copy of `base` with `dups` random columns overwritten by copies of
/// other columns and `zeros` random columns zeroed.
pub fn with_degenerate_columns(
    rng: &mut ChaCha8Rng,
    base: &DenseMatrix,
    dups: usize,
    zeros: usize,
) -> DenseMatrix {
    let (m, n) = (base.rows(), base.cols());
    let mut data = base.to_vec();
    for _ in 0..dups {
        if n < 2 {
            break;
        }
        let dst = rng.gen_range(0..n);
        let mut src = rng.gen_range(0..n);
        if src == dst {
            src = (src + 1) % n;
        }
        for i in 0..m {
            data[i * n + dst] = data[i * n + src];
        }
    }
    for _ in 0..zeros {
        let dst = rng.gen_range(0..n);
        for i in 0..m {
            data[i * n + dst] = 0.0;
        }
    }
    DenseMatrix::new(m, n, data).expect("degenerate copy stays finite")
}

/// Copy of `base` with every entry multiplied by `factor`.
pub fn scaled(base: &DenseMatrix, factor: f64) -> DenseMatrix {
    let data: Vec<f64> = base.to_vec().iter().map(|&v| v * factor).collect();
    DenseMatrix::new(base.rows(), base.cols(), data).expect("scaled copy stays finite")
}
