//! The weighted Moore-Penrose inverse by column partitioning.
//!
//! The engine extends the pseudo-inverse of the first `k-1` columns to the
//! pseudo-inverse of the first `k` columns, one column at a time, under
//! symmetric positive definite weight matrices `M` (rows) and `N`
//! (columns). Identity weights reduce it to the ordinary Moore-Penrose
//! inverse. Leading blocks of `N` are inverted by a recursive bordering
//! scheme ([`bordered_pd_inverse`]), which doubles as the positive
//! definiteness validator: a matrix is accepted exactly when every
//! bordering pivot stays above the configured floor.
//!
//! [`penrose_residuals`] measures how well a candidate inverse satisfies
//! the four defining equations and is the correctness oracle used
//! throughout the test suites.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::MatrixError;
use crate::matrix::{Backend, DenseMatrix};
use crate::text::round_half_away;

/// Thresholds steering the engine's branch decisions.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    zero_test: f64,
    pd_pivot: f64,
    compat_mode: bool,
}

impl Tolerances {
    /// Custom thresholds; both must be strictly positive and finite.
    pub fn new(zero_test: f64, pd_pivot: f64) -> Result<Self, MatrixError> {
        if !(zero_test > 0.0) || !zero_test.is_finite() || !(pd_pivot > 0.0) || !pd_pivot.is_finite()
        {
            return Err(MatrixError::InvalidTolerance);
        }
        Ok(Self {
            zero_test,
            pd_pivot,
            compat_mode: false,
        })
    }

    /// Display-precision zero test: a column counts as zero when every
    /// entry rounds to zero at three decimals (an absolute 5e-4 threshold).
    pub fn with_compat_mode(mut self, on: bool) -> Self {
        self.compat_mode = on;
        self
    }

    /// Absolute threshold for the dependent-column decision, scaled by
    /// `max(1, ‖a_k‖_inf)` of the incoming column.
    pub fn zero_test(&self) -> f64 {
        self.zero_test
    }

    /// Smallest acceptable bordering pivot.
    pub fn pd_pivot(&self) -> f64 {
        self.pd_pivot
    }

    pub fn compat_mode(&self) -> bool {
        self.compat_mode
    }

    fn column_is_zero(&self, v: &[f64], column_scale: f64) -> bool {
        if self.compat_mode {
            v.iter().all(|&x| round_half_away(x, 3) == 0.0)
        } else {
            let eps = self.zero_test * column_scale.max(1.0);
            v.iter().all(|&x| libm::fabs(x) <= eps)
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            zero_test: 1e-10,
            pd_pivot: 1e-12,
            compat_mode: false,
        }
    }
}

/// Validated weight matrices: `M` for the row space, `N` for the column
/// space, both symmetric positive definite.
#[derive(Debug, Clone)]
pub struct WeightPair {
    m: DenseMatrix,
    n: DenseMatrix,
}

impl WeightPair {
    /// Validates symmetry and positive definiteness with default tolerances.
    pub fn new(m: DenseMatrix, n: DenseMatrix) -> Result<Self, MatrixError> {
        Self::with_tolerances(m, n, &Tolerances::default())
    }

    /// Validation failure of either matrix reports [`MatrixError::WeightNotPD`].
    pub fn with_tolerances(
        m: DenseMatrix,
        n: DenseMatrix,
        tol: &Tolerances,
    ) -> Result<Self, MatrixError> {
        bordered_recursion(&m, tol).map_err(|_| MatrixError::WeightNotPD)?;
        bordered_recursion(&n, tol).map_err(|_| MatrixError::WeightNotPD)?;
        Ok(Self { m, n })
    }

    /// Identity weights of the given orders (always valid).
    pub fn identity(m_order: usize, n_order: usize) -> Self {
        Self {
            m: DenseMatrix::identity(m_order),
            n: DenseMatrix::identity(n_order),
        }
    }

    pub fn m(&self) -> &DenseMatrix {
        &self.m
    }

    pub fn n(&self) -> &DenseMatrix {
        &self.n
    }
}

/// Which branch a partitioning step took for its column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepBranch {
    /// `c_k != 0`: the column is independent of the previous ones.
    Independent,
    /// `c_k = 0`: the column depends on the previous ones.
    Dependent,
}

/// Intermediates of the most recent partitioning step `k`.
#[derive(Debug, Clone)]
pub struct StepDetails {
    /// `d_k = X_{k-1} a_k`, length `k-1`.
    pub d: Vec<f64>,
    /// `c_k = a_k - A_{k-1} d_k`, length `m`.
    pub c: Vec<f64>,
    /// The appended row `b_k`, length `m`.
    pub b: Vec<f64>,
    /// Denominator of the dependent branch; `None` on the independent branch.
    pub delta: Option<f64>,
    /// First `k-1` entries of column `k` of `N`.
    pub l: Vec<f64>,
    /// Diagonal entry `N[k][k]`.
    pub n_kk: f64,
    /// Leading principal `(k-1) x (k-1)` submatrix of `N`.
    pub n_leading: DenseMatrix,
    pub branch: StepBranch,
}

/// Recursion state after processing `k` columns: the current inverse
/// `X_k` (`k x m`), the processed columns `A_k` (`m x k`), and the
/// intermediates of the latest step.
#[derive(Debug, Clone)]
pub struct PartitioningState {
    k: usize,
    x: DenseMatrix,
    a_cols: DenseMatrix,
    details: Option<StepDetails>,
}

impl PartitioningState {
    /// Initializes on the first column: `X_1 = (a_1* M a_1)^{-1} a_1* M`
    /// when the column is nonzero, else the `1 x m` zero row.
    ///
    /// State matrices adopt the backend of `m_weight`.
    pub fn init(
        a_1: &[f64],
        m_weight: &DenseMatrix,
        tol: &Tolerances,
    ) -> Result<Self, MatrixError> {
        let m = a_1.len();
        if m_weight.rows() != m || m_weight.cols() != m {
            return Err(MatrixError::DimensionMismatch {
                expected: (m, m),
                got: (m_weight.rows(), m_weight.cols()),
            });
        }
        if m == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        let backend = m_weight.backend();
        let scale = inf_norm(a_1);
        let x = if tol.column_is_zero(a_1, scale) {
            DenseMatrix::zeros_in(1, m, backend)
        } else {
            let am = row_times_matrix(a_1, m_weight);
            let quad = dot(&am, a_1);
            if !(quad > 0.0) {
                return Err(MatrixError::WeightNotPD);
            }
            let inv = 1.0 / quad;
            DenseMatrix::from_fn_in(1, m, backend, |_, j| inv * am[j])
        };
        let a_cols = DenseMatrix::from_fn_in(m, 1, backend, |i, _| a_1[i]);
        Ok(Self {
            k: 1,
            x,
            a_cols,
            details: None,
        })
    }

    /// Number of columns processed so far.
    pub fn columns_processed(&self) -> usize {
        self.k
    }

    /// The current inverse `X_k` (`k x m`).
    pub fn x(&self) -> &DenseMatrix {
        &self.x
    }

    /// The processed columns `A_k` (`m x k`).
    pub fn a_columns(&self) -> &DenseMatrix {
        &self.a_cols
    }

    /// Intermediates of the latest step (`None` right after init).
    pub fn details(&self) -> Option<&StepDetails> {
        self.details.as_ref()
    }

    pub fn into_x(self) -> DenseMatrix {
        self.x
    }
}

/// Advances the recursion by one column of `A`.
///
/// On the independent branch `b_k = (c_k* M c_k)^{-1} c_k* M`; on the
/// dependent branch `b_k = delta_k^{-1} (d_k* N_{k-1} - l_k*) X_{k-1}`
/// with the five-term `delta_k` expansion. Both branches apply the
/// column-weight correction `(I - X_{k-1} A_{k-1}) N_{k-1}^{-1} l_k`
/// inside the row update.
pub fn partition_step(
    state: PartitioningState,
    a_k: &[f64],
    n_weight: &DenseMatrix,
    m_weight: &DenseMatrix,
    tol: &Tolerances,
) -> Result<PartitioningState, MatrixError> {
    let prev = state.k;
    let k = prev + 1;
    let m = state.a_cols.rows();
    if a_k.len() != m {
        return Err(MatrixError::DimensionMismatch {
            expected: (m, 1),
            got: (a_k.len(), 1),
        });
    }
    if m_weight.rows() != m || m_weight.cols() != m {
        return Err(MatrixError::DimensionMismatch {
            expected: (m, m),
            got: (m_weight.rows(), m_weight.cols()),
        });
    }
    if n_weight.rows() < k || !n_weight.is_square() {
        return Err(MatrixError::DimensionMismatch {
            expected: (k, k),
            got: (n_weight.rows(), n_weight.cols()),
        });
    }

    let x_prev = &state.x;
    let a_prev = &state.a_cols;

    // d = X_{k-1} a_k, c = a_k - A_{k-1} d
    let d = matrix_times_col(x_prev, a_k);
    let ad = matrix_times_col(a_prev, &d);
    let c: Vec<f64> = (0..m).map(|i| a_k[i] - ad[i]).collect();

    // Column k of N split into its leading part and diagonal entry.
    let l: Vec<f64> = (0..prev).map(|i| n_weight.get(i, k - 1)).collect();
    let n_kk = n_weight.get(k - 1, k - 1);
    let n_leading = n_weight.leading_principal(prev);
    let n_inv = bordered_pd_inverse(&n_leading, tol).map_err(|e| match e {
        MatrixError::NotPositiveDefinite { .. } | MatrixError::NotSymmetric => {
            MatrixError::WeightNotPD
        }
        other => other,
    })?;
    let u = matrix_times_col(&n_inv, &l);

    let independent = !tol.column_is_zero(&c, inf_norm(a_k));
    let (b, delta) = if independent {
        let cm = row_times_matrix(&c, m_weight);
        let quad = dot(&cm, &c);
        if !(quad > 0.0) {
            return Err(MatrixError::WeightNotPD);
        }
        let inv = 1.0 / quad;
        (cm.iter().map(|&v| v * inv).collect::<Vec<f64>>(), None)
    } else {
        let dtn = row_times_matrix(&d, &n_leading);
        let dtnd = dot(&dtn, &d);
        let dl = dot(&d, &l);
        let ld = dot(&l, &d);
        let lu = dot(&l, &u);
        let l_x = row_times_matrix(&l, x_prev);
        let a_u = matrix_times_col(a_prev, &u);
        let novo = dot(&l_x, &a_u);
        let delta = n_kk + dtnd - (dl + ld) - lu + novo;
        if libm::fabs(delta) <= tol.zero_test {
            return Err(MatrixError::SingularDelta { column: k });
        }
        let dtn_x = row_times_matrix(&dtn, x_prev);
        let inv = 1.0 / delta;
        let b: Vec<f64> = (0..m).map(|j| (dtn_x[j] - l_x[j]) * inv).collect();
        (b, Some(delta))
    };

    // p = (I - X_{k-1} A_{k-1}) N_{k-1}^{-1} l_k
    let xa = x_prev.multiply(a_prev)?;
    let xa_u = matrix_times_col(&xa, &u);
    let p: Vec<f64> = (0..prev).map(|i| u[i] - xa_u[i]).collect();

    // X_k = [ X_{k-1} - d b - p b ; b ]
    let backend = x_prev.backend();
    let x = DenseMatrix::from_fn_in(k, m, backend, |i, j| {
        if i < prev {
            (x_prev.get(i, j) - d[i] * b[j]) - p[i] * b[j]
        } else {
            b[j]
        }
    });
    let a_cols = DenseMatrix::from_fn_in(m, k, backend, |i, j| {
        if j < prev {
            a_prev.get(i, j)
        } else {
            a_k[i]
        }
    });

    Ok(PartitioningState {
        k,
        x,
        a_cols,
        details: Some(StepDetails {
            d,
            c,
            b,
            delta,
            l,
            n_kk,
            n_leading,
            branch: if independent {
                StepBranch::Independent
            } else {
                StepBranch::Dependent
            },
        }),
    })
}

/// The weighted Moore-Penrose inverse of `A` under the weight pair `W`.
pub fn weighted_pinv(
    a: &DenseMatrix,
    w: &WeightPair,
    tol: &Tolerances,
) -> Result<DenseMatrix, MatrixError> {
    let (m, n) = (a.rows(), a.cols());
    if w.m().rows() != m || w.m().cols() != m {
        return Err(MatrixError::DimensionMismatch {
            expected: (m, m),
            got: (w.m().rows(), w.m().cols()),
        });
    }
    if w.n().rows() != n || w.n().cols() != n {
        return Err(MatrixError::DimensionMismatch {
            expected: (n, n),
            got: (w.n().rows(), w.n().cols()),
        });
    }
    let mut state = PartitioningState::init(&a.column(0), w.m(), tol)?;
    for k in 1..n {
        state = partition_step(state, &a.column(k), w.n(), w.m(), tol)?;
    }
    Ok(state.into_x())
}

/// The Moore-Penrose inverse: [`weighted_pinv`] under identity weights.
pub fn mp_pinv(a: &DenseMatrix, tol: &Tolerances) -> Result<DenseMatrix, MatrixError> {
    weighted_pinv(a, &WeightPair::identity(a.rows(), a.cols()), tol)
}

/// Inverse of a symmetric positive definite matrix by recursive bordering.
///
/// Grows the inverse of the leading principal block one row and column at
/// a time; the pivot at each extension is the Schur complement
/// `n_ii - l_i* N_{i-1}^{-1} l_i`, required to exceed `tol.pd_pivot`.
pub fn bordered_pd_inverse(
    s: &DenseMatrix,
    tol: &Tolerances,
) -> Result<DenseMatrix, MatrixError> {
    bordered_recursion(s, tol).map(|(inv, _)| inv)
}

/// Determinant of a symmetric positive definite matrix as the product of
/// its bordering pivots.
pub fn spd_det(s: &DenseMatrix, tol: &Tolerances) -> Result<f64, MatrixError> {
    bordered_recursion(s, tol).map(|(_, pivots)| pivots.iter().product())
}

fn bordered_recursion(
    s: &DenseMatrix,
    tol: &Tolerances,
) -> Result<(DenseMatrix, Vec<f64>), MatrixError> {
    if !s.is_square() {
        return Err(MatrixError::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    if !s.is_symmetric(1e-12) {
        return Err(MatrixError::NotSymmetric);
    }
    let n = s.rows();
    let backend = s.backend();
    let mut pivots = Vec::with_capacity(n);
    let first = s.get(0, 0);
    if !(first > tol.pd_pivot()) {
        return Err(MatrixError::NotPositiveDefinite {
            pivot: first,
            index: 1,
        });
    }
    pivots.push(first);
    let mut inv = DenseMatrix::from_fn_in(1, 1, backend, |_, _| 1.0 / first);
    for i in 2..=n {
        let prev = i - 1;
        let l: Vec<f64> = (0..prev).map(|r| s.get(r, i - 1)).collect();
        let n_ii = s.get(i - 1, i - 1);
        let u = matrix_times_col(&inv, &l);
        let g = n_ii - dot(&l, &u);
        if !(g > tol.pd_pivot()) {
            return Err(MatrixError::NotPositiveDefinite { pivot: g, index: i });
        }
        pivots.push(g);
        let g_inv = 1.0 / g;
        // 0.0 - x instead of -x so a zero coupling stays +0.0.
        let f: Vec<f64> = u.iter().map(|&v| 0.0 - v * g_inv).collect();
        let extended = DenseMatrix::from_fn_in(i, i, backend, |r, c| {
            if r < prev && c < prev {
                inv.get(r, c) + (f[r] * f[c]) * g
            } else if r < prev {
                f[r]
            } else if c < prev {
                f[c]
            } else {
                g_inv
            }
        });
        inv = extended;
    }
    Ok((inv, pivots))
}

/// Residuals of the four defining equations for a candidate inverse `X`
/// of `A` under weights `W`, each Frobenius norm scaled by
/// `1 + ‖A‖_F`: `AXA - A`, `XAX - X`, `MAX - (MAX)*`, `NXA - (NXA)*`.
pub fn penrose_residuals(
    a: &DenseMatrix,
    x: &DenseMatrix,
    w: &WeightPair,
) -> Result<[f64; 4], MatrixError> {
    if x.rows() != a.cols() || x.cols() != a.rows() {
        return Err(MatrixError::DimensionMismatch {
            expected: (a.cols(), a.rows()),
            got: (x.rows(), x.cols()),
        });
    }
    if w.m().rows() != a.rows() || w.n().rows() != a.cols() {
        return Err(MatrixError::DimensionMismatch {
            expected: (a.rows(), a.cols()),
            got: (w.m().rows(), w.n().rows()),
        });
    }
    let denom = 1.0 + a.frobenius_norm();
    let ax = a.multiply(x)?;
    let xa = x.multiply(a)?;
    let axa = ax.multiply(a)?;
    let xax = xa.multiply(x)?;
    let r1 = diff_frobenius(&axa, a) / denom;
    let r2 = diff_frobenius(&xax, x) / denom;
    let max = w.m().multiply(&ax)?;
    let nxa = w.n().multiply(&xa)?;
    let r3 = asymmetry_frobenius(&max) / denom;
    let r4 = asymmetry_frobenius(&nxa) / denom;
    Ok([r1, r2, r3, r4])
}

fn diff_frobenius(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
    let mut sum = 0.0;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let d = a.get(i, j) - b.get(i, j);
            sum += d * d;
        }
    }
    libm::sqrt(sum)
}

fn asymmetry_frobenius(a: &DenseMatrix) -> f64 {
    let mut sum = 0.0;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let d = a.get(i, j) - a.get(j, i);
            sum += d * d;
        }
    }
    libm::sqrt(sum)
}

fn inf_norm(v: &[f64]) -> f64 {
    let mut best = 0.0_f64;
    for &x in v {
        let a = libm::fabs(x);
        if a > best {
            best = a;
        }
    }
    best
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0.0;
    for i in 0..a.len() {
        acc += a[i] * b[i];
    }
    acc
}

/// `mat * v` for a column vector `v`.
fn matrix_times_col(mat: &DenseMatrix, v: &[f64]) -> Vec<f64> {
    debug_assert_eq!(mat.cols(), v.len());
    (0..mat.rows())
        .map(|i| {
            let mut acc = 0.0;
            for j in 0..v.len() {
                acc += mat.get(i, j) * v[j];
            }
            acc
        })
        .collect()
}

/// `v* mat` for a row vector over a matrix with `v.len()` rows.
fn row_times_matrix(v: &[f64], mat: &DenseMatrix) -> Vec<f64> {
    debug_assert_eq!(mat.rows(), v.len());
    (0..mat.cols())
        .map(|j| {
            let mut acc = 0.0;
            for i in 0..v.len() {
                acc += v[i] * mat.get(i, j);
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::DenseMatrix;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        libm::fabs(a - b) <= tol
    }

    #[test]
    fn bordered_inverse_identity_and_diagonal() {
        let tol = Tolerances::default();
        let eye = DenseMatrix::identity(5);
        assert_eq!(bordered_pd_inverse(&eye, &tol).unwrap(), eye);

        let d = DenseMatrix::from_rows(&[&[2.0, 0.0], &[0.0, 4.0]]);
        let inv = bordered_pd_inverse(&d, &tol).unwrap();
        assert_eq!(inv, DenseMatrix::from_rows(&[&[0.5, 0.0], &[0.0, 0.25]]));
    }

    #[test]
    fn bordered_inverse_rejects_bad_input() {
        let tol = Tolerances::default();
        assert!(matches!(
            bordered_pd_inverse(&DenseMatrix::zeros(2, 3), &tol),
            Err(MatrixError::NotSquare { .. })
        ));
        let asym = DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 1.0]]);
        assert!(matches!(
            bordered_pd_inverse(&asym, &tol),
            Err(MatrixError::NotSymmetric)
        ));
        let indefinite = DenseMatrix::from_rows(&[&[1.0, 0.0], &[0.0, -1.0]]);
        assert!(matches!(
            bordered_pd_inverse(&indefinite, &tol),
            Err(MatrixError::NotPositiveDefinite { index: 2, .. })
        ));
    }

    #[test]
    fn spd_det_is_pivot_product() {
        let tol = Tolerances::default();
        let d = DenseMatrix::from_rows(&[&[2.0, 0.0], &[0.0, 4.0]]);
        assert_eq!(spd_det(&d, &tol).unwrap(), 8.0);
        assert_eq!(spd_det(&DenseMatrix::identity(4), &tol).unwrap(), 1.0);
        let s = DenseMatrix::from_rows(&[&[4.0, 2.0], &[2.0, 3.0]]);
        // det = 4*3 - 2*2 = 8
        assert!(close(spd_det(&s, &tol).unwrap(), 8.0, 1e-12));
    }

    #[test]
    fn zero_matrix_pinv_is_zero() {
        let tol = Tolerances::default();
        let z = DenseMatrix::zeros(4, 3);
        let x = mp_pinv(&z, &tol).unwrap();
        assert_eq!(x, DenseMatrix::zeros(3, 4));
    }

    #[test]
    fn diagonal_pinv_is_exact() {
        let tol = Tolerances::default();
        let a = DenseMatrix::from_rows(&[&[2.0, 0.0, 0.0], &[0.0, 0.0, 0.0], &[0.0, 0.0, 5.0]]);
        let x = mp_pinv(&a, &tol).unwrap();
        let expected =
            DenseMatrix::from_rows(&[&[0.5, 0.0, 0.0], &[0.0, 0.0, 0.0], &[0.0, 0.0, 0.2]]);
        assert_eq!(x, expected);
        let w = WeightPair::identity(3, 3);
        let res = penrose_residuals(&a, &x, &w).unwrap();
        assert_eq!(res, [0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn row_vector_pinv_closed_form() {
        // Pseudo-inverse of [3, 4] is [3, 4]^T / 25 = [0.12, 0.16]^T.
        let tol = Tolerances::default();
        let a = DenseMatrix::from_rows(&[&[3.0, 4.0]]);
        let x = mp_pinv(&a, &tol).unwrap();
        assert_eq!((x.rows(), x.cols()), (2, 1));
        assert!(close(x.get(0, 0), 0.12, 1e-15));
        assert!(close(x.get(1, 0), 0.16, 1e-15));
    }

    #[test]
    fn square_inverse_via_identity_weights() {
        let tol = Tolerances::default();
        let a = DenseMatrix::from_rows(&[&[4.0, 7.0], &[2.0, 6.0]]);
        let x = weighted_pinv(&a, &WeightPair::identity(2, 2), &tol).unwrap();
        let xa = x.multiply(&a).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!(close(xa.get(i, j), expected, 1e-8));
            }
        }
    }

    #[test]
    fn branch_flags_are_observable() {
        let tol = Tolerances::default();
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0, 1.0], &[0.0, 1.0, 0.0], &[1.0, 0.0, 1.0]]);
        let m_w = DenseMatrix::identity(3);
        let n_w = DenseMatrix::identity(3);
        let state = PartitioningState::init(&a.column(0), &m_w, &tol).unwrap();
        let state = partition_step(state, &a.column(1), &n_w, &m_w, &tol).unwrap();
        assert_eq!(state.details().unwrap().branch, StepBranch::Independent);
        // Third column duplicates the first.
        let state = partition_step(state, &a.column(2), &n_w, &m_w, &tol).unwrap();
        assert_eq!(state.details().unwrap().branch, StepBranch::Dependent);
        assert_eq!(state.columns_processed(), 3);
    }

    #[test]
    fn compat_mode_changes_branch_decision() {
        // Second column differs from the first by 4e-4 entries: below the
        // display-rounding threshold but far above the default one.
        let a = DenseMatrix::from_rows(&[&[1.0, 1.0004], &[1.0, 1.0]]);
        let m_w = DenseMatrix::identity(2);
        let n_w = DenseMatrix::identity(2);

        let strict = Tolerances::default();
        let state = PartitioningState::init(&a.column(0), &m_w, &strict).unwrap();
        let state = partition_step(state, &a.column(1), &n_w, &m_w, &strict).unwrap();
        assert_eq!(state.details().unwrap().branch, StepBranch::Independent);

        let compat = Tolerances::default().with_compat_mode(true);
        let state = PartitioningState::init(&a.column(0), &m_w, &compat).unwrap();
        let state = partition_step(state, &a.column(1), &n_w, &m_w, &compat).unwrap();
        assert_eq!(state.details().unwrap().branch, StepBranch::Dependent);
    }

    #[test]
    fn stepwise_run_matches_full_run() {
        let tol = Tolerances::default();
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0], &[5.0, 6.0]]);
        let m_w = DenseMatrix::identity(3);
        let n_w = DenseMatrix::identity(2);
        let state = PartitioningState::init(&a.column(0), &m_w, &tol).unwrap();
        let state = partition_step(state, &a.column(1), &n_w, &m_w, &tol).unwrap();
        assert_eq!(state.x(), &mp_pinv(&a, &tol).unwrap());
    }

    #[test]
    fn weighted_identity_specialization_is_bit_identical() {
        let tol = Tolerances::default();
        let a = DenseMatrix::from_rows(&[&[1.0, 0.5, -2.0], &[0.25, 3.0, 1.0]]);
        let via_weights = weighted_pinv(&a, &WeightPair::identity(2, 3), &tol).unwrap();
        assert_eq!(via_weights, mp_pinv(&a, &tol).unwrap());
    }

    #[test]
    fn penrose_residuals_detect_perturbation() {
        let tol = Tolerances::default();
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0], &[5.0, 7.0]]);
        let x = mp_pinv(&a, &tol).unwrap();
        let w = WeightPair::identity(3, 2);
        let res = penrose_residuals(&a, &x, &w).unwrap();
        assert!(res.iter().all(|&r| r <= 1e-8), "residuals {res:?}");

        let perturbed = x
            .linear_combine(1.0, 0.1, &DenseMatrix::from_fn_in(2, 3, Backend::Flat, |_, _| 1.0))
            .unwrap();
        let res = penrose_residuals(&a, &perturbed, &w).unwrap();
        assert!(res[0] > 1e-3, "residual {0} should flag perturbation", res[0]);
    }

    #[test]
    fn weight_pair_validation() {
        assert!(WeightPair::new(DenseMatrix::identity(3), DenseMatrix::identity(2)).is_ok());
        let indefinite = DenseMatrix::from_rows(&[&[1.0, 0.0], &[0.0, -1.0]]);
        assert!(matches!(
            WeightPair::new(indefinite, DenseMatrix::identity(2)),
            Err(MatrixError::WeightNotPD)
        ));
        let asym = DenseMatrix::from_rows(&[&[1.0, 0.5], &[0.0, 1.0]]);
        assert!(matches!(
            WeightPair::new(DenseMatrix::identity(2), asym),
            Err(MatrixError::WeightNotPD)
        ));
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerances::new(1e-9, 1e-13).is_ok());
        assert!(matches!(
            Tolerances::new(0.0, 1e-12),
            Err(MatrixError::InvalidTolerance)
        ));
        assert!(matches!(
            Tolerances::new(1e-10, -1.0),
            Err(MatrixError::InvalidTolerance)
        ));
    }

    #[test]
    fn weighted_pinv_dimension_checks() {
        let tol = Tolerances::default();
        let a = DenseMatrix::zeros(3, 2);
        let w = WeightPair::identity(4, 2);
        assert!(matches!(
            weighted_pinv(&a, &w, &tol),
            Err(MatrixError::DimensionMismatch { .. })
        ));
    }
}
