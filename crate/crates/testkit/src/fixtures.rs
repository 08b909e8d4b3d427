//! Fixture matrices shared by the test suites: the built-in 11x10 test
//! matrix, the symmetric 6x6 matrix and the sparse 10x10 matrix, together
//! with their expected stored string forms.

use pinv_core::{DenseMatrix, SparseCoo};

/// The 11x10 test matrix registered under the name `A_10_11`.
pub fn matrix_a_11x10() -> DenseMatrix {
    const ROWS: [[f64; 10]; 11] = [
        [11.0, 10.0, 9.0, 8.0, 7.0, 6.0, 5.0, 4.0, 3.0, 2.0],
        [10.0, 10.0, 9.0, 8.0, 7.0, 6.0, 5.0, 4.0, 3.0, 2.0],
        [9.0, 9.0, 9.0, 8.0, 7.0, 6.0, 5.0, 4.0, 3.0, 2.0],
        [8.0, 8.0, 8.0, 8.0, 7.0, 6.0, 5.0, 4.0, 3.0, 2.0],
        [7.0, 7.0, 7.0, 7.0, 7.0, 6.0, 5.0, 4.0, 3.0, 2.0],
        [6.0, 6.0, 6.0, 6.0, 6.0, 6.0, 5.0, 4.0, 3.0, 2.0],
        [5.0, 5.0, 5.0, 5.0, 5.0, 5.0, 5.0, 4.0, 3.0, 2.0],
        [4.0, 4.0, 4.0, 4.0, 4.0, 4.0, 4.0, 4.0, 3.0, 2.0],
        [3.0, 3.0, 3.0, 3.0, 3.0, 3.0, 3.0, 3.0, 2.0, 1.0],
        [2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 1.0, 0.0],
        [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, -1.0],
    ];
    let data: Vec<f64> = ROWS.iter().flatten().copied().collect();
    DenseMatrix::new(11, 10, data).expect("fixture is valid")
}

/// The symmetric 6x6 matrix stored as record 2.
pub fn matrix_b_6x6() -> DenseMatrix {
    DenseMatrix::from_rows(&[
        &[282.0, -11.0, -206.0, -39.0, 84.0, 94.0],
        &[-11.0, 241.0, -80.0, 129.0, 121.0, -86.0],
        &[-206.0, -80.0, 306.0, 4.0, -113.0, 2.0],
        &[-39.0, 129.0, 4.0, 394.0, -19.0, -219.0],
        &[84.0, 121.0, -113.0, -19.0, 119.0, 15.0],
        &[94.0, -86.0, 2.0, -219.0, 15.0, 184.0],
    ])
}

/// The sparse unstructured 10x10 matrix stored as records 3-5.
pub fn matrix_c_10x10() -> DenseMatrix {
    let mut data = vec![0.0_f64; 100];
    for &(i, j, v) in MATRIX_C_ENTRIES {
        data[i * 10 + j] = v;
    }
    DenseMatrix::new(10, 10, data).expect("fixture is valid")
}

/// Nonzero entries of the sparse fixture, in (row, col, value) form.
pub const MATRIX_C_ENTRIES: &[(usize, usize, f64)] = &[
    (0, 0, 1.0),
    (0, 1, 2.0),
    (0, 2, 3.0),
    (1, 1, 2.0),
    (2, 0, 1.0),
    (2, 3, 4.0),
    (4, 1, 4.0),
    (4, 5, 8.0),
    (9, 9, 2.0),
];

/// Expected coordinate-component strings for [`matrix_c_10x10`].
pub const MATRIX_C_ROW_STRING: &str = "0,0,0,1,2,2,4,4,9";
pub const MATRIX_C_COL_STRING: &str = "0,1,2,1,0,3,1,5,9";
pub const MATRIX_C_VAL_STRING: &str = "1,2,3,2,1,4,4,8,2";

pub fn matrix_c_coo() -> SparseCoo {
    SparseCoo::from_dense(&matrix_c_10x10(), 0.0).expect("fixture is valid")
}
