//! Matrix computation core: dense and sparse matrix types, the text
//! serialization formats used by the result store, and the weighted
//! Moore-Penrose inverse computed by column partitioning.
//!
//! The crate is `no_std`-compatible (`alloc` required); the default `std`
//! feature only adds `std::error::Error` impls for the error types.
//! Everything here is pure computation over immutable values — no IO, no
//! interior mutability — so all types are safe to share across threads.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod matrix;
pub mod pinv;
pub mod sparse;
pub mod text;

pub use error::{MatrixError, TextError};
pub use matrix::{Backend, DenseMatrix};
pub use pinv::{
    bordered_pd_inverse, mp_pinv, partition_step, penrose_residuals, spd_det, weighted_pinv,
    PartitioningState, StepBranch, Tolerances, WeightPair,
};
pub use sparse::SparseCoo;
pub use text::{
    canonical_f64, display_round, from_mr_records, from_r_string, parse_matrix_text,
    to_mr_records, to_r_string, RString,
};
