//! Dense matrices, permutations and determinants.

pub mod det;
pub mod json;
pub mod matrix;
pub mod perm;

pub use det::{det, det_int, det_permutation_sum, det_rational, rank_int};
pub use matrix::{c64, real, IntMat, Mat, Matrix, RatMat};
pub use perm::Perm;

/// Signature of a permutation, `+1` or `−1`.
pub fn perm_signature(p: &Perm) -> i32 {
    p.signature()
}

/// The 0–1 matrix of a permutation (see [`Perm::matrix`]).
pub fn perm_matrix(p: &Perm) -> IntMat {
    p.matrix()
}
