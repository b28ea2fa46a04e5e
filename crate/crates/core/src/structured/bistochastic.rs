use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::matcore::Mat;

#[derive(Debug, Clone, Serialize)]
pub struct BistochasticReport {
    pub row_sums: Vec<Complex64>,
    pub col_sums: Vec<Complex64>,
    pub is_bistochastic: bool,
    /// The common sum `λ` when all row and column sums agree.
    pub common_sum: Option<Complex64>,
    /// For unitary input: whether "row sums all equal `λ` with `|λ| = 1`"
    /// agrees with being bistochastic. `None` for non-unitary input.
    pub unitary_consistent: Option<bool>,
}

/// Row and column sums, and whether they all coincide (within `tol`).
pub fn bistochastic_check(m: &Mat, tol: f64) -> Result<BistochasticReport> {
    let n = m.require_square()?;
    let row_sums: Vec<Complex64> = (0..n).map(|i| m.row(i).iter().sum()).collect();
    let col_sums: Vec<Complex64> = (0..n).map(|j| (0..n).map(|i| m[(i, j)]).sum()).collect();
    let scale = tol * m.norm_fro().max(1.0);
    let all_equal = |v: &[Complex64], x: Complex64| v.iter().all(|s| (s - x).norm() <= scale);
    let lambda = row_sums.first().copied().unwrap_or_default();
    let row_stochastic = all_equal(&row_sums, lambda);
    let is_bistochastic = row_stochastic && all_equal(&col_sums, lambda);
    let unitary_consistent = (m.unitarity_residual() <= scale).then(|| {
        let row_criterion = row_stochastic && (lambda.norm() - 1.0).abs() <= scale;
        row_criterion == is_bistochastic
    });
    Ok(BistochasticReport {
        row_sums,
        col_sums,
        is_bistochastic,
        common_sum: is_bistochastic.then_some(lambda),
        unitary_consistent,
    })
}

/// The orthogonal bistochastic matrix `K_N = (2𝕀 − N·1)/N`.
pub fn k_matrix(n: usize) -> Mat {
    let nf = n as f64;
    Mat::from_fn(n, n, |i, j| {
        Complex64::new(if i == j { (2.0 - nf) / nf } else { 2.0 / nf }, 0.0)
    })
}
