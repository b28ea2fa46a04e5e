//! Companion matrices, Jordan canonical forms, exponentials of Jordan forms
//! and Cayley–Hamilton checks.
//!
//! The floating-point Jordan form works one eigenvalue cluster at a time:
//! the Schur form is reordered so that the cluster spans a leading
//! invariant subspace, the restriction minus the cluster mean is treated as
//! nilpotent, and Jordan chains are built from the kernels of its powers.

mod exact;

pub use exact::{jordan_form_exact, ExactJordanForm};

use num_complex::Complex64;
use num_traits::{Num, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{inverse, schur, schur_swap};
use crate::matcore::{Mat, Matrix, RatMat};
use crate::polyroots::{char_poly, eval_char_poly_exact, Poly};
use crate::spectra::svd;

/// The companion matrix of a monic polynomial: ones on the subdiagonal and
/// `−b_0, …, −b_{N−1}` down the last column.
pub fn companion<T: Clone + Num>(p: &Poly<T>) -> Result<Matrix<T>> {
    if p.is_zero() || p.degree() < 1 {
        return Err(Error::DegreeTooSmall {
            degree: p.degree(),
            required: 1,
        });
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = p.degree();
    let mut m = Matrix::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = T::one();
    }
    for (i, b) in p.coeffs()[..n].iter().enumerate() {
        m[(i, n - 1)] = T::zero() - b.clone();
    }
    Ok(m)
}

/// `A = P·J·P⁻¹` with `J` assembled from `blocks` in order.
#[derive(Debug, Clone, Serialize)]
pub struct JordanForm {
    /// `(eigenvalue, block size)`.
    pub blocks: Vec<(Complex64, usize)>,
    #[serde(skip)]
    pub passage: Mat,
}

/// A single Jordan block `λ·1 + N` of size `s`.
pub fn jordan_block(lambda: Complex64, s: usize) -> Mat {
    Mat::from_fn(s, s, |i, j| {
        if i == j {
            lambda
        } else if j == i + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::zero()
        }
    })
}

impl JordanForm {
    pub fn size(&self) -> usize {
        self.blocks.iter().map(|b| b.1).sum()
    }

    /// The block-diagonal matrix `J`.
    pub fn jordan_matrix(&self) -> Mat {
        let blocks: Vec<Mat> = self.blocks.iter().map(|&(l, s)| jordan_block(l, s)).collect();
        Mat::block_diag(&blocks)
    }

    pub fn reconstruct(&self) -> Result<Mat> {
        Ok(&(&self.passage * &self.jordan_matrix()) * &inverse(&self.passage)?)
    }

    /// `‖A − PJP⁻¹‖_F / max(1, ‖A‖_F)`.
    pub fn relative_residual(&self, m: &Mat) -> Result<f64> {
        Ok((m - &self.reconstruct()?).norm_fro() / m.norm_fro().max(1.0))
    }

    /// Block sizes at eigenvalues within `tol` of `lambda`, descending.
    pub fn sizes_at(&self, lambda: Complex64, tol: f64) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .blocks
            .iter()
            .filter(|b| (b.0 - lambda).norm() <= tol)
            .map(|b| b.1)
            .collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

/// Default clustering tolerance `1e−6·max(1, ‖A‖_F)`.
pub fn default_cluster_tol(m: &Mat) -> f64 {
    1e-6 * m.norm_fro().max(1.0)
}

/// Single-linkage clusters of `values` at distance `tol`; returns labels.
fn cluster(values: &[Complex64], tol: f64) -> Vec<usize> {
    let n = values.len();
    let mut label: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if label[j] < label[i] && (values[i] - values[j]).norm() <= tol {
                    label[i] = label[j];
                    changed = true;
                }
            }
        }
    }
    label
}

/// Numerical Jordan form. Eigenvalues within `cluster_tol` of each other
/// (single linkage) are treated as equal; clusters closer than
/// `10·cluster_tol` are refused.
pub fn jordan_form(m: &Mat, cluster_tol: f64) -> Result<JordanForm> {
    let n = m.require_square()?;
    let s = schur(m)?;
    let values = s.t.diagonal();
    let labels = cluster(&values, cluster_tol);
    let mut ids: Vec<usize> = labels.clone();
    ids.sort_unstable();
    ids.dedup();

    // every pair of clusters must be well separated
    let mut gap = f64::INFINITY;
    for i in 0..n {
        for j in 0..n {
            if labels[i] != labels[j] {
                gap = gap.min((values[i] - values[j]).norm());
            }
        }
    }
    if gap <= 10.0 * cluster_tol {
        return Err(Error::IllSeparatedClusters {
            gap,
            required: 10.0 * cluster_tol,
        });
    }

    let scale = m.norm_fro().max(1.0);
    let mut blocks = Vec::new();
    let mut columns: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for id in ids {
        let (mut q, mut t) = (s.q.clone(), s.t.clone());
        let mut lab = labels.clone();
        let size = lab.iter().filter(|&&l| l == id).count();
        // bubble the cluster to the top of the Schur form
        for target in 0..size {
            let from = (target..n).find(|&i| lab[i] == id).expect("cluster member");
            for k in (target..from).rev() {
                schur_swap(&mut q, &mut t, k);
                lab.swap(k, k + 1);
            }
        }
        let v = q.submatrix(0, n, 0, size);
        let t11 = t.submatrix(0, size, 0, size);
        let mu = t11.trace() / size as f64;
        let nil = &t11 - &Mat::identity(size).scale(&mu);
        let thresh = 10.0 * cluster_tol.max(1e-12 * scale);
        for (len, x) in chains(&nil, thresh)? {
            blocks.push((mu, len));
            let p = &v * &x;
            for c in 0..len {
                columns.push(p.col(c));
            }
        }
    }
    let passage = Mat::from_fn(n, n, |i, j| columns[j][i]);
    Ok(JordanForm { blocks, passage })
}

/// Jordan chains of a numerically nilpotent `N`; each returned matrix has
/// columns `N^{s−1}v, …, Nv, v`.
fn chains(nil: &Mat, thresh: f64) -> Result<Vec<(usize, Mat)>> {
    let m = nil.rows();
    // kernels of N, N², … until the whole space is reached
    let mut kernels: Vec<Vec<Vec<Complex64>>> = vec![Vec::new()];
    let mut power = Mat::identity(m);
    let grow = nil.norm_fro().max(1.0);
    for j in 1..=m {
        power = &power * nil;
        let k = null_space(&power, thresh * grow.powi(j as i32 - 1))?;
        let done = k.len() == m;
        kernels.push(k);
        if done {
            break;
        }
    }
    let top = kernels.len() - 1;
    if kernels[top].len() != m {
        return Err(Error::Numerical(
            "cluster restriction is not nilpotent at this tolerance".into(),
        ));
    }
    let mut heads: Vec<(usize, Vec<Complex64>)> = Vec::new();
    for s in (1..=top).rev() {
        // W = ker N^{s−1} + N^{t−s}(heads of length t > s)
        let mut w: Vec<Vec<Complex64>> = kernels[s - 1].clone();
        for (t, h) in &heads {
            w.push(apply_power(nil, h, t - s));
        }
        let w_basis = orthonormal_basis(&w, 1e-8)?;
        let fresh = complement(&kernels[s], &w_basis)?;
        for v in fresh {
            heads.push((s, v));
        }
    }
    heads.sort_by_key(|h| std::cmp::Reverse(h.0));
    Ok(heads
        .into_iter()
        .map(|(s, v)| {
            let mut x = Mat::zeros(m, s);
            for c in 0..s {
                x.set_col(c, &apply_power(nil, &v, s - 1 - c));
            }
            (s, x)
        })
        .collect())
}

fn apply_power(a: &Mat, v: &[Complex64], k: usize) -> Vec<Complex64> {
    let mut out = v.to_vec();
    for _ in 0..k {
        out = a.matvec(&out).expect("square");
    }
    out
}

/// Orthonormal basis of `ker A` from the SVD (singular values ≤ `thresh`).
fn null_space(a: &Mat, thresh: f64) -> Result<Vec<Vec<Complex64>>> {
    let d = svd(a)?;
    let n = a.cols();
    Ok((0..n)
        .filter(|&k| d.singulars.get(k).is_none_or(|&s| s <= thresh))
        .map(|k| d.right.col(k))
        .collect())
}

/// Orthonormal basis of the span of `vs` (relative rank threshold `tol`).
fn orthonormal_basis(vs: &[Vec<Complex64>], tol: f64) -> Result<Vec<Vec<Complex64>>> {
    if vs.is_empty() {
        return Ok(Vec::new());
    }
    let n = vs[0].len();
    let a = Mat::from_fn(n, vs.len(), |i, j| vs[j][i]);
    let d = svd(&a)?;
    let rank = d.rank(tol);
    Ok((0..rank).map(|k| d.left.col(k)).collect())
}

/// Orthonormal directions of `span(space)` orthogonal to the orthonormal `w`.
fn complement(space: &[Vec<Complex64>], w: &[Vec<Complex64>]) -> Result<Vec<Vec<Complex64>>> {
    let projected: Vec<Vec<Complex64>> = space
        .iter()
        .map(|v| {
            let mut v = v.clone();
            for _ in 0..2 {
                for u in w {
                    let d: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                    for (vi, ui) in v.iter_mut().zip(u) {
                        *vi -= d * ui;
                    }
                }
            }
            v
        })
        .collect();
    let target = space.len().saturating_sub(w.len());
    let mut basis = orthonormal_basis(&projected, 1e-8)?;
    basis.truncate(target);
    Ok(basis)
}

/// `e^A = P·e^J·P⁻¹`, each block contributing `e^λ` times the
/// upper-triangular Toeplitz matrix with entries `1, 1, 1/2!, …, 1/(s−1)!`.
pub fn jordan_expm(jf: &JordanForm) -> Result<Mat> {
    let blocks: Vec<Mat> = jf
        .blocks
        .iter()
        .map(|&(lambda, s)| jordan_block_exp(lambda, s))
        .collect();
    let e = Mat::block_diag(&blocks);
    Ok(&(&jf.passage * &e) * &inverse(&jf.passage)?)
}

pub fn jordan_block_exp(lambda: Complex64, s: usize) -> Mat {
    let el = lambda.exp();
    let mut inv_fact = vec![1.0; s];
    for k in 1..s {
        inv_fact[k] = inv_fact[k - 1] / k as f64;
    }
    Mat::from_fn(s, s, |i, j| if j >= i { el * inv_fact[j - i] } else { Complex64::zero() })
}

/// `‖P_A(A)‖_F` for the characteristic polynomial `P_A` of `A`.
pub fn cayley_hamilton_residual(m: &Mat) -> Result<f64> {
    let p = char_poly(m)?;
    Ok(m.eval_poly(p.coeffs())?.norm_fro())
}

/// Exact Cayley–Hamilton check: `P_A(A)` as a rational matrix.
pub fn cayley_hamilton_exact(m: &RatMat) -> Result<RatMat> {
    eval_char_poly_exact(m)
}
