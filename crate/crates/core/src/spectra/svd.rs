use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matcore::Mat;

/// `A = left · diag(singulars) · right*` with square unitary factors.
#[derive(Debug, Clone)]
pub struct SvdDecomp {
    pub left: Mat,
    /// Descending, length `min(rows, cols)`.
    pub singulars: Vec<f64>,
    pub right: Mat,
}

impl SvdDecomp {
    /// Rebuilds `U·Σ·V*`.
    pub fn reconstruct(&self) -> Mat {
        let (m, n) = (self.left.rows(), self.right.rows());
        Mat::from_fn(m, n, |i, j| {
            self.singulars
                .iter()
                .enumerate()
                .map(|(k, &s)| self.left[(i, k)] * s * self.right[(j, k)].conj())
                .sum()
        })
    }

    /// Numerical rank: singular values above `tol · σ_max`.
    pub fn rank(&self, tol: f64) -> usize {
        let top = self.singulars.first().copied().unwrap_or(0.0);
        self.singulars.iter().filter(|&&s| s > tol * top && s > 0.0).count()
    }
}

/// Singular value decomposition by one-sided (Hestenes) Jacobi rotations.
pub fn svd(m: &Mat) -> Result<SvdDecomp> {
    if !m.is_finite() {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    if m.rows() < m.cols() {
        let t = svd(&m.adjoint())?;
        return Ok(SvdDecomp {
            left: t.right,
            singulars: t.singulars,
            right: t.left,
        });
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut v = Mat::identity(cols);
    let col_dot = |a: &Mat, p: usize, q: usize| -> Complex64 {
        (0..a.rows()).map(|i| a[(i, p)].conj() * a[(i, q)]).sum()
    };
    let mut converged = false;
    for _sweep in 0..80 {
        let mut rotated = false;
        for p in 0..cols {
            for q in p + 1..cols {
                let alpha = col_dot(&a, p, p).re;
                let beta = col_dot(&a, q, q).re;
                let gamma = col_dot(&a, p, q);
                let g = gamma.norm();
                if g == 0.0 || g <= 1e-15 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let e = (gamma / g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta == 0.0 {
                    1.0
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for x in [&mut a, &mut v] {
                    for i in 0..x.rows() {
                        let (xp, xq) = (x[(i, p)], x[(i, q)] * e);
                        x[(i, p)] = xp * c - xq * s;
                        x[(i, q)] = xp * s + xq * c;
                    }
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numerical("one-sided Jacobi SVD did not converge".into()));
    }
    let norms: Vec<f64> = (0..cols).map(|j| col_dot(&a, j, j).re.sqrt()).collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&x, &y| norms[y].total_cmp(&norms[x]));
    let singulars: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let right = v.select_cols(&order);
    let top = singulars.first().copied().unwrap_or(0.0);
    let mut left_cols: Vec<Vec<Complex64>> = Vec::with_capacity(rows);
    for (k, &j) in order.iter().enumerate() {
        if singulars[k] > 1e-300 && singulars[k] > 1e-15 * top {
            left_cols.push((0..rows).map(|i| a[(i, j)] / singulars[k]).collect());
        } else {
            break;
        }
    }
    let left = complete_orthonormal(left_cols, rows);
    Ok(SvdDecomp {
        left,
        singulars,
        right,
    })
}

/// Extends orthonormal columns to a unitary `n×n` matrix (Gram–Schmidt
/// against the standard basis, two passes).
pub(crate) fn complete_orthonormal(mut cols: Vec<Vec<Complex64>>, n: usize) -> Mat {
    let mut e = 0;
    while cols.len() < n && e < n {
        let mut w = vec![Complex64::zero(); n];
        w[e] = Complex64::new(1.0, 0.0);
        e += 1;
        for _ in 0..2 {
            for c in &cols {
                let d: Complex64 = c.iter().zip(&w).map(|(x, y)| x.conj() * y).sum();
                for (wi, ci) in w.iter_mut().zip(c) {
                    *wi -= d * ci;
                }
            }
        }
        let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            cols.push(w.into_iter().map(|z| z / norm).collect());
        }
    }
    Mat::from_fn(n, n, |i, j| cols[j][i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::c64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rows: usize, cols: usize, seed: u64) -> Mat {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Mat::from_fn(rows, cols, |_, _| {
            c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    #[test]
    fn diagonal_signs_drop() {
        let d = svd(&Mat::from_real_rows(&[&[3.0, 0.0], &[0.0, -2.0]]).unwrap()).unwrap();
        assert!((d.singulars[0] - 3.0).abs() < 1e-15);
        assert!((d.singulars[1] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn rectangular_shapes() {
        for (r, c) in [(3, 5), (5, 3), (4, 4), (1, 3)] {
            let a = random(r, c, (r * 10 + c) as u64);
            let d = svd(&a).unwrap();
            assert_eq!(d.singulars.len(), r.min(c));
            assert!((&d.reconstruct() - &a).norm_fro() < 1e-10);
            assert!(d.left.unitarity_residual() < 1e-10);
            assert!(d.right.unitarity_residual() < 1e-10);
            assert!(d.singulars.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn rank_deficient() {
        let a = &random(5, 2, 1) * &random(2, 4, 2);
        let d = svd(&a).unwrap();
        assert_eq!(d.rank(1e-10), 2);
        assert!(d.left.unitarity_residual() < 1e-10);
        assert!((&d.reconstruct() - &a).norm_fro() < 1e-10);
    }

    #[test]
    fn zero_matrix() {
        let d = svd(&Mat::zeros(3, 2)).unwrap();
        assert_eq!(d.singulars, vec![0.0, 0.0]);
        assert!(d.left.unitarity_residual() < 1e-14);
    }
}
