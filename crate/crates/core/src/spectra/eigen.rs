use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::hermitian::eigh;
use super::svd::svd;
use crate::error::{Error, Result};
use crate::factor::schur;
use crate::matcore::Mat;

/// Which structure the caller asserts about the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenKind {
    General,
    Hermitian,
    Normal,
}

impl FromStr for EigenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Self::General),
            "hermitian" => Ok(Self::Hermitian),
            "normal" => Ok(Self::Normal),
            other => Err(Error::InvalidInput(format!("unknown eigen kind {other:?}"))),
        }
    }
}

impl fmt::Display for EigenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::General => "general",
            Self::Hermitian => "hermitian",
            Self::Normal => "normal",
        })
    }
}

/// `A·P = P·diag(values)`; `P` is unitary for the hermitian and normal kinds.
#[derive(Debug, Clone)]
pub struct EigenDecomp {
    pub values: Vec<Complex64>,
    pub passage: Mat,
    pub kind: EigenKind,
}

impl EigenDecomp {
    /// `max_i ‖A·p_i − λ_i·p_i‖`.
    pub fn residual(&self, m: &Mat) -> f64 {
        let ap = m * &self.passage;
        (0..self.values.len())
            .map(|i| {
                (0..m.rows())
                    .map(|r| (ap[(r, i)] - self.values[i] * self.passage[(r, i)]).norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }
}

/// Scale used to make structural tolerances relative.
pub(crate) fn scale_of(m: &Mat) -> f64 {
    m.norm_fro().max(1.0)
}

pub(crate) fn require_hermitian(m: &Mat, tol: f64) -> Result<()> {
    let r = m.hermitian_residual();
    if r > tol * scale_of(m) {
        return Err(Error::NotHermitian(r));
    }
    Ok(())
}

pub(crate) fn require_normal(m: &Mat, tol: f64) -> Result<()> {
    let r = m.normality_residual();
    if r > tol * scale_of(m) * scale_of(m) {
        return Err(Error::NotNormal(r));
    }
    Ok(())
}

/// Eigenvalues in Schur order.
pub fn eigenvalues(m: &Mat) -> Result<Vec<Complex64>> {
    Ok(schur(m)?.t.diagonal())
}

/// Eigendecomposition under the structure hint `kind`.
///
/// The general path reports [`Error::Defective`] instead of returning a
/// singular passage matrix.
pub fn eigen(m: &Mat, kind: EigenKind, tol: f64) -> Result<EigenDecomp> {
    m.require_square()?;
    match kind {
        EigenKind::Hermitian => {
            require_hermitian(m, tol)?;
            let (vals, passage) = eigh(m)?;
            Ok(EigenDecomp {
                values: vals.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
                passage,
                kind,
            })
        }
        EigenKind::Normal => {
            require_normal(m, tol)?;
            // for a normal matrix the Schur vectors already diagonalize it
            let s = schur(m)?;
            Ok(EigenDecomp {
                values: s.t.diagonal(),
                passage: s.q,
                kind,
            })
        }
        EigenKind::General => general(m, tol),
    }
}

/// Eigenvectors of an upper-triangular `T` by back substitution.
pub(crate) fn triangular_eigenvectors(t: &Mat) -> Mat {
    let n = t.rows();
    let small = (f64::EPSILON * t.norm_fro()).max(f64::MIN_POSITIVE);
    let mut y = Mat::zeros(n, n);
    for k in 0..n {
        let lambda = t[(k, k)];
        y[(k, k)] = Complex64::new(1.0, 0.0);
        for j in (0..k).rev() {
            let s: Complex64 = (j + 1..=k).map(|i| t[(j, i)] * y[(i, k)]).sum();
            let mut d = t[(j, j)] - lambda;
            if d.norm() < small {
                d = Complex64::new(small, 0.0);
            }
            y[(j, k)] = -s / d;
        }
    }
    y
}

fn normalize_columns(m: &mut Mat) {
    for j in 0..m.cols() {
        let norm = (0..m.rows()).map(|i| m[(i, j)].norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.0 {
            for i in 0..m.rows() {
                m[(i, j)] /= norm;
            }
        }
    }
}

/// Below this smallest singular value of the normalized passage matrix the
/// eigenvectors are treated as linearly dependent.
const DEFECT_THRESHOLD: f64 = 1e-7;

fn general(m: &Mat, tol: f64) -> Result<EigenDecomp> {
    let s = schur(m)?;
    let values = s.t.diagonal();
    let mut passage = &s.q * &triangular_eigenvectors(&s.t);
    normalize_columns(&mut passage);
    let sv = svd(&passage)?;
    let smallest = sv.singulars.last().copied().unwrap_or(1.0);
    if smallest <= DEFECT_THRESHOLD {
        return Err(defect_report(m, &values, &passage, tol));
    }
    Ok(EigenDecomp {
        values,
        passage,
        kind: EigenKind::General,
    })
}

fn defect_report(m: &Mat, values: &[Complex64], passage: &Mat, tol: f64) -> Error {
    let n = values.len();
    // the most nearly parallel pair of eigenvectors marks the defective eigenvalue
    let (mut bi, mut bj, mut best) = (0, 0, -1.0);
    for i in 0..n {
        for j in i + 1..n {
            let d: Complex64 = (0..n).map(|r| passage[(r, i)].conj() * passage[(r, j)]).sum();
            if d.norm() > best {
                (bi, bj, best) = (i, j, d.norm());
            }
        }
    }
    let scale = scale_of(m);
    let radius = (4.0 * (values[bi] - values[bj]).norm()).max(1e-12 * scale);
    let centre = (values[bi] + values[bj]) * 0.5;
    let cluster: Vec<Complex64> = values
        .iter()
        .copied()
        .filter(|z| (z - centre).norm() <= radius)
        .collect();
    let eigenvalue = cluster.iter().sum::<Complex64>() / cluster.len() as f64;
    let shifted = m - &Mat::identity(n).scale(&eigenvalue);
    let rank = svd(&shifted)
        .map(|d| {
            d.singulars
                .iter()
                .filter(|&&x| x > tol.max(1e-8) * scale)
                .count()
        })
        .unwrap_or(n);
    Error::Defective {
        eigenvalue: if eigenvalue.im.abs() < 1e-12 * scale {
            Complex64::new(eigenvalue.re, 0.0)
        } else {
            eigenvalue
        },
        algebraic: cluster.len(),
        geometric: n - rank,
    }
}

/// `true` when the eigenvalues are pairwise separated by more than `tol·‖A‖`.
pub fn has_distinct_eigenvalues(m: &Mat, tol: f64) -> Result<bool> {
    let vals = eigenvalues(m)?;
    let scale = scale_of(m);
    Ok(vals.iter().enumerate().all(|(i, a)| {
        vals[i + 1..]
            .iter()
            .all(|b| (a - b).norm() > tol * scale)
    }))
}

/// Sorts by real part, then imaginary part; for stable presentation.
pub fn sort_values(values: &mut [Complex64]) {
    values.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}
