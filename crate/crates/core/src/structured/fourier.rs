use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matcore::Mat;

/// `F_N = (w^{ij})` with `w = e^{2πi/N}`, indices `0..N`.
pub fn fourier_matrix(n: usize) -> Result<Mat> {
    if n == 0 {
        return Err(Error::InvalidInput("Fourier matrix needs N ≥ 1".into()));
    }
    // reduce the exponent mod N first so entries stay exact on the unit circle
    Ok(Mat::from_fn(n, n, |i, j| {
        Complex64::from_polar(1.0, TAU * ((i * j) % n) as f64 / n as f64)
    }))
}

/// Fourier matrix of `Z_{N₁} × … × Z_{N_s}`: `F_{N₁} ⊗ … ⊗ F_{N_s}`.
pub fn group_fourier(factors: &[usize]) -> Result<Mat> {
    let mut out = Mat::identity(1);
    for &n in factors {
        out = out.kron(&fourier_matrix(n)?);
    }
    Ok(out)
}

/// First row `ξ` of a circulant matrix `M_{ij} = ξ_{j−i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantSymbol {
    xi: Vec<Complex64>,
}

impl CirculantSymbol {
    pub fn new(xi: Vec<Complex64>) -> Result<Self> {
        if xi.is_empty() {
            return Err(Error::InvalidInput("circulant symbol must be non-empty".into()));
        }
        Ok(Self { xi })
    }

    pub fn xi(&self) -> &[Complex64] {
        &self.xi
    }

    pub fn len(&self) -> usize {
        self.xi.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub fn circulant_matrix(sym: &CirculantSymbol) -> Mat {
    let n = sym.len();
    Mat::from_fn(n, n, |i, j| sym.xi[(j + n - i) % n])
}

#[derive(Debug, Clone, Serialize)]
pub struct CirculantDiagonalization {
    /// Eigenvalues `q = F_N ξ`.
    pub q: Vec<Complex64>,
    /// `‖M − F·diag(q)·F*/N‖_F`.
    pub residual: f64,
}

/// `M = (1/N)·F_N·diag(q)·F_N*` with `q = F_N ξ`.
pub fn circulant_diagonalize(sym: &CirculantSymbol) -> Result<CirculantDiagonalization> {
    let n = sym.len();
    let f = fourier_matrix(n)?;
    let q = f.matvec(sym.xi())?;
    let rebuilt = (&(&f * &Mat::diag(&q)) * &f.adjoint()).scale_real(1.0 / n as f64);
    let residual = (&circulant_matrix(sym) - &rebuilt).norm_fro();
    Ok(CirculantDiagonalization { q, residual })
}
