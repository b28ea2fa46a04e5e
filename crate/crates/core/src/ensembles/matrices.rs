use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rng::{Normals, SeedSpec};
use super::stats::Estimate;
use crate::error::{Error, Result};
use crate::factor::qr;
use crate::matcore::Mat;
use crate::partitions::ColoredWord;
use crate::spectra::colored_trace_moment;

/// A random matrix model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EnsembleSpec {
    /// `N×N` with i.i.d. complex Gaussian entries of variance `t`.
    Gaussian { n: usize, t: f64 },
    /// Hermitian: real Gaussian diagonal and complex Gaussian off-diagonal
    /// entries of variance `t`.
    Wigner { n: usize, t: f64 },
    /// `YY*` with `Y` an `N×M` complex Gaussian matrix of variance 1.
    Wishart { n: usize, m: usize },
}

impl EnsembleSpec {
    pub fn dim(&self) -> usize {
        match *self {
            Self::Gaussian { n, .. } | Self::Wigner { n, .. } | Self::Wishart { n, .. } => n,
        }
    }

    /// Scaling under which moments have a limit: `1/√N`, or `1/N` for
    /// Wishart matrices.
    pub fn normalization(&self) -> f64 {
        let n = self.dim() as f64;
        match self {
            Self::Wishart { .. } => 1.0 / n,
            _ => 1.0 / n.sqrt(),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Self::Gaussian { n, t } | Self::Wigner { n, t } => n >= 1 && t > 0.0 && t.is_finite(),
            Self::Wishart { n, m } => n >= 1 && m >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("invalid ensemble parameters {self:?}")))
        }
    }

    pub fn sample<R: Rng>(&self, g: &mut Normals<R>) -> Mat {
        match *self {
            Self::Gaussian { n, t } => Mat::from_fn(n, n, |_, _| complex_normal(g, t)),
            Self::Wigner { n, t } => {
                let mut z = Mat::zeros(n, n);
                for i in 0..n {
                    z[(i, i)] = Complex64::new(t.sqrt() * g.standard(), 0.0);
                    for j in i + 1..n {
                        let w = complex_normal(g, t);
                        z[(i, j)] = w;
                        z[(j, i)] = w.conj();
                    }
                }
                z
            }
            Self::Wishart { n, m } => {
                let y = Mat::from_fn(n, m, |_, _| complex_normal(g, 1.0));
                let mut w = &y * &y.adjoint();
                // Y·Y* is Hermitian up to rounding; make it exactly so
                for i in 0..n {
                    w[(i, i)] = Complex64::new(w[(i, i)].re, 0.0);
                    for j in i + 1..n {
                        w[(j, i)] = w[(i, j)].conj();
                    }
                }
                w
            }
        }
    }
}

/// Complex Gaussian with `E|z|² = t`.
pub fn complex_normal<R: Rng>(g: &mut Normals<R>, t: f64) -> Complex64 {
    let s = (t / 2.0).sqrt();
    Complex64::new(s * g.standard(), s * g.standard())
}

/// `count` independent samples; sample `i` uses stream `i` of `seed`.
pub fn sample_ensemble(spec: &EnsembleSpec, seed: SeedSpec, count: usize) -> Result<Vec<Mat>> {
    spec.validate()?;
    Ok((0..count)
        .into_par_iter()
        .map(|i| spec.sample(&mut Normals::new(seed.rng(i as u64))))
        .collect())
}

/// Haar-distributed orthogonal matrix: QR of a real Gaussian matrix with
/// the diagonal of `R` made positive.
pub fn haar_orthogonal<R: Rng>(n: usize, g: &mut Normals<R>) -> Result<Mat> {
    let z = Mat::from_fn(n, n, |_, _| Complex64::new(g.standard(), 0.0));
    Ok(qr(&z)?.q)
}

/// Haar-distributed unitary matrix, from a complex Gaussian matrix.
pub fn haar_unitary<R: Rng>(n: usize, g: &mut Normals<R>) -> Result<Mat> {
    let z = Mat::from_fn(n, n, |_, _| complex_normal(g, 1.0));
    Ok(qr(&z)?.q)
}

/// Averages of `tr((cZ)^{ε₁}⋯(cZ)^{ε_k})` over the samples, one per word,
/// where `c` is `scale`, `∘` stands for `Z` and `•` for `Z*`.
pub fn empirical_colored_moments(samples: &[Mat], words: &[ColoredWord], scale: f64) -> Result<Vec<Estimate>> {
    if samples.is_empty() {
        return Err(Error::InvalidInput("no samples".into()));
    }
    let scaled: Vec<Mat> = samples.iter().map(|m| m.scale_real(scale)).collect();
    words
        .iter()
        .map(|w| {
            let values = scaled
                .iter()
                .map(|m| colored_trace_moment(m, w.letters()))
                .collect::<Result<Vec<_>>>()?;
            Ok(Estimate::from_samples(&values))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::eigvalsh;

    #[test]
    fn structural_guarantees() {
        let seed = SeedSpec::new(1);
        for z in sample_ensemble(&EnsembleSpec::Wigner { n: 12, t: 1.0 }, seed, 3).unwrap() {
            assert_eq!((&z - &z.adjoint()).norm_max(), 0.0);
        }
        for w in sample_ensemble(&EnsembleSpec::Wishart { n: 10, m: 4 }, seed, 3).unwrap() {
            assert_eq!(w.hermitian_residual(), 0.0);
            assert!(eigvalsh(&w).unwrap()[0] >= -1e-10);
        }
        assert!(sample_ensemble(&EnsembleSpec::Wigner { n: 3, t: 0.0 }, seed, 1).is_err());
    }

    #[test]
    fn gaussian_entry_variance() {
        let t = 2.0;
        let draws = sample_ensemble(&EnsembleSpec::Gaussian { n: 10, t }, SeedSpec::new(9), 1000).unwrap();
        let v: Vec<f64> = draws.iter().flat_map(|m| m.data().iter().map(|z| z.norm_sqr())).collect();
        let e = Estimate::from_real(&v);
        assert_eq!(v.len(), 100_000);
        assert!(e.agrees_with(t, 3.0), "{e:?}");
    }

    #[test]
    fn sampling_is_deterministic() {
        let spec = EnsembleSpec::Gaussian { n: 5, t: 1.0 };
        let a = sample_ensemble(&spec, SeedSpec::new(3), 8).unwrap();
        let b = sample_ensemble(&spec, SeedSpec::new(3), 8).unwrap();
        assert_eq!(a, b);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let c = pool.install(|| sample_ensemble(&spec, SeedSpec::new(3), 8).unwrap());
        assert_eq!(a, c);
    }

    #[test]
    fn haar_orthogonal_is_orthogonal() {
        let mut g = Normals::new(SeedSpec::new(5).rng(0));
        let o = haar_orthogonal(6, &mut g).unwrap();
        assert!(o.unitarity_residual() < 1e-12);
        assert!(o.data().iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn wigner_low_moments() {
        let spec = EnsembleSpec::Wigner { n: 100, t: 1.0 };
        let samples = sample_ensemble(&spec, SeedSpec::new(11), 10).unwrap();
        let words: Vec<ColoredWord> = (1..=3).map(ColoredWord::white).collect();
        let m = empirical_colored_moments(&samples, &words, spec.normalization()).unwrap();
        assert!(m[0].mean.norm() < 0.05);
        assert!((m[1].mean.re - 1.0).abs() < 0.05);
        assert!(m[2].mean.norm() < 0.1);
    }
}
