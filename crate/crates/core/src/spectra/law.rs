use num_complex::Complex64;
use serde::Serialize;

use super::eigen::{eigen, EigenKind};
use crate::error::{Error, Result};
use crate::matcore::Mat;

/// Default absolute distance under which eigenvalues merge into one atom.
pub const MERGE_TOL: f64 = 1e-8;

/// A finitely supported probability measure on ℂ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtomicLaw {
    /// `(location, weight)` pairs; weights sum to 1.
    pub atoms: Vec<(Complex64, f64)>,
}

impl AtomicLaw {
    /// Uniform law on `values` (with multiplicity), merging nearby points.
    pub fn uniform(values: &[Complex64], merge_tol: f64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput("law of an empty spectrum".into()));
        }
        let w = vec![1.0 / values.len() as f64; values.len()];
        Self::weighted(values, &w, merge_tol)
    }

    /// `Σ w_i δ_{z_i}`, merging points within `merge_tol` and dropping atoms
    /// of negligible weight. Weights must be non-negative with sum 1.
    pub fn weighted(values: &[Complex64], weights: &[f64], merge_tol: f64) -> Result<Self> {
        if values.is_empty() || values.len() != weights.len() {
            return Err(Error::InvalidInput("law needs one weight per atom".into()));
        }
        let total: f64 = weights.iter().sum();
        if weights.iter().any(|&w| w < 0.0 || !w.is_finite()) || (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidInput(format!("weights must be a probability vector (sum {total})")));
        }
        let mut atoms: Vec<(Complex64, f64, f64)> = Vec::new();
        for (&z, &w) in values.iter().zip(weights) {
            match atoms
                .iter_mut()
                .find(|(loc, _, _)| (*loc - z).norm() <= merge_tol)
            {
                Some(atom) => {
                    // running mean keeps the location centred in its cluster
                    atom.2 += 1.0;
                    atom.0 += (z - atom.0) / atom.2;
                    atom.1 += w;
                }
                None => atoms.push((z, w, 1.0)),
            }
        }
        atoms.retain(|a| a.1 > 1e-14);
        atoms.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
        Ok(Self {
            atoms: atoms.into_iter().map(|(z, w, _)| (z, w)).collect(),
        })
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.1).sum()
    }

    /// `∫ z^a z̄^b dμ(z)`.
    pub fn moment(&self, a: u32, b: u32) -> Complex64 {
        self.atoms
            .iter()
            .map(|&(z, w)| z.powu(a) * z.conj().powu(b) * w)
            .sum()
    }

    /// Moment of a colored word, `true` standing for `z` and `false` for `z̄`.
    pub fn colored_moment(&self, word: &[bool]) -> Complex64 {
        let a = word.iter().filter(|&&c| c).count() as u32;
        self.moment(a, word.len() as u32 - a)
    }
}

/// The spectral law `(1/N)Σδ_{λ_i}` of a normal matrix.
pub fn matrix_law(m: &Mat, tol: f64, merge_tol: f64) -> Result<AtomicLaw> {
    let d = eigen(m, EigenKind::Normal, tol)?;
    AtomicLaw::uniform(&d.values, merge_tol)
}

/// `tr(A^{ε₁}⋯A^{ε_k})` with `A^∘ = A`, `A^• = A*` and `tr = Tr/N`.
///
/// Defined for any square matrix; for normal ones it agrees with
/// [`AtomicLaw::colored_moment`] of [`matrix_law`].
pub fn colored_trace_moment(m: &Mat, word: &[bool]) -> Result<Complex64> {
    let n = m.require_square()?;
    let adj = m.adjoint();
    let mut prod = Mat::identity(n);
    for &c in word {
        prod = &prod * if c { m } else { &adj };
    }
    Ok(prod.trace() / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{c64, real};

    #[test]
    fn diag_law() {
        let law = matrix_law(&Mat::diag(&[real(1.0), real(1.0), real(0.0)]), 1e-10, MERGE_TOL).unwrap();
        assert_eq!(law.atoms.len(), 2);
        assert!((law.atoms[0].0 - real(0.0)).norm() < 1e-12);
        assert!((law.atoms[0].1 - 1.0 / 3.0).abs() < 1e-12);
        assert!((law.atoms[1].1 - 2.0 / 3.0).abs() < 1e-12);
        assert!((law.total_mass() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identity_is_dirac() {
        let law = matrix_law(&Mat::identity(5), 1e-10, MERGE_TOL).unwrap();
        assert_eq!(law.atoms.len(), 1);
        assert!((law.atoms[0].1 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn non_normal_refused() {
        let j = Mat::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(matrix_law(&j, 1e-10, MERGE_TOL), Err(Error::NotNormal(_))));
        // colored moments still make sense: tr(JJ*) = 1/2
        let m = colored_trace_moment(&j, &[true, false]).unwrap();
        assert!((m - real(0.5)).norm() < 1e-15);
    }

    #[test]
    fn moments_match_traces() {
        let u = Mat::from_rows(vec![
            vec![c64(0.0, 1.0), real(0.0), real(0.0)],
            vec![real(0.0), real(0.0), real(1.0)],
            vec![real(0.0), real(1.0), real(0.0)],
        ])
        .unwrap();
        let law = matrix_law(&u, 1e-10, MERGE_TOL).unwrap();
        for word in [vec![true], vec![true, true], vec![true, false, true], vec![false, false, true, true, true, false]] {
            let a = law.colored_moment(&word);
            let b = colored_trace_moment(&u, &word).unwrap();
            assert!((a - b).norm() < 1e-12, "{word:?}");
        }
    }
}
