//! Functional calculus and the operations built on it: polar decomposition,
//! the matrix exponential, positivity and inertia.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use super::eigen::{eigen, require_hermitian, scale_of, EigenKind};
use super::hermitian::eigvalsh;
use super::svd::svd;
use crate::error::{Error, Result};
use crate::matcore::Mat;

/// `U·diag(f(λ_i))·U*` for a normal matrix; `f` returns `None` where it is undefined.
pub fn funcalc(m: &Mat, tol: f64, f: impl Fn(Complex64) -> Option<Complex64>) -> Result<Mat> {
    let d = eigen(m, EigenKind::Normal, tol)?;
    let fv = d
        .values
        .iter()
        .map(|&z| f(z).ok_or(Error::FunctionUndefined(z)))
        .collect::<Result<Vec<_>>>()?;
    let u = &d.passage;
    Ok(&(u * &Mat::diag(&fv)) * &u.adjoint())
}

/// `A = U·|A|` with `|A| = √(A*A)` and `U` a partial isometry.
#[derive(Debug, Clone)]
pub struct PolarDecomp {
    pub isometry: Mat,
    pub modulus: Mat,
}

/// Polar decomposition through the SVD `A = WΣV*`: `|A| = VΣV*` and
/// `U = Σ_{σ_i > 0} w_i v_i*`, so `U*U` projects onto the row space of `A`.
pub fn polar(m: &Mat, tol: f64) -> Result<PolarDecomp> {
    let n = m.require_square()?;
    let d = svd(m)?;
    let top = d.singulars.first().copied().unwrap_or(0.0);
    let mut isometry = Mat::zeros(n, n);
    let mut modulus = Mat::zeros(n, n);
    for (k, &s) in d.singulars.iter().enumerate() {
        let keep = s > tol * top.max(1.0) && s > 0.0;
        for i in 0..n {
            for j in 0..n {
                let vv = d.right[(i, k)] * d.right[(j, k)].conj();
                modulus[(i, j)] += vv * s;
                if keep {
                    isometry[(i, j)] += d.left[(i, k)] * d.right[(j, k)].conj();
                }
            }
        }
    }
    Ok(PolarDecomp { isometry, modulus })
}

/// `|A| = √(A*A)`.
pub fn modulus(m: &Mat, tol: f64) -> Result<Mat> {
    Ok(polar(m, tol)?.modulus)
}

/// Matrix exponential by scaling and squaring of the Taylor series.
///
/// The series of `A/2^s` (with `‖A/2^s‖₁ ≤ 1/2`) is summed until a term
/// drops below `1e−18` relative to the partial sum.
pub fn expm(m: &Mat) -> Result<Mat> {
    let n = m.require_square()?;
    if !m.is_finite() {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    let norm = m.norm_one();
    let mut s = 0u32;
    if norm > 0.5 {
        s = (norm / 0.5).log2().ceil() as u32;
    }
    let a = m.scale_real(0.5f64.powi(s as i32));
    let mut sum = Mat::identity(n);
    let mut term = Mat::identity(n);
    for k in 1..200 {
        term = (&term * &a).scale_real(1.0 / k as f64);
        sum = &sum + &term;
        if term.norm_fro() < 1e-18 * sum.norm_fro() {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    Ok(sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Positivity {
    NotSelfadjoint,
    Indefinite,
    Positive,
    StrictlyPositive,
}

impl fmt::Display for Positivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::NotSelfadjoint => "not_selfadjoint",
            Self::Indefinite => "indefinite",
            Self::Positive => "positive",
            Self::StrictlyPositive => "strictly_positive",
        })
    }
}

/// Classifies a square matrix by the sign of its (hermitian) spectrum.
pub fn positivity_class(m: &Mat, tol: f64) -> Result<Positivity> {
    m.require_square()?;
    if require_hermitian(m, tol).is_err() {
        return Ok(Positivity::NotSelfadjoint);
    }
    let vals = eigvalsh(m)?;
    let gate = tol * scale_of(m);
    let min = vals.first().copied().unwrap_or(0.0);
    Ok(if min > gate {
        Positivity::StrictlyPositive
    } else if min >= -gate {
        Positivity::Positive
    } else {
        Positivity::Indefinite
    })
}

/// Signature of a real symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    /// The canonical diagonal form `±x₁² ± … ± x_N²`, as signs `+1, −1, 0`.
    pub fn canonical_signs(&self) -> Vec<i8> {
        std::iter::repeat_n(1, self.n_plus)
            .chain(std::iter::repeat_n(-1, self.n_minus))
            .chain(std::iter::repeat_n(0, self.n_zero))
            .collect()
    }
}

pub fn inertia(m: &Mat, tol: f64) -> Result<Inertia> {
    m.require_square()?;
    let scale = scale_of(m);
    let asym = (m - &m.transpose()).norm_fro();
    let imag = m.data().iter().map(|z| z.im * z.im).sum::<f64>().sqrt();
    if asym > tol * scale || imag > tol * scale {
        return Err(Error::NotSymmetric(asym.max(imag)));
    }
    let vals = eigvalsh(m)?;
    let gate = tol * scale;
    Ok(Inertia {
        n_plus: vals.iter().filter(|&&x| x > gate).count(),
        n_minus: vals.iter().filter(|&&x| x < -gate).count(),
        n_zero: vals.iter().filter(|&&x| x.abs() <= gate).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{c64, det, real};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rows: usize, cols: usize, seed: u64) -> Mat {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Mat::from_fn(rows, cols, |_, _| {
            c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    fn j() -> Mat {
        Mat::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap()
    }

    #[test]
    fn funcalc_identity_and_square() {
        let a = random(3, 3, 1).hermitian_part();
        let same = funcalc(&a, 1e-10, Some).unwrap();
        assert!((&same - &a).norm_fro() < 1e-12);
        let sq = funcalc(&a, 1e-10, |z| Some(z * z)).unwrap();
        assert!((&sq - &(&a * &a)).norm_fro() < 1e-12);
    }

    #[test]
    fn funcalc_undefined_point() {
        let a = Mat::diag(&[real(0.0), real(2.0)]);
        let inv = |z: Complex64| (z.norm() > 1e-12).then(|| 1.0 / z);
        assert!(matches!(funcalc(&a, 1e-10, inv), Err(Error::FunctionUndefined(_))));
    }

    #[test]
    fn sqrt_of_gram_is_modulus() {
        let a = random(4, 4, 2);
        let gram = &a.adjoint() * &a;
        let root = funcalc(&gram, 1e-10, |z| Some(Complex64::new(z.re.max(0.0).sqrt(), 0.0))).unwrap();
        assert!((&root - &modulus(&a, 1e-12).unwrap()).norm_fro() < 1e-10);
    }

    #[test]
    fn polar_examples() {
        let d = Mat::diag(&[real(2.0), real(0.5)]);
        let p = polar(&d, 1e-12).unwrap();
        assert!((&p.isometry - &Mat::identity(2)).norm_fro() < 1e-14);

        let p = polar(&j(), 1e-12).unwrap();
        assert!((&p.modulus - &Mat::diag(&[real(0.0), real(1.0)])).norm_fro() < 1e-14);
        assert!((&(&p.isometry * &p.modulus) - &j()).norm_fro() < 1e-14);
        let proj = &p.isometry.adjoint() * &p.isometry;
        assert!((&(&proj * &proj) - &proj).norm_fro() < 1e-14);

        let a = random(4, 4, 3);
        let p = polar(&a, 1e-12).unwrap();
        assert!((&(&p.isometry * &p.modulus) - &a).norm_fro() < 1e-10);
        assert!(p.isometry.unitarity_residual() < 1e-10);
    }

    #[test]
    fn expm_examples() {
        assert!((&expm(&Mat::zeros(3, 3)).unwrap() - &Mat::identity(3)).norm_fro() < 1e-16);
        let e = expm(&j()).unwrap();
        let expect = Mat::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        assert!((&e - &expect).norm_fro() < 1e-15);
        let sym = &j() + &j().adjoint();
        let (ch, sh) = (1f64.cosh(), 1f64.sinh());
        let expect = Mat::from_real_rows(&[&[ch, sh], &[sh, ch]]).unwrap();
        assert!((&expm(&sym).unwrap() - &expect).norm_fro() < 1e-14);
    }

    #[test]
    fn expm_large_norm() {
        let a = Mat::diag(&[real(20.0), c64(0.0, 30.0)]);
        let e = expm(&a).unwrap();
        assert!((e[(0, 0)] - real(20f64.exp())).norm() < 1e-12 * 20f64.exp());
        assert!((e[(1, 1)] - Complex64::from_polar(1.0, 30.0)).norm() < 1e-10);
        // entries bounded by 1, then a larger norm where squaring amplifies rounding
        for (scale, tol) in [(1.0, 1e-10), (4.0, 1e-8)] {
            let b = random(6, 6, 4).scale_real(scale);
            let lhs = det(&expm(&b).unwrap()).unwrap();
            let rhs = b.trace().exp();
            assert!((lhs - rhs).norm() < tol * rhs.norm());
        }
    }

    #[test]
    fn positivity_examples() {
        let c = random(4, 3, 5);
        let cc = &c * &c.adjoint();
        assert_eq!(positivity_class(&cc, 1e-10).unwrap(), Positivity::Positive);
        assert_eq!(positivity_class(&Mat::identity(3), 1e-10).unwrap(), Positivity::StrictlyPositive);
        let d = Mat::diag(&[real(1.0), real(-1.0)]);
        assert_eq!(positivity_class(&d, 1e-10).unwrap(), Positivity::Indefinite);
        assert_eq!(positivity_class(&j(), 1e-10).unwrap(), Positivity::NotSelfadjoint);
    }

    #[test]
    fn inertia_examples() {
        let id = inertia(&Mat::identity(4), 1e-10).unwrap();
        assert_eq!((id.n_plus, id.n_minus, id.n_zero), (4, 0, 0));
        let d = inertia(&Mat::diag(&[real(2.0), real(-3.0), real(0.0)]), 1e-10).unwrap();
        assert_eq!((d.n_plus, d.n_minus, d.n_zero), (1, 1, 1));
        assert_eq!(d.canonical_signs(), vec![1, -1, 0]);
        assert!(matches!(inertia(&j(), 1e-10), Err(Error::NotSymmetric(_))));
        let herm_not_real = Mat::from_rows(vec![vec![real(1.0), c64(0.0, 1.0)], vec![c64(0.0, -1.0), real(1.0)]]).unwrap();
        assert!(inertia(&herm_not_real, 1e-10).is_err());
    }
}
