use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::JordanForm;
use crate::error::{Error, Result};
use crate::matcore::{Matrix, RatMat};
use crate::polyroots::{char_poly_exact, roots_with_multiplicity, QPoly};
use crate::spectra::eigenvalues;

/// Jordan form over the rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactJordanForm {
    pub blocks: Vec<(BigRational, usize)>,
    pub passage: RatMat,
}

impl ExactJordanForm {
    pub fn jordan_matrix(&self) -> RatMat {
        let blocks: Vec<RatMat> = self
            .blocks
            .iter()
            .map(|(l, s)| {
                Matrix::from_fn(*s, *s, |i, j| {
                    if i == j {
                        l.clone()
                    } else if j == i + 1 {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
            })
            .collect();
        Matrix::block_diag(&blocks)
    }

    /// `P·J·P⁻¹`, exactly.
    pub fn reconstruct(&self) -> RatMat {
        let inv = self.passage.inverse().expect("passage is invertible");
        &(&self.passage * &self.jordan_matrix()) * &inv
    }

    pub fn to_float(&self) -> JordanForm {
        JordanForm {
            blocks: self
                .blocks
                .iter()
                .map(|(l, s)| (Complex64::new(l.to_f64().unwrap_or(f64::NAN), 0.0), *s))
                .collect(),
            passage: self.passage.to_complex(),
        }
    }
}

/// Exact Jordan form of a rational matrix whose eigenvalues are all
/// rational. Candidate eigenvalues come from floating-point roots and are
/// confirmed on the exact characteristic polynomial; block sizes follow from
/// exact kernels of `(A − λ)^j`.
pub fn jordan_form_exact(m: &RatMat) -> Result<ExactJordanForm> {
    let n = m.require_square()?;
    let eigen = rational_eigenvalues(m)?;
    let mut blocks = Vec::new();
    let mut columns: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for (lambda, alg) in eigen {
        let b = m - &RatMat::identity(n).scale(&lambda);
        let mut kernels: Vec<Vec<Vec<BigRational>>> = vec![Vec::new()];
        let mut power = RatMat::identity(n);
        while kernels.last().map_or(0, Vec::len) < alg {
            power = &power * &b;
            kernels.push(power.null_space());
            if kernels.len() > alg + 1 {
                return Err(Error::Numerical("kernel chain did not stabilize".into()));
            }
        }
        let top = kernels.len() - 1;
        let mut heads: Vec<(usize, Vec<BigRational>)> = Vec::new();
        for s in (1..=top).rev() {
            // heads are taken orthogonal to everything below them, which keeps
            // the passage matrix far better conditioned than raw kernel vectors
            let mut basis: Vec<Vec<BigRational>> = Vec::new();
            let lower = kernels[s - 1].iter().cloned();
            let chained: Vec<_> = heads.iter().map(|(t, h)| apply_power(&b, h, t - s)).collect();
            for v in lower.chain(chained) {
                let r = residual(&basis, &v);
                if !is_null(&r) {
                    basis.push(r);
                }
            }
            for v in &kernels[s] {
                let r = residual(&basis, v);
                if !is_null(&r) {
                    basis.push(r.clone());
                    heads.push((s, r));
                }
            }
        }
        heads.sort_by_key(|h| std::cmp::Reverse(h.0));
        for (s, v) in heads {
            blocks.push((lambda.clone(), s));
            for c in 0..s {
                columns.push(apply_power(&b, &v, s - 1 - c));
            }
        }
    }
    let passage = Matrix::from_fn(n, n, |i, j| columns[j][i].clone());
    Ok(ExactJordanForm { blocks, passage })
}

fn apply_power(a: &RatMat, v: &[BigRational], k: usize) -> Vec<BigRational> {
    let mut out = v.to_vec();
    for _ in 0..k {
        out = a.matvec(&out).expect("square");
    }
    out
}

/// `v` minus its orthogonal projection onto the span of the mutually
/// orthogonal vectors in `basis`.
fn residual(basis: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    let dot = |x: &[BigRational], y: &[BigRational]| -> BigRational {
        x.iter().zip(y).fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    };
    let mut r = v.to_vec();
    for u in basis {
        let c = dot(&r, u) / dot(u, u);
        for (ri, ui) in r.iter_mut().zip(u) {
            *ri -= &c * ui;
        }
    }
    r
}

fn is_null(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Distinct rational eigenvalues with algebraic multiplicities, or an error
/// if the characteristic polynomial does not split over the rationals.
pub(crate) fn rational_eigenvalues(m: &RatMat) -> Result<Vec<(BigRational, usize)>> {
    let mut p = char_poly_exact(m)?.monic()?;
    let mut found = Vec::new();
    let mut floats: Vec<Complex64> = eigenvalues(&m.to_complex())?;
    while p.degree() > 0 {
        // cluster centroids are much more accurate than raw multiple roots
        let mut candidates: Vec<f64> = roots_with_multiplicity(&p.to_complex(), 1e-6)
            .map(|r| r.into_iter().map(|z| z.0.re).collect())
            .unwrap_or_default();
        candidates.extend(floats.iter().map(|z| z.re));
        let mut progress = false;
        'outer: for x in candidates {
            for c in convergents(x, 1_000_000) {
                if p.eval(&c).is_zero() {
                    let mut mult = 0;
                    while p.degree() > 0 && p.eval(&c).is_zero() {
                        p = deflate(&p, &c);
                        mult += 1;
                    }
                    found.push((c, mult));
                    progress = true;
                    break 'outer;
                }
            }
        }
        if !progress {
            return Err(Error::InvalidInput(
                "eigenvalues are not all rational; use the floating-point Jordan form".into(),
            ));
        }
        floats.clear();
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found)
}

/// Quotient of `p` by `x − c` (synthetic division; remainder dropped).
fn deflate(p: &QPoly, c: &BigRational) -> QPoly {
    let co = p.coeffs();
    let n = co.len() - 1;
    let mut q = vec![BigRational::zero(); n];
    let mut carry = BigRational::zero();
    for i in (0..n).rev() {
        carry = &co[i + 1] + &(&carry * c);
        q[i] = carry.clone();
    }
    QPoly::new(q)
}

/// Continued-fraction convergents of `x` with denominators up to `max_den`.
fn convergents(x: f64, max_den: i64) -> Vec<BigRational> {
    let mut out = Vec::new();
    if !x.is_finite() {
        return out;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        let ai = BigInt::from(a as i64);
        let h = &ai * &h1 + &h0;
        let k = &ai * &k1 + &k0;
        if k > BigInt::from(max_den) {
            break;
        }
        out.push(BigRational::new(h.clone(), k.clone()));
        (h0, h1, k0, k1) = (h1, h, k1, k);
        let frac = r - a;
        if frac.abs() < 1e-12 {
            break;
        }
        r = 1.0 / frac;
    }
    // the nearest integer is worth checking even when the expansion stops early
    let nearest = BigRational::from_integer(BigInt::from(x.round() as i64));
    if !out.contains(&nearest) {
        out.push(nearest);
    }
    out.retain(|c| (c - BigRational::from_float(x).unwrap_or_default()).abs() <= BigRational::new(1.into(), 10.into()));
    out
}
