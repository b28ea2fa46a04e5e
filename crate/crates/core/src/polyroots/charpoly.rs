use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Poly, QPoly};
use crate::error::Result;
use crate::factor::hessenberg;
use crate::matcore::{det_rational, Mat, RatMat};

/// Coefficients of `det(A − x·1)`.
///
/// Computed from the unitary Hessenberg form `H` by the recurrence for
/// leading principal minors of `H − x`.
pub fn char_poly(m: &Mat) -> Result<Poly> {
    let n = m.require_square()?;
    let (_, h) = hessenberg(m)?;
    // p[k] = det of the leading k×k block of H − x
    let mut p: Vec<Poly> = vec![Poly::new(vec![Complex64::one()])];
    for k in 1..=n {
        let kk = k - 1;
        let diag = Poly::new(vec![h[(kk, kk)], -Complex64::one()]);
        let mut acc = diag.mul(&p[k - 1]);
        let mut prod = Complex64::one();
        for i in (1..k).rev() {
            // ∏_{m=i+1}^{k} h_{m,m−1} in 1-based indices
            prod *= h[(i, i - 1)];
            let sign = if (k - i) % 2 == 0 { 1.0 } else { -1.0 };
            let c = h[(i - 1, kk)] * prod * sign;
            if c != Complex64::zero() {
                acc = add(&acc, &p[i - 1].scale(&c));
            }
        }
        p.push(acc);
    }
    Ok(p.pop().expect("non-empty"))
}

fn add(a: &Poly, b: &Poly) -> Poly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let get = |p: &Poly, i: usize| p.coeffs().get(i).copied().unwrap_or_default();
    Poly::new((0..n).map(|i| get(a, i) + get(b, i)).collect())
}

/// Exact `det(A − x·1)` by evaluating the determinant at `x = 0, …, N` and
/// interpolating (Newton divided differences).
pub fn char_poly_exact(m: &RatMat) -> Result<QPoly> {
    let n = m.require_square()?;
    let xs: Vec<BigRational> = (0..=n)
        .map(|k| BigRational::from_integer(BigInt::from(k)))
        .collect();
    let mut ys = Vec::with_capacity(n + 1);
    for x in &xs {
        let shifted = m - &RatMat::identity(n).scale(x);
        ys.push(det_rational(&shifted)?);
    }
    // divided differences in place
    for level in 1..=n {
        for i in (level..=n).rev() {
            let num = &ys[i] - &ys[i - 1];
            ys[i] = num / (&xs[i] - &xs[i - level]);
        }
    }
    // expand Newton form from the innermost coefficient outward
    let mut poly = QPoly::new(vec![ys[n].clone()]);
    for i in (0..n).rev() {
        poly = poly.mul(&QPoly::linear_root(xs[i].clone()));
        let mut c = poly.coeffs().to_vec();
        if c.is_empty() {
            c.push(BigRational::zero());
        }
        c[0] = &c[0] + &ys[i];
        poly = QPoly::new(c);
    }
    Ok(poly)
}

/// `P_A(A)` for `P_A = char_poly_exact(A)`; zero by Cayley–Hamilton.
pub fn eval_char_poly_exact(m: &RatMat) -> Result<RatMat> {
    let p = char_poly_exact(m)?;
    m.eval_poly(p.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{c64, real, IntMat};

    fn rat(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn nilpotent_block() {
        let j = Mat::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        let p = char_poly(&j).unwrap();
        assert_eq!(p.degree(), 2);
        assert!((p.coeffs()[2] - real(1.0)).norm() < 1e-15);
        assert!(p.coeffs()[0].norm() < 1e-15 && p.coeffs()[1].norm() < 1e-15);
        let exact = char_poly_exact(&IntMat::from_i64_rows(&[&[0, 1], &[0, 0]]).unwrap().to_rational()).unwrap();
        assert_eq!(exact, QPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn diagonal_gives_product() {
        let lambdas = [c64(1.0, 2.0), real(-3.0), real(0.5)];
        let p = char_poly(&Mat::diag(&lambdas)).unwrap();
        let expect = Poly::from_roots(&lambdas).scale(&real(-1.0));
        for (a, b) in p.coeffs().iter().zip(expect.coeffs()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn exact_matches_float() {
        let m = IntMat::from_i64_rows(&[&[2, -1, 0, 3], &[1, 4, 2, -2], &[0, 5, -1, 1], &[7, 0, 2, 2]]).unwrap();
        let exact = char_poly_exact(&m.to_rational()).unwrap();
        let float = char_poly(&m.to_complex()).unwrap();
        for (a, b) in exact.to_complex().coeffs().iter().zip(float.coeffs()) {
            assert!((a - b).norm() < 1e-9 * (1.0 + a.norm()));
        }
        assert_eq!(exact.leading(), rat(1));
        // constant term is det A
        assert_eq!(exact.coeffs()[0], crate::matcore::det_rational(&m.to_rational()).unwrap());
    }

    #[test]
    fn cayley_hamilton_exact() {
        let m = IntMat::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).unwrap().to_rational();
        assert!(eval_char_poly_exact(&m).unwrap().is_zero_matrix());
    }
}
