use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Num;
use serde::Serialize;

use super::poly::{ring_int, Poly, QPoly};
use super::roots::roots;
use crate::error::{Error, Result};
use crate::matcore::{det, det_rational, Matrix};

/// The `(k+l)×(k+l)` Sylvester matrix of `p` (degree `k`) and `q` (degree `l`).
///
/// The first `l` columns hold shifted copies of `p`'s coefficients (leading
/// coefficient on top), the last `k` columns shifted copies of `q`'s, so
/// `ax²+bx+c, dx+e` gives `[[a,d,0],[b,e,d],[c,0,e]]`.
pub fn sylvester_matrix<T: Clone + Num>(p: &Poly<T>, q: &Poly<T>) -> Result<Matrix<T>> {
    let (k, l) = (p.degree(), q.degree());
    if p.is_zero() || k < 1 {
        return Err(Error::DegreeTooSmall { degree: k, required: 1 });
    }
    if q.is_zero() || l < 1 {
        return Err(Error::DegreeTooSmall { degree: l, required: 1 });
    }
    let n = k + l;
    let mut m = Matrix::zeros(n, n);
    let pd: Vec<T> = p.coeffs().iter().rev().cloned().collect();
    let qd: Vec<T> = q.coeffs().iter().rev().cloned().collect();
    for j in 0..l {
        for (i, c) in pd.iter().enumerate() {
            m[(j + i, j)] = c.clone();
        }
    }
    for j in 0..k {
        for (i, c) in qd.iter().enumerate() {
            m[(j + i, l + j)] = c.clone();
        }
    }
    Ok(m)
}

/// `R(P,Q) = det Sylvester(P,Q)`, equal to `c^l d^k ∏(a_i − b_j)` over the roots.
pub fn resultant(p: &Poly, q: &Poly) -> Result<Complex64> {
    det(&sylvester_matrix(p, q)?)
}

pub fn resultant_exact(p: &QPoly, q: &QPoly) -> Result<BigRational> {
    det_rational(&sylvester_matrix(p, q)?)
}

fn discriminant_sign(n: usize) -> i32 {
    if (n * (n - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_degree<T: Clone + Num>(p: &Poly<T>) -> Result<usize> {
    let n = p.degree();
    if p.is_zero() || n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, required: 2 });
    }
    Ok(n)
}

/// `Δ(P) = (−1)^{N(N−1)/2} R(P, P′) / a`.
pub fn discriminant(p: &Poly) -> Result<Complex64> {
    let n = check_degree(p)?;
    let r = resultant(p, &p.derivative())?;
    Ok(r * discriminant_sign(n) as f64 / p.leading())
}

pub fn discriminant_exact(p: &QPoly) -> Result<BigRational> {
    let n = check_degree(p)?;
    let r = resultant_exact(p, &p.derivative())?;
    let r = if discriminant_sign(n) < 0 { -r } else { r };
    Ok(r / p.leading())
}

/// Closed-form discriminants for degrees 2 and 3.
pub fn discriminant_closed_form<T: Clone + Num>(p: &Poly<T>) -> Result<T> {
    let n = check_degree(p)?;
    let c = |k: usize| p.coeffs()[k].clone();
    let int = |k: usize| ring_int::<T>(k);
    match n {
        2 => {
            let (a, b, c0) = (c(2), c(1), c(0));
            Ok(b.clone() * b - int(4) * a * c0)
        }
        3 => {
            let (a, b, cc, d) = (c(3), c(2), c(1), c(0));
            let sq = |x: T| x.clone() * x;
            let plus = sq(b.clone()) * sq(cc.clone())
                + int(18) * a.clone() * b.clone() * cc.clone() * d.clone();
            let minus = int(4) * a.clone() * cc.clone() * sq(cc.clone())
                + int(4) * b.clone() * sq(b.clone()) * d.clone()
                + int(27) * sq(a) * sq(d);
            Ok(plus - minus)
        }
        _ => Err(Error::InvalidInput(format!(
            "no closed-form discriminant for degree {n}"
        ))),
    }
}

/// Counts of real and non-real roots of a real polynomial of degree 2–4.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootClass {
    pub degree: usize,
    pub real: usize,
    pub nonreal: usize,
    pub discriminant: f64,
}

/// Sign-of-discriminant classification; degenerate (`|Δ| ≤ tol`) inputs are refused.
pub fn classify_real_roots(p: &Poly, tol: f64) -> Result<RootClass> {
    if !p.is_real(tol) {
        return Err(Error::InvalidInput("classification needs real coefficients".into()));
    }
    let p = &p.map(|c| Complex64::new(c.re, 0.0));
    let n = check_degree(p)?;
    if n > 4 {
        return Err(Error::InvalidInput(format!(
            "classification covers degrees 2 to 4, got {n}"
        )));
    }
    let delta = discriminant(p)?.re;
    if delta.abs() <= tol {
        return Err(Error::DegenerateDiscriminant(delta.abs()));
    }
    let real = match (n, delta > 0.0) {
        (2, true) => 2,
        (2, false) => 0,
        (3, true) => 3,
        (3, false) => 1,
        (4, false) => 2,
        _ => {
            // degree 4 with Δ > 0: all real or all complex, decided numerically
            let rs = roots(p)?;
            let near_real = rs
                .iter()
                .filter(|z| z.im.abs() <= 1e-7 * (1.0 + z.norm()))
                .count();
            if near_real > 2 {
                4
            } else {
                0
            }
        }
    };
    Ok(RootClass {
        degree: n,
        real,
        nonreal: n - real,
        discriminant: delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::c64;
    use num_bigint::BigInt;

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_i64(c)
    }

    fn rat(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn sylvester_layout() {
        // ax²+bx+c with dx+e, using distinct primes to see placement
        let (a, b, c, d, e) = (2, 3, 5, 7, 11);
        let s = sylvester_matrix(&q(&[c, b, a]), &q(&[e, d])).unwrap();
        let expect = Matrix::from_rows(vec![
            vec![rat(a), rat(d), rat(0)],
            vec![rat(b), rat(e), rat(d)],
            vec![rat(c), rat(0), rat(e)],
        ])
        .unwrap();
        assert_eq!(s, expect);
        let r = resultant_exact(&q(&[c, b, a]), &q(&[e, d])).unwrap();
        assert_eq!(r, rat(c * d * d - b * d * e + a * e * e));
    }

    #[test]
    fn resultant_examples() {
        assert!(resultant_exact(&q(&[0, 1]), &q(&[0, 1])).unwrap() == rat(0));
        assert_eq!(resultant_exact(&q(&[-1, 0, 1]), &q(&[-2, 1])).unwrap(), rat(3));
        assert_eq!(resultant_exact(&q(&[1, 0, 1]), &q(&[-1, 0, 1])).unwrap(), rat(4));
        // shared root 1
        assert_eq!(resultant_exact(&q(&[-1, 0, 1]), &q(&[-3, 2, 1])).unwrap(), rat(0));
        let z = resultant(&Poly::from_real(&[1.0, 0.0, 1.0]), &Poly::from_real(&[-1.0, 0.0, 1.0])).unwrap();
        assert!((z - c64(4.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn constant_input_rejected() {
        assert!(sylvester_matrix(&q(&[3]), &q(&[1, 1])).is_err());
        assert!(resultant_exact(&q(&[1, 1]), &q(&[0])).is_err());
        assert!(discriminant_exact(&q(&[1, 1])).is_err());
    }

    #[test]
    fn discriminant_examples() {
        let (a, b, c) = (3, -7, 2);
        assert_eq!(discriminant_exact(&q(&[c, b, a])).unwrap(), rat(b * b - 4 * a * c));
        let (a, b, c, d) = (2, -1, 5, 3);
        let expect = b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
        assert_eq!(discriminant_exact(&q(&[d, c, b, a])).unwrap(), rat(expect));
        assert_eq!(discriminant_closed_form(&q(&[d, c, b, a])).unwrap(), rat(expect));
        // x³ + 3px + 2q with p = 1, q = 1: −108(p³ + q²) = −216
        assert_eq!(discriminant_exact(&q(&[2, 3, 0, 1])).unwrap(), rat(-216));
        for (p, qq) in [(-2, 3), (1, -4), (0, 1), (-1, 0)] {
            let d = discriminant_exact(&q(&[2 * qq, 3 * p, 0, 1])).unwrap();
            assert_eq!(d, rat(-108 * (p * p * p + qq * qq)));
        }
    }

    #[test]
    fn discriminant_matches_root_product() {
        // Δ = a^{2N−2} ∏_{i<j}(r_i − r_j)² for 2(x−1)(x+2)(x−3)
        let p = q(&[12, -10, -4, 2]);
        let roots = [1i64, -2, 3];
        let mut prod = 1i64;
        for i in 0..3 {
            for j in i + 1..3 {
                prod *= (roots[i] - roots[j]).pow(2);
            }
        }
        assert_eq!(discriminant_exact(&p).unwrap(), rat(2i64.pow(4) * prod));
    }

    #[test]
    fn classification() {
        let c = classify_real_roots(&Poly::from_real(&[1.0, 0.0, 1.0]), 1e-10).unwrap();
        assert_eq!((c.real, c.nonreal), (0, 2));
        assert!((c.discriminant + 4.0).abs() < 1e-12);
        let c = classify_real_roots(&Poly::from_real(&[-1.0, -3.0, 0.0, 1.0]), 1e-10).unwrap();
        assert_eq!(c.real, 3);
        assert!((c.discriminant - 81.0).abs() < 1e-9);
        let c = classify_real_roots(&Poly::from_real(&[2.0, -3.0, 1.0]), 1e-10).unwrap();
        assert_eq!(c.real, 2);
        // x³ + x + 1: one real root
        assert_eq!(classify_real_roots(&Poly::from_real(&[1.0, 1.0, 0.0, 1.0]), 1e-10).unwrap().real, 1);
        // (x²−1)(x²−4): four real; (x²+1)(x²+4): none; (x²−1)(x²+1): two
        assert_eq!(classify_real_roots(&Poly::from_real(&[4.0, 0.0, -5.0, 0.0, 1.0]), 1e-10).unwrap().real, 4);
        assert_eq!(classify_real_roots(&Poly::from_real(&[4.0, 0.0, 5.0, 0.0, 1.0]), 1e-10).unwrap().real, 0);
        assert_eq!(classify_real_roots(&Poly::from_real(&[-1.0, 0.0, 0.0, 0.0, 1.0]), 1e-10).unwrap().real, 2);
    }

    #[test]
    fn degenerate_classification_withheld() {
        let err = classify_real_roots(&Poly::from_real(&[1.0, -2.0, 1.0]), 1e-10).unwrap_err();
        assert!(matches!(err, Error::DegenerateDiscriminant(_)));
    }
}
