//! Determinants on each backend.
//!
//! Float matrices use partial pivoting, integer matrices use Bareiss
//! fraction-free elimination, and small matrices of any ring can be
//! evaluated by the signed permutation sum for cross-checks.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use super::matrix::{IntMat, Mat, Matrix, RatMat};
use super::perm::Perm;
use crate::error::{Error, Result};

/// Largest size accepted by [`det_permutation_sum`].
pub const PERMUTATION_SUM_LIMIT: usize = 6;

/// Determinant of a complex matrix by Gaussian elimination with partial pivoting.
pub fn det(m: &Mat) -> Result<Complex64> {
    let n = m.require_square()?;
    let mut a = m.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let (p, pmax) = (col..n)
            .map(|r| (r, a[(r, col)].norm()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pmax == 0.0 {
            return Ok(Complex64::zero());
        }
        if p != col {
            a.swap_rows(p, col);
            det = -det;
        }
        let pivot = a[(col, col)];
        det *= pivot;
        for r in col + 1..n {
            let f = a[(r, col)] / pivot;
            if f == Complex64::zero() {
                continue;
            }
            for j in col + 1..n {
                let d = f * a[(col, j)];
                a[(r, j)] -= d;
            }
        }
    }
    Ok(det)
}

/// Exact integer determinant by Bareiss fraction-free elimination.
pub fn det_int(m: &IntMat) -> Result<BigInt> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                // exact by Sylvester's identity
                a[(i, j)] = num / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * a[(n - 1, n - 1)].clone())
}

/// Exact rational determinant: clear denominators row by row, then Bareiss.
pub fn det_rational(m: &RatMat) -> Result<BigRational> {
    let n = m.require_square()?;
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        scale *= &lcm;
        rows.push(
            m.row(i)
                .iter()
                .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                .collect::<Vec<_>>(),
        );
    }
    let d = det_int(&Matrix::from_rows(rows)?)?;
    Ok(BigRational::new(d, scale))
}

/// Σ_σ ε(σ) ∏_i A_{i,σ(i)} over all permutations; only for small matrices.
pub fn det_permutation_sum<T: Clone + Num>(m: &Matrix<T>) -> Result<T> {
    let n = m.require_square()?;
    if n > PERMUTATION_SUM_LIMIT {
        return Err(Error::Budget {
            what: "permutation-sum size",
            value: n,
            limit: PERMUTATION_SUM_LIMIT,
        });
    }
    let mut total = T::zero();
    for p in Perm::all(n) {
        let term = (0..n).fold(T::one(), |acc, i| acc * m[(i, p.apply(i))].clone());
        total = if p.signature() > 0 {
            total + term
        } else {
            total - term
        };
    }
    Ok(total)
}

/// Exact integer rank (fraction-free elimination).
pub fn rank_int(m: &IntMat) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        for i in r + 1..rows {
            if a[(i, c)].is_zero() {
                continue;
            }
            let (f, g) = (a[(r, c)].clone(), a[(i, c)].clone());
            for j in c..cols {
                a[(i, j)] = &a[(i, j)] * &f - &a[(r, j)] * &g;
            }
            // keep entries small
            let content = a
                .row(i)
                .iter()
                .fold(BigInt::zero(), |acc, x| num_integer::gcd(acc, x.abs()));
            if content > BigInt::one() {
                for j in c..cols {
                    a[(i, j)] = &a[(i, j)] / &content;
                }
            }
        }
        r += 1;
    }
    r
}
