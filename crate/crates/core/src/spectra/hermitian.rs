//! Hermitian eigenproblems.
//!
//! Small matrices use cyclic complex Jacobi rotations, which keep the
//! eigenvector basis orthonormal to working precision. Larger ones are
//! reduced to a real tridiagonal matrix and finished with implicit QL.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factor::hessenberg_impl;
use crate::matcore::Mat;

/// Sizes up to this use Jacobi rotations.
pub const JACOBI_MAX: usize = 16;

/// Ascending eigenvalues and an orthonormal eigenvector basis (columns).
pub fn eigh(m: &Mat) -> Result<(Vec<f64>, Mat)> {
    let n = m.require_square()?;
    let a = m.hermitian_part();
    let (vals, vecs) = if n <= JACOBI_MAX {
        jacobi(a)?
    } else {
        let (vals, vecs) = tridiagonal_ql(&a, true)?;
        (vals, vecs.expect("requested"))
    };
    Ok(sort_pairs(vals, vecs))
}

/// Ascending eigenvalues only; skips every eigenvector update.
pub fn eigvalsh(m: &Mat) -> Result<Vec<f64>> {
    let n = m.require_square()?;
    let a = m.hermitian_part();
    let mut vals = if n <= JACOBI_MAX {
        jacobi(a)?.0
    } else {
        tridiagonal_ql(&a, false)?.0
    };
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

fn sort_pairs(vals: Vec<f64>, vecs: Mat) -> (Vec<f64>, Mat) {
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
    let sorted = order.iter().map(|&i| vals[i]).collect();
    (sorted, vecs.select_cols(&order))
}

fn off_norm(a: &Mat) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi(mut a: Mat) -> Result<(Vec<f64>, Mat)> {
    let n = a.rows();
    let mut v = Mat::identity(n);
    let scale = a.norm_fro();
    if scale == 0.0 {
        return Ok((vec![0.0; n], v));
    }
    for _sweep in 0..100 {
        if off_norm(&a) <= 1e-16 * scale {
            let vals = (0..n).map(|i| a[(i, i)].re).collect();
            return Ok((vals, v));
        }
        for p in 0..n {
            for q in p + 1..n {
                let g = a[(p, q)];
                let gabs = g.norm();
                if gabs <= 1e-300 {
                    continue;
                }
                let ph = g / gabs;
                let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
                let zeta = (aqq - app) / (2.0 * gabs);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // W = D·R with D = diag(…, e^{−iφ} at q, …) and a real rotation R
                let e = ph.conj();
                for i in 0..n {
                    let (xp, xq) = (a[(i, p)], a[(i, q)]);
                    a[(i, p)] = xp * c - xq * e * s;
                    a[(i, q)] = xp * s + xq * e * c;
                }
                for j in 0..n {
                    let (xp, xq) = (a[(p, j)], a[(q, j)]);
                    a[(p, j)] = xp * c - xq * ph * s;
                    a[(q, j)] = xp * s + xq * ph * c;
                }
                for i in 0..n {
                    let (xp, xq) = (v[(i, p)], v[(i, q)]);
                    v[(i, p)] = xp * c - xq * e * s;
                    v[(i, q)] = xp * s + xq * e * c;
                }
                a[(p, q)] = Complex64::zero();
                a[(q, p)] = Complex64::zero();
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
            }
        }
    }
    Err(Error::Numerical("Jacobi sweeps did not converge".into()))
}

fn tridiagonal_ql(a: &Mat, want_vectors: bool) -> Result<(Vec<f64>, Option<Mat>)> {
    let n = a.rows();
    let (q, h) = hessenberg_impl(a, want_vectors)?;
    let mut d: Vec<f64> = (0..n).map(|i| h[(i, i)].re).collect();
    let mut e = vec![0.0; n];
    // phases making the off-diagonal real and nonnegative
    let mut phases = vec![Complex64::new(1.0, 0.0); n];
    for k in 0..n - 1 {
        let sub = h[(k + 1, k)];
        e[k] = sub.norm();
        phases[k + 1] = if e[k] == 0.0 {
            phases[k]
        } else {
            phases[k] * sub / e[k]
        };
    }
    let mut z = q.map(|mut q| {
        for i in 0..n {
            for (j, ph) in phases.iter().enumerate() {
                q[(i, j)] *= ph;
            }
        }
        q
    });
    ql_implicit(&mut d, &mut e, z.as_mut())?;
    Ok((d, z))
}

/// Implicit QL on a symmetric tridiagonal matrix with diagonal `d` and
/// off-diagonal `e[i] = T[i][i+1]` (`e[n-1]` unused). Rotations are
/// accumulated into the columns of `z` when given.
fn ql_implicit(d: &mut [f64], e: &mut [f64], mut z: Option<&mut Mat>) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    // absolute floor for deflation, so clusters of (near-)zero eigenvalues
    // do not stall the relative test
    let scale = d.iter().chain(e.iter()).fold(0.0f64, |acc, x| acc.max(x.abs()));
    let floor = f64::EPSILON * scale;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd + floor {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::Numerical("tridiagonal QL did not converge".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = z.as_deref_mut() {
                    for k in 0..z.rows() {
                        let f = z[(k, i + 1)];
                        z[(k, i + 1)] = z[(k, i)] * s + f * c;
                        z[(k, i)] = z[(k, i)] * c - f * s;
                    }
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
