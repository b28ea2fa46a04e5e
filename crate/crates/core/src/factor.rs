//! Triangular factorizations: PLU (partial and full pivoting), LDU, QR and
//! its LQ/QL/RQ relatives, Hessenberg reduction and the complex Schur form.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matcore::{Mat, Perm};

/// `perm_matrix(perm)·A = L·U`.
#[derive(Debug, Clone)]
pub struct PluDecomp {
    pub perm: Perm,
    pub lower: Mat,
    pub upper: Mat,
}

/// `perm_matrix(row_perm)·A·perm_matrix(col_perm) = L·U`.
#[derive(Debug, Clone)]
pub struct FullPluDecomp {
    pub row_perm: Perm,
    pub col_perm: Perm,
    pub lower: Mat,
    pub upper: Mat,
    /// Number of pivots above the rank threshold.
    pub rank: usize,
}

/// `A = L·diag(D)·U` with unit triangular `L`, `U`.
#[derive(Debug, Clone)]
pub struct LduDecomp {
    pub lower: Mat,
    pub diag: Vec<Complex64>,
    pub upper: Mat,
}

/// `A = Q·R` with orthonormal columns in `Q` and a nonnegative real diagonal in `R`.
#[derive(Debug, Clone)]
pub struct QrDecomp {
    pub q: Mat,
    pub r: Mat,
}

/// `A = Q·T·Q*` with `Q` unitary and `T` upper triangular.
#[derive(Debug, Clone)]
pub struct SchurDecomp {
    pub q: Mat,
    pub t: Mat,
}

const EPS: f64 = f64::EPSILON;

/// Relative size below which a pivot counts as zero.
const PIVOT_TOL: f64 = 1e-14;

fn phase(z: Complex64) -> Complex64 {
    let n = z.norm();
    if n == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        z / n
    }
}

pub fn plu(m: &Mat) -> Result<PluDecomp> {
    let n = m.require_square()?;
    let mut u = m.clone();
    let mut l = Mat::identity(n);
    let mut piv: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&a, &b| u[(a, k)].norm().total_cmp(&u[(b, k)].norm()))
            .unwrap_or(k);
        if p != k && u[(p, k)].norm() > u[(k, k)].norm() {
            u.swap_rows(p, k);
            piv.swap(p, k);
            for j in 0..k {
                let t = l[(p, j)];
                l[(p, j)] = l[(k, j)];
                l[(k, j)] = t;
            }
        }
        let pivot = u[(k, k)];
        if pivot.is_zero() {
            continue;
        }
        for i in k + 1..n {
            let f = u[(i, k)] / pivot;
            l[(i, k)] = f;
            u[(i, k)] = Complex64::zero();
            for j in k + 1..n {
                let d = f * u[(k, j)];
                u[(i, j)] -= d;
            }
        }
    }
    // row i of PA is row piv[i] of A, so P sends e_{piv[i]} to e_i
    let perm = Perm::from_images(piv)?.inverse();
    Ok(PluDecomp { perm, lower: l, upper: u })
}

/// Gaussian elimination with complete pivoting; reveals the numerical rank.
pub fn plu_full(m: &Mat, tol: f64) -> Result<FullPluDecomp> {
    let n = m.require_square()?;
    let scale = m.norm_max().max(f64::MIN_POSITIVE);
    let mut u = m.clone();
    let mut l = Mat::identity(n);
    let mut rpiv: Vec<usize> = (0..n).collect();
    let mut cpiv: Vec<usize> = (0..n).collect();
    let mut rank = 0;
    for k in 0..n {
        let (mut pr, mut pc, mut best) = (k, k, -1.0);
        for i in k..n {
            for j in k..n {
                if u[(i, j)].norm() > best {
                    (pr, pc, best) = (i, j, u[(i, j)].norm());
                }
            }
        }
        if best <= tol * scale {
            break;
        }
        rank += 1;
        if pr != k {
            u.swap_rows(pr, k);
            rpiv.swap(pr, k);
            for j in 0..k {
                let t = l[(pr, j)];
                l[(pr, j)] = l[(k, j)];
                l[(k, j)] = t;
            }
        }
        if pc != k {
            u.swap_cols(pc, k);
            cpiv.swap(pc, k);
        }
        let pivot = u[(k, k)];
        for i in k + 1..n {
            let f = u[(i, k)] / pivot;
            l[(i, k)] = f;
            u[(i, k)] = Complex64::zero();
            for j in k + 1..n {
                let d = f * u[(k, j)];
                u[(i, j)] -= d;
            }
        }
    }
    Ok(FullPluDecomp {
        row_perm: Perm::from_images(rpiv)?.inverse(),
        col_perm: Perm::from_images(cpiv)?,
        lower: l,
        upper: u,
        rank,
    })
}

/// Pivot-free elimination; refuses when a leading principal minor vanishes.
pub fn ldu(m: &Mat) -> Result<LduDecomp> {
    let n = m.require_square()?;
    let scale = m.norm_max();
    let mut u = m.clone();
    let mut l = Mat::identity(n);
    for k in 0..n {
        let pivot = u[(k, k)];
        if pivot.norm() <= PIVOT_TOL * scale || pivot.is_zero() {
            return Err(Error::VanishingMinor { index: k + 1 });
        }
        for i in k + 1..n {
            let f = u[(i, k)] / pivot;
            l[(i, k)] = f;
            u[(i, k)] = Complex64::zero();
            for j in k + 1..n {
                let d = f * u[(k, j)];
                u[(i, j)] -= d;
            }
        }
    }
    let diag = u.diagonal();
    for (i, d) in diag.iter().enumerate() {
        for j in i..n {
            u[(i, j)] /= d;
        }
    }
    Ok(LduDecomp { lower: l, diag, upper: u })
}

/// Solves `A·X = B` by partial-pivot elimination; fails on an exactly
/// singular pivot or a pivot below `1e−14·‖A‖`.
pub fn solve(m: &Mat, b: &Mat) -> Result<Mat> {
    let n = m.require_square()?;
    if b.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "system of size {n} with right-hand side of {} rows",
            b.rows()
        )));
    }
    let d = plu(m)?;
    let scale = m.norm_max();
    if d.upper.diagonal().iter().any(|u| u.norm() <= PIVOT_TOL * scale) {
        return Err(Error::Numerical("matrix is singular to working precision".into()));
    }
    let pb = &d.perm.matrix::<Complex64>() * b;
    let mut x = Mat::zeros(n, b.cols());
    for c in 0..b.cols() {
        // forward substitution with unit L, then back substitution with U
        let mut y = vec![Complex64::zero(); n];
        for i in 0..n {
            let s: Complex64 = (0..i).map(|j| d.lower[(i, j)] * y[j]).sum();
            y[i] = pb[(i, c)] - s;
        }
        for i in (0..n).rev() {
            let s: Complex64 = (i + 1..n).map(|j| d.upper[(i, j)] * x[(j, c)]).sum();
            x[(i, c)] = (y[i] - s) / d.upper[(i, i)];
        }
    }
    Ok(x)
}

pub fn inverse(m: &Mat) -> Result<Mat> {
    solve(m, &Mat::identity(m.require_square()?))
}

/// Householder vector `v` with `(I − 2vv*/v*v)·x = α·e₁`; returns `(v, α)`.
/// `v` is `None` when `x` is already a multiple of `e₁`.
fn householder(x: &[Complex64]) -> (Option<Vec<Complex64>>, Complex64) {
    let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let tail = x[1..].iter().map(|z| z.norm_sqr()).sum::<f64>();
    if tail == 0.0 {
        return (None, x[0]);
    }
    let alpha = -phase(x[0]) * norm;
    let mut v = x.to_vec();
    v[0] -= alpha;
    (Some(v), alpha)
}

/// `A ← H·A` on rows `r0..` and columns `cols`, with `H` built from `v`.
fn reflect_rows(a: &mut Mat, v: &[Complex64], r0: usize, cols: std::ops::Range<usize>) {
    let vv: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    for j in cols {
        let mut s = Complex64::zero();
        for (i, vi) in v.iter().enumerate() {
            s += vi.conj() * a[(r0 + i, j)];
        }
        let s = s * (2.0 / vv);
        for (i, vi) in v.iter().enumerate() {
            a[(r0 + i, j)] -= vi * s;
        }
    }
}

/// `A ← A·H` on columns `c0..` and rows `rows`.
fn reflect_cols(a: &mut Mat, v: &[Complex64], c0: usize, rows: std::ops::Range<usize>) {
    let vv: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    for i in rows {
        let mut s = Complex64::zero();
        for (j, vj) in v.iter().enumerate() {
            s += a[(i, c0 + j)] * vj;
        }
        let s = s * (2.0 / vv);
        for (j, vj) in v.iter().enumerate() {
            a[(i, c0 + j)] -= s * vj.conj();
        }
    }
}

/// Full Householder QR: square unitary `Q` (m×m) and `R` (m×n).
pub fn qr_full(m: &Mat) -> Result<QrDecomp> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows < cols {
        return Err(Error::InvalidInput(format!(
            "QR needs rows >= cols, got {rows}x{cols}"
        )));
    }
    let mut r = m.clone();
    let mut q = Mat::identity(rows);
    for k in 0..cols.min(rows - 1) {
        let x: Vec<Complex64> = (k..rows).map(|i| r[(i, k)]).collect();
        let (v, _) = householder(&x);
        if let Some(v) = v {
            reflect_rows(&mut r, &v, k, k..cols);
            reflect_cols(&mut q, &v, k, 0..rows);
            for i in k + 1..rows {
                r[(i, k)] = Complex64::zero();
            }
        }
    }
    // absorb phases so that diag(R) ≥ 0
    for k in 0..cols {
        let ph = phase(r[(k, k)]);
        for j in k..cols {
            r[(k, j)] *= ph.conj();
        }
        for i in 0..rows {
            q[(i, k)] *= ph;
        }
        r[(k, k)] = Complex64::new(r[(k, k)].re.max(0.0), 0.0);
    }
    Ok(QrDecomp { q, r })
}

/// Thin QR: `Q` is rows×cols with orthonormal columns, `R` is cols×cols.
pub fn qr(m: &Mat) -> Result<QrDecomp> {
    let full = qr_full(m)?;
    let (rows, cols) = (m.rows(), m.cols());
    Ok(QrDecomp {
        q: full.q.submatrix(0, rows, 0, cols),
        r: full.r.submatrix(0, cols, 0, cols),
    })
}

fn reverse_cols(m: &Mat) -> Mat {
    let c = m.cols();
    Mat::from_fn(m.rows(), c, |i, j| m[(i, c - 1 - j)])
}

fn reverse_both(m: &Mat) -> Mat {
    let (r, c) = (m.rows(), m.cols());
    Mat::from_fn(r, c, |i, j| m[(r - 1 - i, c - 1 - j)])
}

/// `A = L·Q` (rows ≤ cols) from the QR factorization of `A*`.
pub fn lq(m: &Mat) -> Result<(Mat, Mat)> {
    let QrDecomp { q, r } = qr(&m.adjoint())?;
    Ok((r.adjoint(), q.adjoint()))
}

/// `A = Q·L` (rows ≥ cols) from the QR factorization of `A` with columns reversed.
pub fn ql(m: &Mat) -> Result<(Mat, Mat)> {
    let QrDecomp { q, r } = qr(&reverse_cols(m))?;
    Ok((reverse_cols(&q), reverse_both(&r)))
}

/// `A = R·Q` (rows ≤ cols) from the QL factorization of `A*`.
pub fn rq(m: &Mat) -> Result<(Mat, Mat)> {
    let (q, l) = ql(&m.adjoint())?;
    Ok((l.adjoint(), q.adjoint()))
}

/// Unitary reduction to upper Hessenberg form: `A = Q·H·Q*`.
pub fn hessenberg(m: &Mat) -> Result<(Mat, Mat)> {
    let (q, h) = hessenberg_impl(m, true)?;
    Ok((q.expect("requested"), h))
}

/// Hessenberg reduction, optionally skipping the accumulation of `Q`.
pub(crate) fn hessenberg_impl(m: &Mat, want_q: bool) -> Result<(Option<Mat>, Mat)> {
    let n = m.require_square()?;
    let mut h = m.clone();
    let mut q = want_q.then(|| Mat::identity(n));
    for k in 0..n.saturating_sub(2) {
        let x: Vec<Complex64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let (v, _) = householder(&x);
        if let Some(v) = v {
            reflect_rows(&mut h, &v, k + 1, k..n);
            reflect_cols(&mut h, &v, k + 1, 0..n);
            if let Some(q) = q.as_mut() {
                reflect_cols(q, &v, k + 1, 0..n);
            }
            for i in k + 2..n {
                h[(i, k)] = Complex64::zero();
            }
        }
    }
    Ok((q, h))
}

/// Rotation `G` with `G·[x; y] = [r; 0]`, stored as `(g11, g12, g21, g22)`.
type Givens = (Complex64, Complex64, Complex64, Complex64);

fn givens(x: Complex64, y: Complex64) -> Givens {
    let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
    if r == 0.0 {
        let one = Complex64::new(1.0, 0.0);
        return (one, Complex64::zero(), Complex64::zero(), one);
    }
    (x.conj() / r, y.conj() / r, -y / r, x / r)
}

fn rotate_rows(a: &mut Mat, k: usize, g: Givens, cols: std::ops::Range<usize>) {
    for j in cols {
        let (u, v) = (a[(k, j)], a[(k + 1, j)]);
        a[(k, j)] = g.0 * u + g.1 * v;
        a[(k + 1, j)] = g.2 * u + g.3 * v;
    }
}

/// `A ← A·G*` on columns `k, k+1`.
fn rotate_cols(a: &mut Mat, k: usize, g: Givens, rows: std::ops::Range<usize>) {
    for i in rows {
        let (u, v) = (a[(i, k)], a[(i, k + 1)]);
        a[(i, k)] = u * g.0.conj() + v * g.1.conj();
        a[(i, k + 1)] = u * g.2.conj() + v * g.3.conj();
    }
}

/// Complex Schur form by Hessenberg reduction and Wilkinson-shifted QR.
pub fn schur(m: &Mat) -> Result<SchurDecomp> {
    let n = m.require_square()?;
    if !m.is_finite() {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    let (mut q, mut h) = hessenberg(m)?;
    if n < 2 {
        return Ok(SchurDecomp { q, t: h });
    }
    let norm = h.norm_fro().max(f64::MIN_POSITIVE);
    let max_iter = 60 * n;
    let mut hi = n - 1;
    let mut iter = 0usize;
    let mut total = 0usize;
    let mut rots: Vec<Givens> = Vec::with_capacity(n);
    while hi > 0 {
        // locate the start of the active unreduced block
        let mut lo = hi;
        while lo > 0 {
            let s = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            let s = if s == 0.0 { norm } else { s };
            if h[(lo, lo - 1)].norm() <= EPS * s {
                h[(lo, lo - 1)] = Complex64::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        total += 1;
        if total > max_iter * 4 || iter > max_iter {
            return Err(Error::Numerical("Schur QR iteration did not converge".into()));
        }
        let mu = if iter % 11 == 10 {
            // exceptional shift to break cycles
            h[(hi, hi)] + Complex64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            let (a, b) = (h[(hi - 1, hi - 1)], h[(hi - 1, hi)]);
            let (c, d) = (h[(hi, hi - 1)], h[(hi, hi)]);
            let half = (a - d) * 0.5;
            let disc = (half * half + b * c).sqrt();
            let (m1, m2) = ((a + d) * 0.5 + disc, (a + d) * 0.5 - disc);
            if (m1 - d).norm() < (m2 - d).norm() {
                m1
            } else {
                m2
            }
        };
        for k in lo..=hi {
            h[(k, k)] -= mu;
        }
        rots.clear();
        for k in lo..hi {
            let g = givens(h[(k, k)], h[(k + 1, k)]);
            rotate_rows(&mut h, k, g, k..n);
            h[(k + 1, k)] = Complex64::zero();
            rots.push(g);
        }
        for (off, &g) in rots.iter().enumerate() {
            let k = lo + off;
            rotate_cols(&mut h, k, g, 0..(k + 2).min(hi + 1));
            rotate_cols(&mut q, k, g, 0..n);
        }
        for k in lo..=hi {
            h[(k, k)] += mu;
        }
    }
    for i in 1..n {
        for j in 0..i {
            h[(i, j)] = Complex64::zero();
        }
    }
    Ok(SchurDecomp { q, t: h })
}

/// Swaps adjacent diagonal entries `k`, `k+1` of an upper-triangular `T`,
/// updating `Q` so that `Q·T·Q*` is unchanged.
pub(crate) fn schur_swap(q: &mut Mat, t: &mut Mat, k: usize) {
    let n = t.rows();
    let (t11, t22, t12) = (t[(k, k)], t[(k + 1, k + 1)], t[(k, k + 1)]);
    // the rotation maps the eigenvector of t22 onto e_k
    let g = givens(t12, t22 - t11);
    rotate_rows(t, k, g, k..n);
    rotate_cols(t, k, g, 0..k + 2);
    rotate_cols(q, k, g, 0..n);
    t[(k + 1, k)] = Complex64::zero();
    t[(k, k)] = t22;
    t[(k + 1, k + 1)] = t11;
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

    fn residual(a: &Mat, b: &Mat) -> f64 {
        (a - b).norm_fro()
    }

    #[test]
    fn inverse_round_trip() {
        let a = random(5, 5, 12);
        let inv = inverse(&a).unwrap();
        assert!(residual(&(&a * &inv), &Mat::identity(5)) < 1e-12);
        let singular = Mat::from_real_rows(&[&[1.0, 2.0], &[2.0, 4.0]]).unwrap();
        assert!(inverse(&singular).is_err());
    }

    #[test]
    fn plu_of_identity_is_trivial() {
        let d = plu(&Mat::identity(4)).unwrap();
        assert_eq!(d.perm, Perm::identity(4));
        assert_eq!(d.lower, Mat::identity(4));
        assert_eq!(d.upper, Mat::identity(4));
    }

    #[test]
    fn plu_swaps_on_zero_pivot() {
        let a = Mat::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let d = plu(&a).unwrap();
        assert_eq!(d.perm.one_based(), vec![2, 1]);
        assert_eq!(d.lower, Mat::identity(2));
        assert_eq!(d.upper, Mat::identity(2));
    }

    #[test]
    fn plu_reconstructs_and_gives_det() {
        let a = random(6, 6, 1);
        let d = plu(&a).unwrap();
        let p: Mat = d.perm.matrix();
        assert!(residual(&(&p * &a), &(&d.lower * &d.upper)) < 1e-10);
        let from_lu = d.upper.diagonal().iter().product::<Complex64>() * real(d.perm.signature() as f64);
        let direct = det(&a).unwrap();
        assert!((from_lu - direct).norm() <= 1e-10 * direct.norm());
    }

    #[test]
    fn full_pivot_reveals_rank() {
        let b = random(5, 2, 2);
        let c = random(2, 5, 3);
        let a = &b * &c;
        let d = plu_full(&a, 1e-12).unwrap();
        assert_eq!(d.rank, 2);
        let (p, q): (Mat, Mat) = (d.row_perm.matrix(), d.col_perm.matrix());
        assert!(residual(&(&(&p * &a) * &q), &(&d.lower * &d.upper)) < 1e-10);
    }

    #[test]
    fn ldu_examples() {
        let a = Mat::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
        let d = ldu(&a).unwrap();
        assert!((d.diag[0] - real(2.0)).norm() < 1e-15);
        assert!((d.diag[1] - real(1.5)).norm() < 1e-15);
        let rebuilt = &(&d.lower * &Mat::diag(&d.diag)) * &d.upper;
        assert!(residual(&rebuilt, &a) < 1e-14);

        let diag = Mat::diag(&[real(3.0), real(-1.0), c64(0.0, 2.0)]);
        let d = ldu(&diag).unwrap();
        assert_eq!(d.lower, Mat::identity(3));
        assert_eq!(d.upper, Mat::identity(3));
        assert_eq!(d.diag, diag.diagonal());

        let swap = Mat::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        assert_eq!(ldu(&swap).unwrap_err(), Error::VanishingMinor { index: 1 });
    }

    #[test]
    fn qr_rectangular() {
        let a = random(5, 3, 4);
        let d = qr(&a).unwrap();
        assert!(residual(&(&d.q * &d.r), &a) < 1e-10);
        assert!(d.q.unitarity_residual() < 1e-12);
        for k in 0..3 {
            assert!(d.r[(k, k)].im == 0.0 && d.r[(k, k)].re >= 0.0);
            for i in k + 1..3 {
                assert_eq!(d.r[(i, k)], Complex64::zero());
            }
        }
    }

    #[test]
    fn qr_of_orthogonal_is_trivial() {
        let (c, s) = (0.6, 0.8);
        let a = Mat::from_real_rows(&[&[c, -s], &[s, c]]).unwrap();
        let d = qr(&a).unwrap();
        assert!(residual(&d.r, &Mat::identity(2)) < 1e-14);
        assert!(residual(&d.q, &a) < 1e-14);
    }

    #[test]
    fn qr_rank_deficient() {
        let a = &random(5, 2, 5) * &random(2, 3, 6);
        let d = qr(&a).unwrap();
        assert!(d.r[(2, 2)].norm() < 1e-12);
        assert!(residual(&(&d.q * &d.r), &a) < 1e-10);
    }

    #[test]
    fn qr_rejects_wide() {
        assert!(qr(&random(2, 3, 7)).is_err());
    }

    #[test]
    fn lq_ql_rq_wrappers() {
        let tall = random(5, 3, 8);
        let (q, l) = ql(&tall).unwrap();
        assert!(residual(&(&q * &l), &tall) < 1e-10);
        for i in 0..3 {
            for j in i + 1..3 {
                assert!(l[(i, j)].norm() < 1e-14);
            }
        }
        let wide = random(3, 5, 9);
        let (l, q) = lq(&wide).unwrap();
        assert!(residual(&(&l * &q), &wide) < 1e-10);
        let (r, q) = rq(&wide).unwrap();
        assert!(residual(&(&r * &q), &wide) < 1e-10);
        assert!((&q * &q.adjoint()).unitarity_residual() < 1e-10);
        for i in 0..3 {
            for j in 0..i {
                assert!(r[(i, j)].norm() < 1e-14);
            }
        }
    }

    #[test]
    fn hessenberg_structure() {
        let a = random(6, 6, 10);
        let (q, h) = hessenberg(&a).unwrap();
        assert!(q.unitarity_residual() < 1e-12);
        assert!(residual(&(&(&q * &h) * &q.adjoint()), &a) < 1e-12);
        for i in 2..6 {
            for j in 0..i - 1 {
                assert_eq!(h[(i, j)], Complex64::zero());
            }
        }
    }

    #[test]
    fn schur_random() {
        for seed in 0..10 {
            let a = random(6, 6, 100 + seed);
            let s = schur(&a).unwrap();
            assert!(s.q.unitarity_residual() < 1e-12);
            assert!(residual(&(&(&s.q * &s.t) * &s.q.adjoint()), &a) < 1e-11);
        }
    }

    #[test]
    fn schur_of_triangular_and_normal() {
        let j = Mat::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        let s = schur(&j).unwrap();
        assert!(residual(&s.t, &j) < 1e-15);

        let (c, sn) = (0.3f64.cos(), 0.3f64.sin());
        let rot = Mat::from_real_rows(&[&[c, -sn], &[sn, c]]).unwrap();
        let s = schur(&rot).unwrap();
        assert!(s.t[(0, 1)].norm() < 1e-12);
    }

    #[test]
    fn swapping_preserves_the_matrix() {
        let a = random(5, 5, 11);
        let SchurDecomp { mut q, mut t } = schur(&a).unwrap();
        let before = t.diagonal();
        schur_swap(&mut q, &mut t, 1);
        assert!((t[(1, 1)] - before[2]).norm() < 1e-13);
        assert!((t[(2, 2)] - before[1]).norm() < 1e-13);
        assert!(t[(2, 1)].norm() < 1e-13);
        assert!(residual(&(&(&q * &t) * &q.adjoint()), &a) < 1e-11);
    }
}
