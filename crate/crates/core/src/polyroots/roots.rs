use num_complex::Complex64;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::jordan::companion;
use crate::spectra::eigenvalues;

/// Default relative tolerance for reporting a cluster of roots as one
/// multiple root.
pub const CLUSTER_TOL: f64 = 1e-6;

/// All roots with multiplicity; clusters recognized as multiple roots are
/// replaced by their centroid (see [`roots_with_multiplicity`]).
pub fn roots(p: &Poly) -> Result<Vec<Complex64>> {
    Ok(roots_with_multiplicity(p, CLUSTER_TOL)?
        .into_iter()
        .flat_map(|(z, m)| std::iter::repeat_n(z, m))
        .collect())
}

/// Raw companion-matrix eigenvalues of `p`.
pub fn companion_roots(p: &Poly) -> Result<Vec<Complex64>> {
    if p.is_zero() {
        return Err(Error::InvalidInput("the zero polynomial has no root set".into()));
    }
    if p.degree() < 1 {
        return Err(Error::DegreeTooSmall { degree: 0, required: 1 });
    }
    eigenvalues(&companion(&p.monic()?)?)
}

/// Distinct roots and multiplicities.
///
/// Nearby eigenvalues are grouped, and a group of `m` is accepted as one
/// root of multiplicity `m` when the Taylor coefficients of `p` of order
/// `0..m` at the centroid are all below `cluster_tol` relative to the
/// coefficient scale. Groups that fail are reported as simple roots.
pub fn roots_with_multiplicity(p: &Poly, cluster_tol: f64) -> Result<Vec<(Complex64, usize)>> {
    let raw = companion_roots(p)?;
    let n = raw.len();
    let monic = p.monic()?;
    let coeff_scale = monic.max_abs_coeff();
    // generous linkage radius: an m-fold root spreads like ε^{1/m}
    let link = |z: Complex64| (cluster_tol.sqrt().max(1e-3)) * (1.0 + z.norm());
    let mut group_of: Vec<usize> = (0..n).collect();
    fn find(g: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while g[r] != r {
            r = g[r];
        }
        g[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (raw[i] - raw[j]).norm() <= link(raw[i]).max(link(raw[j])) {
                let (a, b) = (find(&mut group_of, i), find(&mut group_of, j));
                group_of[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<Complex64>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for (i, &z) in raw.iter().enumerate() {
        let g = find(&mut group_of, i);
        if index[g] == usize::MAX {
            index[g] = groups.len();
            groups.push(Vec::new());
        }
        groups[index[g]].push(z);
    }
    let mut out = Vec::new();
    for g in groups {
        let m = g.len();
        let centre = g.iter().sum::<Complex64>() / m as f64;
        if m > 1 && is_multiple_root(&monic, centre, m, cluster_tol, coeff_scale) {
            out.push((centre, m));
        } else {
            out.extend(g.into_iter().map(|z| (z, 1)));
        }
    }
    out.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    Ok(out)
}

fn is_multiple_root(p: &Poly, z: Complex64, m: usize, tol: f64, scale: f64) -> bool {
    let n = p.degree() as i32;
    let bound = tol * scale.max(1.0) * (1.0 + z.norm()).powi(n);
    // Taylor coefficients p^{(j)}(z)/j!
    let mut d = p.clone();
    let mut fact = 1.0;
    for j in 0..m {
        if j > 0 {
            d = d.derivative();
            fact *= j as f64;
        }
        if (d.eval(&z) / fact).norm() > bound {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::real;

    fn residual_ok(p: &Poly, xs: &[Complex64], tol: f64) {
        let n = p.degree() as i32;
        for x in xs {
            let bound = tol * p.max_abs_coeff() * (1.0 + x.norm()).powi(n);
            assert!(p.eval(x).norm() <= bound, "root {x} residual {}", p.eval(x).norm());
        }
    }

    #[test]
    fn simple_quadratic() {
        let p = Poly::from_real(&[-1.0, 0.0, 1.0]);
        let xs = roots(&p).unwrap();
        assert_eq!(xs.len(), 2);
        assert!((xs[0] - real(-1.0)).norm() < 1e-12);
        assert!((xs[1] - real(1.0)).norm() < 1e-12);
    }

    #[test]
    fn quintic() {
        let p = Poly::from_real(&[-1.0, -1.0, 0.0, 0.0, 0.0, 1.0]);
        let xs = roots(&p).unwrap();
        assert_eq!(xs.len(), 5);
        residual_ok(&p, &xs, 1e-12);
        // exactly one real root near 1.1673
        let real_roots: Vec<_> = xs.iter().filter(|z| z.im.abs() < 1e-10).collect();
        assert_eq!(real_roots.len(), 1);
        assert!((real_roots[0].re - 1.1673039782614187).abs() < 1e-10);
    }

    #[test]
    fn triple_root_clusters() {
        let p = Poly::from_roots(&[real(2.0); 3]);
        let xs = roots(&p).unwrap();
        assert_eq!(xs.len(), 3);
        for x in &xs {
            assert!((x - real(2.0)).norm() < 1e-6);
        }
        let mult = roots_with_multiplicity(&p, CLUSTER_TOL).unwrap();
        assert_eq!(mult.len(), 1);
        assert_eq!(mult[0].1, 3);
    }

    #[test]
    fn close_but_distinct_roots_stay_apart() {
        let p = Poly::from_roots(&[real(1.0), real(1.01), real(-3.0)]);
        let mult = roots_with_multiplicity(&p, CLUSTER_TOL).unwrap();
        assert_eq!(mult.len(), 3);
        assert!(mult.iter().all(|&(_, m)| m == 1));
    }

    #[test]
    fn non_monic_and_errors() {
        let p = Poly::from_real(&[6.0, -5.0, 1.0]).scale(&real(3.0));
        let xs = roots(&p).unwrap();
        assert!((xs[0] - real(2.0)).norm() < 1e-12 && (xs[1] - real(3.0)).norm() < 1e-12);
        assert!(roots(&Poly::zero()).is_err());
        assert!(roots(&Poly::from_real(&[4.0])).is_err());
    }
}
