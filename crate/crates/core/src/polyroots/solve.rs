//! Closed-form solutions of the depressed cubic `x³ + 3px + 2q` and quartic
//! `x⁴ + 6px² + 4qx + 3r`.

use num_complex::Complex64;

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

fn cube_roots_of_unity() -> [Complex64; 3] {
    let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    [ONE, w, w * w]
}

/// Principal cube root.
fn cbrt(z: Complex64) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return z;
    }
    Complex64::from_polar(z.norm().cbrt(), z.arg() / 3.0)
}

/// Cardano: `x = w·∛u + w²·∛v` with `u, v = −q ± √(p³+q²)`.
///
/// The cube root of the larger of `u, v` is taken on the principal branch and
/// the other is fixed by `∛u·∛v = −p`, so repeated roots come out with
/// multiplicity.
pub fn solve_cubic(p: Complex64, q: Complex64) -> [Complex64; 3] {
    let s = (p * p * p + q * q).sqrt();
    let (u, v) = (-q + s, -q - s);
    let big = if u.norm() >= v.norm() { u } else { v };
    let a = cbrt(big);
    let b = if a.norm() == 0.0 { cbrt(v) } else { -p / a };
    let w = cube_roots_of_unity();
    [a + b, w[1] * a + w[2] * b, w[2] * a + w[1] * b]
}

/// Resolvent data: `a = p² + r`, `b = p³ − 3pr + q²`.
pub fn quartic_resolvent_coefficients(p: Complex64, q: Complex64, r: Complex64) -> (Complex64, Complex64) {
    (p * p + r, p * p * p - 3.0 * p * r + q * q)
}

/// The three roots `y = t + p + a/t` of `(y² − 3r)(y − 3p) = 2q²`.
pub fn quartic_resolvent_roots(p: Complex64, q: Complex64, r: Complex64) -> [Complex64; 3] {
    let (a, b) = quartic_resolvent_coefficients(p, q, r);
    let s = (b * b - a * a * a).sqrt();
    let base = if (b + s).norm() >= (b - s).norm() { b + s } else { b - s };
    let t0 = cbrt(base);
    if t0.norm() == 0.0 {
        // a = b = 0: the resolvent is (y − p)³
        return [p; 3];
    }
    cube_roots_of_unity().map(|w| {
        let t = w * t0;
        t + p + a / t
    })
}

/// Roots of `x⁴ + 6px² + 4qx + 3r`.
///
/// Uses the resolvent root that maximizes `|2y − 6p|` (the quantity divided
/// by). When `q = 0`, or when every resolvent root gives `2y = 6p` to working
/// precision, the equation is solved as a quadratic in `x²`.
pub fn solve_quartic(p: Complex64, q: Complex64, r: Complex64) -> [Complex64; 4] {
    let scale = 1.0 + p.norm() + q.norm().sqrt() + r.norm().sqrt();
    let ys = quartic_resolvent_roots(p, q, r);
    let y = ys
        .into_iter()
        .max_by(|a, b| (2.0 * a - 6.0 * p).norm().total_cmp(&(2.0 * b - 6.0 * p).norm()))
        .expect("three roots");
    let m2 = 2.0 * y - 6.0 * p;
    let roots = if q.norm() == 0.0 || m2.norm() <= 1e-12 * scale {
        biquadratic(p, r)
    } else {
        let m = m2.sqrt();
        let d1 = (-2.0 * y - 6.0 * p + 8.0 * q / m).sqrt();
        let d2 = (-2.0 * y - 6.0 * p - 8.0 * q / m).sqrt();
        [(-m + d1) * 0.5, (-m - d1) * 0.5, (m + d2) * 0.5, (m - d2) * 0.5]
    };
    roots.map(|x| polish(x, p, q, r))
}

fn biquadratic(p: Complex64, r: Complex64) -> [Complex64; 4] {
    let d = (9.0 * p * p - 3.0 * r).sqrt();
    let (z1, z2) = (-3.0 * p + d, -3.0 * p - d);
    let (s1, s2) = (z1.sqrt(), z2.sqrt());
    [s1, -s1, s2, -s2]
}

fn quartic_value(x: Complex64, p: Complex64, q: Complex64, r: Complex64) -> (Complex64, Complex64) {
    let x2 = x * x;
    let f = x2 * x2 + 6.0 * p * x2 + 4.0 * q * x + 3.0 * r;
    let df = 4.0 * x2 * x + 12.0 * p * x + 4.0 * q;
    (f, df)
}

/// A few Newton steps, each kept only if it lowers the residual.
fn polish(mut x: Complex64, p: Complex64, q: Complex64, r: Complex64) -> Complex64 {
    let (mut f, mut df) = quartic_value(x, p, q, r);
    for _ in 0..3 {
        if f.norm() == 0.0 || df.norm() == 0.0 {
            break;
        }
        let next = x - f / df;
        let (nf, ndf) = quartic_value(next, p, q, r);
        if nf.norm() >= f.norm() {
            break;
        }
        (x, f, df) = (next, nf, ndf);
    }
    x
}
