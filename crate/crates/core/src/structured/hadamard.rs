use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{det_int, IntMat, Mat, Matrix};

/// Largest order accepted by [`hadamard_equivalent`].
pub const EQUIVALENCE_LIMIT: usize = 8;

/// Square matrix with entries `±1`.
#[derive(Clone, PartialEq, Eq)]
pub struct SignMatrix {
    entries: Matrix<i64>,
}

impl SignMatrix {
    pub fn new(entries: Matrix<i64>) -> Result<Self> {
        entries.require_square()?;
        if entries.data().iter().any(|&x| x != 1 && x != -1) {
            return Err(Error::InvalidInput("sign matrix entries must be ±1".into()));
        }
        Ok(Self { entries })
    }

    /// Reads a floating matrix whose entries are exactly `±1`.
    pub fn from_mat(m: &Mat) -> Result<Self> {
        let entries = Matrix::new(
            m.rows(),
            m.cols(),
            m.data()
                .iter()
                .map(|z| match (z.re, z.im) {
                    (1.0, 0.0) => Ok(1),
                    (-1.0, 0.0) => Ok(-1),
                    _ => Err(Error::InvalidInput(format!("entry {z} is not ±1"))),
                })
                .collect::<Result<_>>()?,
        )?;
        Self::new(entries)
    }

    /// Parses rows of `+`/`-` characters.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.chars()
                    .map(|c| match c {
                        '+' => Ok(1),
                        '-' => Ok(-1),
                        _ => Err(Error::InvalidInput(format!("unexpected character {c:?} in sign matrix"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::new(Matrix::from_rows(rows)?)
    }

    pub fn order(&self) -> usize {
        self.entries.rows()
    }

    pub fn entries(&self) -> &Matrix<i64> {
        &self.entries
    }

    pub fn to_mat(&self) -> Mat {
        self.entries.map(|&x| Complex64::new(x as f64, 0.0))
    }

    pub fn to_int(&self) -> IntMat {
        self.entries.map(|&x| BigInt::from(x))
    }

    /// `H·Hᵗ = N·1`, exactly.
    pub fn is_hadamard(&self) -> bool {
        let n = self.order();
        let gram = &self.entries * &self.entries.transpose();
        gram == Matrix::identity(n).scale(&(n as i64))
    }

    pub fn det(&self) -> BigInt {
        det_int(&self.to_int()).expect("square")
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries == self.entries.transpose()
    }

    /// `H + Hᵗ = 2·1`.
    pub fn is_skew(&self) -> bool {
        let n = self.order();
        &self.entries + &self.entries.transpose() == Matrix::identity(n).scale(&2)
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order() {
            let row: String = self.entries.row(i).iter().map(|&x| if x > 0 { '+' } else { '-' }).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignMatrix(\n{self})")
    }
}

/// Which Hadamard condition [`is_hadamard`] tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HadamardKind {
    Real,
    Complex,
}

impl FromStr for HadamardKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" => Ok(Self::Real),
            "complex" => Ok(Self::Complex),
            _ => Err(Error::InvalidInput(format!("unknown Hadamard kind {s:?}"))),
        }
    }
}

/// Real: entries exactly `±1` and `HHᵗ = N·1` exactly. Complex: unit-modulus
/// entries and `HH* = N·1`, both within `tol` (scaled by `N`).
pub fn is_hadamard(m: &Mat, kind: HadamardKind, tol: f64) -> Result<bool> {
    let n = m.require_square()?;
    Ok(match kind {
        HadamardKind::Real => SignMatrix::from_mat(m).is_ok_and(|s| s.is_hadamard()),
        HadamardKind::Complex => {
            let unimodular = m.data().iter().all(|z| (z.norm() - 1.0).abs() <= tol);
            let gram = &(m * &m.adjoint()) - &Mat::identity(n).scale_real(n as f64);
            unimodular && gram.norm_max() <= tol * n as f64
        }
    })
}

/// A recipe for [`hadamard_construct`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HadamardSpec {
    /// `W₂^{⊗k}`, order `2^k`.
    Walsh(u32),
    /// Prime `q ≡ 3 (mod 4)`, order `q + 1`, skew.
    Paley1(u64),
    /// Prime `q ≡ 1 (mod 4)`, order `2q + 2`, symmetric.
    Paley2(u64),
    /// First rows of circulant symmetric `±1` matrices `A, B, C, D`.
    Williamson([Vec<i64>; 4]),
}

pub fn hadamard_construct(spec: &HadamardSpec) -> Result<SignMatrix> {
    match spec {
        HadamardSpec::Walsh(k) => walsh(*k),
        HadamardSpec::Paley1(q) => paley1(*q),
        HadamardSpec::Paley2(q) => paley2(*q),
        HadamardSpec::Williamson(rows) => williamson(rows),
    }
}

fn walsh(k: u32) -> Result<SignMatrix> {
    if k == 0 || k > 12 {
        return Err(Error::InvalidInput(format!("Walsh order 2^{k} outside 2..4096")));
    }
    let w2 = Matrix::new(2, 2, vec![1i64, 1, 1, -1])?;
    let mut m = w2.clone();
    for _ in 1..k {
        m = m.kron(&w2);
    }
    SignMatrix::new(m)
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Quadratic character of `F_q`, `q` an odd prime (Euler's criterion).
fn chi(a: u64, q: u64) -> i64 {
    match a % q {
        0 => 0,
        a if pow_mod(a, (q - 1) / 2, q) == 1 => 1,
        _ => -1,
    }
}

fn check_paley(q: u64, residue: u64) -> Result<()> {
    if !is_prime(q) || q == 2 {
        return Err(Error::InvalidPaleyOrder { q, reason: "q must be an odd prime".into() });
    }
    if q > 1 << 16 {
        return Err(Error::InvalidPaleyOrder { q, reason: "q too large".into() });
    }
    if q % 4 != residue {
        return Err(Error::InvalidPaleyOrder {
            q,
            reason: format!("this construction needs q ≡ {residue} (mod 4)"),
        });
    }
    Ok(())
}

/// `Q_{ab} = χ(b − a)` over `F_q`, `q` an odd prime.
pub fn paley_q_matrix(q: u64) -> Result<Matrix<i64>> {
    if !is_prime(q) || q == 2 {
        return Err(Error::InvalidPaleyOrder { q, reason: "q must be an odd prime".into() });
    }
    let n = q as usize;
    Ok(Matrix::from_fn(n, n, |a, b| chi((b as u64 + q - a as u64) % q, q)))
}

/// The `(q+1)×(q+1)` bordered matrix `[[0, 𝕀], [s·𝕀, Q]]`.
fn bordered(q: u64, border: i64) -> Result<Matrix<i64>> {
    let qm = paley_q_matrix(q)?;
    let n = q as usize + 1;
    Ok(Matrix::from_fn(n, n, |i, j| match (i, j) {
        (0, 0) => 0,
        (0, _) => 1,
        (_, 0) => border,
        _ => qm[(i - 1, j - 1)],
    }))
}

fn paley1(q: u64) -> Result<SignMatrix> {
    check_paley(q, 3)?;
    let s = bordered(q, -1)?;
    SignMatrix::new(&Matrix::identity(s.rows()) + &s)
}

fn paley2(q: u64) -> Result<SignMatrix> {
    check_paley(q, 1)?;
    let s = bordered(q, 1)?;
    let g = [[1i64, -1], [-1, -1]];
    let f = [[1i64, 1], [1, -1]];
    let n = 2 * s.rows();
    SignMatrix::new(Matrix::from_fn(n, n, |i, j| {
        let e = s[(i / 2, j / 2)];
        let (r, c) = (i % 2, j % 2);
        if e == 0 {
            g[r][c]
        } else {
            e * f[r][c]
        }
    }))
}

fn circulant_i64(row: &[i64]) -> Matrix<i64> {
    let k = row.len();
    Matrix::from_fn(k, k, |i, j| row[(j + k - i) % k])
}

fn williamson(rows: &[Vec<i64>; 4]) -> Result<SignMatrix> {
    let names = ["A", "B", "C", "D"];
    let k = rows[0].len();
    if k == 0 {
        return Err(Error::Williamson("blocks must be non-empty".into()));
    }
    for (name, row) in names.iter().zip(rows) {
        if row.len() != k {
            return Err(Error::Williamson(format!("{name} has length {} but A has length {k}", row.len())));
        }
        if row.iter().any(|&x| x != 1 && x != -1) {
            return Err(Error::Williamson(format!("{name} has entries other than ±1")));
        }
        if (1..k).any(|j| row[j] != row[k - j]) {
            return Err(Error::Williamson(format!("{name} is not symmetric: first row must satisfy x_j = x_(K−j)")));
        }
    }
    let blocks: Vec<Matrix<i64>> = rows.iter().map(|r| circulant_i64(r)).collect();
    let mut sum = Matrix::zeros(k, k);
    for b in &blocks {
        sum = &sum + &(b * b);
    }
    let target = Matrix::identity(k).scale(&(4 * k as i64));
    if sum != target {
        let (i, j) = (0..k * k)
            .map(|x| (x / k, x % k))
            .find(|&(i, j)| sum[(i, j)] != target[(i, j)])
            .expect("differs somewhere");
        return Err(Error::Williamson(format!(
            "A²+B²+C²+D² = 4K·1 fails: entry ({i},{j}) is {} instead of {}",
            sum[(i, j)],
            target[(i, j)]
        )));
    }
    // block pattern: sign and index of the block in each 4×4 position
    let layout: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(-1, 1), (1, 0), (-1, 3), (1, 2)],
        [(-1, 2), (1, 3), (1, 0), (-1, 1)],
        [(-1, 3), (-1, 2), (1, 1), (1, 0)],
    ];
    let n = 4 * k;
    SignMatrix::new(Matrix::from_fn(n, n, |i, j| {
        let (s, b) = layout[i / k][j / k];
        s * blocks[b][(i % k, j % k)]
    }))
}

/// The one-parameter family of 4×4 complex Hadamard matrices
/// with rows `(1,1,1,1), (1,−1,1,−1), (1,q,−1,−q), (1,−q,−1,q)`.
pub fn f4q_family(q: Complex64, tol: f64) -> Result<Mat> {
    if (q.norm() - 1.0).abs() > tol {
        return Err(Error::NotUnitModulus(q.norm()));
    }
    let one = Complex64::new(1.0, 0.0);
    Mat::from_rows(vec![
        vec![one, one, one, one],
        vec![one, -one, one, -one],
        vec![one, q, -one, -q],
        vec![one, -q, -one, q],
    ])
}

/// Multiplies rows and columns by phases so the first row and column are 1.
pub fn dephase(h: &Mat) -> Result<Mat> {
    h.require_square()?;
    if h.data().iter().any(|z| z.norm() == 0.0) {
        return Err(Error::InvalidInput("cannot dephase a matrix with zero entries".into()));
    }
    let n = h.rows();
    let rows: Vec<Complex64> = (0..n).map(|i| h[(i, 0)].conj() / h[(i, 0)].norm()).collect();
    let cols: Vec<Complex64> = (0..n).map(|j| {
        let z = rows[0] * h[(0, j)];
        z.conj() / z.norm()
    }).collect();
    Ok(Mat::from_fn(n, n, |i, j| rows[i] * h[(i, j)] * cols[j]))
}

/// Equivalence of real Hadamard matrices under row and column permutations
/// and sign changes, by branch-and-bound over column assignments.
pub fn hadamard_equivalent(a: &SignMatrix, b: &SignMatrix) -> Result<bool> {
    let n = a.order();
    if n != b.order() {
        return Ok(false);
    }
    if n > EQUIVALENCE_LIMIT {
        return Err(Error::Budget { what: "equivalence order", value: n, limit: EQUIVALENCE_LIMIT });
    }
    // rows of b normalized to start with +1; target prefixes sorted per depth
    let bn: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let s = b.entries[(i, 0)];
            (0..n).map(|j| s * b.entries[(i, j)]).collect()
        })
        .collect();
    let targets: Vec<Vec<Vec<i64>>> = (1..=n)
        .map(|d| {
            let mut p: Vec<Vec<i64>> = bn.iter().map(|r| r[..d].to_vec()).collect();
            p.sort();
            p
        })
        .collect();
    let mut chosen = Vec::with_capacity(n);
    Ok(extend(&a.entries, &targets, &mut chosen, 0))
}

fn extend(a: &Matrix<i64>, targets: &[Vec<Vec<i64>>], chosen: &mut Vec<(usize, i64)>, used: u32) -> bool {
    let n = a.rows();
    let d = chosen.len();
    if d == n {
        return true;
    }
    for c in 0..n {
        if used & (1 << c) != 0 {
            continue;
        }
        // the first column's sign is absorbed by row normalization
        let signs: &[i64] = if d == 0 { &[1] } else { &[1, -1] };
        for &s in signs {
            chosen.push((c, s));
            let mut prefixes: Vec<Vec<i64>> = (0..n)
                .map(|i| {
                    let rho = a[(i, chosen[0].0)];
                    chosen.iter().map(|&(cc, ss)| rho * ss * a[(i, cc)]).collect()
                })
                .collect();
            prefixes.sort();
            if prefixes == targets[d] && extend(a, targets, chosen, used | (1 << c)) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::matcore::{c64, real};
    use crate::structured::fourier_matrix;

    #[test]
    fn walsh_and_fourier_are_hadamard() {
        let w2 = hadamard_construct(&HadamardSpec::Walsh(1)).unwrap();
        assert!(is_hadamard(&w2.to_mat(), HadamardKind::Real, 0.0).unwrap());
        for n in 1..=12 {
            assert!(is_hadamard(&fourier_matrix(n).unwrap(), HadamardKind::Complex, 1e-10).unwrap());
        }
        let flat = Mat::from_fn(3, 3, |_, _| real(1.0));
        assert!(!is_hadamard(&flat, HadamardKind::Real, 0.0).unwrap());
        assert!(!is_hadamard(&flat, HadamardKind::Complex, 1e-10).unwrap());
    }

    #[test]
    fn walsh_determinant_meets_bound() {
        let w4 = hadamard_construct(&HadamardSpec::Walsh(2)).unwrap();
        assert_eq!(w4.det().abs(), BigInt::from(16));
    }

    #[test]
    fn paley_constructions() {
        let p = hadamard_construct(&HadamardSpec::Paley1(3)).unwrap();
        assert_eq!(p.order(), 4);
        assert!(p.is_hadamard() && p.is_skew());
        let p = hadamard_construct(&HadamardSpec::Paley2(5)).unwrap();
        assert_eq!(p.order(), 12);
        assert!(p.is_hadamard() && p.is_symmetric());
        for q in [7, 11, 19, 23] {
            let h = hadamard_construct(&HadamardSpec::Paley1(q)).unwrap();
            assert!(h.is_hadamard() && h.is_skew());
            let n = h.order() as u32;
            assert_eq!(h.det().abs(), BigInt::from(n).pow(n / 2));
        }
        for q in [13, 17] {
            let h = hadamard_construct(&HadamardSpec::Paley2(q)).unwrap();
            assert!(h.is_hadamard() && h.is_symmetric());
        }
        assert!(matches!(hadamard_construct(&HadamardSpec::Paley1(5)), Err(Error::InvalidPaleyOrder { .. })));
        assert!(matches!(hadamard_construct(&HadamardSpec::Paley2(9)), Err(Error::InvalidPaleyOrder { .. })));
    }

    #[test]
    fn paley_q_identities() {
        for q in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            let m = paley_q_matrix(q).unwrap();
            let n = q as usize;
            let ones = Matrix::from_fn(n, n, |_, _| 1i64);
            let expect = &Matrix::identity(n).scale(&(q as i64)) - &ones;
            assert_eq!(&m * &m.transpose(), expect);
            assert!((&m * &ones).is_zero_matrix() && (&ones * &m).is_zero_matrix());
        }
    }

    #[test]
    fn williamson_assembly() {
        let h = hadamard_construct(&HadamardSpec::Williamson([vec![1], vec![1], vec![1], vec![1]])).unwrap();
        assert!(h.is_hadamard());
        let a = vec![1, 1, 1];
        let b = vec![1, -1, -1];
        let h = hadamard_construct(&HadamardSpec::Williamson([a.clone(), b.clone(), b.clone(), b.clone()])).unwrap();
        assert_eq!(h.order(), 12);
        assert!(h.is_hadamard());
        let err = hadamard_construct(&HadamardSpec::Williamson([a.clone(), a.clone(), b.clone(), b])).unwrap_err();
        assert!(err.to_string().contains("A²+B²+C²+D²"), "{err}");
        let asym = vec![1, 1, -1];
        assert!(hadamard_construct(&HadamardSpec::Williamson([asym, a.clone(), a.clone(), a])).is_err());
    }

    #[test]
    fn f4q_family_members() {
        let w4 = hadamard_construct(&HadamardSpec::Walsh(2)).unwrap();
        let f1 = SignMatrix::from_mat(&f4q_family(real(1.0), 1e-12).unwrap()).unwrap();
        assert!(hadamard_equivalent(&f1, &w4).unwrap());
        assert!(is_hadamard(&f4q_family(c64(0.0, 1.0), 1e-12).unwrap(), HadamardKind::Complex, 1e-12).unwrap());
        for theta in [0.3, 1.7, 2.9, 5.5] {
            let f = f4q_family(Complex64::from_polar(1.0, theta), 1e-12).unwrap();
            assert!(is_hadamard(&f, HadamardKind::Complex, 1e-12).unwrap());
        }
        assert!(matches!(f4q_family(real(1.1), 1e-12), Err(Error::NotUnitModulus(_))));
    }

    #[test]
    fn equivalence_detects_inequivalence() {
        let w2 = hadamard_construct(&HadamardSpec::Walsh(1)).unwrap();
        let flipped = SignMatrix::new(Matrix::new(2, 2, vec![-1, 1, 1, 1]).unwrap()).unwrap();
        assert!(hadamard_equivalent(&w2, &flipped).unwrap());
        let w8 = hadamard_construct(&HadamardSpec::Walsh(3)).unwrap();
        let mut e = w8.entries().clone();
        e.swap_rows(1, 6);
        e.swap_cols(2, 5);
        for j in 0..8 {
            e[(3, j)] = -e[(3, j)];
        }
        assert!(hadamard_equivalent(&w8, &SignMatrix::new(e).unwrap()).unwrap());
        // a non-Hadamard sign matrix is not equivalent to W₄
        let w4 = hadamard_construct(&HadamardSpec::Walsh(2)).unwrap();
        let ones = SignMatrix::new(Matrix::from_fn(4, 4, |_, _| 1)).unwrap();
        assert!(!hadamard_equivalent(&w4, &ones).unwrap());
    }

    #[test]
    fn dephasing_normalizes_border() {
        let f = f4q_family(Complex64::from_polar(1.0, 0.7), 1e-12).unwrap();
        let g = Mat::diag(&[c64(0.0, 1.0), real(-1.0), Complex64::from_polar(1.0, 2.0), real(1.0)]);
        let d = dephase(&(&g * &f)).unwrap();
        for k in 0..4 {
            assert!((d[(0, k)] - real(1.0)).norm() < 1e-12 && (d[(k, 0)] - real(1.0)).norm() < 1e-12);
        }
        assert!(is_hadamard(&d, HadamardKind::Complex, 1e-12).unwrap());
    }

    #[test]
    fn sign_matrix_text_round_trip() {
        let h = hadamard_construct(&HadamardSpec::Paley1(7)).unwrap();
        assert_eq!(SignMatrix::parse(&h.to_string()).unwrap(), h);
    }
}
