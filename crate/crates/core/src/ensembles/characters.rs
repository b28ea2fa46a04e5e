use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::Serialize;

use super::rng::{Normals, SeedSpec};
use super::stats::EmpiricalLaw;
use crate::error::{Error, Result};
use crate::matcore::Mat;

/// Complex reflection groups `H_N^s = ℤ_s ≀ S_N`, with their classical
/// special cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReflectionGroup {
    /// Permutations.
    S,
    /// Signed permutations (hyperoctahedral group).
    H,
    /// Permutations decorated by `s`-th roots of unity.
    Hs(u32),
    /// Permutations decorated by arbitrary unit complex numbers.
    K,
}

impl ReflectionGroup {
    pub fn parse(name: &str, s: Option<u32>) -> Result<Self> {
        Ok(match name.to_ascii_uppercase().as_str() {
            "S" | "SN" | "S_N" => Self::S,
            "H" | "HN" | "H_N" => Self::H,
            "K" | "KN" | "K_N" => Self::K,
            "HS" | "HNS" | "H_N^S" => Self::Hs(s.ok_or_else(|| Error::InvalidInput("H_N^s needs s".into()))?),
            other => return Err(Error::InvalidInput(format!("unknown reflection group {other:?}"))),
        })
    }

    /// The decoration attached to a point, as a unit complex number.
    fn decoration<R: Rng>(&self, rng: &mut R) -> Complex64 {
        let root = |s: u32, rng: &mut R| Complex64::from_polar(1.0, TAU * rng.random_range(0..s) as f64 / s as f64);
        match *self {
            Self::S => Complex64::new(1.0, 0.0),
            Self::H => Complex64::new(if rng.random::<bool>() { 1.0 } else { -1.0 }, 0.0),
            Self::Hs(1) => Complex64::new(1.0, 0.0),
            Self::Hs(2) => Self::H.decoration(rng),
            Self::Hs(0) | Self::K => Complex64::from_polar(1.0, TAU * rng.random::<f64>()),
            Self::Hs(s) => root(s, rng),
        }
    }
}

/// `⌊tN⌋`, guarded against `t·N` landing just below an integer.
pub fn truncation(n: usize, t: f64) -> usize {
    (t * n as f64 + 1e-9).floor() as usize
}

/// Samples of the truncated character `Σ_{i ≤ ⌊tN⌋} u_i·[σ(i) = i]` for a
/// uniform random element `(σ, u)` of the group.
pub fn sample_reflection_char(
    group: ReflectionGroup,
    n: usize,
    t: f64,
    seed: SeedSpec,
    count: usize,
) -> Result<EmpiricalLaw> {
    let cut = truncation(n, t);
    if cut == 0 || cut > n {
        return Err(Error::InvalidInput(format!("need 1 ≤ ⌊tN⌋ ≤ N, got ⌊{t}·{n}⌋ = {cut}")));
    }
    let samples = (0..count)
        .into_par_iter()
        .map_init(
            || (0..n).collect::<Vec<usize>>(),
            |perm, i| {
                let mut rng = seed.rng(i as u64);
                perm.sort_unstable();
                perm.shuffle(&mut rng);
                let mut chi = Complex64::new(0.0, 0.0);
                for (j, &p) in perm.iter().take(cut).enumerate() {
                    if p == j {
                        chi += group.decoration(&mut rng);
                    }
                }
                if matches!(group, ReflectionGroup::S | ReflectionGroup::H | ReflectionGroup::Hs(1 | 2)) {
                    chi.im = 0.0;
                }
                chi
            },
        )
        .collect();
    Ok(EmpiricalLaw::new(samples))
}

/// Samples of `Σ_{ω} ω·α_ω` over the `s`-th roots of unity `ω`, with the
/// `α_ω` independent Poisson variables of parameter `t/s`.
pub fn sample_compound_poisson(s: u32, t: f64, seed: SeedSpec, count: usize) -> Result<EmpiricalLaw> {
    if s == 0 || t.is_nan() || t <= 0.0 {
        return Err(Error::InvalidInput("compound Poisson needs s ≥ 1 and t > 0".into()));
    }
    let law = Poisson::new(t / s as f64).map_err(|e| Error::InvalidInput(e.to_string()))?;
    let roots: Vec<Complex64> = (0..s).map(|j| Complex64::from_polar(1.0, TAU * j as f64 / s as f64)).collect();
    let samples = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = seed.rng(i as u64);
            roots.iter().map(|w| w * law.sample(&mut rng)).sum()
        })
        .collect();
    Ok(EmpiricalLaw::new(samples))
}

/// Compact rotation groups parametrized by the unit sphere `S³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RotationGroup {
    SU2,
    SO3,
}

impl RotationGroup {
    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_uppercase().as_str() {
            "SU2" | "SU_2" => Ok(Self::SU2),
            "SO3" | "SO_3" => Ok(Self::SO3),
            other => Err(Error::InvalidInput(format!("unknown rotation group {other:?}"))),
        }
    }
}

/// Uniform point of `S³ ⊂ ℝ⁴`, by normalizing a Gaussian vector.
pub fn uniform_s3<R: Rng>(g: &mut Normals<R>) -> [f64; 4] {
    loop {
        let v = [g.standard(), g.standard(), g.standard(), g.standard()];
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-300 {
            return v.map(|x| x / norm);
        }
    }
}

/// The rotation of `ℝ³` attached to the unit quaternion `(p, q, r, s)`.
pub fn euler_rodrigues([p, q, r, s]: [f64; 4]) -> Mat {
    Mat::from_real_rows(&[
        &[p * p + q * q - r * r - s * s, 2.0 * (q * r - p * s), 2.0 * (p * r + q * s)],
        &[2.0 * (p * s + q * r), p * p + r * r - q * q - s * s, 2.0 * (r * s - p * q)],
        &[2.0 * (q * s - p * r), 2.0 * (p * q + r * s), p * p + s * s - q * q - r * r],
    ])
    .expect("3×3")
}

/// Main character samples: `2a` on `SU₂`, and `4a²` (the `SO₃` character
/// shifted by one) on `SO₃`, with `a` the first coordinate on `S³`.
pub fn sample_rotation_char(group: RotationGroup, seed: SeedSpec, count: usize) -> EmpiricalLaw {
    let samples = (0..count)
        .into_par_iter()
        .map(|i| {
            let a = uniform_s3(&mut Normals::new(seed.rng(i as u64)))[0];
            let x = match group {
                RotationGroup::SU2 => 2.0 * a,
                RotationGroup::SO3 => 4.0 * a * a,
            };
            Complex64::new(x, 0.0)
        })
        .collect();
    EmpiricalLaw::new(samples)
}

/// `m!! = (m−1)(m−3)⋯`, stopping at the last positive factor.
fn double_factorial(m: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut f = m.saturating_sub(1);
    while f >= 1 {
        acc *= f;
        f = f.saturating_sub(2);
        if f == 0 {
            break;
        }
    }
    acc
}

/// `∫_{S^{N−1}} x₁^p`: `(N−1)!!·p!!/(N+p−1)!!` for even `p`, 0 for odd `p`.
pub fn hyperspherical_moment(n: u64, p: u64) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("hyperspherical moments need N ≥ 2, got {n}")));
    }
    if p % 2 == 1 {
        return Ok(BigRational::from_integer(0.into()));
    }
    Ok(BigRational::new(double_factorial(n - 1) * double_factorial(p), double_factorial(n + p - 1)))
}
