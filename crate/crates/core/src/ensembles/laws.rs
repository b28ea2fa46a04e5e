use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{asymptotic_moment, enumerate, eval_moment_poly, Category, ColoredWord};
use LimitLaw as Law;

/// The limiting laws that appear for Gaussian matrices and for characters
/// of easy groups.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "law", rename_all = "snake_case")]
pub enum LimitLaw {
    Gauss { t: f64 },
    ComplexGauss { t: f64 },
    Poisson { t: f64 },
    Bessel { t: f64 },
    /// Compound Poisson law with uniform `s`-th roots of unity as jumps;
    /// `s = 0` stands for the uniform law on the circle.
    BesselS { s: u32, t: f64 },
    Semicircle { t: f64 },
    MarchenkoPastur { t: f64 },
}

impl LimitLaw {
    /// Builds a law from a short name (`gauss`, `complex_gauss`, `poisson`,
    /// `bessel`, `bessel_s`, `semicircle`, `mp`).
    pub fn from_name(name: &str, t: f64, s: Option<u32>) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidInput(format!("law parameter must be positive, got {t}")));
        }
        Ok(match name.to_ascii_lowercase().as_str() {
            "gauss" | "normal" => Self::Gauss { t },
            "complex_gauss" | "complex-gauss" => Self::ComplexGauss { t },
            "poisson" => Self::Poisson { t },
            "bessel" => Self::Bessel { t },
            "bessel_s" | "bessel-s" => Self::BesselS {
                s: s.ok_or_else(|| Error::InvalidInput("bessel_s needs a level s".into()))?,
                t,
            },
            "semicircle" | "wigner" => Self::Semicircle { t },
            "mp" | "marchenko_pastur" | "marchenko-pastur" => Self::MarchenkoPastur { t },
            other => return Err(Error::InvalidInput(format!("unknown law {other:?}"))),
        })
    }

    pub fn t(&self) -> f64 {
        match *self {
            Self::Gauss { t }
            | Self::ComplexGauss { t }
            | Self::Poisson { t }
            | Self::Bessel { t }
            | Self::BesselS { t, .. }
            | Self::Semicircle { t }
            | Self::MarchenkoPastur { t } => t,
        }
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self, Self::Poisson { .. } | Self::Bessel { .. } | Self::BesselS { .. })
    }

    /// Mass of the atom at 0 of a continuous law (only Marchenko–Pastur
    /// with `t < 1` has one).
    pub fn atom_at_zero(&self) -> f64 {
        match *self {
            Self::MarchenkoPastur { t } => (1.0 - t).max(0.0),
            _ => 0.0,
        }
    }

    /// Closed interval carrying the law, for continuous laws with compact
    /// support.
    pub fn support(&self) -> Option<(f64, f64)> {
        match *self {
            Self::Semicircle { t } => Some((-2.0 * t.sqrt(), 2.0 * t.sqrt())),
            Self::MarchenkoPastur { t } => Some(((1.0 - t.sqrt()).powi(2), (1.0 + t.sqrt()).powi(2))),
            _ => None,
        }
    }
}

impl fmt::Display for LimitLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Gauss { t } => write!(f, "gauss({t})"),
            Self::ComplexGauss { t } => write!(f, "complex_gauss({t})"),
            Self::Poisson { t } => write!(f, "poisson({t})"),
            Self::Bessel { t } => write!(f, "bessel({t})"),
            Self::BesselS { s, t } => write!(f, "bessel_s({s},{t})"),
            Self::Semicircle { t } => write!(f, "semicircle({t})"),
            Self::MarchenkoPastur { t } => write!(f, "marchenko_pastur({t})"),
        }
    }
}

/// Moment of the law along a colored word (`∘` for `z`, `•` for `z̄`); for
/// real laws only the length matters.
pub fn limit_moment(law: &LimitLaw, word: &ColoredWord) -> Result<f64> {
    let k = word.len();
    let t = law.t();
    let by_category = |cat: Category| -> Result<f64> { Ok(eval_moment_poly(&asymptotic_moment(cat, k)?, t)) };
    match *law {
        Law::Gauss { .. } => by_category(Category::P2),
        Law::Poisson { .. } => by_category(Category::P),
        Law::Bessel { .. } => by_category(Category::PEven),
        Law::MarchenkoPastur { .. } => by_category(Category::NC),
        Law::Semicircle { .. } => {
            let pairings = enumerate(&ColoredWord::white(k), Category::NC2)?.len();
            Ok(pairings as f64 * t.powi(k as i32 / 2))
        }
        Law::ComplexGauss { .. } => {
            let pairings = enumerate(word, Category::MatchingP2)?.len();
            Ok(pairings as f64 * t.powi(k as i32 / 2))
        }
        Law::BesselS { s, .. } => {
            let parts = enumerate(word, Category::Ps(s))?;
            Ok(parts.iter().map(|p| t.powi(p.block_count() as i32)).sum())
        }
    }
}

/// `e^{−t} t^k / k!`.
pub fn poisson_pmf(t: f64, k: i64) -> f64 {
    if k < 0 {
        return 0.0;
    }
    let log = -t + k as f64 * t.ln() - ln_factorial(k as u64);
    if t == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    log.exp()
}

fn ln_factorial(k: u64) -> f64 {
    (1..=k).map(|i| (i as f64).ln()).sum()
}

/// `b_t(k) = e^{−t} Σ_p (t/2)^{|k|+2p} / ((|k|+p)! p!)`, summed until the
/// terms drop below `1e−16`.
pub fn bessel_pmf(t: f64, k: i64) -> f64 {
    let a = k.unsigned_abs();
    let h = t / 2.0;
    let mut term = (a as f64 * h.ln() - ln_factorial(a)).exp();
    if h == 0.0 {
        term = if a == 0 { 1.0 } else { 0.0 };
    }
    let mut sum = 0.0;
    let mut p = 0u64;
    while term >= 1e-16 || p == 0 {
        sum += term;
        term *= h * h / (((a + p + 1) * (p + 1)) as f64);
        p += 1;
        if term == 0.0 {
            break;
        }
    }
    (-t).exp() * sum
}

/// Density (continuous laws, with any atom excluded) or probability mass
/// (discrete laws) at `x`. Zero outside the support.
pub fn law_eval(law: &LimitLaw, x: f64) -> Result<f64> {
    let integer = || (x.fract() == 0.0).then_some(x as i64);
    Ok(match *law {
        Law::Gauss { t } => (-x * x / (2.0 * t)).exp() / (2.0 * PI * t).sqrt(),
        // density of the real part of a complex Gaussian with E|z|² = t
        Law::ComplexGauss { t } => (-x * x / t).exp() / (PI * t).sqrt(),
        Law::Semicircle { t } => {
            let r = 4.0 * t - x * x;
            if r > 0.0 {
                r.sqrt() / (2.0 * PI * t)
            } else {
                0.0
            }
        }
        Law::MarchenkoPastur { t } => {
            let r = 4.0 * t - (x - 1.0 - t).powi(2);
            if r > 0.0 && x > 0.0 {
                r.sqrt() / (2.0 * PI * x)
            } else {
                0.0
            }
        }
        Law::Poisson { t } | Law::BesselS { s: 1, t } => integer().map_or(0.0, |k| poisson_pmf(t, k)),
        Law::Bessel { t } | Law::BesselS { s: 2, t } => integer().map_or(0.0, |k| bessel_pmf(t, k)),
        Law::BesselS { s, .. } => {
            return Err(Error::InvalidInput(format!(
                "bessel_s with s = {s} lives on the complex plane; compare moments instead"
            )))
        }
    })
}

/// `sup_{|k| ≤ K} |(b_s * b_t)(k) − b_{s+t}(k)|`, the convolution being
/// summed far enough out that the tails are negligible.
pub fn bessel_convolve_check(s: f64, t: f64, support: i64) -> f64 {
    convolve_check(bessel_pmf, s, t, support)
}

/// The same harness for Poisson laws.
pub fn poisson_convolve_check(s: f64, t: f64, support: i64) -> f64 {
    convolve_check(poisson_pmf, s, t, support)
}

fn convolve_check(pmf: impl Fn(f64, i64) -> f64, s: f64, t: f64, support: i64) -> f64 {
    let reach = support + 60 + (4.0 * (s + t)) as i64;
    let a: Vec<f64> = (-reach..=reach).map(|j| pmf(s, j)).collect();
    let b: Vec<f64> = (-2 * reach..=2 * reach).map(|j| pmf(t, j)).collect();
    (-support..=support)
        .map(|k| {
            let conv: f64 = (-reach..=reach)
                .map(|j| a[(j + reach) as usize] * b[(k - j + 2 * reach) as usize])
                .sum();
            (conv - pmf(s + t, k)).abs()
        })
        .fold(0.0, f64::max)
}
