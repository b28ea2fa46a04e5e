use num_complex::Complex64;
use serde::Serialize;

/// Sample mean together with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub mean: Complex64,
    pub stderr: f64,
}

impl Estimate {
    pub fn from_samples(xs: &[Complex64]) -> Self {
        let n = xs.len() as f64;
        let mean: Complex64 = xs.iter().sum::<Complex64>() / n;
        let var = if xs.len() > 1 {
            xs.iter().map(|x| (x - mean).norm_sqr()).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        Self { mean, stderr: (var / n).sqrt() }
    }

    pub fn from_real(xs: &[f64]) -> Self {
        let zs: Vec<Complex64> = xs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_samples(&zs)
    }

    /// Whether `target` lies within `sigmas` standard errors (plus a small
    /// absolute slack for estimators with zero variance).
    pub fn agrees_with(&self, target: f64, sigmas: f64) -> bool {
        (self.mean - target).norm() <= sigmas * self.stderr + 1e-12
    }
}

/// Empirical law of scalar samples, real or complex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmpiricalLaw {
    pub samples: Vec<Complex64>,
}

impl EmpiricalLaw {
    pub fn new(samples: Vec<Complex64>) -> Self {
        Self { samples }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// `E[χ^a χ̄^b]`.
    pub fn moment(&self, a: u32, b: u32) -> Estimate {
        let xs: Vec<Complex64> = self.samples.iter().map(|z| z.powu(a) * z.conj().powu(b)).collect();
        Estimate::from_samples(&xs)
    }

    /// Frequencies of the integers `lo..=hi` among the (rounded real parts
    /// of the) samples.
    pub fn integer_pmf(&self, lo: i64, hi: i64) -> Vec<f64> {
        let mut counts = vec![0usize; (hi - lo + 1).max(0) as usize];
        for z in &self.samples {
            let k = z.re.round() as i64;
            if (lo..=hi).contains(&k) {
                counts[(k - lo) as usize] += 1;
            }
        }
        counts.iter().map(|&c| c as f64 / self.samples.len() as f64).collect()
    }

    /// Empirical CDF at `x` of the real parts.
    pub fn cdf(&self, x: f64) -> f64 {
        self.samples.iter().filter(|z| z.re <= x).count() as f64 / self.samples.len() as f64
    }
}

/// Total-variation distance `½Σ|p_i − q_i|` between two weight vectors on
/// the same support.
pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}
