use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A master seed from which every sample index derives its own stream, so
/// results do not depend on how work is split across threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeedSpec {
    pub master: u64,
}

impl SeedSpec {
    pub fn new(master: u64) -> Self {
        Self { master }
    }

    pub fn derive(&self, index: u64) -> u64 {
        mix(self.master, index)
    }

    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.derive(index))
    }

    /// A second, independent family of streams (e.g. for an oracle
    /// simulation run next to the main one).
    pub fn child(&self, tag: u64) -> Self {
        Self { master: mix(self.master ^ 0xA5A5_A5A5_5A5A_5A5A, tag) }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of stream `index` under `master`.
pub fn mix(master: u64, index: u64) -> u64 {
    splitmix(splitmix(master) ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03))
}

/// Standard normal variates by the Box–Muller transform, caching the
/// second variate of each pair.
#[derive(Debug, Clone)]
pub struct Normals<R> {
    rng: R,
    spare: Option<f64>,
}

impl<R: Rng> Normals<R> {
    pub fn new(rng: R) -> Self {
        Self { rng, spare: None }
    }

    pub fn rng(&mut self) -> &mut R {
        &mut self.rng
    }

    /// One standard real normal variate.
    pub fn standard(&mut self) -> f64 {
        if let Some(x) = self.spare.take() {
            return x;
        }
        // 1 − U lies in (0, 1], keeping the logarithm finite
        let u1 = 1.0 - self.rng.random::<f64>();
        let u2 = self.rng.random::<f64>();
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (TAU * u2).sin_cos();
        self.spare = Some(r * s);
        r * c
    }
}
