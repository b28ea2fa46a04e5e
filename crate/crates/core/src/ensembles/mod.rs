//! Seeded Monte Carlo for random matrices and group characters, the
//! Gaussian (Wick) moment oracle, and the limiting laws they approach.

mod characters;
mod laws;
mod matrices;
mod rng;
mod stats;
mod wick;

pub use characters::{
    euler_rodrigues, hyperspherical_moment, sample_compound_poisson, sample_reflection_char, sample_rotation_char,
    truncation, uniform_s3, ReflectionGroup, RotationGroup,
};
pub use laws::{
    bessel_convolve_check, bessel_pmf, law_eval, limit_moment, poisson_convolve_check, poisson_pmf, LimitLaw,
};
pub use matrices::{
    complex_normal, empirical_colored_moments, haar_orthogonal, haar_unitary, sample_ensemble, EnsembleSpec,
};
pub use rng::{mix, Normals, SeedSpec};
pub use stats::{total_variation, EmpiricalLaw, Estimate};
pub use wick::{wick_count, wick_moment, WickLetter, WICK_LIMIT};
