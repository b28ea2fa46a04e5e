use num_complex::Complex64;
use thiserror::Error;

/// Contract violations reported by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polynomial of degree {degree} given where degree >= {required} is required")]
    DegreeTooSmall { degree: usize, required: usize },

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("degenerate discriminant |D| = {0:e}, classification withheld")]
    DegenerateDiscriminant(f64),

    #[error("matrix is defective at eigenvalue {eigenvalue}: algebraic multiplicity {algebraic}, geometric {geometric}")]
    Defective {
        eigenvalue: Complex64,
        algebraic: usize,
        geometric: usize,
    },

    #[error("matrix is not hermitian (residual {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not normal (residual {0:e})")]
    NotNormal(f64),

    #[error("matrix is not symmetric (residual {0:e})")]
    NotSymmetric(f64),

    #[error("function is undefined at eigenvalue {0}")]
    FunctionUndefined(Complex64),

    #[error("leading principal minor of order {index} vanishes")]
    VanishingMinor { index: usize },

    #[error("eigenvalue clusters separated by {gap:e}, need more than {required:e}")]
    IllSeparatedClusters { gap: f64, required: f64 },

    #[error("budget exceeded: {what} = {value} exceeds {limit}")]
    Budget {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("Gram matrix for k = {k} is not guaranteed invertible at N = {n} (need N >= k)")]
    SingularGram { k: usize, n: usize },

    #[error("parameter must have unit modulus, got |q| = {0}")]
    NotUnitModulus(f64),

    #[error("q = {q} is not an admissible prime for this construction: {reason}")]
    InvalidPaleyOrder { q: u64, reason: String },

    #[error("Williamson condition failed: {0}")]
    Williamson(String),

    #[error("partition is crossing")]
    Crossing,

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
