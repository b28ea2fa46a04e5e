//! Spectral theory at matrix level: eigendecompositions, spectral laws,
//! functional calculus, polar/SVD, the exponential, positivity and inertia.

mod calculus;
mod eigen;
pub mod hermitian;
mod law;
mod svd;

pub use calculus::{expm, funcalc, inertia, modulus, polar, positivity_class, Inertia, PolarDecomp, Positivity};
pub use eigen::{eigen, eigenvalues, has_distinct_eigenvalues, sort_values, EigenDecomp, EigenKind};
pub use hermitian::{eigh, eigvalsh};
pub use law::{colored_trace_moment, matrix_law, AtomicLaw, MERGE_TOL};
pub use svd::{svd, SvdDecomp};
