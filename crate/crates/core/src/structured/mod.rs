//! Fourier and circulant matrices, real and complex Hadamard matrices,
//! circulant Hadamard searches and bistochastic tests.

mod bistochastic;
mod chc;
mod fourier;
mod hadamard;

pub use bistochastic::{bistochastic_check, k_matrix, BistochasticReport};
pub use chc::{circulant_hadamard_search, CHC_LIMIT};
pub use fourier::{circulant_diagonalize, circulant_matrix, fourier_matrix, group_fourier, CirculantDiagonalization, CirculantSymbol};
pub use hadamard::{
    dephase, f4q_family, hadamard_construct, hadamard_equivalent, is_hadamard, paley_q_matrix, HadamardKind,
    HadamardSpec, SignMatrix, EQUIVALENCE_LIMIT,
};
