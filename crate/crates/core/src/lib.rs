//! Advanced linear algebra: exact and floating-point matrices, polynomial
//! root theory, spectral calculus, Jordan forms, structured matrices,
//! graph counting, partition combinatorics and random matrix ensembles.

pub mod ensembles;
pub mod error;
pub mod factor;
pub mod graphs;
pub mod jordan;
pub mod matcore;
pub mod partitions;
pub mod polyroots;
pub mod spectra;
pub mod structured;

pub use error::{Error, Result};
