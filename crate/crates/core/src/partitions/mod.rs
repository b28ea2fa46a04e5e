//! Set partitions and their categories: enumeration, the partition lattice,
//! Gram and Weingarten matrices, truncated character moments, the `T_π`
//! maps and the noncrossing fattening bijection.

mod category;
mod lattice;
mod noncrossing;
mod partition;
mod tpi;

pub use category::{all_partitions, canonical_sort, enumerate, Category, PAIRING_LIMIT, PARTITION_LIMIT};
pub use lattice::{
    asymptotic_moment, delta, eval_moment_poly, falling_factorial, gram, gram_det_formula, gram_of, lower_factor,
    mobius, mobius_matrix, order_matrix, truncated_char_moment, weingarten, weingarten_integral,
};
pub use noncrossing::{catalan, catalan_recurrence, fatten, shrink};
pub use partition::{ColoredWord, SetPartition};
pub use tpi::{tpi_map, two_row_partitions, TwoRowPartition, TPI_MAX_N, TPI_MAX_POINTS};
