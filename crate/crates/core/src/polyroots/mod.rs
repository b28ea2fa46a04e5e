//! Univariate polynomials: resultants, discriminants, closed-form cubic and
//! quartic solvers, real-root classification, characteristic polynomials.

mod charpoly;
mod poly;
mod resultant;
mod roots;
mod solve;

pub use charpoly::{char_poly, char_poly_exact, eval_char_poly_exact};
pub use poly::{poly_from_json, poly_to_value, qpoly_from_json, Poly, QPoly};
pub use resultant::{
    classify_real_roots, discriminant, discriminant_closed_form, discriminant_exact, resultant,
    resultant_exact, sylvester_matrix, RootClass,
};
pub use roots::{companion_roots, roots, roots_with_multiplicity, CLUSTER_TOL};
pub use solve::{quartic_resolvent_coefficients, quartic_resolvent_roots, solve_cubic, solve_quartic};
