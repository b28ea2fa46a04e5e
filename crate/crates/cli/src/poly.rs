use advlin_core::polyroots::{
    classify_real_roots, discriminant, discriminant_exact, poly_from_json, qpoly_from_json, resultant,
    resultant_exact, roots, roots_with_multiplicity, solve_cubic, solve_quartic,
};
use clap::Subcommand;
use serde_json::{json, Value};

use crate::io::{complex, complex_list, parse_complex, read_input, CliResult, Output};

#[derive(Debug, Subcommand)]
pub enum PolyCmd {
    /// All complex roots, optionally grouped by multiplicity.
    Roots {
        input: String,
        /// Group roots closer than this into one root with multiplicity.
        #[arg(long)]
        cluster_tol: Option<f64>,
    },
    /// Resultant of two polynomials (exact when both are rational).
    Resultant { p: String, q: String },
    /// Discriminant (exact when the polynomial is rational).
    Discriminant { input: String },
    /// Numbers of real and non-real roots of a real polynomial of degree 2–4.
    Classify { input: String },
    /// Roots of x³ + 3px + 2q by Cardano's formula.
    Solve3 {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Roots of x⁴ + 6px² + 4qx + 3r through the resolvent cubic.
    Solve4 {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
}

pub fn run(cmd: &PolyCmd, tol: f64) -> CliResult<Output> {
    Ok(Output::Json(match cmd {
        PolyCmd::Roots { input, cluster_tol } => {
            let p = poly_from_json(&read_input(input)?)?;
            match cluster_tol {
                Some(ct) => {
                    let groups: Vec<Value> = roots_with_multiplicity(&p, *ct)?
                        .into_iter()
                        .map(|(z, m)| json!({ "root": complex(z), "multiplicity": m }))
                        .collect();
                    json!({ "roots": groups })
                }
                None => json!({ "roots": complex_list(&roots(&p)?) }),
            }
        }
        PolyCmd::Resultant { p, q } => {
            let (tp, tq) = (read_input(p)?, read_input(q)?);
            match (qpoly_from_json(&tp), qpoly_from_json(&tq)) {
                (Some(a), Some(b)) => json!({ "resultant": resultant_exact(&a, &b)?.to_string(), "exact": true }),
                _ => json!({
                    "resultant": complex(resultant(&poly_from_json(&tp)?, &poly_from_json(&tq)?)?),
                    "exact": false,
                    "tol": tol,
                }),
            }
        }
        PolyCmd::Discriminant { input } => {
            let text = read_input(input)?;
            match qpoly_from_json(&text) {
                Some(p) => json!({ "discriminant": discriminant_exact(&p)?.to_string(), "exact": true }),
                None => json!({ "discriminant": complex(discriminant(&poly_from_json(&text)?)?), "exact": false }),
            }
        }
        PolyCmd::Classify { input } => {
            let p = poly_from_json(&read_input(input)?)?;
            serde_json::to_value(classify_real_roots(&p, tol)?).expect("serializable")
        }
        PolyCmd::Solve3 { p, q } => {
            json!({ "roots": complex_list(&solve_cubic(parse_complex(p)?, parse_complex(q)?)) })
        }
        PolyCmd::Solve4 { p, q, r } => json!({
            "roots": complex_list(&solve_quartic(parse_complex(p)?, parse_complex(q)?, parse_complex(r)?))
        }),
    }))
}
