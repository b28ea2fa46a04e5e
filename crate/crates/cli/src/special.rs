use advlin_core::matcore::json::{exact_to_value, mat_from_json, mat_to_value};
use advlin_core::structured::{
    bistochastic_check, circulant_diagonalize, circulant_hadamard_search, circulant_matrix, fourier_matrix,
    hadamard_construct, hadamard_equivalent, is_hadamard, CirculantSymbol, HadamardKind, HadamardSpec, SignMatrix,
};
use clap::{Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::io::{complex, complex_list, num, parse_complex_list, read_input, usage, CliResult, Output};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Construction {
    Walsh,
    Paley1,
    Paley2,
    Williamson,
}

#[derive(Debug, Subcommand)]
pub enum SpecialCmd {
    /// The Fourier matrix F_N.
    Fourier { n: usize },
    /// Circulant matrix of a symbol and its Fourier diagonalization.
    Circulant {
        /// JSON list of the first-row entries.
        #[arg(long)]
        symbol: String,
    },
    /// Build a real Hadamard matrix.
    Hadamard {
        #[arg(long, value_enum)]
        kind: Construction,
        /// Walsh exponent: order 2^k.
        #[arg(long)]
        k: Option<u32>,
        /// Prime for the Paley constructions.
        #[arg(long)]
        q: Option<u64>,
        /// JSON [A, B, C, D] first rows of symmetric circulant ±1 blocks.
        #[arg(long)]
        blocks: Option<String>,
    },
    /// Check whether a matrix is Hadamard.
    IsHadamard {
        input: String,
        #[arg(long, default_value = "real")]
        kind: String,
    },
    /// Exhaustive search for circulant Hadamard matrices of order N.
    ChcSearch { n: usize },
    /// Row and column sums, bistochasticity.
    Bistochastic { input: String },
    /// Equivalence of two real Hadamard matrices under row/column
    /// permutations and sign changes.
    Equivalent { a: String, b: String },
}

fn load_signs(input: &str) -> CliResult<SignMatrix> {
    let text = read_input(input)?;
    if text.trim_start().starts_with('{') {
        Ok(SignMatrix::from_mat(&mat_from_json(&text)?)?)
    } else {
        Ok(SignMatrix::parse(&text)?)
    }
}

fn sign_rows(h: &SignMatrix) -> Value {
    Value::Array(h.to_string().lines().map(|l| Value::String(l.to_string())).collect())
}

pub fn run(cmd: &SpecialCmd, tol: f64) -> CliResult<Output> {
    Ok(Output::Json(match cmd {
        SpecialCmd::Fourier { n } => mat_to_value(&fourier_matrix(*n)?),
        SpecialCmd::Circulant { symbol } => {
            let sym = CirculantSymbol::new(parse_complex_list(&read_input(symbol)?)?)?;
            let d = circulant_diagonalize(&sym)?;
            json!({
                "matrix": mat_to_value(&circulant_matrix(&sym)),
                "eigenvalues": complex_list(&d.q),
                "residual": num(d.residual),
            })
        }
        SpecialCmd::Hadamard { kind, k, q, blocks } => {
            let need_q = || q.ok_or_else(|| usage("--q is required for Paley constructions"));
            let spec = match kind {
                Construction::Walsh => HadamardSpec::Walsh(k.ok_or_else(|| usage("--k is required for walsh"))?),
                Construction::Paley1 => HadamardSpec::Paley1(need_q()?),
                Construction::Paley2 => HadamardSpec::Paley2(need_q()?),
                Construction::Williamson => {
                    let text = read_input(blocks.as_deref().ok_or_else(|| usage("--blocks is required for williamson"))?)?;
                    let rows: Vec<Vec<i64>> =
                        serde_json::from_str(&text).map_err(|e| usage(format!("williamson blocks: {e}")))?;
                    let rows: [Vec<i64>; 4] =
                        rows.try_into().map_err(|_| usage("williamson needs exactly four rows"))?;
                    HadamardSpec::Williamson(rows)
                }
            };
            let h = hadamard_construct(&spec)?;
            json!({
                "order": h.order(),
                "rows": sign_rows(&h),
                "is_hadamard": h.is_hadamard(),
                "det": h.det().to_string(),
                "exact": true,
            })
        }
        SpecialCmd::IsHadamard { input, kind } => {
            let kind: HadamardKind = kind.parse()?;
            let m = mat_from_json(&read_input(input)?)?;
            json!({ "is_hadamard": is_hadamard(&m, kind, tol)?, "kind": format!("{kind:?}").to_lowercase() })
        }
        SpecialCmd::ChcSearch { n } => {
            let sols = circulant_hadamard_search(*n)?;
            json!({ "n": n, "count": sols.len(), "solutions": sols, "exact": true })
        }
        SpecialCmd::Bistochastic { input } => {
            let r = bistochastic_check(&mat_from_json(&read_input(input)?)?, tol)?;
            json!({
                "row_sums": complex_list(&r.row_sums),
                "col_sums": complex_list(&r.col_sums),
                "is_bistochastic": r.is_bistochastic,
                "common_sum": r.common_sum.map(complex),
                "unitary_consistent": r.unitary_consistent,
            })
        }
        SpecialCmd::Equivalent { a, b } => {
            let (a, b) = (load_signs(a)?, load_signs(b)?);
            json!({
                "equivalent": hadamard_equivalent(&a, &b)?,
                "a": exact_to_value(a.entries()),
                "b": exact_to_value(b.entries()),
            })
        }
    }))
}
