use advlin_core::factor::{ldu, plu, qr, schur};
use advlin_core::jordan::{default_cluster_tol, jordan_form, jordan_form_exact};
use advlin_core::matcore::json::{exact_to_value, mat_from_json, mat_to_value, rat_from_json};
use advlin_core::matcore::{det, det_rational, perm_matrix, Mat};
use advlin_core::polyroots::{char_poly, char_poly_exact, poly_to_value};
use advlin_core::spectra::{eigen, expm, inertia, matrix_law, polar, positivity_class, svd, EigenKind, MERGE_TOL};
use clap::{Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::io::{complex, complex_list, num, read_input, CliResult, Output};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FactorKind {
    Plu,
    Ldu,
    Qr,
    Schur,
}

#[derive(Debug, Subcommand)]
pub enum MatrixCmd {
    /// Eigenvalues and eigenvectors.
    Eigen {
        input: String,
        /// general, hermitian or normal
        #[arg(long, default_value = "general")]
        kind: String,
    },
    /// Spectral law (1/N)Σδ_λ of a normal matrix.
    Law {
        input: String,
        #[arg(long, default_value_t = MERGE_TOL)]
        merge_tol: f64,
    },
    /// Matrix exponential.
    Expm { input: String },
    /// Polar decomposition A = U|A|.
    Polar { input: String },
    /// Singular value decomposition.
    Svd { input: String },
    /// Signature of a real symmetric matrix.
    Inertia { input: String },
    /// Positivity class of a matrix.
    Positivity { input: String },
    /// Jordan form: block list and passage matrix.
    Jordan {
        input: String,
        #[arg(long)]
        cluster_tol: Option<f64>,
        /// Exact rational computation (all eigenvalues must be rational).
        #[arg(long)]
        exact: bool,
    },
    /// PLU, LDU, QR or Schur factorization.
    Factor {
        input: String,
        #[arg(long, value_enum)]
        kind: FactorKind,
    },
    /// Determinant (exact for rational input).
    Det { input: String },
    /// Characteristic polynomial det(A − x), ascending coefficients.
    Charpoly { input: String },
}

fn load(input: &str) -> CliResult<Mat> {
    Ok(mat_from_json(&read_input(input)?)?)
}

pub fn run(cmd: &MatrixCmd, tol: f64) -> CliResult<Output> {
    Ok(Output::Json(match cmd {
        MatrixCmd::Eigen { input, kind } => {
            let m = load(input)?;
            let kind: EigenKind = kind.parse()?;
            let e = eigen(&m, kind, tol)?;
            json!({
                "kind": kind.to_string(),
                "values": complex_list(&e.values),
                "vectors": mat_to_value(&e.passage),
                "residual": num(e.residual(&m)),
            })
        }
        MatrixCmd::Law { input, merge_tol } => {
            let law = matrix_law(&load(input)?, tol, *merge_tol)?;
            let atoms: Vec<Value> = law.atoms.iter().map(|&(z, w)| json!({ "at": complex(z), "mass": num(w) })).collect();
            json!({ "atoms": atoms })
        }
        MatrixCmd::Expm { input } => mat_to_value(&expm(&load(input)?)?),
        MatrixCmd::Polar { input } => {
            let p = polar(&load(input)?, tol)?;
            json!({ "isometry": mat_to_value(&p.isometry), "modulus": mat_to_value(&p.modulus) })
        }
        MatrixCmd::Svd { input } => {
            let s = svd(&load(input)?)?;
            let sv: Vec<Value> = s.singulars.iter().map(|&x| num(x)).collect();
            json!({ "left": mat_to_value(&s.left), "singulars": sv, "right": mat_to_value(&s.right) })
        }
        MatrixCmd::Inertia { input } => {
            let i = inertia(&load(input)?, tol)?;
            json!({ "n_plus": i.n_plus, "n_minus": i.n_minus, "n_zero": i.n_zero, "canonical_signs": i.canonical_signs() })
        }
        MatrixCmd::Positivity { input } => json!({ "class": positivity_class(&load(input)?, tol)?.to_string() }),
        MatrixCmd::Jordan { input, cluster_tol, exact } => {
            let text = read_input(input)?;
            if *exact {
                let jf = jordan_form_exact(&rat_from_json(&text)?)?;
                let blocks: Vec<Value> =
                    jf.blocks.iter().map(|(l, s)| json!({ "eigenvalue": l.to_string(), "size": s })).collect();
                json!({ "blocks": blocks, "passage": exact_to_value(&jf.passage), "exact": true })
            } else {
                let m = mat_from_json(&text)?;
                let ct = cluster_tol.unwrap_or_else(|| default_cluster_tol(&m));
                let jf = jordan_form(&m, ct)?;
                let blocks: Vec<Value> =
                    jf.blocks.iter().map(|&(l, s)| json!({ "eigenvalue": complex(l), "size": s })).collect();
                json!({
                    "blocks": blocks,
                    "passage": mat_to_value(&jf.passage),
                    "cluster_tol": num(ct),
                    "residual": num(jf.relative_residual(&m)?),
                })
            }
        }
        MatrixCmd::Factor { input, kind } => {
            let m = load(input)?;
            match kind {
                FactorKind::Plu => {
                    let f = plu(&m)?;
                    json!({
                        "perm": mat_to_value(&perm_matrix(&f.perm).to_complex()),
                        "lower": mat_to_value(&f.lower),
                        "upper": mat_to_value(&f.upper),
                    })
                }
                FactorKind::Ldu => {
                    let f = ldu(&m)?;
                    json!({ "lower": mat_to_value(&f.lower), "diag": complex_list(&f.diag), "upper": mat_to_value(&f.upper) })
                }
                FactorKind::Qr => {
                    let f = qr(&m)?;
                    json!({ "q": mat_to_value(&f.q), "r": mat_to_value(&f.r) })
                }
                FactorKind::Schur => {
                    let f = schur(&m)?;
                    json!({ "q": mat_to_value(&f.q), "t": mat_to_value(&f.t) })
                }
            }
        }
        MatrixCmd::Det { input } => {
            let text = read_input(input)?;
            match rat_from_json(&text) {
                Ok(q) => json!({ "det": det_rational(&q)?.to_string(), "exact": true }),
                Err(_) => json!({ "det": complex(det(&mat_from_json(&text)?)?), "exact": false }),
            }
        }
        MatrixCmd::Charpoly { input } => {
            let text = read_input(input)?;
            match rat_from_json(&text) {
                Ok(q) => {
                    let p = char_poly_exact(&q)?;
                    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
                    json!({ "coeffs": coeffs, "exact": true })
                }
                Err(_) => {
                    let mut v = poly_to_value(&char_poly(&mat_from_json(&text)?)?);
                    v["exact"] = json!(false);
                    v
                }
            }
        }
    }))
}
