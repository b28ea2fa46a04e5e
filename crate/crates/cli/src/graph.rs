use advlin_core::graphs::{
    component_count, laplacian, laplacian_int, loop_count, loop_measure, spanning_tree_count, Graph,
};
use advlin_core::matcore::json::exact_to_value;
use advlin_core::spectra::eigvalsh;
use clap::Subcommand;
use serde_json::{json, Value};

use crate::io::{complex, num, read_input, usage, CliResult, Output};

#[derive(Debug, Subcommand)]
pub enum GraphCmd {
    /// Number of spanning trees (Kirchhoff).
    Trees { input: String },
    /// Laplacian matrix D − A.
    Laplacian { input: String },
    /// Number of length-k loops based at a vertex, and the loop measure.
    Loops {
        input: String,
        /// Base vertex (1-based).
        #[arg(long)]
        base: usize,
        #[arg(long)]
        k: u32,
    },
    /// Adjacency and Laplacian spectra, connected components.
    Spectrum { input: String },
}

fn load(input: &str) -> CliResult<Graph> {
    Ok(Graph::from_json(&read_input(input)?)?)
}

fn values(v: &[f64]) -> Value {
    Value::Array(v.iter().map(|&x| num(x)).collect())
}

pub fn run(cmd: &GraphCmd) -> CliResult<Output> {
    Ok(Output::Json(match cmd {
        GraphCmd::Trees { input } => {
            json!({ "spanning_trees": spanning_tree_count(&load(input)?).to_string(), "exact": true })
        }
        GraphCmd::Laplacian { input } => exact_to_value(&laplacian_int(&load(input)?)),
        GraphCmd::Loops { input, base, k } => {
            let g = load(input)?;
            let b = base.checked_sub(1).ok_or_else(|| usage("--base is 1-based"))?;
            let law = loop_measure(&g, b)?;
            let atoms: Vec<Value> = law.atoms.iter().map(|&(z, w)| json!({ "at": complex(z), "mass": num(w) })).collect();
            json!({ "base": base, "k": k, "loops": loop_count(&g, b, *k)?.to_string(), "loop_measure": atoms })
        }
        GraphCmd::Spectrum { input } => {
            let g = load(input)?;
            json!({
                "adjacency": values(&eigvalsh(&g.adjacency())?),
                "laplacian": values(&eigvalsh(&laplacian(&g))?),
                "components": component_count(&g),
            })
        }
    }))
}
