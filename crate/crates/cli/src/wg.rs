use advlin_core::matcore::json::exact_to_value;
use advlin_core::partitions::{
    asymptotic_moment, catalan, enumerate, eval_moment_poly, gram, mobius_matrix, truncated_char_moment, weingarten,
    weingarten_integral, Category, ColoredWord,
};
use clap::{Args, Subcommand};
use serde_json::{json, Value};

use crate::io::{num, usage, CliResult, Output};

/// The partitions of a (possibly colored) word in a category.
#[derive(Debug, Args)]
pub struct WordArgs {
    /// Category: P, P_even, P2, MatchingP2, NC, NC2, MatchingNC2, P_s(3), P_s(inf).
    #[arg(long, default_value = "P")]
    cat: String,
    /// Number of points (uncolored word).
    #[arg(long)]
    k: Option<usize>,
    /// Colored word such as "∘•∘•" (or "owow").
    #[arg(long)]
    word: Option<String>,
}

impl WordArgs {
    fn resolve(&self) -> CliResult<(ColoredWord, Category)> {
        let cat: Category = self.cat.parse()?;
        let word = match (&self.word, self.k) {
            (Some(w), _) => w.parse()?,
            (None, Some(k)) => ColoredWord::white(k),
            (None, None) => return Err(usage("give --k or --word")),
        };
        Ok((word, cat))
    }
}

#[derive(Debug, Subcommand)]
pub enum WgCmd {
    /// Partitions of the word in the category, in canonical order.
    Enumerate {
        #[command(flatten)]
        word: WordArgs,
    },
    /// Gram matrix N^{|π∨ν|}.
    Gram {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long = "N", alias = "n")]
        n: u64,
    },
    /// Weingarten matrix, the inverse of the Gram matrix.
    Weingarten {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long = "N", alias = "n")]
        n: u64,
        /// Row indices i₁…i_k (1-based, comma-separated) for an explicit integral.
        #[arg(long)]
        i: Option<String>,
        /// Column indices j₁…j_k.
        #[arg(long)]
        j: Option<String>,
    },
    /// Exact moment of the truncated character, Tr(W_{kN} G_{ks}).
    Moment {
        #[arg(long, default_value = "P")]
        cat: String,
        #[arg(long)]
        k: usize,
        #[arg(long = "N", alias = "n")]
        n: u64,
        #[arg(long)]
        trunc: u64,
    },
    /// Large-N limit Σ_π t^{|π|} of the truncated character moments.
    Asymptotic {
        #[arg(long, default_value = "P")]
        cat: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: f64,
    },
    /// Möbius matrix of the partition lattice P(k).
    Mobius { k: usize },
    /// Catalan number C_k.
    Catalan { k: u32 },
}

fn indices(s: &str, k: usize) -> CliResult<Vec<usize>> {
    let v: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().ok().and_then(|x| x.checked_sub(1)))
        .collect::<Option<_>>()
        .ok_or_else(|| usage(format!("bad 1-based index list {s:?}")))?;
    if v.len() != k {
        return Err(usage(format!("expected {k} indices, got {}", v.len())));
    }
    Ok(v)
}

pub fn run(cmd: &WgCmd) -> CliResult<Output> {
    let listing = |word: &ColoredWord, cat: Category| -> CliResult<Value> {
        Ok(Value::Array(enumerate(word, cat)?.iter().map(|p| Value::String(p.to_string())).collect()))
    };
    Ok(Output::Json(match cmd {
        WgCmd::Enumerate { word } => {
            let (w, cat) = word.resolve()?;
            let parts = listing(&w, cat)?;
            json!({ "category": cat.to_string(), "word": w.to_string(), "count": parts.as_array().map_or(0, Vec::len), "partitions": parts })
        }
        WgCmd::Gram { word, n } => {
            let (w, cat) = word.resolve()?;
            json!({ "partitions": listing(&w, cat)?, "gram": exact_to_value(&gram(&w, *n, cat)?), "exact": true })
        }
        WgCmd::Weingarten { word, n, i, j } => {
            let (w, cat) = word.resolve()?;
            let mut out = json!({
                "partitions": listing(&w, cat)?,
                "weingarten": exact_to_value(&weingarten(&w, *n, cat)?),
                "exact": true,
            });
            match (i, j) {
                (Some(i), Some(j)) => {
                    let (i, j) = (indices(i, w.len())?, indices(j, w.len())?);
                    out["integral"] = json!(weingarten_integral(&w, *n, cat, &i, &j)?.to_string());
                }
                (None, None) => {}
                _ => return Err(usage("--i and --j go together")),
            }
            out
        }
        WgCmd::Moment { cat, k, n, trunc } => {
            let cat: Category = cat.parse()?;
            json!({ "moment": truncated_char_moment(cat, *k, *n, *trunc)?.to_string(), "exact": true })
        }
        WgCmd::Asymptotic { cat, k, t } => {
            let cat: Category = cat.parse()?;
            let coeffs = asymptotic_moment(cat, *k)?;
            json!({ "coeffs": coeffs, "t": num(*t), "value": num(eval_moment_poly(&coeffs, *t)) })
        }
        WgCmd::Mobius { k } => exact_to_value(&mobius_matrix(*k)?),
        WgCmd::Catalan { k } => json!({ "k": k, "catalan": catalan(*k).to_string() }),
    }))
}
