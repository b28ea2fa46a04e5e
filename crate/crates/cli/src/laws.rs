use advlin_core::ensembles::{
    bessel_convolve_check, hyperspherical_moment, law_eval, limit_moment, poisson_convolve_check, LimitLaw,
};
use advlin_core::partitions::ColoredWord;
use clap::{Args, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::io::{num, parse_grid, parse_range, CliResult, Output};

#[derive(Debug, Args)]
pub struct LawArgs {
    /// gauss, complex_gauss, poisson, bessel, bessel_s, semicircle, mp
    #[arg(long)]
    law: String,
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    /// Level of bessel_s (0 for the circle).
    #[arg(long)]
    s: Option<u32>,
}

impl LawArgs {
    fn law(&self) -> CliResult<LimitLaw> {
        Ok(LimitLaw::from_name(&self.law, self.t, self.s)?)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Semigroup {
    Bessel,
    Poisson,
}

#[derive(Debug, Subcommand)]
pub enum LawsCmd {
    /// Density or probability mass on a grid ("a:b:n" or "x1,x2,…").
    Eval {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
    },
    /// Exact moments.
    Moment {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long, default_value = "1..4")]
        k: String,
        /// Colored words such as "∘•∘•"; replaces --k when given.
        #[arg(long)]
        word: Vec<String>,
    },
    /// sup |p_s * p_t − p_{s+t}| on {−K, …, K}.
    Convolve {
        #[arg(long, value_enum, default_value = "bessel")]
        law: Semigroup,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        t: f64,
        #[arg(long = "K", alias = "support", default_value_t = 20)]
        support: i64,
    },
    /// Exact moment ∫_{S^{N−1}} x₁^p.
    Hypersphere {
        #[arg(long = "N", alias = "n")]
        n: u64,
        #[arg(long)]
        p: u64,
    },
}

pub fn run(cmd: &LawsCmd, csv: bool) -> CliResult<Output> {
    Ok(match cmd {
        LawsCmd::Eval { law, grid } => {
            let law = law.law()?;
            let xs = parse_grid(grid)?;
            let vals = xs.iter().map(|&x| law_eval(&law, x)).collect::<Result<Vec<_>, _>>()?;
            if csv {
                let mut out = String::from("x,value\n");
                for (x, v) in xs.iter().zip(&vals) {
                    out.push_str(&format!("{x},{v}\n"));
                }
                return Ok(Output::Text(out));
            }
            let points: Vec<Value> = xs.iter().zip(&vals).map(|(&x, &v)| json!({ "x": num(x), "value": num(v) })).collect();
            Output::Json(json!({ "law": law.to_string(), "atom_at_zero": num(law.atom_at_zero()), "points": points }))
        }
        LawsCmd::Moment { law, k, word } => {
            let law = law.law()?;
            let words: Vec<ColoredWord> = if word.is_empty() {
                parse_range(k)?.into_iter().map(ColoredWord::white).collect()
            } else {
                word.iter().map(|w| w.parse()).collect::<Result<_, _>>()?
            };
            let rows = words
                .iter()
                .map(|w| Ok(json!({ "k": w.to_string(), "moment": num(limit_moment(&law, w)?) })))
                .collect::<CliResult<Vec<_>>>()?;
            Output::Json(json!({ "law": law.to_string(), "moments": rows }))
        }
        LawsCmd::Convolve { law, s, t, support } => {
            let err = match law {
                Semigroup::Bessel => bessel_convolve_check(*s, *t, *support),
                Semigroup::Poisson => poisson_convolve_check(*s, *t, *support),
            };
            Output::Json(json!({ "law": format!("{law:?}").to_lowercase(), "s": num(*s), "t": num(*t), "K": support, "sup_error": num(err) }))
        }
        LawsCmd::Hypersphere { n, p } => {
            Output::Json(json!({ "N": n, "p": p, "moment": hyperspherical_moment(*n, *p)?.to_string(), "exact": true }))
        }
    })
}
