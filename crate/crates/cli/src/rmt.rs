use advlin_core::ensembles::{
    empirical_colored_moments, limit_moment, sample_ensemble, sample_reflection_char, sample_rotation_char,
    total_variation, truncation, EnsembleSpec, LimitLaw, ReflectionGroup, RotationGroup, SeedSpec,
};
use advlin_core::matcore::json::mat_to_value;
use advlin_core::partitions::{enumerate, Category, ColoredWord};
use advlin_core::spectra::eigvalsh;
use clap::{Args, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::io::{moment_table, num, parse_range, usage, CliResult, MomentRow, Output};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Gaussian,
    Wigner,
    Wishart,
}

#[derive(Debug, Args)]
pub struct EnsembleArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long = "N", alias = "n")]
    n: usize,
    /// Columns of the Wishart factor Y; defaults to round(tN).
    #[arg(long = "M", alias = "m")]
    m: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    #[arg(long, default_value_t = 20)]
    count: usize,
}

impl EnsembleArgs {
    fn spec(&self) -> CliResult<EnsembleSpec> {
        Ok(match self.kind {
            Kind::Gaussian => EnsembleSpec::Gaussian { n: self.n, t: self.t },
            Kind::Wigner => EnsembleSpec::Wigner { n: self.n, t: self.t },
            Kind::Wishart => {
                let m = self.m.unwrap_or_else(|| (self.t * self.n as f64).round() as usize);
                if m == 0 {
                    return Err(usage("Wishart needs M ≥ 1"));
                }
                EnsembleSpec::Wishart { n: self.n, m }
            }
        })
    }
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    #[command(flatten)]
    ensemble: EnsembleArgs,
    /// Word lengths, e.g. "1..6".
    #[arg(long, default_value = "1..4")]
    k: String,
    /// Colored words such as "∘•∘•"; replaces --k when given.
    #[arg(long)]
    word: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum RmtCmd {
    /// Draw matrices (or their spectra) from an ensemble.
    Sample {
        #[command(flatten)]
        ensemble: EnsembleArgs,
        /// Emit eigenvalues of the normalized matrices instead of matrices.
        #[arg(long)]
        eigenvalues: bool,
    },
    /// Empirical colored moments against the ensemble's limit.
    Moments {
        #[command(flatten)]
        args: MomentArgs,
    },
    /// Empirical moments against a chosen limit law.
    Compare {
        #[command(flatten)]
        args: MomentArgs,
        /// gauss, complex_gauss, poisson, bessel, bessel_s, semicircle, mp
        #[arg(long)]
        law: String,
        #[arg(long)]
        law_t: Option<f64>,
    },
    /// Truncated characters of S_N, H_N, H_N^s or K_N.
    Chars {
        #[arg(long)]
        group: String,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long = "N", alias = "n")]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
    /// Main characters of SU₂ and SO₃.
    Rotations {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 100_000)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
}

fn words(args: &MomentArgs) -> CliResult<Vec<ColoredWord>> {
    if args.word.is_empty() {
        Ok(parse_range(&args.k)?.into_iter().map(ColoredWord::white).collect())
    } else {
        args.word.iter().map(|w| Ok(w.parse()?)).collect()
    }
}

fn natural_limit(spec: &EnsembleSpec, word: &ColoredWord) -> CliResult<f64> {
    Ok(match *spec {
        EnsembleSpec::Gaussian { t, .. } => {
            let pairings = enumerate(word, Category::MatchingNC2)?.len();
            pairings as f64 * t.powi(word.len() as i32 / 2)
        }
        EnsembleSpec::Wigner { t, .. } => limit_moment(&LimitLaw::Semicircle { t }, word)?,
        EnsembleSpec::Wishart { n, m } => limit_moment(&LimitLaw::MarchenkoPastur { t: m as f64 / n as f64 }, word)?,
    })
}

fn moments(args: &MomentArgs, law: Option<LimitLaw>, seed: SeedSpec, csv: bool) -> CliResult<Output> {
    let spec = args.ensemble.spec()?;
    let words = words(args)?;
    let samples = sample_ensemble(&spec, seed, args.ensemble.count)?;
    let est = empirical_colored_moments(&samples, &words, spec.normalization())?;
    let rows = words
        .iter()
        .zip(&est)
        .map(|(w, e)| {
            let limit = match &law {
                Some(l) => limit_moment(l, w)?,
                None => natural_limit(&spec, w)?,
            };
            let k = if w.letters().iter().all(|&c| c) { w.len().to_string() } else { w.to_string() };
            Ok(MomentRow { k, empirical: e.mean.re, limit, stderr: e.stderr })
        })
        .collect::<CliResult<Vec<_>>>()?;
    if csv {
        eprintln!("seed: {}", seed.master);
    }
    let meta = json!({
        "seed": seed.master,
        "ensemble": serde_json::to_value(spec).expect("serializable"),
        "count": args.ensemble.count,
        "law": law.map(|l| l.to_string()),
    });
    Ok(moment_table(&rows, csv, meta))
}

pub fn run(cmd: &RmtCmd, seed: SeedSpec, csv: bool) -> CliResult<Output> {
    match cmd {
        RmtCmd::Sample { ensemble, eigenvalues } => {
            let spec = ensemble.spec()?;
            let samples = sample_ensemble(&spec, seed, ensemble.count)?;
            let items: Vec<Value> = if *eigenvalues {
                if matches!(spec, EnsembleSpec::Gaussian { .. }) {
                    return Err(usage("--eigenvalues needs a Hermitian ensemble (wigner or wishart)"));
                }
                samples
                    .iter()
                    .map(|m| {
                        let vals = eigvalsh(&m.scale_real(spec.normalization()))?;
                        Ok(Value::Array(vals.into_iter().map(num).collect()))
                    })
                    .collect::<CliResult<_>>()?
            } else {
                samples.iter().map(mat_to_value).collect()
            };
            Ok(Output::Json(json!({
                "seed": seed.master,
                "ensemble": serde_json::to_value(spec).expect("serializable"),
                "samples": items,
            })))
        }
        RmtCmd::Moments { args } => moments(args, None, seed, csv),
        RmtCmd::Compare { args, law, law_t } => {
            let law = LimitLaw::from_name(law, law_t.unwrap_or(args.ensemble.t), None)?;
            moments(args, Some(law), seed, csv)
        }
        RmtCmd::Chars { group, s, n, t, count, kmax } => {
            let group = ReflectionGroup::parse(group, *s)?;
            let level = match group {
                ReflectionGroup::S => 1,
                ReflectionGroup::H => 2,
                ReflectionGroup::Hs(s) => s,
                ReflectionGroup::K => 0,
            };
            let cut = truncation(*n, *t);
            let t_eff = cut as f64 / *n as f64;
            let law = LimitLaw::BesselS { s: level, t: t_eff };
            let sample = sample_reflection_char(group, *n, *t, seed, *count)?;
            let mut rows = Vec::new();
            for a in 0..=*kmax {
                for b in 0..=*kmax - a {
                    if a + b == 0 || (level <= 2 && b > 0) {
                        continue;
                    }
                    let word: ColoredWord = std::iter::repeat_n('∘', a as usize)
                        .chain(std::iter::repeat_n('•', b as usize))
                        .collect::<String>()
                        .parse()?;
                    let e = sample.moment(a, b);
                    let k = if b == 0 { a.to_string() } else { word.to_string() };
                    rows.push(MomentRow { k, empirical: e.mean.re, limit: limit_moment(&law, &word)?, stderr: e.stderr });
                }
            }
            if csv {
                eprintln!("seed: {}", seed.master);
                return Ok(moment_table(&rows, true, Value::Null));
            }
            let mut meta = json!({
                "seed": seed.master,
                "group": format!("{group:?}"),
                "N": n,
                "truncation": cut,
                "count": count,
                "law": law.to_string(),
            });
            if level == 1 || level == 2 {
                let lo = if level == 1 { 0 } else { -6 };
                let emp = sample.integer_pmf(lo, 6);
                let lim: Vec<f64> = (lo..=6)
                    .map(|k| advlin_core::ensembles::law_eval(&law, k as f64))
                    .collect::<Result<_, _>>()?;
                meta["pmf"] = Value::Array(
                    (lo..=6)
                        .zip(emp.iter().zip(&lim))
                        .map(|(k, (e, l))| json!({ "k": k, "empirical": num(*e), "limit": num(*l) }))
                        .collect(),
                );
                meta["tv"] = num(total_variation(&emp, &lim));
            }
            Ok(moment_table(&rows, false, meta))
        }
        RmtCmd::Rotations { group, count, kmax } => {
            let group = RotationGroup::parse(group)?;
            let law = match group {
                RotationGroup::SU2 => LimitLaw::Semicircle { t: 1.0 },
                RotationGroup::SO3 => LimitLaw::MarchenkoPastur { t: 1.0 },
            };
            let sample = sample_rotation_char(group, seed, *count);
            let rows = (1..=*kmax)
                .map(|k| {
                    let e = sample.moment(k, 0);
                    Ok(MomentRow {
                        k: k.to_string(),
                        empirical: e.mean.re,
                        limit: limit_moment(&law, &ColoredWord::white(k as usize))?,
                        stderr: e.stderr,
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            if csv {
                eprintln!("seed: {}", seed.master);
            }
            let meta = json!({ "seed": seed.master, "group": format!("{group:?}"), "count": count, "law": law.to_string() });
            Ok(moment_table(&rows, csv, meta))
        }
    }
}
