//! Input parsing and output rendering shared by all subcommands.

use std::fs;
use std::io::Read;

use num_complex::Complex64;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] advlin_core::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Core(_) => "contract_violation",
            Self::Io { .. } => "io",
            Self::Usage(_) => "malformed_input",
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Reads an input argument: `-` is stdin, text starting with `{`, `[` or a
/// sign-matrix character is taken literally, anything else is a file path.
pub fn read_input(arg: &str) -> CliResult<String> {
    let trimmed = arg.trim_start();
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        return Ok(s);
    }
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|source| CliError::Io { path: arg.into(), source })
}

/// JSON number with `-0.0` folded into `0.0`, so reruns print identical bytes.
pub fn num(x: f64) -> Value {
    let x = if x == 0.0 { 0.0 } else { x };
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn complex(z: Complex64) -> Value {
    json!([num(z.re), num(z.im)])
}

pub fn complex_list(zs: &[Complex64]) -> Value {
    Value::Array(zs.iter().copied().map(complex).collect())
}

/// `"re"` or `"re,im"`.
pub fn parse_complex(s: &str) -> CliResult<Complex64> {
    let bad = || usage(format!("expected a number or \"re,im\", got {s:?}"));
    let part = |t: &str| t.trim().parse::<f64>().map_err(|_| bad());
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(part(re)?, part(im)?)),
        None => Ok(Complex64::new(part(s)?, 0.0)),
    }
}

/// A JSON list of complex values, each a number or a `[re, im]` pair.
pub fn parse_complex_list(text: &str) -> CliResult<Vec<Complex64>> {
    let v: Value = serde_json::from_str(text).map_err(|e| usage(format!("JSON: {e}")))?;
    let items = match &v {
        Value::Array(items) => items,
        Value::Object(o) => match o.get("symbol").or_else(|| o.get("values")) {
            Some(Value::Array(items)) => items,
            _ => return Err(usage("expected a list of complex values")),
        },
        _ => return Err(usage("expected a list of complex values")),
    };
    items
        .iter()
        .map(|x| match x {
            Value::Number(n) => Ok(Complex64::new(n.as_f64().unwrap_or(f64::NAN), 0.0)),
            Value::Array(p) if p.len() == 2 => match (p[0].as_f64(), p[1].as_f64()) {
                (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
                _ => Err(usage(format!("bad complex entry {x}"))),
            },
            _ => Err(usage(format!("bad complex entry {x}"))),
        })
        .collect()
}

/// `"3"`, `"1..6"` (inclusive), `"1..=6"` or `"1,2,4"`.
pub fn parse_range(s: &str) -> CliResult<Vec<usize>> {
    let bad = || usage(format!("bad range {s:?}"));
    let int = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (int(a)?, int(b)?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(int).collect()
}

/// `"a:b:n"` (n evenly spaced points) or `"x1,x2,…"`.
pub fn parse_grid(s: &str) -> CliResult<Vec<f64>> {
    let bad = || usage(format!("bad grid {s:?}"));
    let f = |t: &str| t.trim().parse::<f64>().map_err(|_| bad());
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() == 3 {
        let (a, b) = (f(parts[0])?, f(parts[1])?);
        let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
        return Ok(match n {
            0 => vec![],
            1 => vec![a],
            _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
        });
    }
    s.split(',').map(f).collect()
}

/// A rendered command result.
pub enum Output {
    Json(Value),
    Text(String),
}

/// One row of a moment comparison.
pub struct MomentRow {
    pub k: String,
    pub empirical: f64,
    pub limit: f64,
    pub stderr: f64,
}

/// Moment table as CSV (`k,empirical,limit,abs_err,stderr`) or as JSON
/// summaries, with extra metadata merged into the JSON object.
pub fn moment_table(rows: &[MomentRow], csv: bool, meta: Value) -> Output {
    if csv {
        let mut out = String::from("k,empirical,limit,abs_err,stderr\n");
        for r in rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.k,
                r.empirical,
                r.limit,
                (r.empirical - r.limit).abs(),
                r.stderr
            ));
        }
        return Output::Text(out);
    }
    let table: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "k": r.k,
                "empirical": num(r.empirical),
                "limit": num(r.limit),
                "abs_err": num((r.empirical - r.limit).abs()),
                "stderr": num(r.stderr),
            })
        })
        .collect();
    let mut obj = meta;
    obj["moments"] = Value::Array(table);
    Output::Json(obj)
}
