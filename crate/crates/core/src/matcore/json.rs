//! Matrix JSON: `{"rows":N,"cols":M,"data":[[[re,im],...],...]}`.
//!
//! Exact matrices write each entry as a decimal string (integers) or
//! `"p/q"` (rationals) in place of the `[re, im]` pair.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::matrix::{IntMat, Mat, Matrix, RatMat};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Envelope {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Value>>,
}

fn check_shape(env: &Envelope) -> Result<()> {
    if env.rows == 0 || env.cols == 0 {
        return Err(Error::InvalidInput("matrix dimensions must be positive".into()));
    }
    if env.data.len() != env.rows || env.data.iter().any(|r| r.len() != env.cols) {
        return Err(Error::InvalidInput(format!(
            "data does not match declared shape {}x{}",
            env.rows, env.cols
        )));
    }
    Ok(())
}

fn parse_scalar(v: &Value) -> Result<Complex64> {
    let num = |x: &Value| {
        x.as_f64()
            .ok_or_else(|| Error::InvalidInput(format!("expected a number, got {x}")))
    };
    let z = match v {
        Value::Array(pair) if pair.len() == 2 => Complex64::new(num(&pair[0])?, num(&pair[1])?),
        Value::Number(_) => Complex64::new(num(v)?, 0.0),
        Value::String(s) => {
            let q = parse_rational_str(s)?;
            Complex64::new(num_traits::ToPrimitive::to_f64(&q).unwrap_or(f64::NAN), 0.0)
        }
        other => {
            return Err(Error::InvalidInput(format!("bad matrix entry {other}")));
        }
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidInput("non-finite matrix entry".into()));
    }
    Ok(z)
}

fn parse_rational_str(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("bad exact entry {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn parse_exact(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational_str(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            Ok(BigRational::from_integer(n.to_string().parse().unwrap()))
        }
        Value::Array(pair) if pair.len() == 2 && pair[1].as_f64() == Some(0.0) => {
            match pair[0].as_f64() {
                Some(x) if x.fract() == 0.0 && x.abs() < 2f64.powi(53) => {
                    Ok(BigRational::from_integer(BigInt::from(x as i64)))
                }
                _ => Err(Error::InvalidInput(format!("entry {v} is not exact"))),
            }
        }
        other => Err(Error::InvalidInput(format!("entry {other} is not exact"))),
    }
}

fn envelope(text: &str) -> Result<Envelope> {
    let env: Envelope =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("matrix JSON: {e}")))?;
    check_shape(&env)?;
    Ok(env)
}

pub fn mat_from_json(text: &str) -> Result<Mat> {
    let env = envelope(text)?;
    let data = env
        .data
        .iter()
        .flatten()
        .map(parse_scalar)
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(env.rows, env.cols, data)
}

pub fn rat_from_json(text: &str) -> Result<RatMat> {
    let env = envelope(text)?;
    let data = env
        .data
        .iter()
        .flatten()
        .map(parse_exact)
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(env.rows, env.cols, data)
}

/// Integer matrix; fails if any entry is a proper fraction.
pub fn int_from_json(text: &str) -> Result<IntMat> {
    let q = rat_from_json(text)?;
    if q.data().iter().any(|x| !x.is_integer()) {
        return Err(Error::InvalidInput("matrix has non-integer entries".into()));
    }
    Ok(q.map(|x| x.to_integer()))
}

fn float_value(x: f64) -> Value {
    // -0.0 prints as 0.0 for byte-stable output
    let x = if x == 0.0 { 0.0 } else { x };
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn mat_to_value(m: &Mat) -> Value {
    let data: Vec<Vec<Value>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|z| Value::Array(vec![float_value(z.re), float_value(z.im)]))
                .collect()
        })
        .collect();
    serde_json::json!({ "rows": m.rows(), "cols": m.cols(), "data": data })
}

pub fn exact_to_value<T: ToString>(m: &Matrix<T>) -> Value {
    let data: Vec<Vec<Value>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| Value::String(x.to_string())).collect())
        .collect();
    serde_json::json!({ "rows": m.rows(), "cols": m.cols(), "data": data })
}

pub fn mat_to_json(m: &Mat) -> String {
    mat_to_value(m).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::matrix::c64;

    #[test]
    fn float_round_trip() {
        let m = Mat::from_rows(vec![
            vec![c64(1.0, -2.0), c64(0.5, 0.0)],
            vec![c64(0.0, 3.25), c64(-1.0, 1e-3)],
        ])
        .unwrap();
        let back = mat_from_json(&mat_to_json(&m)).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn exact_round_trip() {
        let m = IntMat::from_i64_rows(&[&[1, -2], &[123456789012, 0]]).unwrap();
        let text = exact_to_value(&m).to_string();
        assert!(text.contains("\"123456789012\""));
        assert_eq!(int_from_json(&text).unwrap(), m);
        // exact matrices are accepted where floats are expected
        assert_eq!(mat_from_json(&text).unwrap(), m.to_complex());
    }

    #[test]
    fn shape_errors() {
        assert!(mat_from_json(r#"{"rows":2,"cols":1,"data":[[[1,0]]]}"#).is_err());
        assert!(mat_from_json(r#"{"rows":0,"cols":0,"data":[]}"#).is_err());
        assert!(mat_from_json(r#"{"rows":1,"cols":1,"data":[[["x",0]]]}"#).is_err());
        assert!(int_from_json(r#"{"rows":1,"cols":1,"data":[["1/2"]]}"#).is_err());
    }
}
