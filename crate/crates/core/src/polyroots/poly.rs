use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};
use serde_json::Value;

use crate::error::{Error, Result};

/// Univariate polynomial with ascending coefficients, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<T = Complex64> {
    coeffs: Vec<T>,
}

/// Exact rational polynomial.
pub type QPoly = Poly<BigRational>;

/// `k` as an element of the ring, by repeated addition.
pub(crate) fn ring_int<T: Clone + Num>(k: usize) -> T {
    (0..k).fold(T::zero(), |acc, _| acc + T::one())
}

impl<T: Clone + Num> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(T::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `x − r`.
    pub fn linear_root(r: T) -> Self {
        Self::new(vec![T::zero() - r, T::one()])
    }

    /// `∏ (x − r_i)`.
    pub fn from_roots(roots: &[T]) -> Self {
        roots.iter().fold(Self::new(vec![T::one()]), |acc, r| {
            acc.mul(&Self::linear_root(r.clone()))
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * ring_int::<T>(k))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidInput("the zero polynomial has no monic form".into()));
        }
        let lead = self.leading();
        Ok(Self::new(
            self.coeffs.iter().map(|c| c.clone() / lead.clone()).collect(),
        ))
    }

    pub fn map<U: Clone + Num>(&self, f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Complex64> {
    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        let scale = self.max_abs_coeff().max(1.0);
        self.coeffs.iter().all(|c| c.im.abs() <= tol * scale)
    }
}

impl QPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn to_complex(&self) -> Poly {
        self.map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
    }
}

impl<T: fmt::Display + Clone + Num> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{k}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

// ── JSON: {"coeffs": [[re, im], ...]} ascending ─────────────────────────

fn coeff_array(text: &str) -> Result<Vec<Value>> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("poly JSON: {e}")))?;
    match v.get("coeffs") {
        Some(Value::Array(items)) if !items.is_empty() => Ok(items.clone()),
        _ => Err(Error::InvalidInput(
            "poly JSON needs a non-empty \"coeffs\" array".into(),
        )),
    }
}

fn parse_complex(v: &Value) -> Result<Complex64> {
    let num = |x: &Value| match x {
        Value::String(s) => Ok(parse_rational(s)?.to_f64().unwrap_or(f64::NAN)),
        _ => x
            .as_f64()
            .filter(|f| f.is_finite())
            .ok_or_else(|| Error::InvalidInput(format!("bad coefficient {x}"))),
    };
    match v {
        Value::Array(p) if p.len() == 2 => Ok(Complex64::new(num(&p[0])?, num(&p[1])?)),
        Value::Number(_) | Value::String(_) => Ok(Complex64::new(num(v)?, 0.0)),
        _ => Err(Error::InvalidInput(format!("bad coefficient {v}"))),
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("bad exact coefficient {s:?}"));
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        Some((p, q)) => {
            let q = int(q)?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(int(p)?, q))
        }
        None => Ok(BigRational::from_integer(int(s)?)),
    }
}

fn parse_exact(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap().into())),
        Value::Array(p) if p.len() == 2 && p[1].as_f64() == Some(0.0) => parse_exact(&p[0]),
        Value::Number(n) => match n.as_f64() {
            Some(x) if x.fract() == 0.0 && x.abs() < 2f64.powi(53) => {
                Ok(BigRational::from_integer(BigInt::from(x as i64)))
            }
            _ => Err(Error::InvalidInput(format!("coefficient {v} is not exact"))),
        },
        _ => Err(Error::InvalidInput(format!("coefficient {v} is not exact"))),
    }
}

pub fn poly_from_json(text: &str) -> Result<Poly> {
    Ok(Poly::new(
        coeff_array(text)?
            .iter()
            .map(parse_complex)
            .collect::<Result<_>>()?,
    ))
}

/// Exact parse; `None` when some coefficient is not an exact rational.
pub fn qpoly_from_json(text: &str) -> Option<QPoly> {
    let items = coeff_array(text).ok()?;
    items
        .iter()
        .map(parse_exact)
        .collect::<Result<Vec<_>>>()
        .ok()
        .map(Poly::new)
}

pub fn poly_to_value(p: &Poly) -> Value {
    let coeffs: Vec<Value> = p
        .coeffs()
        .iter()
        .map(|c| serde_json::json!([c.re, c.im]))
        .collect();
    serde_json::json!({ "coeffs": coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn trimming_and_degree() {
        let p = QPoly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), 1);
        assert!(QPoly::from_i64(&[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let p = QPoly::from_roots(&[1, -1, 2].map(|x| BigRational::from_integer(x.into())));
        assert_eq!(p, QPoly::from_i64(&[2, -1, -2, 1]));
        assert_eq!(p.derivative(), QPoly::from_i64(&[-1, -4, 3]));
        assert!(p.eval(&BigRational::from_integer(2.into())).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let p = poly_from_json(r#"{"coeffs":[[1,0],[0,-2],[3,0]]}"#).unwrap();
        assert_eq!(p.degree(), 2);
        let back = poly_from_json(&poly_to_value(&p).to_string()).unwrap();
        assert_eq!(back, p);
        let q = qpoly_from_json(r#"{"coeffs":[[1,0],["-1/2",0],3]}"#).unwrap();
        assert_eq!(q.coeffs()[1], BigRational::new((-1).into(), 2.into()));
        assert!(qpoly_from_json(r#"{"coeffs":[[0.5,0]]}"#).is_none());
        assert!(poly_from_json(r#"{"coeffs":[]}"#).is_err());
    }
}
