//! Polynomial JSON interchange.
//!
//! `{"vars":["x","y"],"terms":[{"e":[2,0],"c":"1"},{"e":[0,2],"c":"1/3"}]}`
//!
//! Coefficients are strings: integers (`"7"`, `"-3"`) or fractions
//! (`"1/3"`) for the exact-rational domain, decimal/exponent forms
//! (`"1.5"`, `"2e-3"`) for float64. The domain of a parsed polynomial is
//! inferred from the coefficient spellings: any decimal form makes the
//! whole polynomial float64.

use super::{FPoly, Poly, QPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed polynomial JSON: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("bad coefficient string {0:?}")]
    BadCoefficient(String),
    #[error("exponent vector length {got} does not match {expected} variables")]
    BadExponent { expected: usize, got: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<u32>,
    pub c: String,
}

/// A polynomial in either coefficient domain, as read from or written to
/// the interchange format.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly {
    Rational(QPoly),
    Float(FPoly),
}

impl AnyPoly {
    pub fn total_degree(&self) -> u32 {
        match self {
            AnyPoly::Rational(p) => p.total_degree(),
            AnyPoly::Float(p) => p.total_degree(),
        }
    }

    pub fn vars(&self) -> &[String] {
        match self {
            AnyPoly::Rational(p) => p.vars(),
            AnyPoly::Float(p) => p.vars(),
        }
    }

    /// Lower to the float domain (identity for float polynomials).
    pub fn to_float(&self) -> FPoly {
        match self {
            AnyPoly::Rational(p) => p.to_float(),
            AnyPoly::Float(p) => p.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&QPoly> {
        match self {
            AnyPoly::Rational(p) => Some(p),
            AnyPoly::Float(_) => None,
        }
    }
}

fn rational_to_string(c: &BigRational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n = BigInt::from_str(s.trim()).ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

pub fn poly_to_json_q(p: &QPoly) -> PolyJson {
    PolyJson {
        vars: p.vars().to_vec(),
        terms: p
            .terms()
            .map(|(e, c)| TermJson {
                e: e.clone(),
                c: rational_to_string(c),
            })
            .collect(),
    }
}

pub fn poly_to_json_f(p: &FPoly) -> PolyJson {
    PolyJson {
        vars: p.vars().to_vec(),
        terms: p
            .terms()
            .map(|(e, c)| TermJson {
                e: e.clone(),
                // Debug formatting of f64 round-trips and always carries
                // '.' or 'e', distinguishing floats from integers.
                c: format!("{:?}", c),
            })
            .collect(),
    }
}

pub fn poly_to_json(p: &AnyPoly) -> PolyJson {
    match p {
        AnyPoly::Rational(p) => poly_to_json_q(p),
        AnyPoly::Float(p) => poly_to_json_f(p),
    }
}

pub fn poly_from_json(j: &PolyJson) -> Result<AnyPoly, JsonError> {
    let nvars = j.vars.len();
    let vars: Vec<&str> = j.vars.iter().map(|s| s.as_str()).collect();
    for t in &j.terms {
        if t.e.len() != nvars {
            return Err(JsonError::BadExponent {
                expected: nvars,
                got: t.e.len(),
            });
        }
    }
    let is_float = j
        .terms
        .iter()
        .any(|t| t.c.contains('.') || t.c.contains('e') || t.c.contains('E'));
    if is_float {
        let mut terms = Vec::new();
        for t in &j.terms {
            let v: f64 = t
                .c
                .trim()
                .parse()
                .map_err(|_| JsonError::BadCoefficient(t.c.clone()))?;
            terms.push((t.e.clone(), v));
        }
        Ok(AnyPoly::Float(Poly::from_terms(&vars, terms)))
    } else {
        let mut terms = Vec::new();
        for t in &j.terms {
            let v =
                parse_rational(&t.c).ok_or_else(|| JsonError::BadCoefficient(t.c.clone()))?;
            terms.push((t.e.clone(), v));
        }
        Ok(AnyPoly::Rational(Poly::from_terms(&vars, terms)))
    }
}

pub fn to_json_string(p: &AnyPoly) -> String {
    serde_json::to_string_pretty(&poly_to_json(p)).expect("serializable")
}

pub fn from_json_str(s: &str) -> Result<AnyPoly, JsonError> {
    let j: PolyJson = serde_json::from_str(s)?;
    poly_from_json(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn spec_shape_parses() {
        let s = r#"{"vars":["x","y"],"terms":[{"e":[2,0],"c":"1"},{"e":[0,2],"c":"1/3"}]}"#;
        let p = from_json_str(s).unwrap();
        let q = p.as_rational().unwrap();
        assert_eq!(q.total_degree(), 2);
        let c = q.coeff(&[0, 2]);
        assert_eq!(c.numer().to_i64().unwrap(), 1);
        assert_eq!(c.denom().to_i64().unwrap(), 3);
    }

    #[test]
    fn float_domain_inferred() {
        let s = r#"{"vars":["z"],"terms":[{"e":[1],"c":"1.5"},{"e":[0],"c":"-2e-3"}]}"#;
        match from_json_str(s).unwrap() {
            AnyPoly::Float(p) => {
                assert_eq!(p.coeff(&[1]), 1.5);
                assert_eq!(p.coeff(&[0]), -2e-3);
            }
            _ => panic!("expected float domain"),
        }
    }

    #[test]
    fn roundtrip_exact() {
        let s = r#"{"vars":["x","y"],"terms":[{"e":[2,0],"c":"-7"},{"e":[1,1],"c":"22/7"}]}"#;
        let p = from_json_str(s).unwrap();
        let s2 = to_json_string(&p);
        let p2 = from_json_str(&s2).unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn roundtrip_float_bits() {
        let vars = ["x"];
        let p = AnyPoly::Float(FPoly::from_terms(
            &vars,
            [(vec![3], 0.1 + 0.2), (vec![0], -1.0 / 3.0)],
        ));
        let p2 = from_json_str(&to_json_string(&p)).unwrap();
        assert_eq!(p, p2);
    }
}
