//! JSON file formats for complexes, sequences, rings and algebra elements.
//!
//! Sequence tables are objects keyed by faces rendered as sorted 1-based
//! arrays (`"[]"`, `"[1]"`, `"[1,3]"`). Integer values are emitted as JSON
//! numbers when they fit in 64 bits and as decimal strings otherwise; both
//! forms are accepted on input. Rationals travel as `"num/den"` in lowest
//! terms, plain `"n"` when integral.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::{AlgebraElement, BasisElement};
use crate::complex::{Simplex, SimplicialComplex};
use crate::sequences::{CoefficientRing, CoefficientSequence, PowerSequence};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Syntax(#[from] serde_json::Error),
}

fn bad(msg: impl Into<String>) -> JsonError {
    JsonError::Malformed(msg.into())
}

/// `"n"` when integral, `"num/den"` in lowest terms otherwise.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational, JsonError> {
    let mut parts = text.splitn(2, '/');
    let numer = parts.next().unwrap_or_default().trim();
    let numer = BigInt::from_str(numer).map_err(|_| bad(format!("bad rational {text:?}")))?;
    match parts.next() {
        None => Ok(BigRational::from_integer(numer)),
        Some(denom) => {
            let denom = BigInt::from_str(denom.trim())
                .map_err(|_| bad(format!("bad rational {text:?}")))?;
            if denom == BigInt::from(0) {
                return Err(bad(format!("zero denominator in {text:?}")));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

fn biguint_to_value(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(small) => json!(small),
        Err(_) => json!(n.to_string()),
    }
}

fn value_to_biguint(v: &Value) -> Result<BigUint, JsonError> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .map(BigUint::from)
            .ok_or_else(|| bad(format!("{n} is not a nonnegative integer"))),
        Value::String(s) => {
            BigUint::from_str(s.trim()).map_err(|_| bad(format!("{s:?} is not an integer")))
        }
        other => Err(bad(format!("expected an integer, got {other}"))),
    }
}

fn get_m(obj: &Map<String, Value>) -> Result<u32, JsonError> {
    obj.get("m")
        .and_then(Value::as_u64)
        .and_then(|m| u32::try_from(m).ok())
        .ok_or_else(|| bad("missing or invalid \"m\""))
}

fn as_object(v: &Value) -> Result<&Map<String, Value>, JsonError> {
    v.as_object().ok_or_else(|| bad("expected a JSON object"))
}

fn vertex_array(v: &Value) -> Result<Vec<u32>, JsonError> {
    let arr = v.as_array().ok_or_else(|| bad("expected a vertex array"))?;
    arr.iter()
        .map(|x| {
            x.as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| bad(format!("bad vertex {x}")))
        })
        .collect()
}

// --- simplicial complexes ---------------------------------------------------

/// `{"m": 3, "maximal_faces": [[1,2],[2,3]]}`
pub fn parse_complex(v: &Value) -> Result<SimplicialComplex, JsonError> {
    let obj = as_object(v)?;
    let m = get_m(obj)?;
    let faces = obj
        .get("maximal_faces")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"maximal_faces\""))?;
    let maximal: Vec<Vec<u32>> = faces.iter().map(vertex_array).collect::<Result<_, _>>()?;
    SimplicialComplex::from_maximal_faces(m, &maximal).map_err(|e| bad(e.to_string()))
}

pub fn complex_to_json(k: &SimplicialComplex) -> Value {
    let maximal: Vec<Value> =
        k.maximal_faces().iter().map(|f| json!(f.vertices().to_vec())).collect();
    json!({ "m": k.m(), "maximal_faces": maximal })
}

// --- sequences ----------------------------------------------------------------

fn parse_face_key(key: &str) -> Result<Simplex, JsonError> {
    Simplex::from_key_string(key).map_err(|_| bad(format!("bad face key {key:?}")))
}

/// `{"m": 3, "entries": {"[]": [1,1,1], "[1]": [2,1,1], ...}}`
///
/// Returns the raw table; validation is the caller's move.
pub fn parse_power_table(v: &Value) -> Result<(u32, BTreeMap<Simplex, Vec<BigUint>>), JsonError> {
    let obj = as_object(v)?;
    let m = get_m(obj)?;
    let entries = obj
        .get("entries")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("missing \"entries\""))?;
    let mut table = BTreeMap::new();
    for (key, value) in entries {
        let face = parse_face_key(key)?;
        let row = value
            .as_array()
            .ok_or_else(|| bad(format!("entry {key:?} must be an array")))?
            .iter()
            .map(value_to_biguint)
            .collect::<Result<Vec<_>, _>>()?;
        table.insert(face, row);
    }
    Ok((m, table))
}

pub fn power_sequence_to_json(ps: &PowerSequence) -> Value {
    let mut entries = Map::new();
    for (face, row) in ps.entries() {
        let values: Vec<Value> = row.iter().map(biguint_to_value).collect();
        entries.insert(face.key_string(), Value::Array(values));
    }
    json!({ "m": ps.m(), "entries": Value::Object(entries) })
}

/// `{"m": 3, "entries": {"[]": 1, "[1,2]": 2, ...}}`
pub fn parse_coefficient_table(
    v: &Value,
) -> Result<(u32, BTreeMap<Simplex, BigUint>), JsonError> {
    let obj = as_object(v)?;
    let m = get_m(obj)?;
    let entries = obj
        .get("entries")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("missing \"entries\""))?;
    let mut table = BTreeMap::new();
    for (key, value) in entries {
        table.insert(parse_face_key(key)?, value_to_biguint(value)?);
    }
    Ok((m, table))
}

pub fn coefficient_sequence_to_json(cs: &CoefficientSequence) -> Value {
    let mut entries = Map::new();
    for (face, value) in cs.entries() {
        entries.insert(face.key_string(), biguint_to_value(value));
    }
    json!({ "m": cs.m(), "entries": Value::Object(entries) })
}

// --- rings --------------------------------------------------------------------

/// `{"inverted_primes": [2,3]}` or `{"inverted_primes": "all"}`
pub fn parse_ring(v: &Value) -> Result<CoefficientRing, JsonError> {
    let obj = as_object(v)?;
    match obj.get("inverted_primes") {
        Some(Value::String(s)) if s == "all" => Ok(CoefficientRing::rationals()),
        Some(Value::Array(items)) => {
            let primes: Vec<u64> = items
                .iter()
                .map(|x| x.as_u64().ok_or_else(|| bad(format!("bad prime {x}"))))
                .collect::<Result<_, _>>()?;
            CoefficientRing::localized(primes).map_err(|e| bad(e.to_string()))
        }
        _ => Err(bad("missing or invalid \"inverted_primes\"")),
    }
}

pub fn ring_to_json(ring: &CoefficientRing) -> Value {
    match ring.inverted_primes() {
        None => json!({ "inverted_primes": "all" }),
        Some(primes) => json!({ "inverted_primes": primes.iter().copied().collect::<Vec<u64>>() }),
    }
}

// --- algebra elements -----------------------------------------------------------

/// `[{"face": [1,2], "index": [0,0], "coeff": "3/2"}, ...]`
pub fn element_to_json(x: &AlgebraElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(b, c)| {
            json!({
                "face": b.face().vertices().to_vec(),
                "index": b.index().to_vec(),
                "coeff": format_rational(c),
            })
        })
        .collect();
    Value::Array(terms)
}

pub fn parse_element(v: &Value) -> Result<AlgebraElement, JsonError> {
    let items = v.as_array().ok_or_else(|| bad("expected an array of terms"))?;
    let mut terms = Vec::new();
    for item in items {
        let obj = as_object(item)?;
        let face = Simplex::new(vertex_array(
            obj.get("face").ok_or_else(|| bad("term is missing \"face\""))?,
        )?)
        .map_err(|e| bad(e.to_string()))?;
        let index: Vec<usize> = obj
            .get("index")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("term is missing \"index\""))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .and_then(|n| usize::try_from(n).ok())
                    .ok_or_else(|| bad(format!("bad index {x}")))
            })
            .collect::<Result<_, _>>()?;
        if index.len() != face.len() {
            return Err(bad("index length must match face length"));
        }
        let coeff = match obj.get("coeff") {
            Some(Value::String(s)) => parse_rational(s)?,
            Some(Value::Number(n)) => {
                let as_int = n
                    .as_i64()
                    .ok_or_else(|| bad(format!("coefficient {n} is not an integer")))?;
                BigRational::from_integer(BigInt::from(as_int))
            }
            _ => return Err(bad("term is missing \"coeff\"")),
        };
        terms.push((BasisElement::new(face, index), coeff));
    }
    Ok(AlgebraElement::from_terms(terms))
}

/// Stable pretty rendering with a trailing newline.
pub fn to_pretty_string(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("serializing Value cannot fail");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_sequence_round_trip() {
        let ps =
            PowerSequence::minimal(3, &[2u32.into(), 3u32.into(), 5u32.into()]).unwrap();
        let value = power_sequence_to_json(&ps);
        let (m, table) = parse_power_table(&value).unwrap();
        let back = PowerSequence::validate(m, table).unwrap();
        assert_eq!(back, ps);
    }

    #[test]
    fn coefficient_sequence_round_trip_with_big_values() {
        let huge = BigUint::from(u64::MAX) * BigUint::from(u64::MAX);
        let mut entries = BTreeMap::new();
        for face in crate::complex::all_faces(2) {
            let v = if face.len() == 2 { huge.clone() } else { BigUint::one() };
            entries.insert(face, v);
        }
        let cs = CoefficientSequence::validate(2, entries, &CoefficientRing::integers()).unwrap();
        let value = coefficient_sequence_to_json(&cs);
        // The oversized entry must travel as a string.
        assert!(value["entries"]["[1,2]"].is_string());
        let (m, table) = parse_coefficient_table(&value).unwrap();
        let back = CoefficientSequence::validate(m, table, &CoefficientRing::integers()).unwrap();
        assert_eq!(back, cs);
    }

    #[test]
    fn ring_round_trip() {
        for ring in [
            CoefficientRing::integers(),
            CoefficientRing::rationals(),
            CoefficientRing::localized([2, 7]).unwrap(),
        ] {
            let back = parse_ring(&ring_to_json(&ring)).unwrap();
            assert_eq!(back, ring);
        }
    }

    #[test]
    fn complex_round_trip() {
        let k = SimplicialComplex::from_maximal_faces(4, &[vec![1, 2, 3], vec![3, 4]]).unwrap();
        let back = parse_complex(&complex_to_json(&k)).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn rational_formatting() {
        let q = BigRational::new(BigInt::from(6), BigInt::from(4));
        assert_eq!(format_rational(&q), "3/2");
        let n = BigRational::from_integer(BigInt::from(-7));
        assert_eq!(format_rational(&n), "-7");
        assert_eq!(parse_rational("3/2").unwrap(), q);
        assert_eq!(parse_rational("-7").unwrap(), n);
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        let v: Value = serde_json::json!({ "m": 2 });
        assert!(parse_power_table(&v).is_err());
        assert!(parse_complex(&v).is_err());
        let v: Value = serde_json::json!({ "m": 2, "entries": { "oops": [1, 1] } });
        assert!(parse_power_table(&v).is_err());
    }
}
