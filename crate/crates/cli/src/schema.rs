//! Canonical JSON codecs shared by every subcommand.
//!
//! Conventions: rationals are `"p/q"` strings (`"p"` when q = 1);
//! Gaussian rationals are strings `"a"`, `"bi"`, `"a+bi"`, `"a-bi"`
//! with rational a, b; points of ℙ¹ add the string `"inf"`; floating
//! complex numbers are objects `{"re": x, "im": y}`; matrices are
//! row-major arrays. Every document carries `"schema_version"`.

use std::collections::BTreeMap;
use std::str::FromStr;

use cechml_core::linalg::Matrix;
use cechml_core::p1::DivisorP1;
use cechml_core::plane::{Complex64, DomainSpec, FloatPrincipalPart};
use cechml_core::{GaussianRational, Point, PrincipalPart, Rat};
use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::error::CliError;

pub const SCHEMA_VERSION: u64 = 1;

/// Reject documents stamped with a version this binary does not speak;
/// an absent stamp is read as the current version.
pub fn check_schema_version(v: &Value) -> Result<(), CliError> {
    match v.get("schema_version") {
        None => Ok(()),
        Some(Value::Number(n)) if n.as_u64() == Some(SCHEMA_VERSION) => Ok(()),
        Some(other) => Err(CliError::schema(format!(
            "unsupported schema_version {other}; this binary speaks {SCHEMA_VERSION}"
        ))),
    }
}

pub fn parse_json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::schema(format!("malformed JSON: {e}")))
}

pub fn parse_rat(s: &str) -> Result<Rat, CliError> {
    let bad = || CliError::schema(format!("invalid rational {s:?}; expected \"p\" or \"p/q\""));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
    let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(CliError::schema(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(p, q))
}

/// Parse `"a"`, `"bi"`, `"a+bi"`, `"a-bi"` with rational a, b.
pub fn parse_gaussian(s: &str) -> Result<GaussianRational, CliError> {
    let s = s.trim();
    let Some(body) = s.strip_suffix('i') else {
        return Ok(GaussianRational::from_rat(parse_rat(s)?));
    };
    // split the imaginary tail at the last sign that follows a digit
    let split = body
        .char_indices()
        .rev()
        .find(|&(i, c)| {
            (c == '+' || c == '-')
                && i > 0
                && body[..i].chars().next_back().is_some_and(|p| p.is_ascii_digit())
        })
        .map(|(i, _)| i);
    let (re, im) = match split {
        Some(i) => (body[..i].to_string(), body[i..].to_string()),
        None => (String::from("0"), body.to_string()),
    };
    let im = match im.as_str() {
        "" | "+" => Rat::from_integer(BigInt::from(1)),
        "-" => Rat::from_integer(BigInt::from(-1)),
        other => parse_rat(other)?,
    };
    Ok(GaussianRational::new(parse_rat(&re)?, im))
}

pub fn parse_point(s: &str) -> Result<Point, CliError> {
    if s.trim() == "inf" {
        Ok(Point::Infinity)
    } else {
        Ok(Point::Finite(parse_gaussian(s)?))
    }
}

pub fn gaussian_str(g: &GaussianRational) -> String {
    g.to_string()
}

pub fn point_str(p: &Point) -> String {
    p.to_string()
}

fn as_str<'v>(v: &'v Value, what: &str) -> Result<&'v str, CliError> {
    v.as_str()
        .ok_or_else(|| CliError::schema(format!("{what} must be a string, got {v}")))
}

fn as_i64(v: &Value, what: &str) -> Result<i64, CliError> {
    v.as_i64()
        .ok_or_else(|| CliError::schema(format!("{what} must be an integer, got {v}")))
}

fn as_f64(v: &Value, what: &str) -> Result<f64, CliError> {
    v.as_f64()
        .ok_or_else(|| CliError::schema(format!("{what} must be a number, got {v}")))
}

fn as_array<'v>(v: &'v Value, what: &str) -> Result<&'v Vec<Value>, CliError> {
    v.as_array()
        .ok_or_else(|| CliError::schema(format!("{what} must be an array, got {v}")))
}

fn as_object<'v>(v: &'v Value, what: &str) -> Result<&'v Map<String, Value>, CliError> {
    v.as_object()
        .ok_or_else(|| CliError::schema(format!("{what} must be an object, got {v}")))
}

/// Divisor document: `{"<point>": order, ...}`, e.g. `{"inf": 3, "0": -1}`.
pub fn parse_divisor(v: &Value) -> Result<DivisorP1, CliError> {
    let obj = as_object(v, "divisor")?;
    let mut entries = Vec::new();
    for (key, val) in obj {
        if key == "schema_version" {
            continue;
        }
        let n = as_i64(val, &format!("order at {key:?}"))?;
        entries.push((parse_point(key)?, n));
    }
    Ok(DivisorP1::from_entries(entries))
}

/// Exact ML parts: `[{"pole": "<point>", "coeffs": {"j": "<gaussian>"}}]`;
/// `"coeffs"` maps pole order j ≥ 1 to the Laurent coefficient A_j.
pub fn parse_exact_parts(v: &Value) -> Result<Vec<PrincipalPart>, CliError> {
    let arr = as_array(v, "parts")?;
    let mut parts = Vec::new();
    for (k, item) in arr.iter().enumerate() {
        let obj = as_object(item, &format!("part {k}"))?;
        let pole = parse_point(as_str(
            obj.get("pole")
                .ok_or_else(|| CliError::schema(format!("part {k} missing \"pole\"")))?,
            "pole",
        )?)?;
        let coeffs_obj = as_object(
            obj.get("coeffs")
                .ok_or_else(|| CliError::schema(format!("part {k} missing \"coeffs\"")))?,
            "coeffs",
        )?;
        let mut coeffs = BTreeMap::new();
        for (j, c) in coeffs_obj {
            let j: u32 = j
                .parse()
                .map_err(|_| CliError::schema(format!("pole order {j:?} is not a positive integer")))?;
            coeffs.insert(j, parse_gaussian(as_str(c, "coefficient")?)?);
        }
        parts.push(PrincipalPart::new(pole, coeffs).map_err(CliError::math)?);
    }
    Ok(parts)
}

/// Floating complex number `{"re": x, "im": y}` (or a bare number).
pub fn parse_complex(v: &Value) -> Result<Complex64, CliError> {
    if let Some(x) = v.as_f64() {
        return Ok(Complex64::new(x, 0.0));
    }
    let obj = as_object(v, "complex number")?;
    let re = as_f64(obj.get("re").unwrap_or(&Value::from(0.0)), "re")?;
    let im = as_f64(obj.get("im").unwrap_or(&Value::from(0.0)), "im")?;
    Ok(Complex64::new(re, im))
}

pub fn complex_value(z: Complex64) -> Value {
    let mut m = Map::new();
    m.insert(String::from("im"), Value::from(z.im));
    m.insert(String::from("re"), Value::from(z.re));
    Value::Object(m)
}

/// Parse `"a"`, `"bi"`, `"a+bi"` with decimal floating parts, used for
/// lattice generators given on the command line.
pub fn parse_complex_str(s: &str) -> Result<Complex64, CliError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::schema(format!("invalid complex number {s:?}"));
    let Some(body) = s.strip_suffix('i') else {
        return s.parse().map(|x| Complex64::new(x, 0.0)).map_err(|_| bad());
    };
    let split = body
        .char_indices()
        .rev()
        .find(|&(i, c)| {
            (c == '+' || c == '-') && i > 0 && !matches!(&body[i - 1..i], "e" | "E")
        })
        .map(|(i, _)| i);
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse().map_err(|_| bad())?,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

/// Floating ML parts: `[{"a": <complex>, "coeffs": {"j": <complex>}}]`
/// with the coefficient of (z − a)^(−j) under key `"j"`.
pub fn parse_float_parts(v: &Value) -> Result<Vec<FloatPrincipalPart>, CliError> {
    let arr = as_array(v, "poles")?;
    let mut parts = Vec::new();
    for (k, item) in arr.iter().enumerate() {
        let obj = as_object(item, &format!("pole {k}"))?;
        let pole = parse_complex(
            obj.get("a")
                .ok_or_else(|| CliError::schema(format!("pole {k} missing \"a\"")))?,
        )?;
        let coeffs_obj = as_object(
            obj.get("coeffs")
                .ok_or_else(|| CliError::schema(format!("pole {k} missing \"coeffs\"")))?,
            "coeffs",
        )?;
        let mut by_order: BTreeMap<u32, Complex64> = BTreeMap::new();
        for (j, c) in coeffs_obj {
            let j: u32 = j
                .parse()
                .map_err(|_| CliError::schema(format!("pole order {j:?} is not a positive integer")))?;
            if j == 0 {
                return Err(CliError::schema("pole orders start at 1".to_string()));
            }
            by_order.insert(j, parse_complex(c)?);
        }
        let top = *by_order
            .keys()
            .next_back()
            .ok_or_else(|| CliError::schema(format!("pole {k} has no coefficients")))?;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); top as usize];
        for (j, c) in by_order {
            coeffs[(j - 1) as usize] = c;
        }
        parts.push(FloatPrincipalPart { pole, coeffs });
    }
    Ok(parts)
}

pub fn float_part_value(p: &FloatPrincipalPart) -> Value {
    let mut coeffs = Map::new();
    for (ji, c) in p.coeffs.iter().enumerate() {
        coeffs.insert(format!("{}", ji + 1), complex_value(*c));
    }
    let mut m = Map::new();
    m.insert(String::from("a"), complex_value(p.pole));
    m.insert(String::from("coeffs"), Value::Object(coeffs));
    Value::Object(m)
}

/// Domain document: `{"kind": "plane"}`,
/// `{"kind": "disc", "center": <complex>, "radius": r}`,
/// `{"kind": "annulus", "center": <complex>, "r_inner": r, "r_outer": R}`,
/// `{"kind": "halfplane", "normal": <complex>, "offset": d}`.
pub fn parse_domain(v: &Value) -> Result<DomainSpec, CliError> {
    let obj = as_object(v, "domain")?;
    let kind = as_str(
        obj.get("kind")
            .ok_or_else(|| CliError::schema("domain missing \"kind\""))?,
        "kind",
    )?;
    let field = |name: &str| {
        obj.get(name)
            .ok_or_else(|| CliError::schema(format!("domain {kind:?} missing {name:?}")))
    };
    match kind {
        "plane" => Ok(DomainSpec::Plane),
        "disc" => Ok(DomainSpec::Disc {
            center: parse_complex(field("center")?)?,
            radius: as_f64(field("radius")?, "radius")?,
        }),
        "annulus" => Ok(DomainSpec::Annulus {
            center: parse_complex(field("center")?)?,
            r_inner: as_f64(field("r_inner")?, "r_inner")?,
            r_outer: as_f64(field("r_outer")?, "r_outer")?,
        }),
        "halfplane" => Ok(DomainSpec::HalfPlane {
            normal: parse_complex(field("normal")?)?,
            offset: as_f64(field("offset")?, "offset")?,
        }),
        other => Err(CliError::schema(format!(
            "unknown domain kind {other:?}; expected plane, disc, annulus or halfplane"
        ))),
    }
}

fn parse_face(v: &Value) -> Result<Vec<usize>, CliError> {
    let arr = as_array(v, "face")?;
    arr.iter()
        .map(|x| {
            as_i64(x, "face index").and_then(|n| {
                usize::try_from(n).map_err(|_| CliError::schema("negative face index".to_string()))
            })
        })
        .collect()
}

/// One matrix entry: `"p/q"` (real) or `{"re": "p/q", "im": "p/q"}`.
fn parse_matrix_entry(v: &Value) -> Result<GaussianRational, CliError> {
    match v {
        Value::String(s) => parse_gaussian(s),
        Value::Object(obj) => {
            let re = match obj.get("re") {
                Some(x) => parse_rat(as_str(x, "re")?)?,
                None => Rat::from_integer(BigInt::from(0)),
            };
            let im = match obj.get("im") {
                Some(x) => parse_rat(as_str(x, "im")?)?,
                None => Rat::from_integer(BigInt::from(0)),
            };
            Ok(GaussianRational::new(re, im))
        }
        other => Err(CliError::schema(format!(
            "matrix entry must be a rational string or {{re, im}} object, got {other}"
        ))),
    }
}

pub fn parse_matrix(v: &Value, rows: usize, cols: usize) -> Result<Matrix, CliError> {
    let arr = as_array(v, "matrix")?;
    if arr.len() != rows {
        return Err(CliError::schema(format!(
            "matrix has {} rows, expected {rows}",
            arr.len()
        )));
    }
    let mut data = Vec::with_capacity(rows);
    for row in arr {
        let row = as_array(row, "matrix row")?;
        if row.len() != cols {
            return Err(CliError::schema(format!(
                "matrix row has {} entries, expected {cols}",
                row.len()
            )));
        }
        data.push(row.iter().map(parse_matrix_entry).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Matrix::from_rows(data))
}

/// Nerve + sheaf datum document:
/// `{"n_opens": N, "faces": [{"face": [..], "dim": d}],
///   "restrictions": [{"face": [..], "coface": [..], "matrix": [[..]]}]}`.
pub struct CechInput {
    pub n_opens: usize,
    pub faces: Vec<(Vec<usize>, usize)>,
    pub restrictions: Vec<(Vec<usize>, Vec<usize>, Value)>,
}

pub fn parse_cech_input(v: &Value) -> Result<CechInput, CliError> {
    check_schema_version(v)?;
    let obj = as_object(v, "cech input")?;
    let n_opens = usize::try_from(as_i64(
        obj.get("n_opens")
            .ok_or_else(|| CliError::schema("missing \"n_opens\""))?,
        "n_opens",
    )?)
    .map_err(|_| CliError::schema("n_opens must be nonnegative".to_string()))?;
    let mut faces = Vec::new();
    for item in as_array(
        obj.get("faces")
            .ok_or_else(|| CliError::schema("missing \"faces\""))?,
        "faces",
    )? {
        let fo = as_object(item, "face record")?;
        let face = parse_face(
            fo.get("face")
                .ok_or_else(|| CliError::schema("face record missing \"face\""))?,
        )?;
        let dim = usize::try_from(as_i64(
            fo.get("dim")
                .ok_or_else(|| CliError::schema("face record missing \"dim\""))?,
            "dim",
        )?)
        .map_err(|_| CliError::schema("face dim must be nonnegative".to_string()))?;
        faces.push((face, dim));
    }
    let mut restrictions = Vec::new();
    if let Some(rs) = obj.get("restrictions") {
        for item in as_array(rs, "restrictions")? {
            let ro = as_object(item, "restriction record")?;
            let face = parse_face(
                ro.get("face")
                    .ok_or_else(|| CliError::schema("restriction missing \"face\""))?,
            )?;
            let coface = parse_face(
                ro.get("coface")
                    .ok_or_else(|| CliError::schema("restriction missing \"coface\""))?,
            )?;
            let matrix = ro
                .get("matrix")
                .ok_or_else(|| CliError::schema("restriction missing \"matrix\""))?
                .clone();
            restrictions.push((face, coface, matrix));
        }
    }
    Ok(CechInput {
        n_opens,
        faces,
        restrictions,
    })
}

/// Deterministic pretty rendering with sorted keys and a trailing
/// newline; the byte-reproducibility contract of every command.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
