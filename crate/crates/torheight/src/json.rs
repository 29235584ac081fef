//! Serialized interchange formats: polynomials as arrays of "p/q"
//! coefficient strings (lowest degree first), field declarations as
//! `{"cyclotomic": m}` or `{"minpoly": [...]}`, matrices as string grids,
//! Borel elements as coordinate records, and heights as
//! `{"value", "abs_error", "exact_zero"}` objects with the numeric fields
//! rounded to 12 significant digits for stable diffs.

use crate::borel::BorelElement;
use crate::error::Error;
use crate::exactpoly::QPoly;
use crate::heights::HeightValue;
use crate::matgroup::MatrixK;
use crate::numfield::{parse_elem, Field, FieldElem, NumberField};
use crate::quotient::{SubtorusLattice, TorsionCoset};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Errors split the way the CLI exit codes need them: malformed input versus
/// domain violations.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    pub fn message(&self) -> String {
        match self {
            CliError::Parse(m) => format!("parse error: {}", m),
            CliError::Domain(e) => format!("domain error: {}", e),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

/// Rounds to 12 significant digits; keeps regression output byte-stable.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.11e}", x).parse().unwrap()
}

pub fn height_to_json(h: &HeightValue) -> Value {
    json!({
        "value": round_sig(h.value),
        "abs_error": round_sig(h.abs_error),
        "exact_zero": h.exact_zero,
    })
}

pub fn parse_rational(s: &str) -> CliResult<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n.trim(), d.trim()),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| parse_err(format!("bad rational {:?}", s)))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| parse_err(format!("bad rational {:?}", s)))?;
    if d.is_zero() {
        return Err(parse_err(format!("zero denominator in {:?}", s)));
    }
    Ok(BigRational::new(n, d))
}

pub fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Polynomial from a JSON array of coefficient strings, lowest degree first.
pub fn qpoly_from_json(v: &Value) -> CliResult<QPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err("polynomial must be an array of coefficient strings"))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for c in arr {
        let s = coeff_str(c)?;
        coeffs.push(parse_rational(&s)?);
    }
    Ok(QPoly::new(coeffs))
}

fn coeff_str(v: &Value) -> CliResult<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(parse_err("coefficients must be strings like \"p/q\"")),
    }
}

pub fn qpoly_to_json(f: &QPoly) -> Value {
    Value::Array(
        f.coeffs()
            .iter()
            .map(|c| Value::String(rational_to_string(c)))
            .collect(),
    )
}

/// Field declaration: `{"cyclotomic": m}` or `{"minpoly": [...]}` with an
/// optional `"monogenic"` flag (a bare array is accepted as a minpoly).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDecl {
    Cyclotomic {
        cyclotomic: u64,
    },
    MinPoly {
        minpoly: Vec<Value>,
        #[serde(default)]
        monogenic: bool,
    },
}

impl FieldDecl {
    pub fn build(&self) -> CliResult<Field> {
        match self {
            FieldDecl::Cyclotomic { cyclotomic } => {
                if *cyclotomic == 0 {
                    return Err(parse_err("cyclotomic order must be positive"));
                }
                Ok(NumberField::cyclotomic_field(*cyclotomic))
            }
            FieldDecl::MinPoly { minpoly, monogenic } => {
                let f = qpoly_from_json(&Value::Array(minpoly.clone()))?;
                Ok(NumberField::new(f, *monogenic)?)
            }
        }
    }
}

pub fn field_from_json(v: &Value) -> CliResult<Field> {
    if v.is_array() {
        let f = qpoly_from_json(v)?;
        return Ok(NumberField::new(f, false)?);
    }
    let decl: FieldDecl =
        serde_json::from_value(v.clone()).map_err(|e| parse_err(format!("bad field: {}", e)))?;
    decl.build()
}

pub fn field_to_json(field: &Field) -> Value {
    qpoly_to_json(field.defining_poly())
}

pub fn elem_from_json(field: &Field, v: &Value) -> CliResult<FieldElem> {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(parse_err("field element must be a string in the generator a")),
    };
    parse_elem(field, &s).map_err(|e| parse_err(format!("bad element {:?}: {}", s, e)))
}

/// Matrix JSON `{"field": {...}, "entries": [["1","a"],["0","1"]]}`; a bare
/// grid of entry strings is accepted, with the field supplied externally.
pub fn matrix_from_json(default_field: &Field, v: &Value) -> CliResult<MatrixK> {
    let (field, entries_val) = match v {
        Value::Object(map) => {
            let field = match map.get("field") {
                None => default_field.clone(),
                Some(fv) => field_from_json(fv)?,
            };
            let entries = map
                .get("entries")
                .ok_or_else(|| parse_err("matrix object needs an \"entries\" grid"))?;
            (field, entries)
        }
        Value::Array(_) => (default_field.clone(), v),
        _ => return Err(parse_err("matrix must be an object or a grid")),
    };
    let rows = entries_val
        .as_array()
        .ok_or_else(|| parse_err("matrix entries must be an array of rows"))?;
    let mut entries = Vec::with_capacity(rows.len());
    for row in rows {
        let cells = row
            .as_array()
            .ok_or_else(|| parse_err("matrix rows must be arrays"))?;
        let mut out = Vec::with_capacity(cells.len());
        for c in cells {
            out.push(elem_from_json(&field, c)?);
        }
        entries.push(out);
    }
    Ok(MatrixK::new(&field, entries)?)
}

pub fn matrix_to_json(m: &MatrixK) -> Value {
    json!({
        "field": field_to_json(m.field()),
        "entries": m.entries().iter().map(|row| {
            Value::Array(row.iter().map(|e| Value::String(e.to_string())).collect())
        }).collect::<Vec<_>>(),
    })
}

/// Borel element JSON:
/// `{"a": "...", "b": "...", "c": "...", "diag": ["...","...","..."]}`.
pub fn borel_from_json(default_field: &Field, v: &Value) -> CliResult<BorelElement> {
    let map = v
        .as_object()
        .ok_or_else(|| parse_err("borel element must be an object"))?;
    let field = match map.get("field") {
        None => default_field.clone(),
        Some(fv) => field_from_json(fv)?,
    };
    let get = |k: &str| -> CliResult<FieldElem> {
        match map.get(k) {
            None => Ok(FieldElem::zero(&field)),
            Some(val) => elem_from_json(&field, val),
        }
    };
    let diag = map
        .get("diag")
        .and_then(|d| d.as_array())
        .ok_or_else(|| parse_err("borel element needs \"diag\": [lambda, mu, epsilon]"))?;
    if diag.len() != 3 {
        return Err(parse_err("diag must have exactly three entries"));
    }
    let lambda = elem_from_json(&field, &diag[0])?;
    let mu = elem_from_json(&field, &diag[1])?;
    let epsilon = elem_from_json(&field, &diag[2])?;
    Ok(BorelElement::new(get("a")?, get("b")?, get("c")?, lambda, mu, epsilon)?)
}

pub fn borel_to_json(p: &BorelElement) -> Value {
    json!({
        "a": p.a.to_string(),
        "b": p.b.to_string(),
        "c": p.c.to_string(),
        "diag": [p.lambda.to_string(), p.mu.to_string(), p.epsilon.to_string()],
        "field": field_to_json(p.field()),
    })
}

/// Torsion coset JSON: `{"basis": [[..column..], ...], "translate": [...]}`
/// with integer basis columns and rational residue strings.
pub fn coset_from_json(v: &Value) -> CliResult<TorsionCoset> {
    let map = v
        .as_object()
        .ok_or_else(|| parse_err("coset must be an object"))?;
    let translate_val = map
        .get("translate")
        .and_then(|t| t.as_array())
        .ok_or_else(|| parse_err("coset needs \"translate\""))?;
    let translate: Vec<BigRational> = translate_val
        .iter()
        .map(|x| coeff_str(x).and_then(|s| parse_rational(&s)))
        .collect::<CliResult<_>>()?;
    let t = translate.len();
    let basis_cols: Vec<Vec<BigInt>> = match map.get("basis") {
        None => vec![],
        Some(b) => {
            let arr = b
                .as_array()
                .ok_or_else(|| parse_err("basis must be an array of columns"))?;
            arr.iter()
                .map(|col| {
                    let cells = col
                        .as_array()
                        .ok_or_else(|| parse_err("basis columns must be arrays"))?;
                    if cells.len() != t {
                        return Err(parse_err("basis column length must match the rank"));
                    }
                    cells
                        .iter()
                        .map(|x| {
                            coeff_str(x).and_then(|s| {
                                s.parse::<BigInt>()
                                    .map_err(|_| parse_err(format!("bad integer {:?}", s)))
                            })
                        })
                        .collect()
                })
                .collect::<CliResult<_>>()?
        }
    };
    let basis: Vec<Vec<BigInt>> = (0..t)
        .map(|i| basis_cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let lattice = SubtorusLattice::new(t, basis)?;
    Ok(TorsionCoset::new(lattice, translate)?)
}

pub fn coset_to_json(c: &TorsionCoset) -> Value {
    let t = c.ambient_rank();
    let r = c.lattice.rank();
    let cols: Vec<Value> = (0..r)
        .map(|j| {
            Value::Array(
                (0..t)
                    .map(|i| Value::String(c.lattice.basis()[i][j].to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({
        "basis": cols,
        "translate": c.translate.iter().map(|q| Value::String(rational_to_string(q))).collect::<Vec<_>>(),
    })
}

pub fn envelope_ok(result: Value) -> Value {
    json!({ "ok": true, "result": result, "error": Value::Null })
}

pub fn envelope_err(e: &CliError) -> Value {
    json!({ "ok": false, "result": Value::Null, "error": e.message() })
}
