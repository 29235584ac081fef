//! Command-line front end: machine-readable JSON in, JSON envelopes out.
//!
//! Every response is `{"ok": bool, "result": ..., "error": ...}`; exit code
//! 0 on success, 1 on domain errors, 2 on parse errors. Batch inputs (a JSON
//! array of request bodies) are processed with `--jobs` workers and written
//! in input order.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Read;
use std::path::PathBuf;

use torheight::borel;
use torheight::heights::{self, BreuillardHeight};
use torheight::json::*;
use torheight::matgroup;
use torheight::numfield::{Field, NumberField};
use torheight::quotient;

#[derive(Parser)]
#[command(name = "torheight", version, about = "Exact heights and torsion on linear algebraic groups")]
struct Cli {
    /// Work in the cyclotomic field Q(zeta_M)
    #[arg(long, global = true, value_name = "M", conflicts_with = "minpoly")]
    cyclotomic: Option<u64>,
    /// Field declaration file (JSON minpoly array or {"minpoly": ..., "monogenic": ...})
    #[arg(long, global = true, value_name = "FILE")]
    minpoly: Option<PathBuf>,
    /// Root-isolation tolerance
    #[arg(long, global = true, default_value_t = 1e-12)]
    eps: f64,
    /// Worker threads for batch inputs
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Output format (only json)
    #[arg(long, global = true, default_value = "json")]
    format: String,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Clone)]
enum Cmd {
    /// Height computations
    Height {
        #[command(subcommand)]
        which: HeightCmd,
    },
    /// Element classification
    Classify {
        #[command(subcommand)]
        which: ClassifyCmd,
    },
    /// Intersections in the conjugation quotient and in tori
    Intersect {
        #[command(subcommand)]
        which: IntersectCmd,
    },
    /// Classify the SL_2 trace fiber over tau
    Sl2Fiber {
        /// Trace value, an element string in the declared field
        #[arg(allow_hyphen_values = true)]
        tau: String,
    },
    /// Borel group of GL_3
    Borel {
        #[command(subcommand)]
        which: BorelCmd,
    },
}

#[derive(Args, Clone)]
struct InputArg {
    /// Input file with a JSON body, or '-' for standard input
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Subcommand, Clone)]
enum HeightCmd {
    /// Weil height of an algebraic number ({"element": "..."} or {"minpoly": [...]})
    Weil(InputArg),
    /// Projective height of a coordinate tuple ({"coords": [...]})
    Projective(InputArg),
    /// Canonical conjugation-invariant height of a matrix
    Canonical(InputArg),
    /// Eigenvalue-tuple height of a matrix (exact or two-sided bounds)
    Breuillard {
        #[command(flatten)]
        input: InputArg,
        /// Splitting field Q(zeta_M) for matrices over Q
        #[arg(long, value_name = "M")]
        splitting_cyclotomic: Option<u64>,
    },
    /// Sandwich inequality report for a matrix
    Sandwich(InputArg),
}

#[derive(Subcommand, Clone)]
enum ClassifyCmd {
    /// Exact torsion order of a matrix
    Torsion(InputArg),
    /// Least n with g^n unipotent
    #[command(name = "u-torsion")]
    UTorsion(InputArg),
    /// Multiplicative Jordan decomposition
    Jordan(InputArg),
    /// Conjugation-quotient fiber invariants
    Fiber(InputArg),
}

#[derive(Subcommand, Clone)]
enum IntersectCmd {
    /// Intersection of the special curves S_k1 and S_k2 in GL_2
    Curves { k1: u32, k2: u32 },
    /// Intersection of two torsion cosets ({"c1": {...}, "c2": {...}})
    Cosets(InputArg),
}

#[derive(Subcommand, Clone)]
enum BorelCmd {
    /// Torsion test through the strata classifier
    Torsion(InputArg),
    /// n-th power of a Borel element
    Pow {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_name = "N")]
        n: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    if cli.format != "json" {
        eprintln!("unsupported --format {:?} (only json)", cli.format);
        std::process::exit(2);
    }
    let field = match resolve_field(&cli) {
        Ok(f) => f,
        Err(e) => {
            println!("{}", envelope_err(&e));
            std::process::exit(e.exit_code());
        }
    };
    let eps = cli.eps;
    let (out, code) = run(&cli.cmd, &field, eps, cli.jobs);
    println!("{}", serde_json::to_string(&out).unwrap());
    std::process::exit(code);
}

fn resolve_field(cli: &Cli) -> CliResult<Field> {
    if let Some(m) = cli.cyclotomic {
        if m == 0 {
            return Err(CliError::Parse("cyclotomic order must be positive".into()));
        }
        return Ok(NumberField::cyclotomic_field(m));
    }
    if let Some(path) = &cli.minpoly {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {}", path.display(), e)))?;
        let v: Value = serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("bad field file: {}", e)))?;
        return field_from_json(&v);
    }
    Ok(NumberField::rationals())
}

fn run(cmd: &Cmd, field: &Field, eps: f64, jobs: usize) -> (Value, i32) {
    match cmd {
        Cmd::Intersect {
            which: IntersectCmd::Curves { k1, k2 },
        } => finish(handle_curves(*k1, *k2)),
        Cmd::Sl2Fiber { tau } => finish(handle_sl2(field, tau)),
        _ => {
            let raw = match read_body(cmd) {
                Ok(r) => r,
                Err(e) => return (envelope_err(&e), e.exit_code()),
            };
            let parsed: Value = match serde_json::from_str(&raw) {
                Ok(v) => v,
                Err(e) => {
                    let err = CliError::Parse(format!("bad input JSON: {}", e));
                    return (envelope_err(&err), err.exit_code());
                }
            };
            if is_batch(cmd, &parsed) {
                let items = parsed.as_array().unwrap();
                let results: Vec<(Value, i32)> = if jobs > 1 {
                    use rayon::prelude::*;
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(jobs)
                        .build()
                        .expect("thread pool");
                    pool.install(|| {
                        items
                            .par_iter()
                            .map(|item| finish(dispatch(cmd, field, eps, item)))
                            .collect()
                    })
                } else {
                    items
                        .iter()
                        .map(|item| finish(dispatch(cmd, field, eps, item)))
                        .collect()
                };
                let code = results.iter().map(|(_, c)| *c).max().unwrap_or(0);
                let arr: Vec<Value> = results.into_iter().map(|(v, _)| v).collect();
                (Value::Array(arr), code)
            } else {
                finish(dispatch(cmd, field, eps, &parsed))
            }
        }
    }
}

fn finish(r: CliResult<Value>) -> (Value, i32) {
    match r {
        Ok(v) => (envelope_ok(v), 0),
        Err(e) => {
            let code = e.exit_code();
            (envelope_err(&e), code)
        }
    }
}

/// Matrix-like and element-like bodies can themselves be arrays (a grid or a
/// coordinate list), so batch detection looks one level deeper.
fn is_batch(_cmd: &Cmd, v: &Value) -> bool {
    match v.as_array() {
        None => false,
        Some(arr) => !arr.is_empty() && arr.iter().all(|x| x.is_object()),
    }
}

fn read_body(cmd: &Cmd) -> CliResult<String> {
    let input = match cmd {
        Cmd::Height { which } => match which {
            HeightCmd::Weil(i)
            | HeightCmd::Projective(i)
            | HeightCmd::Canonical(i)
            | HeightCmd::Sandwich(i) => &i.input,
            HeightCmd::Breuillard { input, .. } => &input.input,
        },
        Cmd::Classify { which } => match which {
            ClassifyCmd::Torsion(i)
            | ClassifyCmd::UTorsion(i)
            | ClassifyCmd::Jordan(i)
            | ClassifyCmd::Fiber(i) => &i.input,
        },
        Cmd::Intersect {
            which: IntersectCmd::Cosets(i),
        } => &i.input,
        Cmd::Borel { which } => match which {
            BorelCmd::Torsion(i) => &i.input,
            BorelCmd::Pow { input, .. } => &input.input,
        },
        _ => return Ok(String::new()),
    };
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Parse(format!("cannot read stdin: {}", e)))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {}", input, e)))
    }
}

fn dispatch(cmd: &Cmd, field: &Field, eps: f64, item: &Value) -> CliResult<Value> {
    match cmd {
        Cmd::Height { which } => match which {
            HeightCmd::Weil(_) => handle_weil(field, item),
            HeightCmd::Projective(_) => handle_projective(field, eps, item),
            HeightCmd::Canonical(_) => handle_canonical(field, eps, item),
            HeightCmd::Breuillard {
                splitting_cyclotomic,
                ..
            } => handle_breuillard(field, eps, item, *splitting_cyclotomic),
            HeightCmd::Sandwich(_) => handle_sandwich(field, eps, item),
        },
        Cmd::Classify { which } => match which {
            ClassifyCmd::Torsion(_) => handle_torsion(field, item),
            ClassifyCmd::UTorsion(_) => handle_utorsion(field, item),
            ClassifyCmd::Jordan(_) => handle_jordan(field, item),
            ClassifyCmd::Fiber(_) => handle_fiber(field, item),
        },
        Cmd::Intersect { which } => match which {
            IntersectCmd::Cosets(_) => handle_cosets(item),
            IntersectCmd::Curves { .. } => unreachable!("handled without input"),
        },
        Cmd::Borel { which } => match which {
            BorelCmd::Torsion(_) => handle_borel_torsion(field, item),
            BorelCmd::Pow { n, .. } => handle_borel_pow(field, item, *n),
        },
        Cmd::Sl2Fiber { .. } => unreachable!("handled without input"),
    }
}

fn handle_weil(field: &Field, item: &Value) -> CliResult<Value> {
    let h = match item {
        Value::Object(map) => {
            if let Some(mp) = map.get("minpoly") {
                let f = qpoly_from_json(mp)?;
                heights::weil_height_from_minpoly(&f)?
            } else if let Some(el) = map.get("element") {
                let a = elem_from_json(field, el)?;
                heights::weil_height_number(&a)?
            } else {
                return Err(CliError::Parse(
                    "weil height needs \"element\" or \"minpoly\"".into(),
                ));
            }
        }
        Value::String(_) | Value::Number(_) => {
            let a = elem_from_json(field, item)?;
            heights::weil_height_number(&a)?
        }
        _ => return Err(CliError::Parse("bad weil-height input".into())),
    };
    Ok(height_to_json(&h))
}

fn handle_projective(field: &Field, eps: f64, item: &Value) -> CliResult<Value> {
    let coords_val = match item {
        Value::Object(map) => map
            .get("coords")
            .ok_or_else(|| CliError::Parse("projective height needs \"coords\"".into()))?,
        Value::Array(_) => item,
        _ => return Err(CliError::Parse("bad projective-height input".into())),
    };
    let arr = coords_val
        .as_array()
        .ok_or_else(|| CliError::Parse("coords must be an array".into()))?;
    let mu: Vec<_> = arr
        .iter()
        .map(|x| elem_from_json(field, x))
        .collect::<CliResult<_>>()?;
    let h = heights::projective_height_eps(field, &mu, eps)?;
    Ok(height_to_json(&h))
}

fn handle_canonical(field: &Field, eps: f64, item: &Value) -> CliResult<Value> {
    let g = matrix_from_json(field, item)?;
    let h = heights::canonical_height_glt_eps(&g, eps)?;
    Ok(height_to_json(&h))
}

fn handle_breuillard(
    field: &Field,
    eps: f64,
    item: &Value,
    splitting: Option<u64>,
) -> CliResult<Value> {
    let g = matrix_from_json(field, item)?;
    let split_field = splitting.map(NumberField::cyclotomic_field);
    match heights::breuillard_height_eps(&g, split_field.as_ref(), eps)? {
        BreuillardHeight::Exact(h) => Ok(json!({"kind": "exact", "height": height_to_json(&h)})),
        BreuillardHeight::Bounds { lower, upper } => Ok(json!({
            "kind": "bounds",
            "lower": height_to_json(&lower),
            "upper": height_to_json(&upper),
        })),
    }
}

fn handle_sandwich(field: &Field, eps: f64, item: &Value) -> CliResult<Value> {
    let g = matrix_from_json(field, item)?;
    let rep = heights::check_sandwich_eps(&g, eps)?;
    Ok(json!({
        "lower": height_to_json(&rep.lower),
        "middle": height_to_json(&rep.middle),
        "upper": height_to_json(&rep.upper),
        "holds": rep.holds,
    }))
}

fn handle_torsion(field: &Field, item: &Value) -> CliResult<Value> {
    let g = matrix_from_json(field, item)?;
    Ok(match matgroup::is_torsion(&g)? {
        Some(n) => json!({"torsion": true, "order": n}),
        None => json!({"torsion": false}),
    })
}

fn handle_utorsion(field: &Field, item: &Value) -> CliResult<Value> {
    let g = matrix_from_json(field, item)?;
    Ok(match matgroup::is_unipotent_torsion(&g)? {
        Some(n) => json!({"unipotent_torsion": true, "order": n}),
        None => json!({"unipotent_torsion": false}),
    })
}

fn handle_jordan(field: &Field, item: &Value) -> CliResult<Value> {
    let g = matrix_from_json(field, item)?;
    let jp = matgroup::jordan_chevalley(&g)?;
    Ok(json!({
        "semisimple_part": matrix_to_json(&jp.semisimple_part),
        "unipotent_part": matrix_to_json(&jp.unipotent_part),
    }))
}

fn handle_fiber(field: &Field, item: &Value) -> CliResult<Value> {
    let g = matrix_from_json(field, item)?;
    let inv = quotient::pi_invariants(&g)?;
    Ok(json!({
        "coefficients": inv.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "trace": inv.trace().to_string(),
        "det": inv.det().to_string(),
    }))
}

fn handle_curves(k1: u32, k2: u32) -> CliResult<Value> {
    let ci = quotient::intersect_special_curves(k1, k2)?;
    Ok(json!({
        "orders": [ci.orders[0], ci.orders[1]],
        "cyclotomic": ci.cyclotomic_order,
        "points": ci.points.iter().map(|(tr, det)| {
            json!([tr.to_string(), det.to_string()])
        }).collect::<Vec<_>>(),
        "field": field_to_json(&ci.field),
    }))
}

fn handle_cosets(item: &Value) -> CliResult<Value> {
    let map = item
        .as_object()
        .ok_or_else(|| CliError::Parse("coset intersection needs {\"c1\", \"c2\"}".into()))?;
    let c1 = coset_from_json(
        map.get("c1")
            .ok_or_else(|| CliError::Parse("missing \"c1\"".into()))?,
    )?;
    let c2 = coset_from_json(
        map.get("c2")
            .ok_or_else(|| CliError::Parse("missing \"c2\"".into()))?,
    )?;
    Ok(match quotient::intersect_torsion_cosets(&c1, &c2)? {
        None => json!({"empty": true}),
        Some(out) => json!({"empty": false, "coset": coset_to_json(&out)}),
    })
}

fn handle_sl2(field: &Field, tau: &str) -> CliResult<Value> {
    let t = torheight::numfield::parse_elem(field, tau)
        .map_err(|e| CliError::Parse(format!("bad tau {:?}: {}", tau, e)))?;
    let class = quotient::sl2_fiber_classify(&t)?;
    let name = match class {
        quotient::Sl2FiberClass::TorsionDense => "TorsionDense",
        quotient::Sl2FiberClass::CentralUnipotentFiber => "CentralUnipotentFiber",
        quotient::Sl2FiberClass::NoTorsion => "NoTorsion",
    };
    Ok(json!({"class": name}))
}

fn handle_borel_torsion(field: &Field, item: &Value) -> CliResult<Value> {
    let p = borel_from_json(field, item)?;
    Ok(match borel::borel_is_torsion_strata(&p) {
        Some(n) => json!({"torsion": true, "order": n}),
        None => json!({"torsion": false}),
    })
}

fn handle_borel_pow(field: &Field, item: &Value, n: u64) -> CliResult<Value> {
    if n == 0 {
        return Err(CliError::Parse("power must be at least 1".into()));
    }
    let p = borel_from_json(field, item)?;
    Ok(borel_to_json(&borel::borel_pow(&p, n)))
}
