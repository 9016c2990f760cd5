//! Instance and linearization files.
//!
//! ```json
//! {
//!   "version": 1,
//!   "n": 3,
//!   "edges": [[1, 2], [2, 3], [1, 3]],
//!   "cost": {"kind": "dense", "q": [[1, 0, 0], [0, "1/3", 0], [0, 0, 2]]},
//!   "name": "optional",
//!   "metadata": {"claimed_c": [...], "formula": "...", "status": "..."}
//! }
//! ```
//!
//! Cost kinds are `dense` (`q`), `factored` (`a`, `b`, `c`, `d`, `diag`) and
//! `mmstp` (`d1`, `d2`, `delta1`, `delta2`). Numbers are JSON integers or
//! strings (`"p/q"`, exact decimals); JSON floats are rejected because they
//! are not exact. Vertices are 1-based.

use std::fs;
use std::path::Path;

use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};

use qmst::generators::{ClaimedLinearization, CLAIM_STATUS};
use qmst::oracle::MmstpInstance;
use qmst::rat::{self, Rat};
use qmst::{Cost, FactoredCost, Graph, Instance, Matrix};

use crate::error::CliError;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    Qmstp(Instance),
    Mmstp(MmstpInstance),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub name: Option<String>,
    pub problem: Problem,
    pub claim: Option<ClaimedLinearization>,
}

impl InstanceFile {
    pub fn graph(&self) -> &Graph {
        match &self.problem {
            Problem::Qmstp(inst) => inst.graph(),
            Problem::Mmstp(inst) => &inst.graph,
        }
    }

    pub fn qmstp(&self) -> Result<&Instance, CliError> {
        match &self.problem {
            Problem::Qmstp(inst) => Ok(inst),
            Problem::Mmstp(_) => Err(CliError::Usage("this command needs a QMSTP instance, not an MMSTP one".into())),
        }
    }
}

/// JSON encoding of an exact rational: integer when it fits in `i64`,
/// otherwise a canonical string.
pub fn rat_value(value: &Rat) -> Value {
    if value.denom().is_one() {
        if let Some(v) = value.numer().to_i64() {
            return Value::from(v);
        }
    }
    Value::String(rat::format(value))
}

pub fn rat_array(values: &[Rat]) -> Value {
    Value::Array(values.iter().map(rat_value).collect())
}

fn field_error(path: &str, msg: impl Into<String>) -> CliError {
    CliError::Field {
        path: path.to_string(),
        msg: msg.into(),
    }
}

pub fn parse_rat(value: &Value, path: &str) -> Result<Rat, CliError> {
    match value {
        Value::Number(n) => match n.as_i64() {
            Some(v) => Ok(rat::int(v)),
            None if n.is_u64() => rat::parse(&n.to_string()).map_err(|e| field_error(path, e.to_string())),
            None => Err(field_error(
                path,
                format!("{n} is a float; write exact values as integers or strings like \"1/3\""),
            )),
        },
        Value::String(s) => rat::parse(s).map_err(|e| field_error(path, e.to_string())),
        other => Err(field_error(path, format!("expected a number, found {}", kind_of(other)))),
    }
}

fn kind_of(value: &Value) -> &'static str {
    match value {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, CliError> {
    obj.get(key).ok_or_else(|| field_error(&join(path, key), "missing field"))
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn as_object<'a>(value: &'a Value, path: &str) -> Result<&'a Map<String, Value>, CliError> {
    value
        .as_object()
        .ok_or_else(|| field_error(path, format!("expected an object, found {}", kind_of(value))))
}

fn as_array<'a>(value: &'a Value, path: &str) -> Result<&'a Vec<Value>, CliError> {
    value
        .as_array()
        .ok_or_else(|| field_error(path, format!("expected an array, found {}", kind_of(value))))
}

fn as_usize(value: &Value, path: &str) -> Result<usize, CliError> {
    value
        .as_u64()
        .and_then(|v| usize::try_from(v).ok())
        .ok_or_else(|| field_error(path, "expected a non-negative integer"))
}

fn rat_vector(value: &Value, path: &str) -> Result<Vec<Rat>, CliError> {
    as_array(value, path)?
        .iter()
        .enumerate()
        .map(|(i, v)| parse_rat(v, &format!("{path}[{i}]")))
        .collect()
}

fn vector_of_len(obj: &Map<String, Value>, key: &str, path: &str, m: usize) -> Result<Vec<Rat>, CliError> {
    let p = join(path, key);
    let v = rat_vector(get(obj, key, path)?, &p)?;
    if v.len() != m {
        return Err(field_error(&p, format!("has length {}, expected one entry per edge ({m})", v.len())));
    }
    Ok(v)
}

fn with_path(path: &str) -> impl Fn(qmst::Error) -> CliError + '_ {
    move |e| field_error(path, e.to_string())
}

pub fn parse_instance_str(text: &str) -> Result<InstanceFile, CliError> {
    let root: Value = serde_json::from_str(text).map_err(CliError::syntax)?;
    let obj = as_object(&root, "$")?;
    let version = get(obj, "version", "")?;
    if version.as_u64() != Some(FORMAT_VERSION) {
        return Err(field_error("version", format!("unsupported version {version}, expected {FORMAT_VERSION}")));
    }
    let n = as_usize(get(obj, "n", "")?, "n")?;
    let mut edges = Vec::new();
    for (i, e) in as_array(get(obj, "edges", "")?, "edges")?.iter().enumerate() {
        let p = format!("edges[{i}]");
        let pair = as_array(e, &p)?;
        if pair.len() != 2 {
            return Err(field_error(&p, "an edge is a pair [u, v]"));
        }
        edges.push((as_usize(&pair[0], &format!("{p}[0]"))?, as_usize(&pair[1], &format!("{p}[1]"))?));
    }
    let graph = Graph::from_one_based(n, &edges).map_err(with_path("edges"))?;
    let m = graph.edge_count();

    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(other) => return Err(field_error("name", format!("expected a string, found {}", kind_of(other)))),
    };

    let cost = as_object(get(obj, "cost", "")?, "cost")?;
    let kind = get(cost, "kind", "cost")?
        .as_str()
        .ok_or_else(|| field_error("cost.kind", "expected a string"))?;
    let problem = match kind {
        "dense" => {
            let rows = as_array(get(cost, "q", "cost")?, "cost.q")?;
            if rows.len() != m {
                return Err(field_error(
                    "cost.q",
                    qmst::Error::DimensionMismatch {
                        what: "cost matrix rows".into(),
                        expected: m,
                        found: rows.len(),
                    }
                    .to_string(),
                ));
            }
            let mut parsed = Vec::with_capacity(m);
            for (i, row) in rows.iter().enumerate() {
                let p = format!("cost.q[{i}]");
                let row = rat_vector(row, &p)?;
                if row.len() != m {
                    return Err(field_error(
                        &p,
                        qmst::Error::DimensionMismatch {
                            what: "cost matrix row".into(),
                            expected: m,
                            found: row.len(),
                        }
                        .to_string(),
                    ));
                }
                parsed.push(row);
            }
            let q = Matrix::from_rows(parsed).map_err(with_path("cost.q"))?;
            Problem::Qmstp(Instance::new(graph, Cost::Dense(q), name.clone()).map_err(with_path("cost"))?)
        }
        "factored" => {
            let [a, b, c, d, diag] =
                ["a", "b", "c", "d", "diag"].map(|key| vector_of_len(cost, key, "cost", m));
            let f = FactoredCost::new(a?, b?, c?, d?, diag?).map_err(with_path("cost"))?;
            Problem::Qmstp(Instance::new(graph, Cost::Factored(f), name.clone()).map_err(with_path("cost"))?)
        }
        "mmstp" => {
            let d1 = vector_of_len(cost, "d1", "cost", m)?;
            let d2 = vector_of_len(cost, "d2", "cost", m)?;
            let delta1 = parse_rat(get(cost, "delta1", "cost")?, "cost.delta1")?;
            let delta2 = parse_rat(get(cost, "delta2", "cost")?, "cost.delta2")?;
            Problem::Mmstp(MmstpInstance::new(graph, d1, d2, delta1, delta2).map_err(with_path("cost"))?)
        }
        other => {
            return Err(field_error(
                "cost.kind",
                format!("unknown kind {other:?}; expected \"dense\", \"factored\" or \"mmstp\""),
            ))
        }
    };

    let claim = match obj.get("metadata") {
        None | Some(Value::Null) => None,
        Some(meta) => {
            let meta = as_object(meta, "metadata")?;
            match meta.get("claimed_c") {
                None => None,
                Some(c) => {
                    let c = rat_vector(c, "metadata.claimed_c")?;
                    if c.len() != m {
                        return Err(field_error("metadata.claimed_c", format!("expected {m} entries, found {}", c.len())));
                    }
                    let formula = meta.get("formula").and_then(Value::as_str).unwrap_or_default().to_string();
                    Some(ClaimedLinearization { c, formula })
                }
            }
        }
    };
    Ok(InstanceFile { name, problem, claim })
}

pub fn parse_instance(path: &Path) -> Result<InstanceFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_instance_str(&text).map_err(|e| e.in_file(path))
}

fn matrix_value(q: &Matrix) -> Value {
    Value::Array((0..q.rows()).map(|i| rat_array(q.row(i))).collect())
}

pub fn instance_value(file: &InstanceFile) -> Value {
    let g = file.graph();
    let edges: Vec<Value> = g.edges().iter().map(|&(u, v)| json!([u + 1, v + 1])).collect();
    let cost = match &file.problem {
        Problem::Qmstp(inst) => match inst.cost() {
            Cost::Dense(q) => json!({"kind": "dense", "q": matrix_value(q)}),
            Cost::Factored(f) => json!({
                "kind": "factored",
                "a": rat_array(&f.a),
                "b": rat_array(&f.b),
                "c": rat_array(&f.c),
                "d": rat_array(&f.d),
                "diag": rat_array(&f.diag),
            }),
        },
        Problem::Mmstp(inst) => json!({
            "kind": "mmstp",
            "d1": rat_array(&inst.d1),
            "d2": rat_array(&inst.d2),
            "delta1": rat_value(&inst.delta1),
            "delta2": rat_value(&inst.delta2),
        }),
    };
    let mut root = json!({
        "version": FORMAT_VERSION,
        "n": g.vertex_count(),
        "edges": edges,
        "cost": cost,
    });
    if let Some(name) = &file.name {
        root["name"] = Value::String(name.clone());
    }
    if let Some(claim) = &file.claim {
        root["metadata"] = json!({
            "claimed_c": rat_array(&claim.c),
            "formula": claim.formula,
            "status": CLAIM_STATUS,
        });
    }
    root
}

/// Canonical text: sorted keys, two-space indentation, matrix rows and
/// vectors on one line, trailing newline.
pub fn to_canonical_string(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(value: &Value) -> bool {
    match value {
        Value::Array(items) => items.iter().all(|v| !v.is_array() && !v.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(value: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match value {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            // serde_json's default map is ordered by key
            for (i, (k, v)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(v, indent + 1, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if !is_flat(value) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(v, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

pub fn write_instance(file: &InstanceFile, path: &Path) -> Result<(), CliError> {
    fs::write(path, to_canonical_string(&instance_value(file))).map_err(|e| CliError::io(path, e))
}

/// A linearization file: `{"c": [...]}` or a bare array.
pub fn parse_c_str(text: &str) -> Result<Vec<Rat>, CliError> {
    let root: Value = serde_json::from_str(text).map_err(CliError::syntax)?;
    match &root {
        Value::Array(_) => rat_vector(&root, "$"),
        Value::Object(obj) => rat_vector(get(obj, "c", "")?, "c"),
        other => Err(field_error("$", format!("expected an object or array, found {}", kind_of(other)))),
    }
}

pub fn parse_c(path: &Path) -> Result<Vec<Rat>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_c_str(&text).map_err(|e| e.in_file(path))
}

pub fn write_c(c: &[Rat], path: &Path) -> Result<(), CliError> {
    fs::write(path, to_canonical_string(&json!({ "c": rat_array(c) }))).map_err(|e| CliError::io(path, e))
}
