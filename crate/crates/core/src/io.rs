//! JSON file formats.
//!
//! Fixed data:
//! `{"k":3,"n":3,"vertices":[{"label":"p","chars":["100","010","001"]}, ...]}`
//! with one string per copy of a character. A skeleton adds
//! `"edges":[{"u":"p","v":"q","color":"100"}, ...]`, one entry per parallel
//! edge. Structures are `{"kind":"three","k":3,"ell":2,"basis":[...]}` or
//! `{"kind":"four","k":3,"ell":0,"basis":[...],"v":[1]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{FourPointStructure, ThreePointStructure};
use crate::cobordism::TdksVerdict;
use crate::f2algebra::{CharMultiset, Character, MAX_RANK};
use crate::skeleton::{ColoredSkeleton, Edge, FixedData, Vertex};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexFile {
    label: String,
    chars: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    u: String,
    v: String,
    color: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DataFile {
    k: usize,
    n: usize,
    vertices: Vec<VertexFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<EdgeFile>>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum StructureFile {
    Three {
        k: usize,
        ell: u32,
        basis: Vec<String>,
    },
    Four {
        k: usize,
        ell: u32,
        basis: Vec<String>,
        #[serde(default)]
        v: Vec<u64>,
    },
}

/// A structure file: either kind of generator parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Three(ThreePointStructure),
    Four(FourPointStructure),
}

fn syntax(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

fn field(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Input(format!("{path}: {msg}"))
}

fn parse_char(path: &str, k: usize, s: &str) -> Result<Character> {
    let c: Character = s.parse().map_err(|e| field(path, e))?;
    if c.k() != k {
        return Err(field(
            path,
            format!("{s:?} has length {}, expected k = {k}", c.k()),
        ));
    }
    Ok(c)
}

fn data_from_file(f: &DataFile) -> Result<FixedData> {
    if f.k == 0 || f.k > MAX_RANK {
        return Err(field("k", format!("{} is outside 1..={MAX_RANK}", f.k)));
    }
    let mut vertices = Vec::with_capacity(f.vertices.len());
    for (i, v) in f.vertices.iter().enumerate() {
        let mut chars = Vec::with_capacity(v.chars.len());
        for (j, s) in v.chars.iter().enumerate() {
            let path = format!("vertices[{i}].chars[{j}]");
            let c = parse_char(&path, f.k, s)?;
            if c.is_zero() {
                return Err(field(&path, "the trivial character is not allowed"));
            }
            chars.push(c);
        }
        if chars.len() != f.n {
            return Err(field(
                &format!("vertices[{i}].chars"),
                format!(
                    "vertex {:?} has {} characters, expected n = {}",
                    v.label,
                    chars.len(),
                    f.n
                ),
            ));
        }
        vertices.push(Vertex::new(
            v.label.clone(),
            CharMultiset::from_chars(f.k, chars)?,
        ));
    }
    FixedData::new(f.k, f.n, vertices).map_err(|e| field("vertices", e))
}

fn data_to_file(d: &FixedData) -> DataFile {
    DataFile {
        k: d.k(),
        n: d.n(),
        vertices: d
            .vertices()
            .iter()
            .map(|v| VertexFile {
                label: v.label.clone(),
                chars: v.chars.iter().map(|c| c.to_string()).collect(),
            })
            .collect(),
        edges: None,
    }
}

/// Parses fixed data. A present `edges` field is ignored.
pub fn fixed_data_from_json(text: &str) -> Result<FixedData> {
    let f: DataFile = serde_json::from_str(text).map_err(syntax)?;
    data_from_file(&f)
}

/// Canonical text: vertices in stored order, characters in bitstring order.
pub fn fixed_data_to_json(d: &FixedData) -> String {
    let mut s = serde_json::to_string_pretty(&data_to_file(d)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn skeleton_from_json(text: &str) -> Result<ColoredSkeleton> {
    let f: DataFile = serde_json::from_str(text).map_err(syntax)?;
    let data = data_from_file(&f)?;
    let edges = f.edges.as_ref().ok_or_else(|| field("edges", "missing"))?;
    let mut out = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let idx = |which: &str, label: &str| {
            data.index_of(label).ok_or_else(|| {
                field(
                    &format!("edges[{i}].{which}"),
                    format!("unknown vertex {label:?}"),
                )
            })
        };
        let color = parse_char(&format!("edges[{i}].color"), data.k(), &e.color)?;
        out.push(Edge::new(idx("u", &e.u)?, idx("v", &e.v)?, color));
    }
    ColoredSkeleton::new(data, out)
}

pub fn skeleton_to_json(g: &ColoredSkeleton) -> String {
    let mut f = data_to_file(g.data());
    f.edges = Some(
        g.edges()
            .iter()
            .map(|e| EdgeFile {
                u: g.label(e.u).to_string(),
                v: g.label(e.v).to_string(),
                color: e.color.to_string(),
            })
            .collect(),
    );
    let mut s = serde_json::to_string_pretty(&f).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn structure_from_json(text: &str) -> Result<Structure> {
    let f: StructureFile = serde_json::from_str(text).map_err(syntax)?;
    let basis = |k: usize, b: &[String]| {
        b.iter()
            .enumerate()
            .map(|(i, s)| parse_char(&format!("basis[{i}]"), k, s))
            .collect::<Result<Vec<_>>>()
    };
    match f {
        StructureFile::Three { k, ell, basis: b } => Ok(Structure::Three(
            ThreePointStructure::new(k, ell, basis(k, &b)?)?,
        )),
        StructureFile::Four {
            k,
            ell,
            basis: b,
            v,
        } => Ok(Structure::Four(FourPointStructure::new(
            k,
            ell,
            basis(k, &b)?,
            v,
        )?)),
    }
}

pub fn structure_to_value(s: &Structure) -> Value {
    let names = |b: &[Character]| b.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    match s {
        Structure::Three(t) => {
            json!({"kind": "three", "k": t.k(), "ell": t.ell(), "basis": names(t.basis())})
        }
        Structure::Four(f) => {
            json!({"kind": "four", "k": f.k(), "ell": f.ell(), "basis": names(f.basis()), "v": f.v()})
        }
    }
}

/// `{"polynomial": "<text>"}` or `{"witness": {"form": "101", "stage": 2}}`.
pub fn verdict_to_value(v: &TdksVerdict) -> Value {
    match v {
        TdksVerdict::Polynomial(p) => json!({"polynomial": p.to_string()}),
        TdksVerdict::Witness { form, stage, .. } => {
            json!({"witness": {"form": form.to_string(), "stage": stage}})
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

pub fn load_fixed_data(path: &Path) -> Result<FixedData> {
    fixed_data_from_json(&read(path)?).map_err(|e| prefix(path, e))
}

pub fn store_fixed_data(path: &Path, d: &FixedData) -> Result<()> {
    write(path, &fixed_data_to_json(d))
}

pub fn load_skeleton(path: &Path) -> Result<ColoredSkeleton> {
    skeleton_from_json(&read(path)?).map_err(|e| prefix(path, e))
}

pub fn store_skeleton(path: &Path, g: &ColoredSkeleton) -> Result<()> {
    write(path, &skeleton_to_json(g))
}

pub fn load_structure(path: &Path) -> Result<Structure> {
    structure_from_json(&read(path)?).map_err(|e| prefix(path, e))
}

fn prefix(path: &Path, e: Error) -> Error {
    let p = path.display();
    match e {
        Error::Parse(m) => Error::Parse(format!("{p}: {m}")),
        Error::Input(m) => Error::Input(format!("{p}: {m}")),
        other => other,
    }
}

/// Whether a JSON document carries an `edges` array.
pub fn has_edges(text: &str) -> bool {
    serde_json::from_str::<Value>(text)
        .ok()
        .and_then(|v| v.get("edges").map(Value::is_array))
        .unwrap_or(false)
}
