//! JSON file formats and the versioned output envelope.
//!
//! A `ring` field in a row or matrix file is either a path (resolved
//! against the referring file's directory) or an inline ring object.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyring::{parse_polynomial, Vars};
use crate::quotient::{Ring, RingElement, RingExt, RingSpec};
use crate::realize::NumericMap;
use crate::rows::{ElementaryMove, UnimodularRow};
use crate::witt::Matrix;

/// Identifies the JSON output layout; bumped on incompatible changes.
pub const SCHEMA: &str = "vaserstein/1";

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum RingRef {
    Path(String),
    Inline(RingSpec),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RowFile {
    pub ring: RingRef,
    pub row: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MatrixFile {
    pub ring: RingRef,
    pub entries: Vec<Vec<String>>,
}

/// One elementary move, 1-based as written in files.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MoveSpec {
    pub i: usize,
    pub j: usize,
    pub lambda: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MapFile {
    pub vars: Vec<String>,
    pub components: Vec<String>,
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn parse_ring(text: &str) -> Result<Ring> {
    serde_json::from_str::<RingSpec>(text)?.build()
}

pub fn load_ring(path: &Path) -> Result<Ring> {
    parse_ring(&read(path)?)
}

fn resolve_ring(r: &RingRef, base: &Path) -> Result<Ring> {
    match r {
        RingRef::Inline(spec) => spec.build(),
        RingRef::Path(p) => load_ring(&base.join(p)),
    }
}

/// A row as read from a file: its ring, entries and optional certificate.
#[derive(Clone, Debug)]
pub struct LoadedRow {
    pub ring: Ring,
    pub entries: Vec<RingElement>,
    pub certificate: Option<Vec<RingElement>>,
}

impl LoadedRow {
    /// The certified row; uses the stored certificate or computes one.
    pub fn certified(&self) -> Result<UnimodularRow> {
        crate::rows::row_make(&self.ring, self.entries.clone(), self.certificate.clone())
    }
}

fn elems(ring: &Ring, texts: &[String]) -> Result<Vec<RingElement>> {
    texts.iter().map(|t| ring.elem(t)).collect()
}

pub fn parse_row(text: &str, base: &Path) -> Result<LoadedRow> {
    let file: RowFile = serde_json::from_str(text)?;
    let ring = resolve_ring(&file.ring, base)?;
    let entries = elems(&ring, &file.row)?;
    let certificate = file.certificate.as_deref().map(|c| elems(&ring, c)).transpose()?;
    Ok(LoadedRow {
        ring,
        entries,
        certificate,
    })
}

pub fn load_row(path: &Path) -> Result<LoadedRow> {
    parse_row(&read(path)?, &base_dir(path))
}

pub fn parse_matrix(text: &str, base: &Path) -> Result<Matrix> {
    let file: MatrixFile = serde_json::from_str(text)?;
    let ring = resolve_ring(&file.ring, base)?;
    Matrix::from_text(&ring, &file.entries)
}

pub fn load_matrix(path: &Path) -> Result<Matrix> {
    parse_matrix(&read(path)?, &base_dir(path))
}

/// Moves over `ring` acting on rows of length `n`; indices are 1-based.
pub fn parse_moves(text: &str, ring: &Ring, n: usize) -> Result<Vec<ElementaryMove>> {
    let specs: Vec<MoveSpec> = serde_json::from_str(text)?;
    specs
        .iter()
        .map(|m| {
            for k in [m.i, m.j] {
                if k == 0 || k > n {
                    return Err(Error::IndexOutOfRange { index: k, len: n });
                }
            }
            ElementaryMove::new(m.i - 1, m.j - 1, ring.elem(&m.lambda)?)
        })
        .collect()
}

pub fn moves_to_json(moves: &[ElementaryMove]) -> Value {
    Value::Array(
        moves
            .iter()
            .map(|m| json!({"i": m.i + 1, "j": m.j + 1, "lambda": m.lambda.to_string()}))
            .collect(),
    )
}

pub fn parse_map(text: &str) -> Result<NumericMap> {
    let file: MapFile = serde_json::from_str(text)?;
    let vars = Vars::new(&file.vars);
    let polys = file
        .components
        .iter()
        .map(|c| parse_polynomial(c, &vars))
        .collect::<Result<Vec<_>>>()?;
    NumericMap::new(&polys)
}

pub fn load_map(path: &Path) -> Result<NumericMap> {
    parse_map(&read(path)?)
}

pub fn elements_to_json(v: &[RingElement]) -> Value {
    Value::Array(v.iter().map(|e| Value::String(e.to_string())).collect())
}

pub fn row_to_json(row: &UnimodularRow) -> Value {
    json!({
        "row": elements_to_json(row.entries()),
        "certificate": elements_to_json(row.certificate()),
    })
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.rows().iter().map(|r| elements_to_json(r)).collect())
}

/// `{"schema", "command", ...payload}`; `payload` must be an object.
pub fn envelope(command: &str, payload: Value) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("schema".into(), Value::String(SCHEMA.into()));
    out.insert("command".into(), Value::String(command.into()));
    if let Value::Object(fields) = payload {
        out.extend(fields);
    }
    Value::Object(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ratio;

    #[test]
    fn row_with_inline_ring() {
        let text = r#"{"ring": {"vars": ["x","y","z","w"], "relations": ["x^2+y^2+z^2+w^2-1"]},
                       "row": ["x","y","z","w"], "certificate": ["x","y","z","w"]}"#;
        let r = parse_row(text, Path::new(".")).unwrap();
        let row = r.certified().unwrap();
        assert!(row.pairing().is_one());
    }

    #[test]
    fn row_with_ring_path() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("q.json"), r#"{"vars": ["x"], "order": "lex"}"#).unwrap();
        let row = dir.path().join("r.json");
        fs::write(&row, r#"{"ring": "q.json", "row": ["x", "1 - x"]}"#).unwrap();
        let loaded = load_row(&row).unwrap();
        assert!(loaded.certificate.is_none());
        let c = loaded.certified().unwrap();
        assert!(c.pairing().is_one());
    }

    #[test]
    fn moves_are_one_based() {
        let ring = parse_ring(r#"{"vars": ["w"]}"#).unwrap();
        let m = parse_moves(r#"[{"i":1,"j":2,"lambda":"w"}]"#, &ring, 3).unwrap();
        assert_eq!((m[0].i, m[0].j), (0, 1));
        assert_eq!(moves_to_json(&m), json!([{"i":1,"j":2,"lambda":"w"}]));
        assert!(matches!(
            parse_moves(r#"[{"i":0,"j":2,"lambda":"1"}]"#, &ring, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_moves(r#"[{"i":2,"j":2,"lambda":"1"}]"#, &ring, 3),
            Err(Error::DegenerateMove(_))
        ));
    }

    #[test]
    fn map_file() {
        let m = parse_map(r#"{"vars": ["a","b"], "components": ["a*b", "a - 1/2"]}"#).unwrap();
        assert_eq!((m.source_dim(), m.target_dim()), (2, 2));
        assert!(m.exactness_gap(&[ratio(1, 3), ratio(3, 1)]).unwrap() < 1e-15);
        assert!(matches!(
            parse_map(r#"{"vars": ["a"], "components": ["b"]}"#),
            Err(Error::UndeclaredVariable(_))
        ));
    }

    #[test]
    fn envelope_keeps_payload() {
        let v = envelope("hopf", json!({"linking": 1}));
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["linking"], 1);
    }

    #[test]
    fn malformed_json_is_input_error() {
        let e = parse_ring("{").unwrap_err();
        assert!(e.is_input_error());
    }
}
