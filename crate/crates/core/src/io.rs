//! Polytope files: `{"dim": n, "vertices": [["p/q", ...], ...]}`.
//!
//! Coordinates may be JSON integers or rational strings.

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linear::{parse_rat, Rat, Vector};
use crate::polytope::Polytope;

#[derive(Serialize)]
struct PolytopeFile {
    dim: usize,
    vertices: Vec<Vector>,
}

fn coord(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rat(&n.to_string()),
        other => Err(Error::Parse(format!("coordinate must be an integer or \"p/q\" string, got {other}"))),
    }
}

/// Parses a polytope file and returns the canonical hull of its vertices.
pub fn parse_polytope(text: &str) -> Result<Polytope> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let dim = root
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing or invalid \"dim\"".into()))? as usize;
    if dim == 0 {
        return Err(Error::Parse("\"dim\" must be positive".into()));
    }
    let rows = root
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing or invalid \"vertices\"".into()))?;
    if rows.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut points = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse(format!("vertex {i} is not an array")))?;
        if row.len() != dim {
            return Err(Error::Parse(format!(
                "ragged vertex row {i}: expected {dim} coordinates, got {}",
                row.len()
            )));
        }
        points.push(Vector::new(row.iter().map(coord).collect::<Result<_>>()?));
    }
    Polytope::hull(&points)
}

/// Canonical JSON form (string coordinates).
pub fn polytope_to_json(p: &Polytope) -> Value {
    serde_json::to_value(PolytopeFile { dim: p.ambient_dim(), vertices: p.vertices().to_vec() })
        .expect("serialisable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_coordinates() {
        let p = parse_polytope(r#"{"dim": 2, "vertices": [[0, 0], ["1", 0], [0, "1/1"], ["1/4", "1/4"]]}"#)
            .unwrap();
        assert_eq!(p.vertices().len(), 3);
        let back = polytope_to_json(&p);
        assert_eq!(back["vertices"][2], serde_json::json!(["1", "0"]));
        assert_eq!(parse_polytope(&back.to_string()).unwrap(), p);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(
            parse_polytope(r#"{"dim": 2, "vertices": [[0, 0], [1]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(parse_polytope(r#"{"dim": 2, "vertices": []}"#).is_err());
        assert!(parse_polytope(r#"{"dim": 2, "vertices": [[0.5, 0]]}"#).is_err());
        assert!(parse_polytope(r#"{"vertices": [[0, 0]]}"#).is_err());
        assert!(parse_polytope("not json").is_err());
    }
}
