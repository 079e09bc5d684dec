//! JSON and TSV file formats.
//!
//! Complexes: `{"n": 5, "facets": [[1,4],[2,3]]}` or
//! `{"n": 5, "minimal_nonfaces": [[1,2],[1,3]]}` (exactly one of the two lists).
//! Tables: `{"n": 3, "entries": [{"A": [], "b": [1,2,3], "dim": 1}]}`.
//!
//! Parsing walks the JSON value by hand so every error names the offending key
//! path, e.g. `facets[2][1]`.

use serde_json::{json, Map, Value};

use crate::complex::SimplicialComplex;
use crate::cotangent::{MultiDegree, T1Table};
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_GROUND};

fn object<'a>(value: &'a Value, key: &str) -> Result<&'a Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| Error::format(key, "expected a JSON object"))
}

fn reject_unknown(map: &Map<String, Value>, allowed: &[&str], prefix: &str) -> Result<()> {
    match map.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::format(format!("{prefix}{k}"), "unknown key")),
        None => Ok(()),
    }
}

fn count(value: Option<&Value>, key: &str) -> Result<usize> {
    let value = value.ok_or_else(|| Error::format(key, "missing"))?;
    value
        .as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| {
            Error::format(
                key,
                format!("expected a nonnegative integer, found {value}"),
            )
        })
}

fn ground_size(map: &Map<String, Value>) -> Result<usize> {
    let n = count(map.get("n"), "n")?;
    if n > MAX_GROUND {
        return Err(Error::format(
            "n",
            format!("{n} exceeds the limit {MAX_GROUND}"),
        ));
    }
    Ok(n)
}

fn vertex_set(value: &Value, n: usize, key: &str) -> Result<VertexSet> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::format(key, "expected an array of vertices"))?;
    let mut set = VertexSet::EMPTY;
    for (i, item) in items.iter().enumerate() {
        let path = format!("{key}[{i}]");
        let v = count(Some(item), &path)?;
        if v == 0 || v > n {
            return Err(Error::format(path, format!("vertex {v} outside 1..={n}")));
        }
        if set.contains(v) {
            return Err(Error::format(path, format!("duplicate vertex {v}")));
        }
        set = set.with(v);
    }
    Ok(set)
}

fn set_list(value: &Value, n: usize, key: &str) -> Result<Vec<VertexSet>> {
    value
        .as_array()
        .ok_or_else(|| Error::format(key, "expected an array of vertex lists"))?
        .iter()
        .enumerate()
        .map(|(i, item)| vertex_set(item, n, &format!("{key}[{i}]")))
        .collect()
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let value: Value = serde_json::from_str(text)?;
    let map = object(&value, "$")?;
    reject_unknown(map, &["n", "facets", "minimal_nonfaces"], "")?;
    let n = ground_size(map)?;
    match (map.get("facets"), map.get("minimal_nonfaces")) {
        (Some(_), Some(_)) => Err(Error::format(
            "minimal_nonfaces",
            "cannot be combined with `facets`",
        )),
        (None, None) => Err(Error::format(
            "facets",
            "missing (or give `minimal_nonfaces`)",
        )),
        (Some(facets), None) => SimplicialComplex::from_facets(n, set_list(facets, n, "facets")?),
        (None, Some(nonfaces)) => {
            let sets = set_list(nonfaces, n, "minimal_nonfaces")?;
            if let Some(i) = sets.iter().position(|s| s.is_empty()) {
                return Err(Error::format(
                    format!("minimal_nonfaces[{i}]"),
                    "the empty set would make the complex void",
                ));
            }
            SimplicialComplex::from_minimal_nonfaces(n, sets)
        }
    }
}

pub fn parse_table(text: &str) -> Result<T1Table> {
    let value: Value = serde_json::from_str(text)?;
    let map = object(&value, "$")?;
    reject_unknown(map, &["n", "entries"], "")?;
    let n = ground_size(map)?;
    let entries = map
        .get("entries")
        .ok_or_else(|| Error::format("entries", "missing"))?
        .as_array()
        .ok_or_else(|| Error::format("entries", "expected an array"))?;
    let mut table = T1Table::new(n)?;
    for (i, entry) in entries.iter().enumerate() {
        let key = format!("entries[{i}]");
        let fields = object(entry, &key)?;
        reject_unknown(fields, &["A", "b", "dim"], &format!("{key}."))?;
        let field = |name: &str| {
            fields
                .get(name)
                .ok_or_else(|| Error::format(format!("{key}.{name}"), "missing"))
        };
        let a = vertex_set(field("A")?, n, &format!("{key}.A"))?;
        let b = vertex_set(field("b")?, n, &format!("{key}.b"))?;
        let dim = count(Some(field("dim")?), &format!("{key}.dim"))?;
        if b.is_empty() {
            return Err(Error::format(format!("{key}.b"), "must be nonempty"));
        }
        if dim == 0 {
            return Err(Error::format(
                format!("{key}.dim"),
                "only positive dimensions are stored",
            ));
        }
        let degree =
            MultiDegree::new(a, b).map_err(|e| Error::format(key.clone(), e.to_string()))?;
        if table.insert(degree, dim)?.is_some() {
            return Err(Error::format(key, format!("duplicate degree {degree}")));
        }
    }
    Ok(table)
}

pub fn complex_to_json(delta: &SimplicialComplex) -> String {
    format!(
        "{{\"n\":{},\"facets\":{}}}",
        delta.n(),
        json!(delta.facets())
    )
}

/// One compact line per entry, e.g. `{"A":[],"b":[1,2,3],"dim":1}`.
pub fn entry_json(degree: &MultiDegree, dim: usize) -> String {
    format!(
        "{{\"A\":{},\"b\":{},\"dim\":{}}}",
        json!(degree.positive()),
        json!(degree.negative()),
        dim
    )
}

pub fn table_to_json(table: &T1Table) -> String {
    let lines: Vec<String> = table
        .iter()
        .map(|(d, dim)| format!("    {}", entry_json(d, *dim)))
        .collect();
    if lines.is_empty() {
        return format!("{{\n  \"n\": {},\n  \"entries\": []\n}}\n", table.n());
    }
    format!(
        "{{\n  \"n\": {},\n  \"entries\": [\n{}\n  ]\n}}\n",
        table.n(),
        lines.join(",\n")
    )
}

fn comma_list(s: VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn tsv_header() -> &'static str {
    "A\tb\tdim"
}

pub fn entry_tsv(degree: &MultiDegree, dim: usize) -> String {
    format!(
        "{}\t{}\t{}",
        comma_list(degree.positive()),
        comma_list(degree.negative()),
        dim
    )
}

pub fn table_to_tsv(table: &T1Table) -> String {
    let mut out = String::from(tsv_header());
    out.push('\n');
    for (d, dim) in table {
        out.push_str(&entry_tsv(d, *dim));
        out.push('\n');
    }
    out
}
