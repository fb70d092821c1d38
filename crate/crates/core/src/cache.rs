//! On-disk cache of generated polynomial tables.
//!
//! The file is one canonical JSON document (sorted keys, compact) of the form
//! `{"schema": "weylpoly-cache/1", "tables": [...]}` where each table is the
//! [`PolyTable::to_json`] form. A file that fails to parse or carries another
//! schema tag is treated as absent and rebuilt.

use crate::error::{Error, Result};
use crate::genpoly::{Generator, PolyTable, TableKind, VariableMode};
use crate::rootsys::RootSystem;
use serde_json::{json, Value};
use std::fs;
use std::path::Path;

pub const CACHE_SCHEMA: &str = "weylpoly-cache/1";

/// How a table was obtained by [`load_or_build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    /// The cache file was unusable; the message says why.
    Rebuilt(String),
}

impl CacheStatus {
    pub fn warning(&self) -> Option<&str> {
        match self {
            CacheStatus::Rebuilt(w) => Some(w),
            _ => None,
        }
    }
}

fn read_document(path: &Path) -> Result<Option<Value>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
    };
    let doc: Value =
        serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: corrupted cache ({e})", path.display())))?;
    match doc.get("schema").and_then(Value::as_str) {
        Some(CACHE_SCHEMA) => {}
        Some(other) => {
            return Err(Error::Cache(format!(
                "{}: schema `{other}` does not match `{CACHE_SCHEMA}`",
                path.display()
            )))
        }
        None => return Err(Error::Cache(format!("{}: missing schema tag", path.display()))),
    }
    if !doc.get("tables").is_some_and(Value::is_array) {
        return Err(Error::Cache(format!("{}: missing table list", path.display())));
    }
    Ok(Some(doc))
}

fn same_key(v: &Value, t: &PolyTable) -> bool {
    v["algebra"] == json!(t.algebra.to_string())
        && v["kind"] == json!(t.kind.to_string())
        && v["variables"] == json!(t.mode.to_string())
        && v["max_weight"] == json!(t.max_weight)
}

/// Looks up a table. `Ok(None)` when the file or the entry is absent;
/// `Err(Error::Cache)` when the file is corrupted or has another schema.
pub fn load(
    path: &Path,
    rs: &RootSystem,
    kind: TableKind,
    mode: VariableMode,
    max_weight: u32,
) -> Result<Option<PolyTable>> {
    let Some(doc) = read_document(path)? else {
        return Ok(None);
    };
    let probe = PolyTable {
        algebra: rs.algebra(),
        kind,
        mode,
        max_weight,
        entries: Default::default(),
    };
    let tables = doc["tables"].as_array().expect("checked by read_document");
    match tables.iter().find(|v| same_key(v, &probe)) {
        Some(v) => PolyTable::from_json(rs, v)
            .map(Some)
            .map_err(|e| Error::Cache(format!("{}: corrupted entry ({e})", path.display()))),
        None => Ok(None),
    }
}

/// Adds or replaces a table. An unusable existing file is overwritten.
pub fn store(path: &Path, rs: &RootSystem, table: &PolyTable) -> Result<()> {
    let mut tables: Vec<Value> = match read_document(path) {
        Ok(Some(doc)) => doc["tables"].as_array().cloned().unwrap_or_default(),
        _ => Vec::new(),
    };
    tables.retain(|v| !same_key(v, table));
    tables.push(table.to_json(rs));
    tables.sort_by_key(|v| v.to_string());
    let doc = json!({ "schema": CACHE_SCHEMA, "tables": tables });
    let tmp = path.with_extension("tmp");
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
    fs::write(&tmp, format!("{doc}\n")).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

/// Returns the cached table if present, otherwise builds and stores it.
pub fn load_or_build(
    path: &Path,
    generator: &mut Generator,
    kind: TableKind,
    mode: VariableMode,
    max_weight: u32,
) -> Result<(PolyTable, CacheStatus)> {
    let rs = generator.root_system().clone();
    let status = match load(path, &rs, kind, mode, max_weight) {
        Ok(Some(t)) => return Ok((t, CacheStatus::Hit)),
        Ok(None) => CacheStatus::Miss,
        Err(Error::Cache(msg)) => CacheStatus::Rebuilt(format!("{msg}; recomputing")),
        Err(e) => return Err(e),
    };
    let table = generator.build_table(kind, mode, max_weight)?;
    store(path, &rs, &table)?;
    Ok((table, status))
}
