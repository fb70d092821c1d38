use std::fs;

use weylpoly::cache::{load, load_or_build, store, CacheStatus, CACHE_SCHEMA};
use weylpoly::{Error, Generator, RootSystem, TableKind, VariableMode};

fn a2() -> RootSystem {
    RootSystem::from_name("A2").unwrap()
}

#[test]
fn store_then_load_returns_the_same_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    let rs = a2();
    let table = Generator::new(rs.clone())
        .build_table(TableKind::C, VariableMode::Orbit, 4)
        .unwrap();
    store(&path, &rs, &table).unwrap();
    let back = load(&path, &rs, TableKind::C, VariableMode::Orbit, 4).unwrap().unwrap();
    assert_eq!(back, table);
    assert!(load(&path, &rs, TableKind::S, VariableMode::Orbit, 4)
        .unwrap()
        .is_none());
}

#[test]
fn cached_table_matches_fresh_build() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    let rs = a2();
    let (first, status) = load_or_build(
        &path,
        &mut Generator::new(rs.clone()),
        TableKind::C,
        VariableMode::Orbit,
        5,
    )
    .unwrap();
    assert_eq!(status, CacheStatus::Miss);
    let bytes = fs::read(&path).unwrap();
    let (cached, status) = load_or_build(
        &path,
        &mut Generator::new(rs.clone()),
        TableKind::C,
        VariableMode::Orbit,
        5,
    )
    .unwrap();
    assert_eq!(status, CacheStatus::Hit);
    let fresh = Generator::new(rs.clone())
        .build_table(TableKind::C, VariableMode::Orbit, 5)
        .unwrap();
    for (w, p) in &fresh.entries {
        assert_eq!(cached.entries.get(w), Some(p), "entry {w}");
    }
    assert_eq!(cached.entries.len(), fresh.entries.len());
    assert_eq!(cached, first);
    // A hit does not rewrite the file, and storing again is byte-identical.
    assert_eq!(fs::read(&path).unwrap(), bytes);
    store(&path, &rs, &fresh).unwrap();
    assert_eq!(fs::read(&path).unwrap(), bytes);
}

#[test]
fn several_tables_share_one_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    let rs = a2();
    let mut gen = Generator::new(rs.clone());
    let c = gen.build_table(TableKind::C, VariableMode::Orbit, 3).unwrap();
    let s = gen.build_table(TableKind::S, VariableMode::Character, 4).unwrap();
    store(&path, &rs, &c).unwrap();
    store(&path, &rs, &s).unwrap();
    assert_eq!(load(&path, &rs, TableKind::C, VariableMode::Orbit, 3).unwrap(), Some(c));
    assert_eq!(
        load(&path, &rs, TableKind::S, VariableMode::Character, 4).unwrap(),
        Some(s)
    );
}

#[test]
fn corrupted_file_is_rebuilt_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    let rs = a2();
    fs::write(&path, "{\"schema\": \"weylpoly-cache/1\", \"tables\": [").unwrap();
    assert!(matches!(
        load(&path, &rs, TableKind::C, VariableMode::Orbit, 2),
        Err(Error::Cache(_))
    ));
    let (table, status) = load_or_build(
        &path,
        &mut Generator::new(rs.clone()),
        TableKind::C,
        VariableMode::Orbit,
        2,
    )
    .unwrap();
    assert!(status.warning().unwrap().contains("corrupted"));
    assert_eq!(
        table,
        Generator::new(rs.clone())
            .build_table(TableKind::C, VariableMode::Orbit, 2)
            .unwrap()
    );
    assert_eq!(
        load(&path, &rs, TableKind::C, VariableMode::Orbit, 2).unwrap(),
        Some(table)
    );
}

#[test]
fn other_schema_version_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    let rs = a2();
    fs::write(&path, "{\"schema\": \"weylpoly-cache/0\", \"tables\": []}").unwrap();
    let (_, status) = load_or_build(
        &path,
        &mut Generator::new(rs.clone()),
        TableKind::C,
        VariableMode::Orbit,
        2,
    )
    .unwrap();
    assert!(matches!(status, CacheStatus::Rebuilt(ref w) if w.contains("schema")));
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.contains(CACHE_SCHEMA));
}

#[test]
fn tampered_entry_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    let rs = a2();
    let table = Generator::new(rs.clone())
        .build_table(TableKind::C, VariableMode::Orbit, 2)
        .unwrap();
    store(&path, &rs, &table).unwrap();
    let text = fs::read_to_string(&path)
        .unwrap()
        .replace("\"weight\":[1,1]", "\"weight\":[1,1,1]");
    fs::write(&path, text).unwrap();
    assert!(matches!(
        load(&path, &rs, TableKind::C, VariableMode::Orbit, 2),
        Err(Error::Cache(_))
    ));
}
