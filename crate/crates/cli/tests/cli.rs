use std::process::{Command, Output};

fn weylpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylpoly"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cpoly_latex() {
    let o = weylpoly(&["cpoly", "--algebra", "A2", "--weight", "1,1", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "X_1X_2 - 3\n");
}

#[test]
fn g2_recursion_line() {
    let o = weylpoly(&["recursion", "--algebra", "G2", "--var", "2", "--weight", "0,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "X_2C_{(0,2)} = C_{(0,3)} + C_{(1,1)} + 2X_1 + X_2\n");
}

#[test]
fn s_recursion_defaults_to_rho() {
    let o = weylpoly(&["recursion", "--algebra", "A1", "--kind", "S"]);
    assert_eq!(stdout(&o), "X_1S = S_{(2)}\n");
}

#[test]
fn verify_c2_tables() {
    let o = weylpoly(&["verify", "--algebra", "C2", "--suite", "tables", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("PASS [tables] C2 C-polynomials"), "{text}");
    assert!(text.contains("PASS [tables] C2 S-polynomials"), "{text}");
}

#[test]
fn verify_json_is_deterministic() {
    let args = [
        "verify",
        "--algebra",
        "A2",
        "--suite",
        "recursions",
        "--seed",
        "3",
        "--format",
        "json",
    ];
    let a = weylpoly(&args);
    let b = weylpoly(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["pass"], serde_json::json!(true));
    assert_eq!(v["seed"], serde_json::json!(3));
}

#[test]
fn product_and_characters() {
    let o = weylpoly(&["product", "--algebra", "G2", "--weight", "0,1", "--weight", "0,1"]);
    assert_eq!(stdout(&o), "C_{(0,1)}C_{(0,1)} = C_{(0,2)} + 2X_1 + 2X_2 + 6\n");
    let o = weylpoly(&["char", "--algebra", "G2", "--weight", "1,1"]);
    assert_eq!(
        stdout(&o),
        "chi_{(1,1)} = C_{(1,1)} + 2C_{(0,2)} + 2X_1 + 4X_2 + 4\tdim 64\n"
    );
    let o = weylpoly(&["invchar", "--algebra", "G2", "--weight", "1,1"]);
    assert_eq!(stdout(&o), "C_{(1,1)} = chi_{(1,1)} - 2chi_{(0,2)} + 2\n");
}

#[test]
fn table_flags_misprinted_entries() {
    let o = weylpoly(&["table", "--algebra", "G2", "--max-weight", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let flagged: Vec<_> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e.get("erratum").is_some())
        .map(|e| e["weight"].clone())
        .collect();
    assert!(flagged.contains(&serde_json::json!([0, 3])));
    assert!(!flagged.contains(&serde_json::json!([1, 1])));
}

#[test]
fn table_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let cache = cache.to_str().unwrap();
    let args = ["table", "--algebra", "A2", "--max-weight", "4", "--cache", cache];
    let fresh = weylpoly(&args[..5]);
    let first = weylpoly(&args);
    let second = weylpoly(&args);
    assert_eq!(first.stdout, fresh.stdout);
    assert_eq!(second.stdout, fresh.stdout);
    std::fs::write(cache, "not json").unwrap();
    let third = weylpoly(&args);
    assert_eq!(third.status.code(), Some(0));
    assert_eq!(third.stdout, fresh.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("warning"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        weylpoly(&["cpoly", "--algebra", "A2", "--weight", "1,1,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        weylpoly(&["cpoly", "--algebra", "A2", "--weight", "-1,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        weylpoly(&["spoly", "--algebra", "A2", "--weight", "0,1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        weylpoly(&["cpoly", "--algebra", "Q9", "--weight", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        weylpoly(&["cpoly", "--algebra", "A2", "--unknown"]).status.code(),
        Some(64)
    );
    assert_eq!(weylpoly(&["frobnicate", "--algebra", "A2"]).status.code(), Some(64));
    assert_eq!(weylpoly(&["cpoly", "--algebra", "A2"]).status.code(), Some(64));
    assert_eq!(weylpoly(&["--help"]).status.code(), Some(0));
}

#[test]
fn dims_report_for_g2() {
    let o = weylpoly(&["dims", "--algebra", "G2", "--weight", "1,1"]);
    let text = stdout(&o);
    assert!(text.contains("dimensions: 1 7 14 27 64"), "{text}");
    assert!(text.contains("(1,1): 4·1 + 4·6 + 2·6 + 2·6 + 1·12 = 64"), "{text}");
}
