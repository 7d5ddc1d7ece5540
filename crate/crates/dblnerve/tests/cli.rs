//! The binary, run as a subprocess on the shipped JSON files.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn examples() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples")
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_dblnerve"))
        .args(args)
        .current_dir(examples())
        .output()
        .expect("binary runs");
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().expect("exit code"), report)
}

#[test]
fn fibrancy_of_h_iso_fails_with_a_witness() {
    let (code, r) = run(&["fibrancy", "h-iso.json"]);
    assert_eq!(code, 1);
    assert_eq!(r["holds"], false);
    assert!(r["witness"].as_str().unwrap().contains("f' = "));
    assert_eq!(run(&["fibrancy", "hsim-iso.json"]).0, 0);
}

#[test]
fn nerve_compare_on_the_free_square() {
    let (code, r) = run(&[
        "nerve",
        "free-square.json",
        "--m",
        "1",
        "--k",
        "1",
        "--n",
        "0",
        "--compare",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["count"], r["oracle_count"]);
    assert_eq!(r["agree"], true);
}

#[test]
fn nerve2_hsim_of_iso_counts_adjoint_equivalences() {
    let (code, r) = run(&[
        "nerve2",
        "iso.json",
        "--variant",
        "hsim",
        "--m",
        "0",
        "--k",
        "1",
        "--n",
        "0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["count"], 4);
    let (code, r) = run(&[
        "nerve2",
        "iso.json",
        "--variant",
        "h",
        "--m",
        "1",
        "--k",
        "0",
        "--n",
        "1",
        "--compare-retract",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["retract"], true);
}

#[test]
fn nerve_list_includes_elements_and_faces() {
    let (code, r) = run(&[
        "nerve",
        "h-iso.json",
        "--m",
        "0",
        "--k",
        "1",
        "--n",
        "0",
        "--list",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["elements"].as_array().unwrap().len(), 2);
    assert_eq!(r["faces"]["vertical"].as_array().unwrap().len(), 2);
}

#[test]
fn functor_commands() {
    let maps = |f: &str| format!("maps/{f}");
    let inc = maps("h-iso-to-hsim-iso.json");
    assert_eq!(run(&["tfib", "h-iso.json", "hsim-iso.json", &inc]).0, 1);
    assert_eq!(run(&["dbl-bieq", "h-iso.json", "hsim-iso.json", &inc]).0, 0);
    assert_eq!(
        run(&["rlp", "h-iso.json", "hsim-iso.json", &inc, "--set", "I"]).0,
        1
    );
    let proj = maps("free-square-to-point.json");
    assert_eq!(
        run(&["rlp", "free-square.json", "point.json", &proj, "--set", "I"]).0,
        1
    );
    let id = maps("iso-identity.json");
    assert_eq!(run(&["bieq", "iso.json", "iso.json", &id]).0, 0);
    assert_eq!(run(&["tfib", "iso.json", "iso.json", &id]).0, 0);
    assert_eq!(
        run(&["rlp", "iso.json", "iso.json", &id, "--set", "J2"]).0,
        0
    );
    // Kinds that do not fit the command.
    assert_eq!(run(&["bieq", "h-iso.json", "hsim-iso.json", &inc]).0, 2);
}

#[test]
fn whi_commands() {
    let (code, r) = run(&["whi-check", "hsim-iso.json"]);
    assert_eq!(code, 0);
    let whi: Vec<String> = r["squares"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["whi"] == true)
        .map(|s| s["square"].as_str().unwrap().to_string())
        .collect();
    assert!(!whi.is_empty());
    let (code, r) = run(&["weak-inverse", "hsim-iso.json", "--square", &whi[0]]);
    assert_eq!(code, 0);
    assert_eq!(r["agree"], true);
    assert_eq!(
        run(&["whi-check", "hsim-iso.json", "--square", &whi[0]]).0,
        0
    );
    assert_eq!(run(&["whi-invariant", "hsim-iso.json"]).0, 0);
    assert_eq!(run(&["whi-invariant", "h-iso.json"]).0, 1);
    assert_eq!(
        run(&["whi-check", "hsim-iso.json", "--square", "nope"]).0,
        2
    );
}

#[test]
fn segal_and_validate() {
    assert_eq!(run(&["segal", "free-square.json", "--k", "2"]).0, 0);
    let (code, r) = run(&["validate", "oriental-inv-2.json"]);
    assert_eq!(code, 0);
    assert_eq!(r["kind"], "two-category");
}

#[test]
fn errors_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("dblnerve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"kind": "double-category", "objects": ["A"], "squares": [{"name": "s", "top": "f", "bottom": "id[A]", "left": "e[A]", "right": "e[A]"}]}"#,
    )
    .unwrap();
    let (code, r) = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(r["error"], "SchemaError");
    assert!(r["message"].as_str().unwrap().contains("squares[0].top"));
    assert_eq!(run(&["validate", "missing.json"]).0, 2);
    assert_eq!(run(&["nerve", "free-square.json", "--m", "1"]).0, 2);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn shapes_emit_matches_shipped_files_and_is_stable() {
    for (family, file) in [
        ("iso", "iso.json"),
        ("free-square", "free-square.json"),
        ("h-iso", "h-iso.json"),
    ] {
        let (code, r) = run(&["shapes", "emit", "--family", family]);
        assert_eq!(code, 0);
        let shipped: Value =
            serde_json::from_str(&std::fs::read_to_string(examples().join(file)).unwrap()).unwrap();
        assert_eq!(r, shipped, "{family}");
    }
    let first = run(&[
        "shapes",
        "emit",
        "--family",
        "adjoint",
        "--n",
        "3",
        "--variant",
        "horn-1",
    ]);
    assert_eq!(
        first,
        run(&[
            "shapes",
            "emit",
            "--family",
            "adjoint",
            "--n",
            "3",
            "--variant",
            "horn-1"
        ])
    );
    assert_eq!(first.1["kind"], "presentation");
}
