use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclic-ainf")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn theorem_suite_exits_zero() {
    let (code, json) = run(&["--suite", "theorem-cyclic", "--max-size", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["failed"], 0);
}

#[test]
fn corrupted_category_exits_one_with_a_tuple() {
    let (code, json) = run(&["--suite", "ainf-laws", "--max-size", "2", "--mutate", "flip-sign"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(!v["failures"][0]["witness"]["violation"]["tuple"].as_array().unwrap().is_empty());
}

#[test]
fn bad_field_is_a_config_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclic-ainf"))
        .args(["--suite", "hom-table", "--field", "p4"])
        .output()
        .unwrap();
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn ribbon_input_file() {
    let dir = std::env::temp_dir().join(format!("cyclic-ainf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("loop.json");
    std::fs::write(&path, r#"{"half_edges":[0,1],"sigma":[[0,1]],"alpha":[[0,1]]}"#).unwrap();
    let (code, json) = run(&["--suite", "ribbon-diagram", "--graph", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{json}");
    let (code, dot) = run(&["--export", "--dot", "--graph", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(dot.contains("v0 -- v0"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn graded_hom_table() {
    let (code, json) = run(&["--suite", "hom-table", "--max-size", "4", "--pair", "{1/8, 5/8}"]);
    assert_eq!(code, 0, "{json}");
}

#[test]
fn export_is_valid_json() {
    let (code, json) = run(&["--export", "--max-len", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["functors"].as_array().unwrap().len(), 6);
}
