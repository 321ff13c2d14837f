use std::fs;
use std::process::Command;

fn structedit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_structedit"))
}

#[test]
fn run_writes_output_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.js");
    let script = dir.path().join("script.txt");
    fs::write(&input, "f(a, b);").unwrap();
    fs::write(&script, "# rename a\nsearch \"a\" deep\nrename \"upper($0)\"\n").unwrap();
    let trace = dir.path().join("trace.jsonl");
    let output = dir.path().join("out.js");
    let st = structedit()
        .args(["run", "--input"])
        .arg(&input)
        .arg("--script")
        .arg(&script)
        .arg("--trace")
        .arg(&trace)
        .arg("--output")
        .arg(&output)
        .status()
        .unwrap();
    assert!(st.success());
    assert_eq!(fs::read_to_string(&output).unwrap(), "f(A, b);\n");
    let lines: Vec<serde_json::Value> =
        fs::read_to_string(&trace).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["command"], serde_json::Value::Null);
    assert_eq!(lines[2]["command"], "rename \"upper($0)\"");
    assert_eq!(lines[2]["snapshot"]["text"], "f(A, b);\n");
}

#[test]
fn rejected_step_exits_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.js");
    let script = dir.path().join("script.txt");
    fs::write(&input, "f();").unwrap();
    fs::write(&script, "parent\nbranch all\n").unwrap();
    let out = structedit().args(["run", "--input"]).arg(&input).arg("--script").arg(&script).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.trim(), "error: step 2 (line 2, `branch all`) rejected: no pending branch");
}

#[test]
fn fmt_prints_canonical_text() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.js");
    fs::write(&input, "let  x=[1,2];").unwrap();
    let out = structedit().args(["fmt", "--input"]).arg(&input).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "let x = [1, 2];\n");
    fs::write(&input, "let x = ;").unwrap();
    let out = structedit().args(["fmt", "--input"]).arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
