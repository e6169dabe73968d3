use std::io::Write;
use std::process::{Command, Output, Stdio};

const SMALL: &str = "ring R = GF(5)[x, y] / (x^2, y^2)\nmodule M = coker [[x, y]]\nabdim M\n";

fn run(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_abdim"));
    cmd.args(args)
        .env_remove("ABDIM_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> (i32, serde_json::Value) {
    let dir = tempdir();
    let path = dir.join("out.json");
    let mut all: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    all.extend(["--json", &p]);
    let out = run(&all, stdin, env);
    let v = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    let _ = std::fs::remove_dir_all(&dir);
    (out.status.code().unwrap(), v)
}

fn tempdir() -> std::path::PathBuf {
    use std::sync::atomic::{AtomicUsize, Ordering};
    static N: AtomicUsize = AtomicUsize::new(0);
    let d = std::env::temp_dir().join(format!(
        "abdim-cli-{}-{}",
        std::process::id(),
        N.fetch_add(1, Ordering::SeqCst)
    ));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn success_reads_stdin() {
    let out = run(&[], SMALL, &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("AB-dim"), "{text}");
    assert!(out.stderr.is_empty());
    assert_eq!(run(&["-"], SMALL, &[]).status.code(), Some(0));
}

#[test]
fn parse_errors_exit_with_2() {
    let out = run(&[], "ring R = QQ[x] / (x^2\nsocle", &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("syntax error at line"), "{err}");
}

#[test]
fn computation_errors_exit_with_1() {
    let (code, v) = json_of(&[], "ring R = QQ[x] / (x^2 - 1)\nsocle", &[]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "computation_error");
    let out = run(&["/nonexistent/session.abd"], "", &[]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn seed_from_environment_and_flag() {
    let (_, v) = json_of(&[], SMALL, &[("ABDIM_SEED", "11")]);
    assert_eq!(v["seed"], 11);
    let (_, v) = json_of(&["--seed", "4"], SMALL, &[("ABDIM_SEED", "11")]);
    assert_eq!(v["seed"], 4);
    let (_, v) = json_of(&[], SMALL, &[]);
    assert_eq!(v["seed"], 0);
}

#[test]
fn json_report_shape() {
    let (code, v) = json_of(&["--bound", "6", "--quiet"], SMALL, &[]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["bound"], 6);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["results"].as_array().unwrap().len(), 3);
    assert_eq!(v["results"][2]["input"], "abdim M");
}

#[test]
fn quiet_suppresses_text() {
    let out = run(&["--quiet"], SMALL, &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}
