use std::process::Command;

use lefschetz::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["lefschetz"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn scalar_commands() {
    assert_eq!(call(&["count", "pp", "2", "2", "2", "--method", "det"]), (0, "20\n".into(), String::new()));
    for method in ["perm", "brute", "formula"] {
        assert_eq!(call(&["count", "pp", "2", "2", "2", "--method", method]).1, "20\n");
    }
    assert_eq!(call(&["count", "spp", "2", "2", "2", "--method", "brute"]).1, "10\n");
    assert_eq!(call(&["snf", "--mr", "4", "4", "4", "4"]).1, "(2, 10)\n");
    assert_eq!(call(&["snf", "--upmap", "4", "4", "4", "-r", "3"]).1, "(1, 1, 1, 1, 1, 1, 1, 1, 1, 2)\n");
    assert_eq!(call(&["snf", "--upmap", "4", "4", "4"]).0, 2);
    assert_eq!(call(&["snf", "-r", "3"]).0, 2);
    assert_eq!(call(&["snf"]).0, 2);
    assert_eq!(call(&["snf", "--mr", "4", "4", "4", "4", "--upmap", "2", "2", "-r", "1"]).0, 2);
}

#[test]
fn json_output_parses() {
    let (code, out, _) = call(&["--format", "json", "hilbert", "3", "3", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["h"], serde_json::json!(["1", "3", "6", "7", "6", "3", "1"]));
    let (code, out, _) = call(&["--format", "json", "verify", "bijection", "2", "2", "2"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["theorem"], "bijection");
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn csv_quotes_every_field() {
    let (code, out, _) = call(&["--format", "csv", "verify", "det", "pp", "2", "2", "2"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        r#""theorem","params","case","expected","actual","passed","note""#
    );
    for line in lines {
        assert!(line.starts_with("\"det-identity\",\""), "{line}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["--help"]).0, 0);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["count", "pp", "2", "2"]).0, 2);
    let (code, _, err) = call(&["count", "spp", "2", "3", "4"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    assert_eq!(call(&["verify", "det", "tcpp", "2", "2", "2"]).0, 0);
    assert_eq!(call(&["verify", "det", "tcpp", "2", "2", "1"]).0, 1);
    assert_eq!(call(&["grid", "no-such-suite"]).0, 2);
}

#[test]
fn schur_commands() {
    let (code, out, _) = call(&["schur", "expand", "3,2/1"]);
    assert_eq!(code, 0);
    assert!(out.contains("(3,1)") && out.contains("(2,2)"), "{out}");
    let (code, out, _) = call(&["schur", "legal", "6,3/1", "--c", "3", "--n", "7"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("legal"), "{out}");
    assert_eq!(call(&["schur", "decompose", "5,2", "--c", "3", "--n", "6"]).0, 0);
}

#[test]
fn seeded_runs_are_deterministic() {
    let a = call(&["--seed", "7", "--trials", "5", "verify", "toeplitz"]);
    let b = call(&["--seed", "7", "--trials", "5", "verify", "toeplitz"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
}

#[test]
fn seed_from_environment() {
    let bin = env!("CARGO_BIN_EXE_lefschetz");
    let run_with = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(bin);
        cmd.env_remove("LEFSCHETZ_SEED");
        if let Some(s) = env {
            cmd.env("LEFSCHETZ_SEED", s);
        }
        if let Some(s) = flag {
            cmd.args(["--seed", s]);
        }
        let o = cmd.args(["--trials", "3", "--format", "json", "verify", "toeplitz"]).output().unwrap();
        assert!(o.status.success());
        String::from_utf8(o.stdout).unwrap()
    };
    assert_eq!(run_with(Some("11"), None), run_with(None, Some("11")));
    assert_ne!(run_with(Some("11"), None), run_with(None, None));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("lefschetz-cli-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["--output", p, "count", "pp", "1", "1", "1"]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "2\n");
    std::fs::remove_file(path).unwrap();
}
