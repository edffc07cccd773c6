use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detstringy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_json() {
    let out = run(&[
        "compute",
        "--r",
        "3",
        "--k",
        "2",
        "--variety",
        "affine",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let exps: Vec<i64> = v["stringyE"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["exponent"].as_i64().unwrap())
        .collect();
    assert_eq!(exps, vec![6, 7, 8]);
    assert_eq!(v["eulerNumber"], "3");
    assert_eq!(v["nonNegative"], true);
}

#[test]
fn compute_projective_text() {
    let out = run(&["compute", "--r", "2", "--k", "1", "--variety", "projective"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("= 1 + 2q + q^2"), "{text}");
    assert!(text.contains("euler 4"));
}

#[test]
fn compute_point() {
    let out = run(&["compute", "--r", "1", "--k", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("E_st(affine D^0, r = 1) = 1\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["compute", "--r", "2", "--k", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "--r", "3", "--k", "0", "--variety", "projective"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["compute", "--r", "3"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "--p", "4"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "--p", "11"]).status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_3() {
    let out = run(&["oracle", "--p", "2", "--rmax", "3", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "identities", "--rmax", "6"][..],
        &["verify", "--suite", "oracle", "--p", "2", "--rmax", "4"],
        &["verify", "--suite", "zeta", "--rmax", "3", "--order", "6"],
        &[
            "verify", "--suite", "orbits", "--rmax", "4", "--order", "10",
        ],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}\n{}", stdout(&out));
        assert!(!stdout(&out).contains("FAIL"));
    }
}

#[test]
fn verify_json_is_check_list() {
    let out = run(&[
        "verify", "--suite", "zeta", "--rmax", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn table_csv_rows() {
    let out = run(&["table", "--rmax", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,k,variety,dim,degree,euler,nonneg,coefficients");
    let keys: Vec<&str> = lines[1..].iter().map(|l| &l[..3]).collect();
    assert_eq!(keys, ["2,1", "3,1", "3,2"]);
}

#[test]
fn table_euler_column() {
    let euler = |variety: &str| {
        let text = stdout(&run(&["table", "--rmax", "4", "--variety", variety]));
        let row = text
            .lines()
            .find(|l| l.starts_with("4,2,"))
            .unwrap()
            .to_string();
        row.split(',').nth(5).unwrap().to_string()
    };
    assert_eq!(euler("affine"), "6");
    assert_eq!(euler("projective"), "48");
}

#[test]
fn table_empty_grid() {
    let text = stdout(&run(&["table", "--rmax", "1", "--format", "csv"]));
    assert_eq!(text, "r,k,variety,dim,degree,euler,nonneg,coefficients\n");
}

#[test]
fn table_latex_and_json() {
    let tex = stdout(&run(&["table", "--rmax", "3", "--format", "latex"]));
    assert!(tex.contains("(uv)^{8}"));
    let json = run(&["table", "--rmax", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn zeta_output() {
    let out = run(&["zeta", "--r", "1", "--order", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("T^0: -1 + q\n"), "{text}");
    assert!(text.contains("T^2: -q^-2 + q^-1\n"), "{text}");
    assert_eq!(run(&["zeta", "--r", "0"]).status.code(), Some(2));
}
