use std::process::{Command, Output};

use serde_json::{json, Value};

fn padic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_padic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn teich_example() {
    let out = padic(&["teich", "-p", "5", "-N", "2", "-v", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["digits"], json!([2, 1]));
    assert_eq!(v["residue"], json!(7));
    assert_eq!(
        v["teichmuller"],
        json!({ "p": 5, "n": 1, "N": 2, "coeffs": [[2, 1]] })
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("tau(2)"));
}

#[test]
fn fermat_example() {
    let out = padic(&["fermat", "-q", "5", "-m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out),
        json!({ "brute": 4, "jacobi": 4, "match": true })
    );
}

#[test]
fn verify_carry_single_prime() {
    let out = padic(&["verify", "--suite", "carry", "-p", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["suite"], "carry");
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"][0]["name"], "zp::carry_cocycle");
    assert_eq!(v["checks"][0]["cases"], 343);
}

#[test]
fn sequential_flag_does_not_change_output() {
    let a = padic(&[
        "verify",
        "--suite",
        "gamma",
        "--seed",
        "3",
        "--samples",
        "50",
    ]);
    let b = padic(&[
        "--sequential",
        "verify",
        "--suite",
        "gamma",
        "--seed",
        "3",
        "--samples",
        "50",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seeds_change_samples() {
    let a = stdout_json(&padic(&[
        "verify",
        "--suite",
        "buium",
        "--seed",
        "1",
        "--samples",
        "5",
        "-p",
        "5",
    ]));
    let b = stdout_json(&padic(&[
        "verify",
        "--suite",
        "buium",
        "--seed",
        "2",
        "--samples",
        "5",
        "-p",
        "5",
    ]));
    assert_eq!(a["seed"], 1);
    assert_eq!(a["pass"], true);
    assert_eq!(b["pass"], true);
    assert_ne!(a, b);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        padic(&["teich", "-p", "4", "-v", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        padic(&["verify", "--suite", "hodge"]).status.code(),
        Some(2)
    );
    assert_eq!(padic(&["teich"]).status.code(), Some(2));
    assert_eq!(padic(&["teich", "-v", "1"]).status.code(), Some(2));
    assert_eq!(
        padic(&["gamma", "-p", "2", "-x", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn precision_errors_exit_3() {
    let out = padic(&["fermat", "-q", "13", "-m", "4", "-N", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot identify integer"));
    assert_eq!(
        padic(&["teich", "-p", "5", "-N", "40", "-v", "2"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        padic(&["gamma", "-p", "7", "-N", "9", "-x", "3"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn fixtures_write_then_compare() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("delta.json");
    let path = path.to_str().unwrap();
    let args = ["delta", "-p", "5", "-N", "3", "-x", "2", "--fixtures", path];
    assert_eq!(padic(&args).status.code(), Some(0));
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(
        stored["delta"],
        json!({ "p": 5, "n": 1, "N": 2, "coeffs": [[4, 3]] })
    );
    assert_eq!(padic(&args).status.code(), Some(0));

    std::fs::write(path, r#"{"delta": 0}"#).unwrap();
    let out = padic(&args);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("fixture mismatch"));
}

#[test]
fn gamma_csv_table() {
    let out = padic(&[
        "gamma", "-p", "5", "-N", "2", "--upto", "6", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,gamma,digits");
    assert_eq!(lines[2], "1,24,4 4");
    assert_eq!(lines[5], "4,6,1 1");
    assert_eq!(lines.len(), 7);
}

#[test]
fn verify_csv_and_text() {
    let csv = padic(&[
        "verify",
        "--suite",
        "carry",
        "-p",
        "3",
        "--samples",
        "10",
        "--format",
        "csv",
    ]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("check,cases,failures,pass\n"));
    assert!(text.contains("zp::carry_cocycle,27,0,true"));
    let txt = padic(&[
        "verify",
        "--suite",
        "carry",
        "-p",
        "3",
        "--samples",
        "10",
        "--format",
        "text",
    ]);
    let text = String::from_utf8(txt.stdout).unwrap();
    assert!(text.contains("suite: carry"));
}

#[test]
fn frobenius_and_delta_values() {
    let v = stdout_json(&padic(&[
        "frobenius",
        "-p",
        "3",
        "-n",
        "2",
        "-N",
        "3",
        "-x",
        "2,1",
    ]));
    assert_eq!(v["frobenius"]["coeffs"], json!([[2, 0, 0], [2, 2, 2]]));
    // delta(2) = (2 - 32) / 5 = -6 = 19 mod 25
    let v = stdout_json(&padic(&["delta", "-p", "5", "-N", "3", "-x", "2"]));
    assert_eq!(v["delta"]["coeffs"], json!([[4, 3]]));
}

#[test]
fn gk_check_reports() {
    let out = padic(&["gk-check", "-p", "5", "-N", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn jacobi_and_beta() {
    // J(chi, chi) = -1 over F_5 with chi quadratic
    let v = stdout_json(&padic(&[
        "jacobi", "-p", "5", "-N", "3", "-a", "2", "-b", "2",
    ]));
    assert_eq!(v["jacobi"]["coeffs"], json!([[4, 4, 4]]));
    // Gamma_5(7) = -(1 2 3 4 6) = -144, so B_5(3, 4) = (-2)(6)/(-144) = 1/12 = 73 mod 125
    let beta = stdout_json(&padic(&[
        "beta", "-p", "5", "-N", "3", "-a", "3", "-b", "4",
    ]));
    let g = |x: &str| {
        stdout_json(&padic(&["gamma", "-p", "5", "-N", "3", "-x", x]))["gamma"]["digits"].clone()
    };
    assert_eq!(g("3"), json!([3, 4, 4]));
    assert_eq!(beta["beta"]["digits"], json!([3, 4, 2]));
}
