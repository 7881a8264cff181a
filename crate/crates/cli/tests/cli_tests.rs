//! End-to-end tests of the command-line interface: exit codes, output
//! formats, determinism, and the negative-path comparator hook.

use std::process::{Command, Output};

fn qbailey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbailey"))
        .args(args)
        .output()
        .expect("failed to launch qbailey")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn passing_verify_exits_zero() {
    let out = qbailey(&["verify", "euler", "--N", "2", "--trunc", "40"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("pass"));
}

#[test]
fn classic_euler_uses_ell() {
    let out = qbailey(&["verify", "euler", "--ell", "2", "--trunc", "50", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    assert!(line.contains("\"id\":\"euler\""), "{line}");
    assert!(line.contains("\"ell\":2"), "{line}");
}

#[test]
fn perturbed_comparison_fails_with_named_exponent() {
    let out = qbailey(&["verify", "agn", "--N", "2", "--k", "1", "--trunc", "0", "--perturb", "exponent=3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let line = stdout(&out);
    assert!(line.contains("\"status\":\"fail\""), "{line}");
    assert!(line.contains("\"first_mismatch\":{\"exponent\":\"3\""), "{line}");
}

#[test]
fn unknown_identity_is_a_usage_error() {
    let out = qbailey(&["verify", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_parameter_is_a_usage_error() {
    for args in [
        ["verify", "euler", "--trunc", "-3"].as_slice(),
        ["verify", "agn", "--k", "0"].as_slice(),
        ["verify", "ag", "--ell", "2"].as_slice(),
        ["verify", "lemma3", "--N", "2", "--ell", "3"].as_slice(),
        ["verify", "rho-check", "--rho1", "bogus"].as_slice(),
        ["verify", "euler", "--perturb", "exponent=x"].as_slice(),
    ] {
        let out = qbailey(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn triple_product_degenerate_parameters_still_balance() {
    // r <= 0 and r >= s collapse or shift the product form; the theta sum
    // tracks it in every case.
    for (r, s) in [("0", "4"), ("-2", "3"), ("7", "3")] {
        let out = qbailey(&["verify", "triple-product", &format!("--r={r}"), "--s", s, "--trunc", "30"]);
        assert_eq!(out.status.code(), Some(0), "r={r} s={s}");
    }
}

#[test]
fn json_output_is_byte_identical_across_runs_and_threads() {
    let args = ["suite", "--profile", "quick", "--format", "json"];
    let first = qbailey(&args);
    let second = qbailey(&args);
    let parallel = qbailey(&["suite", "--profile", "quick", "--format", "json", "--jobs", "4"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "same command line must emit identical bytes");
    assert_eq!(first.stdout, parallel.stdout, "thread count must not affect output");
}

#[test]
fn csv_has_header_and_one_row_per_report() {
    let out = qbailey(&["suite", "--profile", "quick", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("id,"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() >= 10, "expected a batch of reports, got {}", rows.len());
    assert!(rows.iter().all(|r| r.contains(",pass,")), "every quick-suite row passes");
}

#[test]
fn out_flag_writes_the_report_file() {
    let dir = std::env::temp_dir().join(format!("qbailey-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = qbailey(&[
        "verify",
        "lemma3",
        "--N",
        "2",
        "--M",
        "4",
        "--ell",
        "1",
        "--trunc",
        "40",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("\"id\":\"lemma3\""));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn rho_limit_mode_parses_inf() {
    let out = qbailey(&["verify", "rho-check", "--rho1", "inf", "--rho2", "inf", "--trunc", "40", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"rho1\":\"inf\""));
}

#[test]
fn ag_depths_and_triple_product_verify() {
    for args in [
        ["verify", "ag", "--k", "2", "--ell", "1", "--trunc", "40"].as_slice(),
        ["verify", "pair-check", "--ell", "1", "--lmax", "8", "--trunc", "40"].as_slice(),
        ["verify", "triple-product", "--r", "3", "--s", "5", "--trunc", "40"].as_slice(),
    ] {
        let out = qbailey(args);
        assert_eq!(out.status.code(), Some(0), "args: {args:?}");
    }
}
