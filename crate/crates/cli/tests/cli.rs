use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn relcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relcalc"))
        .args(args)
        .output()
        .expect("failed to spawn relcalc")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn crisp_example_reports_expected_reliability() {
    let path = fixture("three_chains_crisp.rel");
    let out = relcalc(&[path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stderr.is_empty());
    assert_eq!(stdout(&out).lines().last(), Some("R = 0.995984"));
}

#[test]
fn trace_lists_every_vector() {
    let path = fixture("three_chains_crisp.rel");
    let out = relcalc(&[path.to_str().unwrap(), "--trace", "--workers", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip_while(|l| *l != "trace")
        .skip(2)
        .take_while(|l| l.ends_with("connected"))
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(rows.len(), 64);
    assert_eq!(rows[0], ["1", "10000001", "disconnected"]);
    assert_eq!(rows[63], ["64", "11111111", "5.853255e-1", "connected"]);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row[0], (i + 1).to_string());
    }
}

#[test]
fn monte_carlo_line_precedes_result() {
    let path = fixture("three_chains_crisp.rel");
    let out = relcalc(&[
        path.to_str().unwrap(),
        "--mc",
        "1000000",
        "--seed",
        "7",
        "--workers",
        "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    let mc = lines[lines.len() - 2];
    assert!(mc.starts_with("monte carlo: estimate = "), "{mc}");
    let field = |name: &str| -> f64 {
        let start = mc.find(name).unwrap() + name.len();
        mc[start..]
            .split(',')
            .next()
            .unwrap()
            .trim()
            .parse()
            .unwrap()
    };
    let (estimate, std_error) = (field("estimate = "), field("std_error = "));
    assert!((estimate - 0.995984).abs() <= 4.0 * std_error);
    assert_eq!(lines.last(), Some(&"R = 0.995984"));
}

#[test]
fn identical_runs_are_byte_identical() {
    let path = fixture("three_chains_rated.rel");
    let args = [
        path.to_str().unwrap(),
        "--trace",
        "--mc",
        "5000",
        "--seed",
        "3",
    ];
    assert_eq!(relcalc(&args).stdout, relcalc(&args).stdout);
}

#[test]
fn aoa_example() {
    let path = fixture("bridge_aoa.rel");
    let out = relcalc(&[path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("vectors: 64 total"));
    assert_eq!(stdout(&out).lines().last(), Some("R = 0.919920"));
}

#[test]
fn errors_go_to_stderr_with_failure_status() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.rel");
    std::fs::write(
        &bad,
        "mode aon\nnodes 4\narc 1 2\narc 2 4\nreliability 2 = 0.5\nratings 3 = XH\n",
    )
    .unwrap();
    let out = relcalc(&[bad.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("XH") && err.contains("component 3"), "{err}");

    let out = relcalc(&[dir.path().join("missing.rel").to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());

    let path = fixture("three_chains_crisp.rel");
    let out = relcalc(&[path.to_str().unwrap(), "--max-bits", "3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("limit of 3"));
}
