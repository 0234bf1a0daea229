use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use kolchin::NumericalPolynomial;
use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/corpus")
        .join(name)
}

fn kolchin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kolchin"))
        .args(args)
        .env_remove("KOLCHIN_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn omega_set_human_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_temp(&dir, "E.txt", "# one generator\n0,2\n");
    let human = kolchin(&["omega-set", "--m", "2", "--file", &file]);
    assert_eq!(human.status.code(), Some(0));
    assert_eq!(stdout(&human).lines().next(), Some("2*t + 1"));

    let out = kolchin(&["--format", "json", "omega-set", "--m", "2", "--file", &file]);
    let doc = json(&out);
    assert_eq!(doc["standard_coeffs"], serde_json::json!(["0", "2", "-1"]));
    let p = NumericalPolynomial::from_json(&stdout(&out)).unwrap();
    assert_eq!(
        p.standard_coeffs(),
        NumericalPolynomial::from_standard([0, 2, -1])
            .unwrap()
            .standard_coeffs()
    );
}

#[test]
fn volume_reports_both_oracles() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_temp(&dir, "E.txt", "1,1\n");
    let doc = json(&kolchin(&[
        "--format", "json", "volume", "--file", &file, "--s", "3",
    ]));
    assert_eq!(doc["volume"], "7");
    assert_eq!(doc["volume_ie"], "7");
    assert_eq!(doc["agree"], true);
}

#[test]
fn bounds_output() {
    let out = kolchin(&["bounds", "--r", "4", "--m", "1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l == "s0 = 3"));
    let doc = json(&kolchin(&[
        "--format", "json", "bounds", "--r", "1", "--m", "2", "--n", "2",
    ]));
    assert_eq!(doc["C"], "4");
    assert_eq!(doc["coeff_bound"], "800");
    assert_eq!(doc["s1"], "12801");
}

#[test]
fn bounds_beyond_cap_is_resource_limit() {
    let out = kolchin(&["bounds", "--r", "4", "--m", "4", "--n", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = kolchin(&[
        "--format", "json", "bounds", "--r", "4", "--m", "4", "--n", "1",
    ]);
    assert_eq!(json(&out)["error"]["kind"], "resource_limit");
}

#[test]
fn rank_compare() {
    let out = kolchin(&["rank-compare", "d[1,0]x1", "d[0,1]x1"]);
    assert_eq!(stdout(&out).trim(), "d[1,0]x1 > d[0,1]x1");
    let doc = json(&kolchin(&[
        "--format",
        "json",
        "rank-compare",
        "--m",
        "2",
        "x2",
        "d[1,0]x1",
    ]));
    assert_eq!(doc["ordering"], "less");
    let mismatch = kolchin(&["rank-compare", "d[1]x1", "d[1,0]x1"]);
    assert_eq!(mismatch.status.code(), Some(1));
}

#[test]
fn omega_leaders_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_temp(
        &dir,
        "profile.txt",
        "m = 2\nn = 2\n1: 2,0\n2: 1,0\n2: 0,1\n",
    );
    let doc = json(&kolchin(&[
        "--format",
        "json",
        "omega-leaders",
        "--file",
        &file,
    ]));
    assert_eq!(doc["standard_coeffs"], serde_json::json!(["0", "2", "0"]));
}

#[test]
fn kolchin_check_agrees_on_heat() {
    let heat = corpus("heat.sys");
    let out = kolchin(&["kolchin", "--system", heat.to_str().unwrap(), "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "AGREE"), "{text}");
    assert!(
        text.contains("via leaders:") && text.contains("via prolongation:"),
        "{text}"
    );

    let doc = json(&kolchin(&[
        "--format",
        "json",
        "kolchin",
        "--system",
        heat.to_str().unwrap(),
        "--check",
    ]));
    assert_eq!(doc["check"]["agree"], true);
    let via =
        NumericalPolynomial::from_json(&doc["check"]["via_prolongation"].to_string()).unwrap();
    assert_eq!(via.to_string(), "2*t + 1");
}

#[test]
fn kolchin_decisions_and_type() {
    let heat = corpus("heat.sys");
    let path = heat.to_str().unwrap();
    let doc = json(&kolchin(&[
        "--format",
        "json",
        "kolchin",
        "--system",
        path,
        "--at-least",
        "0,2,-1",
        "--equals",
        "1,0,0",
        "--type",
    ]));
    assert_eq!(doc["at_least"]["result"], true);
    assert_eq!(doc["equals"]["result"], false);
    assert_eq!(doc["differential_type"], 1);
    let doc = json(&kolchin(&[
        "--format",
        "json",
        "kolchin",
        "--system",
        path,
        "--at-least",
        "0,0,0",
    ]));
    assert_eq!(doc["at_least"]["result"], true);
}

#[test]
fn interpolate_values() {
    let out = kolchin(&["interpolate", "--start", "2", "--m", "2", "5", "7", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("2*t + 1"));
    let bad = kolchin(&["interpolate", "--m", "1", "1", "2", "4"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn exit_statuses() {
    assert_eq!(kolchin(&["bounds", "--r", "1"]).status.code(), Some(2));
    assert_eq!(kolchin(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(kolchin(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(&dir, "bad.sys", "m = 1\nn = 1\neq: x1*x1\n");
    let out = kolchin(&["kolchin", "--system", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let file = write_temp(&dir, "E.txt", "5,5,5\n");
    let capped = Command::new(env!("CARGO_BIN_EXE_kolchin"))
        .args(["volume", "--file", &file, "--s", "100"])
        .env("KOLCHIN_ENUM_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn environment_selects_json() {
    let out = Command::new(env!("CARGO_BIN_EXE_kolchin"))
        .args(["bounds", "--r", "2", "--m", "1", "--n", "1"])
        .env("KOLCHIN_FORMAT", "json")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["s0"], "1");
}
