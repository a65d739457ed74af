//! End-to-end tests of the binary: wire formats, exit codes and
//! bit-identical reruns.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_levelq"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("levelq-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

const K23: &str = r#"{"vertices":5,"facets":[[1,2],[1,4],[2,3],[2,5],[3,4],[4,5]]}"#;

#[test]
fn hvec_on_generator() {
    let out = run(&["hvec", "gen:cross-polytope:3", "--json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"f":[1,6,12,8],"h":[1,3,3,1]}"#);
}

#[test]
fn betti_and_hbar_on_file() {
    let path = write_temp("k23.json", K23);
    let p = path.to_str().unwrap();
    let out = run(&["betti", p, "--json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"betti":[0,2],"p":2}"#);

    let out = run(&["hbar", p, "--seed", "7", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["hbar"], serde_json::json!([1, 3, 2]));
    assert_eq!(v["cbar"], serde_json::json!([1]));
    assert_eq!(v["disagreement"], serde_json::json!(false));
}

#[test]
fn reruns_are_bit_identical() {
    let path = write_temp("k23-det.json", K23);
    let p = path.to_str().unwrap();
    let a = run(&["findmu", p, "--seed", "3", "--json"]);
    let b = run(&["findmu", p, "--seed", "3", "--json"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    // A different seed still certifies the same Gorenstein Hilbert.
    let c = run(&["findmu", p, "--seed", "4", "--json"]);
    let va: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let vc: serde_json::Value = serde_json::from_str(&stdout(&c)).unwrap();
    assert_eq!(va["gorenstein"], serde_json::json!([1, 3, 1]));
    assert_eq!(va["gorenstein"], vc["gorenstein"]);
}

#[test]
fn nongeneric_theta_reports_unreachable_target() {
    let complex = write_temp("k23-ng.json", K23);
    let theta = write_temp(
        "nongeneric.json",
        r#"{"mode":"explicit","rows":[{"support":[1,3,5]},{"support":[1,2,3,4,5]}]}"#,
    );
    let out = run(&[
        "findmu",
        complex.to_str().unwrap(),
        "--theta",
        theta.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("best Gorenstein Hilbert [1, 2, 1]"),
        "stderr: {err}"
    );
    assert!(err.contains("target [1, 3, 1]"), "stderr: {err}");
}

#[test]
fn vanishing_top_homology_is_a_validation_error() {
    let path = write_temp("solid.json", r#"{"vertices":3,"facets":[[1,2,3]]}"#);
    let out = run(&["hbar", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("beta_{d-1} vanishes"));
}

#[test]
fn usage_errors_exit_one() {
    let out = run(&["hvec"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    // Help exits zero.
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sequence_checks_inline_and_file() {
    let out = run(&["mvec", "--seq", "1,3,6,10,13,16", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], serde_json::json!(true));

    let out = run(&["summvec", "--seq", "18,0,1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], serde_json::json!(false));

    let out = run(&["atchain", "--seq", "1,12,33,43,47,36,21,2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], serde_json::json!(false));
    assert_eq!(v["violation"], serde_json::json!(2));

    let file = write_temp(
        "modbound.json",
        r#"{"sequence":[1,9,3,4],"check":"modbound","s":12}"#,
    );
    let out = run(&["modbound", file.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], serde_json::json!(true));

    let out = run(&["concavity", "--seq", "1,2,2,2,2", "--d", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["log_concave"], serde_json::json!(true));
    assert_eq!(v["ultra_log_concave"], serde_json::json!(false));

    // Zero entries are rejected by the ratio chain.
    let out = run(&["atchain", "--seq", "1,0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_emits_canonical_complex() {
    let out = run(&[
        "construct",
        "--a",
        "1,1",
        "--q",
        "gen:square-boundary",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["vertices"], serde_json::json!(7));
    // The output can be piped straight back in.
    let path = write_temp("built.json", &stdout(&out));
    let out = run(&["hvec", path.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["h"], serde_json::json!([1, 4, 5, 2]));

    let out = run(&["construct", "--a", "0,1", "--q", "gen:square-boundary"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gorenstein_and_lefschetz_from_cycle_file() {
    let complex = write_temp(
        "octahedron.json",
        r#"{"vertices":6,"facets":[[1,3,5],[1,3,6],[1,4,5],[1,4,6],
             [2,3,5],[2,3,6],[2,4,5],[2,4,6]]}"#,
    );
    // The mod-2 fundamental class: coefficient 1 on every facet.
    let cycle = write_temp(
        "fundamental.json",
        r#"{"p":2,"coeffs":[[[1,3,5],1],[[1,3,6],1],[[1,4,5],1],[[1,4,6],1],
             [[2,3,5],1],[[2,3,6],1],[[2,4,5],1],[[2,4,6],1]]}"#,
    );
    let c = complex.to_str().unwrap();
    let cy = cycle.to_str().unwrap();
    let out = run(&["gorenstein", c, "--cycle", cy, "--json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gorenstein"], serde_json::json!([1, 3, 3, 1]));

    let out = run(&["lefschetz", c, "--q", "1", "--cycle", cy, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rank"], serde_json::json!(3));
    assert_eq!(v["e"], serde_json::json!(1));
}

#[test]
fn monalg_commands() {
    let ideal = write_temp(
        "rigid.json",
        r#"{"nvars":3,"gens":[[3,0,0],[2,1,0],[2,0,1],[0,1,1],[0,2,0],[0,0,2]]}"#,
    );
    let p = ideal.to_str().unwrap();
    let out = run(&["monalg", p, "--op", "hilbert", "--json"]);
    assert_eq!(stdout(&out).trim(), r#"{"hilbert":[1,3,3]}"#);

    let out = run(&["monalg", p, "--op", "socle", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["is_level"], serde_json::json!(true));

    let out = run(&[
        "monalg",
        p,
        "--op",
        "gorenstein-max",
        "--char",
        "2",
        "--ext",
        "1",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["max_ranks"], serde_json::json!([1, 2, 1]));

    // Non-level input is a validation error.
    let bad = write_temp("notlevel.json", r#"{"nvars":2,"gens":[[2,0],[1,1],[0,3]]}"#);
    let out = run(&["monalg", bad.to_str().unwrap(), "--op", "gorenstein-max"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matroid_search_and_pure_scan() {
    let out = run(&[
        "matroid-search",
        "--n",
        "4",
        "--r",
        "2",
        "--target",
        "1,2,3",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["found"], serde_json::json!(true));
    assert_eq!(v["matroid"]["bases"].as_array().unwrap().len(), 6);

    let out = run(&["pure-scan", "--nvars", "2", "--maxdeg", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn verify_paper_passes() {
    let out = run(&["verify-paper", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["all_passed"], serde_json::json!(true));
    let coverage = v["coverage"].as_array().unwrap();
    assert_eq!(coverage.len(), 7);
    assert!(coverage
        .iter()
        .all(|c| c["covered"] == serde_json::json!(true)));
}
