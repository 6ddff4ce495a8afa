use std::path::PathBuf;
use std::process::{Command, Output};

fn hcsf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcsf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p3_file() -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("p3.txt");
    std::fs::write(&path, "3\n0 1\n1 2\n").unwrap();
    path
}

#[test]
fn compute_self_csf_of_p3() {
    let p3 = p3_file();
    let p3 = p3.to_str().unwrap();
    let o = hcsf(&["compute", p3, p3, "--basis", "mn"]);
    assert_eq!(o.status.code(), Some(0));
    let from_file = stdout(&o);
    assert!(from_file.starts_with("m^3 "), "{from_file}");
    assert_eq!(from_file, stdout(&hcsf(&["self", "P:3"])));
    assert_eq!(from_file, stdout(&hcsf(&["self", "E:1+P:2"])));
    assert_eq!(stdout(&hcsf(&["compute", p3, "P:3", "--count-only"])).trim(), "6");
}

#[test]
fn domain_error_exits_one_with_name() {
    let o = hcsf(&["pexp", "star", "C:5", "--n", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("not-bipartite"));
}

#[test]
fn usage_error_exits_two() {
    assert_eq!(hcsf(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(hcsf(&["phn"]).status.code(), Some(2));
    assert_eq!(hcsf(&["--format", "xml", "phn", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn repro_spider_endo() {
    let o = hcsf(&["repro", "spider-endo"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("PASS"));
    assert!(out.contains("2633524") && out.contains("2628414"));
    assert_eq!(hcsf(&["repro", "nonsense"]).status.code(), Some(1));
}

#[test]
fn json_output_parses() {
    let o = hcsf(&["--format", "json", "phn", "--n", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["good"], 7);
    assert_eq!(v["total"], 11);
    let o = hcsf(&["--format", "json", "poly", "P:2", "C:4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["0", "-16", "16"]));
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let args = ["basis", "union-cliques", "Kn:3+Kn:2"];
    let one = stdout(&hcsf(&args));
    assert!(one.starts_with("rank 7\nbasis true\ntriangular true\n"), "{one}");
    assert_eq!(one, stdout(&hcsf(&args)));
    let mut parallel = vec!["--jobs", "3"];
    parallel.extend(args);
    assert_eq!(one, stdout(&hcsf(&parallel)));
}

#[test]
fn remaining_subcommands_run() {
    let cases: &[&[&str]] = &[
        &["scan-trees", "--max-n", "6"],
        &["spider", "--legs", "6,4,4,1", "--exact"],
        &["caterpillar", "--leaves", "2,0,3"],
        &["pexp", "k2n", "P:3", "--n", "3", "--check"],
        &["pexp", "kmn", "P:3", "--n", "3", "--m", "3"],
        &["basis", "multipartite", "--n", "4", "--tsv"],
        &["basis", "loops", "--kind", "edgeless", "--n", "4"],
        &["basis", "clique", "Kn:4+E:1", "--n", "4"],
        &["recurse", "disjoint", "P:3", "P:2", "Eloop:1"],
        &["recurse", "kn1", "P:2", "--n", "2"],
        &["poly", "P:3", "C:4", "--at", "5"],
        &["sn1-collide", "--n", "2", "--max-v", "4"],
        &["self", "P:4", "--report", "--connected"],
    ];
    for args in cases {
        let o = hcsf(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty(), "{args:?}");
    }
    assert!(stdout(&hcsf(&["spider", "--legs", "6,4,4,1", "--exact"])).contains("endomorphisms 2633524"));
    assert_eq!(stdout(&hcsf(&["recurse", "kn1", "P:2", "--n", "2", "--pretty"])).trim(), "mt; 1*[2]; 2*[1,1]");
}

#[test]
fn rank_of_rows_from_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("rows.txt");
    std::fs::write(&path, "m; 1*[2,1]\np; 1*[1,1,1]\nm; 2*[2,1]\n").unwrap();
    let o = hcsf(&["rank", "--rows", path.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "2");
}
