use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ramsey_witness::random::random_coloring;
use ramsey_witness::{decode_coloring, encode_coloring};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey-witness"))
        .args(args)
        .env_remove("RAMSEY_WITNESS_LIMITS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn extract_random_instance() {
    let o = run(&[
        "extract", "--random", "17", "--seed", "1", "--n", "16", "--parts", "2,2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["n"], 16);
    assert_eq!(doc["parts_sizes"], serde_json::json!([2, 2]));
    assert!(doc["type"] == "red_cycle" || doc["type"] == "blue_kpartite");
}

#[test]
fn extract_is_deterministic() {
    let args = [
        "extract", "--random", "37", "--seed", "9", "--n", "19", "--parts", "1,2,3",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn extract_rejects_bad_instances() {
    let o = run(&["extract", "--random", "17", "--n", "16", "--parts", "2,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parts must be ascending"));

    let o = run(&["extract", "--random", "17", "--n", "10", "--parts", "2,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("threshold"));

    let o = run(&["extract", "--random", "16", "--n", "16", "--parts", "2,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("at least 17"));
}

#[test]
fn extract_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let coloring = dir.path().join("c.g6");
    fs::write(&coloring, encode_coloring(&random_coloring(17, 1)) + "\n").unwrap();

    let from_file = run(&[
        "extract",
        "--coloring",
        path_str(&coloring),
        "--n",
        "16",
        "--parts",
        "2,2",
    ]);
    let from_seed = run(&[
        "extract", "--random", "17", "--seed", "1", "--n", "16", "--parts", "2,2",
    ]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, from_seed.stdout);

    let witness = dir.path().join("w.json");
    fs::write(&witness, &from_file.stdout).unwrap();
    let verify = |w: &Path, parts: &str| {
        run(&[
            "verify",
            "--coloring",
            path_str(&coloring),
            "--witness",
            path_str(w),
            "--n",
            "16",
            "--parts",
            parts,
        ])
    };
    let o = verify(&witness, "2,2");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).trim(), "valid");

    let o = verify(&witness, "1,2");
    assert_eq!(o.status.code(), Some(4));
    if stdout(&from_file).contains("blue_kpartite") {
        assert!(stdout(&o).contains("do not match"));
    }

    // Move one vertex to an index outside the coloring.
    let mut doc: Value = serde_json::from_slice(&from_file.stdout).unwrap();
    if let Some(v) = doc["vertices"].as_array_mut() {
        v[0] = 99.into();
    } else {
        doc["parts"][0][0] = 99.into();
    }
    let mutated = dir.path().join("bad.json");
    fs::write(&mutated, doc.to_string()).unwrap();
    let o = verify(&mutated, "2,2");
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("outside"));

    let o = run(&[
        "--json",
        "verify",
        "--coloring",
        path_str(&coloring),
        "--witness",
        path_str(&mutated),
        "--n",
        "16",
        "--parts",
        "2,2",
    ]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["valid"], false);
}

#[test]
fn verify_perturbed_vertex_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let coloring = dir.path().join("red.g6");
    let o = run(&[
        "construct",
        "lower-bound",
        "--n",
        "8",
        "--parts",
        "1,1",
        "--out",
        path_str(&coloring),
    ]);
    assert_eq!(o.status.code(), Some(0));
    // the construction has 7 vertices in one red clique; a red C7 exists
    let witness = dir.path().join("w.json");
    fs::write(
        &witness,
        r#"{"schema":1,"type":"red_cycle","vertices":[0,1,2,3,4,5,6],"n":7,"parts_sizes":[1,1]}"#,
    )
    .unwrap();
    let args = |w: &Path| {
        vec![
            "verify".to_string(),
            "--coloring".into(),
            path_str(&coloring).into(),
            "--witness".into(),
            path_str(w).into(),
            "--n".into(),
            "7".into(),
            "--parts".into(),
            "1,1".into(),
        ]
    };
    let a = args(&witness);
    let o = run(&a.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(o.status.code(), Some(0));

    fs::write(
        &witness,
        r#"{"schema":1,"type":"red_cycle","vertices":[0,1,2,3,4,5,5],"n":7,"parts_sizes":[1,1]}"#,
    )
    .unwrap();
    let o = run(&a.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("repeated"));
}

#[test]
fn construct_commands() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("lb.g6");
    let o = run(&[
        "construct",
        "lower-bound",
        "--n",
        "16",
        "--parts",
        "2,2",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let c = decode_coloring(&fs::read(&out).unwrap()).unwrap();
    assert_eq!(c.n(), 16);

    let o = run(&["construct", "path-bad", "--m1", "1", "--m2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let c = decode_coloring(stdout(&o).as_bytes()).unwrap();
    assert_eq!(c.n(), 4);
    assert_eq!(c.red().edge_count(), 3);

    let o = run(&["construct", "path-bad", "--m1", "3", "--m2", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unreadable_inputs_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "A\u{7f}\n").unwrap();
    let o = run(&[
        "extract",
        "--coloring",
        path_str(&bad),
        "--n",
        "3",
        "--parts",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let missing = dir.path().join("missing.g6");
    let o = run(&[
        "extract",
        "--coloring",
        path_str(&missing),
        "--n",
        "3",
        "--parts",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn ramsey_scans() {
    let o = run(&[
        "ramsey", "--target", "path", "--n", "3", "--parts", "1,1", "--max-N", "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("N=2   fails"));
    assert!(text.contains("N=3   holds"));
    assert!(text.contains("N=4   holds"));
    assert!(text.contains("= 3"));

    let o = run(&[
        "ramsey", "--target", "path", "--n", "3", "--parts", "1,1", "--max-N", "9",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds the limit of 8"));

    let o = run(&[
        "--json", "ramsey", "--target", "cycle", "--n", "3", "--parts", "1,1", "--max-N", "5",
    ]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["first_holding"], 3);
    assert_eq!(v["rows"][1]["counterexample"], "A_");
}

#[test]
fn limits_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ramsey-witness"))
        .args([
            "ramsey", "--target", "path", "--n", "3", "--parts", "1,1", "--max-N", "4",
        ])
        .env("RAMSEY_WITNESS_LIMITS", "coloring_enum=3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("limit of 3"));

    let o = Command::new(env!("CARGO_BIN_EXE_ramsey-witness"))
        .args([
            "ramsey", "--target", "path", "--n", "3", "--parts", "1,1", "--max-N", "4",
        ])
        .env("RAMSEY_WITNESS_LIMITS", "path_dp=99")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selftest_small_reports_every_criterion() {
    let o = run(&["--json", "selftest", "--scale", "small"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 7);
    let all_pass = items.iter().all(|i| i["passed"] == true);
    assert_eq!(o.status.code(), Some(if all_pass { 0 } else { 4 }));
    for id in [1, 2, 3, 4, 6, 7] {
        assert_eq!(items[id - 1]["passed"], true, "{}", items[id - 1]);
    }
}
