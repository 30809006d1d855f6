//! End-to-end checks of the binary: exit codes, output shapes, fixture
//! resolution, report reproducibility.

use std::process::{Command, Output};

fn pyrolace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pyrolace"))
        .args(args)
        .env_remove("PYROLACE_FIXTURE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn burn_graph_fixture() {
    let out = pyrolace(&["burn", "--graph", "fig3_graph"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "b = 3, witness v1 v6 v5");
}

#[test]
fn burn_accepts_thread_option_without_changing_the_witness() {
    let sequential = pyrolace(&["burn", "--graph", "fig7_H"]);
    let parallel = pyrolace(&["burn", "--graph", "fig7_H", "--threads", "4"]);
    assert!(sequential.status.success() && parallel.status.success());
    assert_eq!(stdout_of(&sequential), stdout_of(&parallel));
}

#[test]
fn burn_hypergraph_fixture() {
    let out = pyrolace(&["burn", "--hypergraph", "fig1_hypergraph", "--mode", "strict"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "b = 2, witness v4 v1");
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = pyrolace(&["force", "--graph", "missing.g"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = pyrolace(&["burn", "--grpah", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g");
    std::fs::write(&path, "graph 3\nedge a b\n").unwrap();
    let out = pyrolace(&["burn", "--graph", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_graph_is_a_solver_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.g");
    std::fs::write(&path, "graph 0\n").unwrap();
    let out = pyrolace(&["burn", "--graph", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn lazy_fixture_witness() {
    let out = pyrolace(&["lazy", "--hypergraph", "fig5_hypergraph"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "b_L = 5, witness v1 v2 v4 v5 v6");
}

#[test]
fn force_on_an_incidence_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ig_fig1.g");
    // IG of the first worked hypergraph, with the paper's v/h labels
    std::fs::write(
        &path,
        "graph 7\ne v1 h1\ne v2 h1\ne v2 h2\ne v3 h1\ne v3 h3\ne v4 h2\ne v4 h3\n",
    )
    .unwrap();
    let out = pyrolace(&["force", "--graph", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "Z = 2, witness v1 v2");
}

#[test]
fn spectrum_prints_the_char_poly() {
    let out = pyrolace(&["spectrum", "--graph", "fig7_G"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("char_poly = x^6 - 7x^4 - 4x^3 + 7x^2 + 4x - 1"));
    assert!(text.contains("spectrum = "));
}

#[test]
fn product_output_is_a_parseable_graph_file() {
    let out = pyrolace(&["product", "--graph", "fig7_G", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("graph 12\n"));

    // feed the product back in: burning number is preserved
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("product.g");
    std::fs::write(&path, &text).unwrap();
    let burn = pyrolace(&["burn", "--graph", path.to_str().unwrap()]);
    assert!(burn.status.success());
    assert!(stdout_of(&burn).starts_with("b = 2"));
}

#[test]
fn cospectral_fixture_pair() {
    let out = pyrolace(&["cospectral", "--pair", "fig7_G", "fig7_H"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("cospectral = true"));
    assert!(text.contains("isomorphic = false"));
}

#[test]
fn single_claim_verification_lines() {
    let out = pyrolace(&["verify", "--claim", "theorem25", "--hypergraph", "fig1_hypergraph"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("2 ≤ 4"));

    let out = pyrolace(&["verify", "--claim", "improved_bound", "--hypergraph", "fig5_hypergraph"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("5 ≤ 5 (slack 0)"));

    let out = pyrolace(&["verify", "--claim", "equality_family", "--sizes", "3,4"]);
    assert!(out.status.success());

    let out = pyrolace(&["verify", "--claim", "burning_preservation", "--graph", "p9_path"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("skipped"));
}

#[test]
fn verify_without_a_target_is_a_usage_error() {
    let out = pyrolace(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_reports_are_byte_identical_for_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.jsonl");
    let second = dir.path().join("b.jsonl");
    for path in [&first, &second] {
        let out = pyrolace(&[
            "verify",
            "--all",
            "--seed",
            "7",
            "--instances",
            "5",
            "--report",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "exit: {:?}", out.status.code());
        assert!(stdout_of(&out).contains("0 violated"));
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);

    // every line is a JSON object with the report schema fields
    for line in String::from_utf8(a).unwrap().lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in ["claim_id", "status", "lhs", "rhs", "slack", "witnesses", "elapsed_ms"] {
            assert!(value.get(key).is_some(), "missing {key} in {line}");
        }
        assert_eq!(value["elapsed_ms"], 0);
    }
}

#[test]
fn fixtures_round_trip_through_files_and_env_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = pyrolace(&["fixtures", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(dir.path().join("fig3_graph.g").is_file());
    assert!(dir.path().join("fig5_hypergraph.h").is_file());

    // literal path
    let path = dir.path().join("fig3_graph.g");
    let out = pyrolace(&["burn", "--graph", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "b = 3, witness v1 v6 v5");

    // resolution through PYROLACE_FIXTURE_DIR
    let out = Command::new(env!("CARGO_BIN_EXE_pyrolace"))
        .args(["burn", "--graph", "fig3_graph.g"])
        .env("PYROLACE_FIXTURE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "b = 3, witness v1 v6 v5");
}

#[test]
fn fixture_kind_mismatch_is_a_usage_error() {
    let out = pyrolace(&["burn", "--graph", "fig1_hypergraph"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn written_fixtures_reparse_identically() {
    let dir = tempfile::tempdir().unwrap();
    pyrolace(&["fixtures", "--out", dir.path().to_str().unwrap()]);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let reserialized = match path.extension().and_then(|e| e.to_str()) {
            Some("g") => {
                let parsed = pyrolace::io::parse_graph(&text).unwrap();
                pyrolace::io::serialize_graph(&parsed.graph, &parsed.labeling)
            }
            Some("h") => {
                let parsed = pyrolace::io::parse_hypergraph(&text).unwrap();
                pyrolace::io::serialize_hypergraph(&parsed.hypergraph, &parsed.labeling)
            }
            other => panic!("unexpected extension {other:?} for {}", path.display()),
        };
        assert_eq!(reserialized, text, "round trip drift for {}", path.display());
    }
}
