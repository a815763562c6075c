//! End-to-end checks of the command-line surface: exit codes, report
//! schemas, and the round trips the tool promises.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclespect"))
}

#[test]
fn gen_round_trips_through_parse() {
    for (kind, params) in [
        ("complete", "6"),
        ("complete-bipartite", "3,4"),
        ("cycle", "9"),
        ("theta", "2,3,4"),
        ("petersen", ""),
        ("heawood", ""),
    ] {
        let mut cmd = bin();
        cmd.args(["gen", "--kind", kind]);
        if !params.is_empty() {
            cmd.args(["--params", params]);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success(), "gen {kind} failed");
        let text = String::from_utf8(out.stdout).unwrap();
        let g = cyclespect::graph::Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g.to_edge_list(), text, "round trip not identical for {kind}");
    }
}

#[test]
fn spectrum_report_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.el");
    let out = bin().args(["gen", "--kind", "petersen"]).output().unwrap();
    std::fs::write(&path, &out.stdout).unwrap();

    let out = bin()
        .args(["spectrum", "--input", path.to_str().unwrap(), "--witnesses"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["lengths"], serde_json::json!([5, 6, 8, 9]));
    assert_eq!(report["girth"], 5);
    assert_eq!(report["exhaustive"], true);
    assert_eq!(report["odd_length_count"], 2);
    assert_eq!(report["witnesses"].as_object().unwrap().len(), 4);
    assert!(report["seed"].is_u64());
    assert!(report["tool_version"].is_string());
}

#[test]
fn girth_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c7.el");
    let out = bin()
        .args(["gen", "--kind", "cycle", "--params", "7"])
        .output()
        .unwrap();
    std::fs::write(&path, &out.stdout).unwrap();
    let out = bin()
        .args(["girth", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["girth"], 7);

    // Forests report null.
    let out = bin()
        .args(["gen", "--kind", "path", "--params", "5"])
        .output()
        .unwrap();
    std::fs::write(&path, &out.stdout).unwrap();
    let out = bin()
        .args(["girth", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["girth"].is_null());
}

#[test]
fn exit_codes() {
    // Usage error: unknown subcommand.
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Domain error: unreadable input.
    let out = bin()
        .args(["girth", "--input", "/nonexistent/graph.el"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    // Domain error: malformed edge list, with a line number in the message.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.el");
    std::fs::write(&path, "3 1\n0 7\n").unwrap();
    let out = bin()
        .args(["girth", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 2"), "stderr was: {stderr}");

    // Domain error: pipeline on a tree names the failing stage.
    let path = dir.path().join("tree.el");
    let out = bin()
        .args(["gen", "--kind", "path", "--params", "12"])
        .output()
        .unwrap();
    std::fs::write(&path, &out.stdout).unwrap();
    let out = bin()
        .args(["pipeline", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("core-extraction"), "stderr was: {stderr}");
}

#[test]
fn pipeline_generalized_mode_and_seeds_reproduce() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.el");
    let out = bin()
        .args(["gen", "--kind", "random-regular", "--params", "40,6", "--seed", "3"])
        .output()
        .unwrap();
    std::fs::write(&graph, &out.stdout).unwrap();

    let run = |mode: &str| {
        let out = bin()
            .args([
                "pipeline",
                "--input",
                graph.to_str().unwrap(),
                "--mode",
                mode,
                "--seed",
                "11",
            ])
            .output()
            .unwrap();
        assert!(out.status.success(), "{mode} failed");
        serde_json::from_slice::<serde_json::Value>(&out.stdout).unwrap()
    };
    let a = run("girth");
    let b = run("girth");
    assert_eq!(a, b, "same seed must reproduce the same certificate");
    let g = run("generalized");
    assert_eq!(g["schema"], 1);
    assert_eq!(g["parity"], "even");
    assert!(g["run_count"].as_u64().unwrap() >= 1);
}

#[test]
fn chromatic_ops() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.el");
    let out = bin()
        .args(["gen", "--kind", "complete", "--params", "5"])
        .output()
        .unwrap();
    std::fs::write(&path, &out.stdout).unwrap();

    let out = bin()
        .args(["chromatic", "--input", path.to_str().unwrap(), "--op", "chi"])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["chromatic_number"], 5);

    let out = bin()
        .args([
            "chromatic",
            "--input",
            path.to_str().unwrap(),
            "--op",
            "critical",
            "--d",
            "4",
        ])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["vertices"].as_array().unwrap().len(), 4);

    let out = bin()
        .args([
            "chromatic",
            "--input",
            path.to_str().unwrap(),
            "--op",
            "gyarfas",
        ])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passes"], true);
    assert_eq!(report["odd_length_count"], 2);
}

#[test]
fn bound_subcommand_breakdowns() {
    let out = bin()
        .args(["bound", "--moore", "3", "6", "--turan-expansion", "1.0", "0.75", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["moore"]["order"], "14");
    assert_eq!(report["turan_expansion"]["min_degree_required"], 72);
    assert_eq!(report["turan_expansion"]["expansion_size"], 16);

    let out = bin()
        .args(["bound", "--sigma-free", "powers_of_two", "2^16"])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let exponent = report["sigma_free"]["exponent"].as_f64().unwrap();
    assert!((exponent - 28.419).abs() < 1e-3);
    assert_eq!(report["sigma_free"]["terms"].as_array().unwrap().len(), 6);

    let out = bin()
        .args(["bound", "--sigma-free", "powers_of_two", "2^16", "--optimize"])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["sigma_free"]["exponent"].as_f64().unwrap() <= exponent + 1e-9);

    let out = bin()
        .args(["bound", "--log-star", "powers_of_two", "65536"])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["log_star"]["log_star"], 4);
    let expected = (6.0 + 2.0 * 4f64.ln()) * 4.0 + 2.0;
    assert!((report["log_star"]["exponent"].as_f64().unwrap() - expected).abs() < 1e-9);

    let out = bin()
        .args(["bound", "--hfree", "c2k:2", "--n", "16"])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["hfree"]["run_exponent"]["num"], 2);
    assert!((report["hfree"]["ex_bound"]["value"].as_f64().unwrap() - 1024.0).abs() < 1e-9);

    // Nothing requested is a domain error.
    let out = bin().arg("bound").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_file_source_and_streams() {
    let dir = tempfile::tempdir().unwrap();
    let stream = dir.path().join("stream.el");
    // K_4 (min degree 3) followed by C_5 (filtered) in one stream.
    let mut text = String::new();
    let out = bin()
        .args(["gen", "--kind", "complete", "--params", "4"])
        .output()
        .unwrap();
    text.push_str(std::str::from_utf8(&out.stdout).unwrap());
    text.push('\n');
    let out = bin()
        .args(["gen", "--kind", "cycle", "--params", "5"])
        .output()
        .unwrap();
    text.push_str(std::str::from_utf8(&out.stdout).unwrap());
    std::fs::write(&stream, text).unwrap();

    let out = bin()
        .args([
            "scan",
            "--target",
            "pow2",
            "--source",
            "file",
            "--input",
            stream.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["instances_checked"], 1);
    assert_eq!(report["filtered_out"], 1);
    assert_eq!(report["candidates"].as_array().unwrap().len(), 0);

    let out = bin()
        .args([
            "scan", "--target", "pow2plus1", "--source", "random", "--n", "9", "--d", "3",
            "--count", "20", "--seed", "5",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["candidates"].as_array().unwrap().len(), 0);
    assert_eq!(report["seed"], 5);
}

#[test]
fn verify_rejects_unknown_fields() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.el");
    let cert = dir.path().join("c.json");
    let out = bin()
        .args(["gen", "--kind", "complete-bipartite", "--params", "6,6"])
        .output()
        .unwrap();
    std::fs::write(&graph, &out.stdout).unwrap();
    let status = bin()
        .args([
            "pipeline",
            "--input",
            graph.to_str().unwrap(),
            "--out",
            cert.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());

    let mut value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    value
        .as_object_mut()
        .unwrap()
        .insert("surprise".into(), serde_json::json!(true));
    std::fs::write(&cert, serde_json::to_string(&value).unwrap()).unwrap();
    let out = bin()
        .args([
            "verify",
            "--graph",
            graph.to_str().unwrap(),
            "--certificate",
            cert.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "unknown fields must be rejected");
}
