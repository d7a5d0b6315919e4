use std::path::{Path, PathBuf};

use gral::cli::run;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn gral(args: &[&str]) -> (i32, String) {
    let out = run(std::iter::once("gral").chain(args.iter().copied()));
    (out.status, out.report)
}

#[test]
fn check_ring_reports_the_counterexample() {
    let (status, out) = gral(&["check-ring", &data("ring_z4.json")]);
    assert_eq!(status, 1);
    assert!(out.contains("vnr: fails, counterexample 2"), "{out}");
    assert!(out.contains("radical: {0, 2}"), "{out}");
    assert_eq!(gral(&["check-ring", &data("ring_z6.json")]).0, 0);
}

#[test]
fn verdict_and_witness_exit_codes() {
    let a1 = data("a1.json");
    assert_eq!(gral(&["lpa", "verdict", "--graph", &a1, "--ring", &data("ring_z6.json")]).0, 0);
    let (status, out) = gral(&["lpa", "verdict", "--graph", &a1, "--ring", &data("ring_z4.json")]);
    assert_eq!(status, 1);
    assert!(out.contains("element: 2v"), "{out}");
    let (status, out) =
        gral(&["lpa", "witness", "--graph", &a1, "--ring", &data("ring_z4.json"), "--element", &data("elem_2v.json")]);
    assert_eq!(status, 1);
    assert!(out.contains("absence: exact"), "{out}");
    let vw = data("v_to_w.json");
    let (status, out) = gral(&[
        "lpa", "witness", "--graph", &vw, "--ring", &data("ring_z6.json"), "--element", &data("elem_f.json"),
        "--method", "oracle",
    ]);
    assert_eq!(status, 0, "{out}");
    assert!(out.contains("witness: f*"), "{out}");
}

#[test]
fn classify_and_decompose() {
    let t = data("toeplitz.json");
    let (status, out) = gral(&["lpa", "classify", "--graph", &t, "--ring", &data("ring_z2.json"), "--size-bound", "2", "--degree-bound", "2"]);
    assert_eq!(status, 0, "{out}");
    assert!(out.contains("strong: fails"), "{out}");
    assert!(out.contains("epsilon[1] = v"), "{out}");
    let (status, out) =
        gral(&["lpa", "decompose", "--graph", &t, "--ring", &data("ring_z2.json"), "--element", &data("elem_ee_star.json"), "--level", "1"]);
    assert_eq!(status, 0, "{out}");
    assert!(out.contains("block P(1,v) [e]: [[1]]"), "{out}");
}

#[test]
fn cover_and_morphism() {
    let (status, out) = gral(&["graph", "cover", "--graph", &data("v_to_w_cohn.json")]);
    assert_eq!(status, 0);
    let file: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(file["vertices"], serde_json::json!(["v", "v'", "w"]));
    let args = |m: &str| {
        vec![
            "morphism".to_string(), "check".into(), "--source".into(), data("v_to_w.json"), "--target".into(),
            data("v_w_u.json"), "--morphism".into(), data(m), "--ring".into(), data("ring_z2.json"),
        ]
    };
    let out = run(std::iter::once("gral".to_string()).chain(args("morphism_vw_vwu.json")));
    assert_eq!(out.status, 0, "{}", out.report);
    assert!(out.report.contains("morphism: valid"));
}

#[test]
fn corner_witnesses() {
    let (status, out) = gral(&["corner", "witness", "--corner", &data("corner_z4_id.json"), "--degree", "1", "--coeff", "2"]);
    assert_eq!(status, 1);
    assert!(out.contains("absence: exact"), "{out}");
    let (status, out) = gral(&["corner", "witness", "--corner", &data("corner_swap.json")]);
    assert_eq!(status, 0, "{out}");
    assert!(out.contains("absences: 0"));
    let (status, _) = gral(&["corner", "witness", "--corner", &data("corner_z4_id.json"), "--degree", "-2", "--coeff", "1"]);
    assert_eq!(status, 0);
}

#[test]
fn examples_pass() {
    let (status, out) = gral(&["examples"]);
    assert_eq!(status, 0, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(gral(&[]).0, 2);
    assert_eq!(gral(&["lpa", "verdict", "--graph", "missing.json", "--ring", &data("ring_z2.json")]).0, 2);
    assert_eq!(gral(&["check-ring", &data("a1.json")]).0, 2);
    assert_eq!(gral(&["lpa", "verdict", "--graph", &data("a1.json"), "--ring", &data("ring_z2.json"), "--method", "magic"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"vertices": ["v"], "edges": [{"name": "e", "src": "v", "dst": "nowhere"}]}"#).unwrap();
    let (status, out) = gral(&["graph", "cover", "--graph", bad.to_str().unwrap()]);
    assert_eq!(status, 2);
    assert!(out.starts_with("error:"), "{out}");
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<PathBuf> = (0..2).map(|i| dir.path().join(format!("report{i}.json"))).collect();
    for p in &paths {
        let (status, _) = gral(&[
            "lpa", "verdict", "--graph", &data("toeplitz.json"), "--ring", &data("ring_z6.json"), "--seed", "7",
            "--samples", "40", "--json", "--output", p.to_str().unwrap(),
        ]);
        assert_eq!(status, 0);
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["verdict"]["holds"], true);
}
