//! End-to-end tests of the `tdframe` binary: exit codes, wire formats,
//! determinism.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

use tdframe::embed::dgs_gram;
use tdframe::io::gram_to_json;
use tdframe::matrix::Matrix;
use tdframe::scalar::Scalar;
use tdframe::srg::triangular;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tdframe"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("tdframe-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn table_emits_twelve_rows_within_budget() {
    let started = Instant::now();
    let out = run(&["table"]);
    let elapsed = started.elapsed();
    assert!(out.status.success());
    assert!(elapsed.as_secs_f64() < 5.0, "table took {elapsed:?}");
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 13);
    assert_eq!(lines[0], "srg_v,srg_k,srg_lambda,srg_mu,kind,n,N,N_a,a,b,flags");
    assert_eq!(lines[1], "10,6,3,4,design,4,10,6,1/6,-2/3,");
    assert_eq!(lines[6], "15,8,4,4,design,9,15,6,1/6,-1/4,published-table-prints-Na=8");
    assert_eq!(lines[12], "16,10,6,6,shifted,11,16,5,3/11,-1/11,");
}

#[test]
fn table_is_deterministic() {
    assert_eq!(run(&["table"]).stdout, run(&["table"]).stdout);
}

#[test]
fn six_reports_all_tight() {
    let out = run(&["six", "--family", "triangular", "--size", "5", "--format", "json"]);
    assert!(out.status.success());
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let arr = docs.as_array().unwrap();
    assert_eq!(arr.len(), 6);
    for doc in arr {
        assert_eq!(doc["report"]["tight"], serde_json::json!(true));
    }
    assert_eq!(arr[0]["tag"], "design-S1");
    assert_eq!(arr[0]["report"]["a"], "1/6");
    assert_eq!(arr[5]["tag"], "orthonormal-basis");
}

#[test]
fn classify_constructed_frame() {
    let gram = dgs_gram(&triangular(5).unwrap(), 1).unwrap();
    let path = tmp_file("s1.json", &gram_to_json(&gram));
    let out = run(&["classify", "--gram", path.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["tag"], "design-S1");
    assert_eq!(doc["srg"]["v"], 10);
    assert_eq!(doc["report"]["lrs_k"], 2);
}

#[test]
fn classify_non_tight_gram_exits_one() {
    // unit-diagonal, PSD, but not tight
    let m = Matrix::from_fn(3, 3, |i, j| if i == j { Scalar::one() } else { Scalar::ratio(1, 2) });
    let gram = tdframe::embed::GramSet::new(m, tdframe::scalar::Mode::Exact).unwrap();
    let path = tmp_file("loose.json", &gram_to_json(&gram));
    let out = run(&["classify", "--gram", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["tag"], "not-two-distance-tight");
    assert_eq!(doc["report"]["tight"], serde_json::json!(false));
}

#[test]
fn verify_equiangular_frame_passes() {
    let gram = tdframe::construct::johnson_simplex_frame(7).unwrap();
    let path = tmp_file("j7.json", &gram_to_json(&gram));
    let out = run(&["verify", "--gram", path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["equiangular"], serde_json::json!(true));
    assert_eq!(doc["a"], "1/3");
    assert_eq!(doc["N"], 28);
}

#[test]
fn srg_gen_check_round_trip() {
    let out = run(&["srg", "gen", "--family", "paley", "--size", "13"]);
    assert!(out.status.success());
    let path = tmp_file("p13.json", &stdout(&out));
    let out = run(&["srg", "check", "--graph", path.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["strongly_regular"], serde_json::json!(true));
    assert_eq!(doc["params"]["k"], 6);
    assert_eq!(doc["spectrum"]["r1"], "-1/2+1/2*sqrt(13)");
}

#[test]
fn srg_check_invalid_params_exits_one() {
    let out = run(&["srg", "check", "--params", "10,6,3,3"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["valid"], serde_json::json!(false));
    assert!(doc["error"].as_str().unwrap().contains("k(k-lambda-1) = 12 != (v-k-1)*mu = 9"));
}

#[test]
fn embed_point_probe() {
    let out = run(&["embed", "--family", "triangular", "--size", "5", "--point", "-1/9,-1/9"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["inside"], serde_json::json!(true));
    assert_eq!(doc["psd"], serde_json::json!(true));
    assert_eq!(doc["weights"][1], "4/9");
    assert_eq!(doc["rank"], 9);

    let out = run(&["embed", "--family", "triangular", "--size", "5", "--point", "1/6,-3/4"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["inside"], serde_json::json!(false));
    assert_eq!(doc["psd"], serde_json::json!(false));
}

#[test]
fn embed_emits_gram_json() {
    let out = run(&["embed", "--family", "triangular", "--size", "5", "--which", "2"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n_rank"], 5);
    assert_eq!(doc["N"], 10);
    assert_eq!(doc["entries"][0][1], "-1/3");
}

#[test]
fn malformed_input_exits_two() {
    let path = tmp_file("junk.json", "{not json");
    for cmd in [
        vec!["classify", "--gram", path.to_str().unwrap()],
        vec!["verify", "--gram", path.to_str().unwrap()],
        vec!["srg", "check", "--graph", path.to_str().unwrap()],
        vec!["six", "--family", "nosuch", "--size", "3"],
    ] {
        let out = run(&cmd);
        assert_eq!(out.status.code(), Some(2), "args {cmd:?}");
    }
    // unknown subcommand: clap usage error
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_mode_rejects_float_grams() {
    let float_gram = r#"{"n_rank":2,"N":2,"entries":[["1.0","0.5"],["0.5","1.0"]]}"#;
    let path = tmp_file("float.json", float_gram);
    let out = run(&["verify", "--gram", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("float"));
    // float mode accepts it (and reports non-tight: rank 2, eigenvalues 1/2, 3/2)
    let out = run(&["verify", "--gram", path.to_str().unwrap(), "--mode", "float"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["tight"], serde_json::json!(false));
}

#[test]
fn classify_float_gram_in_float_mode() {
    let exact = dgs_gram(&triangular(5).unwrap(), 1).unwrap();
    let entries: Vec<Vec<String>> = (0..10)
        .map(|i| (0..10).map(|j| format!("{:?}", exact.matrix().get(i, j).to_f64())).collect())
        .collect();
    let doc = serde_json::json!({"n_rank": 4, "N": 10, "entries": entries});
    let path = tmp_file("float-s1.json", &doc.to_string());
    let out = run(&["classify", "--gram", path.to_str().unwrap(), "--mode", "float"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["tag"], "design-S1");
    assert_eq!(doc["srg"]["v"], 10);
}

#[test]
fn mode_env_variable_sets_default() {
    let float_gram = r#"{"n_rank":2,"N":2,"entries":[["1.0","0.0"],["0.0","1.0"]]}"#;
    let path = tmp_file("float-id.json", float_gram);
    let out = bin()
        .args(["verify", "--gram", path.to_str().unwrap()])
        .env("TDFRAME_MODE", "float")
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["tight"], serde_json::json!(true));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("tdframe-out-{}.csv", std::process::id()));
    let out = run(&["table", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("srg_v,"));
}

#[test]
fn emitted_tight_reports_reverify_under_independent_parse() {
    // every "tight": true report emitted by `six` must re-verify after a
    // round trip through the parser
    let out = run(&["six", "--family", "petersen", "--format", "json"]);
    assert!(out.status.success());
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for doc in docs.as_array().unwrap() {
        assert_eq!(doc["report"]["tight"], serde_json::json!(true));
        let gram_json = serde_json::to_string(&doc["gram"]).unwrap();
        let gram = tdframe::io::gram_from_json(&gram_json, tdframe::scalar::Mode::Exact).unwrap();
        let report = tdframe::frames::analyze(&gram, tdframe::scalar::Mode::Exact);
        assert!(report.tight);
        assert!(report.fp_meets_bound);
    }
}
