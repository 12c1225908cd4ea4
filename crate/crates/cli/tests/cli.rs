use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn gcs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcs")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.display().to_string()
}

fn scripts_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "core", "scripts"].iter().collect()
}

#[test]
fn verify_reports_type_one_on_r_x_h3() {
    let out = gcs(&["verify", "--algebra", "R x h3", "--structure", &fixture("rxh3_type1.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["type"], 1);
    assert_eq!(r["schema"], "verify-report/1");
    assert_eq!(r["ok"], true);
    assert!(r["params"].is_object());
    assert!(!out.stderr.is_empty());
}

#[test]
fn json_flag_silences_the_summary() {
    let out = gcs(&["--json", "verify", "--structure", &fixture("rxh3_type1.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
}

#[test]
fn wrong_convention_is_an_input_error() {
    let text = std::fs::read_to_string(fixture("rxh3_type1.json")).unwrap();
    let bad = text.replace("\"convention\": \"Xi", "\"convention\": \"Yi");
    assert_ne!(bad, text);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, bad).unwrap();
    let out = gcs(&["verify", "--algebra", "R x h3", "--structure", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out)["schema"], "error/1");
}

#[test]
fn structure_read_on_another_algebra() {
    let out = gcs(&["verify", "--algebra", "n4", "--structure", &fixture("rxh3_type1.json")]);
    assert_eq!(out.status.code(), Some(2), "named algebra mismatch is an input error");
    let text = std::fs::read_to_string(fixture("rxh3_type1.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let mut v2 = v.clone();
    v2["algebra"] = Value::String("n4".into());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    std::fs::write(&path, serde_json::to_string(&v2).unwrap()).unwrap();
    let out = gcs(&["verify", "--structure", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["integrable"], false);
    assert_eq!(r["orthogonal"], true);
    assert!(r["type"].is_null());
}

#[test]
fn unknown_tokens_are_named() {
    let out = gcs(&["verify", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--bogus"));
    let out = gcs(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("frobnicate"));
    let out = gcs(&["betti", "--algebra", "no such algebra"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no such algebra"));
}

#[test]
fn search_requires_a_seed() {
    let out = gcs(&["search", "R x h3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--seed"));
}

#[test]
fn list_names_every_entry() {
    let out = gcs(&["--json", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let names: Vec<&str> = r["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"R x h3"));
    assert!(names.contains(&"g6"));
    let r4l = r["entries"].as_array().unwrap().iter().find(|e| e["name"] == "r4,lambda").unwrap();
    assert!(!r4l["constraints"].as_array().unwrap().is_empty());
}

#[test]
fn betti_of_the_cotangent_algebra() {
    let out = gcs(&["--json", "betti", "--algebra", "R x h3", "--cotangent", "--degrees", "0..8"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let b: Vec<u64> = r["b"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(b, vec![1, 5, 15, 31, 40, 31, 15, 5, 1]);
    assert_eq!(r["algebra"], "R x h3");

    let out = gcs(&["--json", "betti", "--algebra", "r4,lambda", "--param", "lambda=1/3", "--degrees", "1"]);
    let r = report(&out);
    assert_eq!(r["params"]["lambda"], "1/3");
    assert_eq!(r["b"], serde_json::json!([1]));

    let out = gcs(&["betti", "--algebra", "R x h3", "--degrees", "0..9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn constraint_violations_are_input_errors() {
    let out = gcs(&["betti", "--algebra", "r4,lambda", "--param", "lambda=1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn obstruct_on_g6_and_on_a_symplectic_algebra() {
    for mu in ["1", "-2"] {
        let out = gcs(&["--json", "obstruct", "--algebra", "g6", "--param", &format!("mu={mu}")]);
        assert_eq!(out.status.code(), Some(1));
        let r = report(&out);
        assert_eq!(r["verdict"]["outcome"]["kind"], "obstructed");
        assert_eq!(r["verdict"]["closed_two_form_dim"], 7);
    }
    let out = gcs(&["--json", "obstruct", "--algebra", "R x h3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["verdict"]["outcome"]["kind"], "witness");
    let form = r["verdict"]["outcome"]["form"].as_array().unwrap();
    assert_eq!(form.len(), 4);
    assert!(form[0][1].is_string());
}

#[test]
fn theorem_and_corollary_pass() {
    let out = gcs(&["--json", "theorem-main"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["mismatches_centralizer"], serde_json::json!([]));
    assert_eq!(r["interpretation"], "centralizer_of_derived");

    let out = gcs(&["--json", "corollary-type1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["mismatches"], serde_json::json!([]));
}

#[test]
fn table1_flags_only_the_betti_disagreements() {
    let out = gcs(&["--json", "table1"]);
    let r = report(&out);
    assert_eq!(out.status.code(), Some(1));
    let mut rows: Vec<&str> = r["mismatches"].as_array().unwrap().iter().map(|m| m["row"].as_str().unwrap()).collect();
    rows.sort();
    assert_eq!(rows, vec!["R x r'3,0", "aff(R) x aff(R)", "r4,-1,-1"]);
    for m in r["mismatches"].as_array().unwrap() {
        assert_eq!(m["failed_cells"], serde_json::json!([]));
    }
}

#[test]
fn replay_proves_every_shipped_script() {
    for entry in std::fs::read_dir(scripts_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.file_name().unwrap() == "manifest.json" {
            continue;
        }
        let out = gcs(&["--json", "replay", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", path.display());
        let r = report(&out);
        assert_eq!(r["verdict"]["status"], "proved");
        assert_eq!(r["schema"], "replay-report/1");
    }
}

#[test]
fn replay_of_a_corrupted_script_fails() {
    let path = scripts_dir().join("r_x_r3.json");
    let text = std::fs::read_to_string(path).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    let step = &mut v["steps"][0];
    assert_eq!(step["generator"], "N78^2");
    step["expected"] = Value::String("a28".into());
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let out = gcs(&["--json", "replay", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["verdict"]["status"], "failed");
    assert_eq!(r["verdict"]["step"], "1");
}

#[test]
fn eigenspace_round_trips() {
    let out = gcs(&["--json", "eigenspace", "--algebra", "R x h3", "--structure", &fixture("rxh3_type1.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["complex_dim"], 4);
    assert_eq!(r["round_trip"], true);
}

#[test]
fn export_then_verify_every_structure() {
    let dir = tempfile::tempdir().unwrap();
    let out = gcs(&["--json", "catalog", "export", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let files = report(&out)["files"].as_array().unwrap().len();
    assert!(files > 60);
    let st = dir.path().join("structures");
    for name in ["R_x_h3_type1_0.json", "d4_2_type2_0.json", "g6_type2_1.json"] {
        let p = st.join(name);
        let out = gcs(&["--json", "verify", "--structure", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
    }
    let alg = dir.path().join("algebras").join("R_x_h3.json");
    let out = gcs(&["--json", "betti", "--algebra", alg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["b"], serde_json::json!([1, 3, 4, 3, 1]));
}

#[test]
fn search_certifies_and_reports_its_config() {
    let out = gcs(&["--json", "search", "R x h3", "--type", "1", "--seed", "7", "--restarts", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema"], "search-report/1");
    assert_eq!(r["config"]["master_seed"], 7);
    assert_eq!(r["certified"]["type_k"], 1);
    let again = report(&gcs(&["--json", "search", "R x h3", "--type", "1", "--seed", "7", "--restarts", "40"]));
    assert_eq!(r, again);
}

#[test]
fn search_rejects_odd_dimension() {
    let out = gcs(&["--json", "search", "aff(R)", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0), "aff(R) is two-dimensional");
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("h3.json");
    std::fs::write(
        &p,
        r#"{"name":"h3","dim":3,"brackets":[{"i":0,"j":1,"coeffs":{"2":"1"}}]}"#,
    )
    .unwrap();
    let out = gcs(&["--json", "search", p.to_str().unwrap(), "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
