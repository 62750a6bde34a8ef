use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fig8(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fig8")).args(args).output().expect("spawn fig8")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fig8-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn schema(name: &str) -> Value {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(name);
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

/// Required keys present and no keys outside `properties`, one level deep
/// plus array items.
fn conforms(v: &Value, s: &Value) -> Result<(), String> {
    if let Some(req) = s.get("required").and_then(Value::as_array) {
        let obj = v.as_object().ok_or("expected an object")?;
        for k in req {
            let k = k.as_str().unwrap();
            if !obj.contains_key(k) {
                return Err(format!("missing {k}"));
            }
        }
        let props = s["properties"].as_object().unwrap();
        for (k, x) in obj {
            let sub = props.get(k).ok_or(format!("unexpected key {k}"))?;
            if let Some(items) = sub.get("items") {
                for it in x.as_array().ok_or(format!("{k} is not an array"))? {
                    conforms(it, items)?;
                }
            }
        }
    }
    Ok(())
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fig8(&[]).status.code(), Some(2));
    assert_eq!(fig8(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fig8(&["kappa", "--max-n", "x"]).status.code(), Some(2));
    assert_eq!(fig8(&["oracle", "--pd", "/nonexistent/file.pd"]).status.code(), Some(2));
    assert_eq!(fig8(&["verify", "--kappa-max-n", "1"]).status.code(), Some(2));
}

#[test]
fn bad_pd_code_is_a_usage_error() {
    let p = tmp("bad.pd");
    std::fs::write(&p, "X 1 2 3\n").unwrap();
    let out = fig8(&["oracle", "--pd", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn oracle_prints_kappa() {
    let out = fig8(&["oracle", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "kappa_1 = -t^10 - t^-10");
    let out = fig8(&["oracle", "--knot", "trefoil", "--bracket", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], "t^7 + t^3 + t^-1 - t^-9");
    assert_eq!(v["writhe"], 3);
}

#[test]
fn kappa_conventions_exit_codes() {
    let out = fig8(&["kappa", "--max-n", "4", "--check-oracle", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["oracle"]["agree"], true);
    assert_eq!(v["kappa"].as_array().unwrap().len(), 5);
    // the specialized assembly does not give a consistent series
    assert_eq!(fig8(&["kappa", "--max-n", "3", "--convention", "specialized"]).status.code(), Some(1));
}

#[test]
fn latex_output() {
    let out = fig8(&["kappa", "--max-n", "2", "--format", "latex"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("\\begin{align*}"));
    assert!(s.contains("\\kappa_{1} &= -t^{10} - t^{-10}"));
}

#[test]
fn generators_written_and_derived_agree_on_g1() {
    let d: Value = serde_json::from_slice(&fig8(&["generators", "--format", "json"]).stdout).unwrap();
    let w: Value = serde_json::from_slice(&fig8(&["generators", "--source", "written", "--format", "json"]).stdout).unwrap();
    assert_eq!(d["elements"]["g1"], w["elements"]["g1"]);
    assert_eq!(d["elements"]["g2"], w["elements"]["g2"]);
    assert_ne!(d["elements"]["g3"], w["elements"]["g3"]);
}

#[test]
fn aideal_erratum_conforms() {
    let p = tmp("erratum.json");
    let out = fig8(&["aideal", "--erratum", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    conforms(&v, &schema("erratum.schema.json")).unwrap();
    let items = v["discrepancies"].as_array().unwrap();
    assert!(items.iter().any(|e| e["generator"] == "g1" && e["monomial"] == "l^4 m^6"));
}

// The full suite runs three times here: twice for determinism and once with
// a corrupted transcription.
#[test]
fn verify_is_deterministic_and_detects_faults() {
    let (a, b) = (tmp("a.json"), tmp("b.json"));
    let ra = fig8(&["verify", "--seed", "7", "--json", a.to_str().unwrap()]);
    let rb = fig8(&["verify", "--seed", "7", "--json", b.to_str().unwrap(), "--format", "json"]);
    assert_eq!(ra.status.code(), Some(0), "{}", String::from_utf8_lossy(&ra.stdout));
    assert_eq!(rb.status.code(), Some(0));
    let ja = std::fs::read(&a).unwrap();
    assert_eq!(ja, std::fs::read(&b).unwrap());
    assert_eq!(ja, rb.stdout);
    let v: Value = serde_json::from_slice(&ja).unwrap();
    conforms(&v, &schema("report.schema.json")).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["pass"], true);

    // one exponent changed in the written g1
    let g1 = fig8_skein::peripheral::Transcription::default().g1.replace("t^8(0,7)", "t^9(0,7)");
    let p = tmp("fault.json");
    std::fs::write(&p, serde_json::json!({ "g1": g1 }).to_string()).unwrap();
    let out = fig8(&["verify", "--transcription", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false && c["diagnostic"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["written g1 is peripheral", "written g1 equals derived"]);
}

#[test]
fn unknown_transcription_field_is_rejected() {
    let p = tmp("unknown.json");
    std::fs::write(&p, r#"{"g5": "(1,0)"}"#).unwrap();
    assert_eq!(fig8(&["verify", "--transcription", p.to_str().unwrap()]).status.code(), Some(2));
}
