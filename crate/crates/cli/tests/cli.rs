use std::path::Path;
use std::process::Command;

use serde_json::Value;
use twist53::artifact::ModelArtifact;
use twist53::commands::{self, CommandConfig};
use twist53_core::modular::ModularData;
use twist53_core::moduli::search_points;

const EXAMPLE: &str = "x^4-3*x^2+2*x+3";

fn cli(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twist53")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json, stdout)
}

fn make_model(dir: &Path, name: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    let (code, _, _) = cli(&["model", "--poly", EXAMPLE, "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    path
}

#[test]
fn validate_reports_the_example_invariants() {
    let (code, json, _) = cli(&["validate", "--poly", "1,0,-3,2,3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json["galois_group"], "S4");
    assert_eq!(json["disc_squarefree"], "-33");
    assert_eq!(json["k_radicand"], "11");
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(cli(&["validate"]).0, 1);
    assert_eq!(cli(&["validate", "--poly", "x^4+y"]).0, 1);
    assert_eq!(cli(&["points", "--artifact", "/nonexistent/model.json"]).0, 1);
    assert_eq!(cli(&["oracle", "--precision", "10"]).0, 1);
    assert_eq!(cli(&["--help"]).0, 0);
}

#[test]
fn model_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = make_model(dir.path(), "a.json");
    let b = make_model(dir.path(), "b.json");
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());

    let md = ModularData::builtin();
    let artifact = ModelArtifact::from_json(std::str::from_utf8(&bytes).unwrap()).unwrap();
    assert_eq!(ModelArtifact::from_json(&artifact.to_json()).unwrap(), artifact);
    let loaded = artifact.load(&md).unwrap();
    let again = ModelArtifact::new(&loaded.ctx, &loaded.theta, &loaded.quartic, artifact.prime_bound);
    assert_eq!(again.theta, artifact.theta);
    assert_eq!(again.quartic, artifact.quartic);
    assert_eq!(again.l_minpoly, artifact.l_minpoly);
    assert_eq!(again.input_poly, artifact.input_poly);
}

#[test]
fn tampered_artifacts_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = make_model(dir.path(), "m.json");
    let artifact = ModelArtifact::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let md = ModularData::builtin();

    let mut bad = artifact.clone();
    bad.quartic.coefficients[14] = (bad.quartic.coefficients[14].parse::<i64>().unwrap() + 1).to_string();
    assert!(bad.load(&md).is_err());

    let mut bad = artifact.clone();
    bad.theta[0][0].b[0] = "1/2".into();
    assert!(bad.load(&md).is_err());

    let mut bad = artifact;
    bad.k_radicand = "7".into();
    let bad_path = dir.path().join("bad.json");
    std::fs::write(&bad_path, bad.to_json()).unwrap();
    let (code, json, _) = cli(&["points", "--artifact", bad_path.to_str().unwrap(), "--height", "5", "--json"]);
    assert_eq!(code, 1);
    assert_eq!(json["error"], "InvalidArtifact");
}

#[test]
fn points_moduli_and_fiber_from_the_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let path = make_model(dir.path(), "m.json");
    let p = path.to_str().unwrap();

    let (code, json, _) = cli(&["points", "--artifact", p, "--height", "30", "--json"]);
    assert_eq!(code, 0);
    let pts = json["points"].as_array().unwrap();
    assert_eq!(pts.len(), 4);
    for pt in pts {
        assert_eq!(pt["classification"], "ordinary");
        assert_eq!(pt["j_pair"]["j"]["radicand"], "11");
    }

    let first: Vec<&str> = pts[0]["point"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    let (code, json, _) = cli(&["moduli", "--artifact", p, "--point", &first.join(","), "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json["points"][0]["t"], pts[0]["t"]);
    assert_eq!(cli(&["moduli", "--artifact", p, "--point", "1,2,3"]).0, 1);

    // j₁ = (−8√11)³(10 + 3√11).
    let (code, json, _) = cli(&["fiber", "--artifact", p, "--j", "-185856,-56320", "--t", "7/13", "--json"]);
    assert_eq!(code, 0);
    let fibers = json["fibers"].as_array().unwrap();
    // Explicit t-values come first.
    assert_eq!(fibers[0]["t"], "7/13");
    assert!(fibers[0]["points"].as_array().unwrap().is_empty());
    assert_eq!(fibers[1]["t"], "-26/1");
    assert_eq!(fibers[1]["points"][0]["j_pair"]["j_conj"]["display"], "-185856 - 56320*sqrt(11)");
    assert_eq!(cli(&["fiber", "--artifact", p, "--t", "inf"]).0, 1);
}

#[test]
fn parallel_search_matches_the_sequential_one() {
    let md = ModularData::builtin();
    let dir = tempfile::tempdir().unwrap();
    let path = make_model(dir.path(), "m.json");
    let loaded = commands::read_artifact(&path).unwrap().load(&md).unwrap();
    for h in [1, 7, 40] {
        assert_eq!(commands::parallel_search(&loaded.quartic, h).unwrap(), search_points(&loaded.quartic, h).unwrap());
    }
}

#[test]
fn strict_mode_stops_on_corrupted_constants() {
    let dir = tempfile::tempdir().unwrap();
    let constants = dir.path().join("c.json");
    std::fs::write(&constants, r#"{"eq1.x^4": "5/1"}"#).unwrap();
    let out = dir.path().join("m.json");
    let (code, json, _) = cli(&[
        "model", "--poly", EXAMPLE, "--strict", "--constants", constants.to_str().unwrap(), "--out", out.to_str().unwrap(), "--json",
    ]);
    assert_eq!(code, 2);
    assert_eq!(json["error"], "OracleFailure");
    assert!(!out.exists());

    let (code, json, _) = cli(&["oracle", "--constants", constants.to_str().unwrap(), "--identity", "eq1", "--json"]);
    assert_eq!(code, 2);
    assert_eq!(json[0]["pass"], false);

    std::fs::write(&constants, r#"{"no.such": "1"}"#).unwrap();
    assert_eq!(cli(&["oracle", "--constants", constants.to_str().unwrap()]).0, 1);
}

#[test]
fn strict_model_with_stock_constants() {
    let cfg = CommandConfig { strict: true, ..CommandConfig::default() };
    let report = commands::model(EXAMPLE, &cfg, &ModularData::builtin(), false).unwrap();
    assert_eq!(report.exit, 0);
    assert_eq!(report.json["format"], "twist53-model/1");
}

#[test]
fn oracle_and_selftest_pass() {
    let (code, json, _) = cli(&["oracle", "--precision", "40", "--json"]);
    assert_eq!(code, 0);
    assert!(json.as_array().unwrap().iter().all(|r| r["pass"] == true));
    let (code, json, _) = cli(&["selftest", "--json"]);
    assert_eq!(code, 0, "{json}");
}
