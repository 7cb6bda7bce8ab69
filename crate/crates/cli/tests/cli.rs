use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn mzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(args)
        .env_remove("MZV_DIGITS")
        .env_remove("MZV_CUTOFF")
        .env_remove("MZV_EM_ORDER")
        .env_remove("MZV_TRUNC")
        .env_remove("MZV_FORMAT")
        .env_remove("MZV_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = mzv(&full);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).expect("valid json"))
}

fn without_wall_time(text: &str) -> String {
    text.lines().filter(|l| !l.contains("wall_time")).collect::<Vec<_>>().join("\n")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares against `tests/golden/<name>`; set `MZV_BLESS=1` to rewrite.
fn golden(name: &str, args: &[&str]) {
    let o = mzv(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let got = without_wall_time(&stdout(&o));
    let path = golden_dir().join(name);
    if std::env::var_os("MZV_BLESS").is_some() {
        std::fs::write(&path, format!("{got}\n")).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(got, want.trim_end_matches('\n'), "golden mismatch for {name}");
}

#[test]
fn golden_reports() {
    golden("reduce_double_2_3.json", &["reduce", "--double", "2,3", "--digits", "40", "--format", "json"]);
    golden("reduce_triple_4_2_2.txt", &["reduce", "--triple", "4,2,2", "--digits", "40"]);
    golden("sums_c3_n3.json", &["sums", "--family", "C", "--depth", "3", "--d", "1", "--N", "3", "--digits", "40", "--format", "json"]);
    golden("volume_b2_k2.txt", &["volume", "--family", "B", "--depth", "2", "--k", "2", "--digits", "40"]);
    golden("pcoeff_c2_4_4.txt", &["pcoeff", "--family", "C", "--k", "4,4"]);
    golden("eval_mzv_2_3.txt", &["eval", "--mzv", "2,3", "--digits", "40"]);
}

#[test]
fn published_values_through_the_cli() {
    let (code, r) = json(&["reduce", "--double", "2,3"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"][0]["symbolic"], "1/2*pi^2*zeta(3) - 11/2*zeta(5)");
    let (_, r) = json(&["reduce", "--sharp-double", "2,3"]);
    assert_eq!(r["results"][0]["symbolic"], "1/16*pi^2*zeta(3) - 21/32*zeta(5)");
    let (_, r) = json(&["volume", "--family", "C", "--depth", "2", "--k", "2"]);
    assert_eq!(r["results"][0]["symbolic"], "1/113400*pi^8");
    let (_, r) = json(&["sums", "--family", "C", "--depth", "3", "--N", "3"]);
    assert_eq!(r["results"][0]["symbolic"], "1/5040*pi^6");
    assert_eq!(r["results"][1]["detail"], "5/8 zeta(6) - 1/4 zeta(2) zeta(4)");
    let (_, r) = json(&["pcoeff", "--family", "B", "--k", "2,2"]);
    assert_eq!(r["results"][0]["symbolic"], "1/160");
}

#[test]
fn numeric_values_carry_bounds() {
    let (code, r) = json(&["eval", "--mzv", "2,3", "--digits", "40"]);
    assert_eq!(code, 0);
    let row = &r["results"][0];
    assert!(row["numeric"].as_str().unwrap().starts_with("0.2288103976033537597687461489416887919325"));
    assert!(row["bound"].as_f64().unwrap() < 1e-40);
    for args in [["eval", "--sharp", "2,2"], ["eval", "--phi2", "1,2"], ["eval", "--zeta", "3"]] {
        let (code, r) = json(&args);
        assert_eq!(code, 0, "{args:?}");
        assert!(r["results"][0]["bound"].is_number());
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["reduce", "--triple", "2,3,3", "--format", "json"];
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        v.as_object_mut().unwrap().remove("wall_time");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(mzv(&args)), strip(mzv(&args)));
}

#[test]
fn exit_codes() {
    assert_eq!(mzv(&["eval"]).status.code(), Some(2));
    assert_eq!(mzv(&["eval", "--mzv", "1,x"]).status.code(), Some(2));
    assert_eq!(mzv(&["eval", "--mzv", "2,1"]).status.code(), Some(2));
    assert_eq!(mzv(&["reduce", "--double", "3,3"]).status.code(), Some(2));
    assert_eq!(mzv(&["sums", "--family", "A", "--depth", "2", "--N", "3"]).status.code(), Some(2));
    assert_eq!(mzv(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(mzv(&["pcoeff", "--family", "C", "--k", "20,20"]).status.code(), Some(2));
    let o = mzv(&["eval", "--mzv", "2,2,2,2", "--digits", "60", "--cutoff", "16", "--em-order", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
    assert_eq!(mzv(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_file_env_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("mzv.conf");
    std::fs::write(&cfg, "# low precision run\ndigits = 20\ncutoff = 500\n").unwrap();
    let cfg_s = cfg.to_str().unwrap();
    let (_, r) = json(&["eval", "--zeta", "3", "--config", cfg_s]);
    assert_eq!(r["config"]["cutoff"], 500);
    assert_eq!(r["config"]["precision_bits"], 75);
    let (_, r) = json(&["eval", "--zeta", "3", "--config", cfg_s, "--cutoff", "900"]);
    assert_eq!(r["config"]["cutoff"], 900);

    let o = Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(["eval", "--zeta", "3", "--format", "json"])
        .env("MZV_CUTOFF", "700")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["config"]["cutoff"], 700);
    let o = Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(["eval", "--zeta", "3", "--format", "json", "--cutoff", "600"])
        .env("MZV_CUTOFF", "700")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["config"]["cutoff"], 600);

    std::fs::write(&cfg, "precision = 3\n").unwrap();
    assert_eq!(mzv(&["eval", "--zeta", "3", "--config", cfg_s]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = mzv(&["reduce", "--double", "2,5", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass: 1/1"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["command"][0], "reduce");
}

#[test]
fn verify_relations_passes() {
    let o = mzv(&["verify", "relations", "--digits", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status: pass (104/104 pass)"));
}
