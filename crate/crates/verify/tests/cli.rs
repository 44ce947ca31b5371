use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperspectra"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperspectra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn json(out: &std::process::Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gen_then_radius_spectrum_charpoly() {
    let file = scratch("star.json");
    let st = bin()
        .args(["gen", "star", "--m", "3", "--k", "4", "--out"])
        .arg(&file)
        .status()
        .unwrap();
    assert!(st.success());
    let r = json(&bin().arg("radius").arg(&file).output().unwrap());
    assert!((r["lambda1"].as_f64().unwrap() - (1.0 + 33f64.sqrt()) / 4.0).abs() < 1e-9);
    let s = json(&bin().arg("spectrum").arg(&file).output().unwrap());
    assert_eq!(s["eigenvalues"].as_array().unwrap().len(), 9);
    let p = json(&bin().arg("charpoly").arg(&file).output().unwrap());
    assert_eq!(p["coeffs"].as_array().unwrap().len(), 10);
}

#[test]
fn transform_and_quotient() {
    let file = scratch("path.json");
    let st = bin()
        .args(["gen", "path", "--m", "3", "--l", "3", "--out"])
        .arg(&file)
        .status()
        .unwrap();
    assert!(st.success());
    let t = json(
        &bin()
            .arg("transform")
            .arg(&file)
            .args(["--op", "release", "--args", "1"])
            .output()
            .unwrap(),
    );
    assert!(t["lambda_after"].as_f64().unwrap() > t["lambda_before"].as_f64().unwrap());
    let parts = scratch("parts.json");
    std::fs::write(
        &parts,
        serde_json::to_string(&vec![(0..7).collect::<Vec<usize>>()]).unwrap(),
    )
    .unwrap();
    let q = json(
        &bin()
            .arg("quotient")
            .arg(&file)
            .arg("--partition")
            .arg(&parts)
            .output()
            .unwrap(),
    );
    assert!(q["difference"].as_f64().unwrap() < 1e-9);
}

#[test]
fn formula_prints_json() {
    let v = json(
        &bin()
            .args(["formula", "bc", "--m", "3", "--k", "8"])
            .output()
            .unwrap(),
    );
    assert_eq!(v["bounds"]["convention"], "scaled");
    assert!(v["root"]["lambda1"].as_f64().unwrap() > 1.0);
}

#[test]
fn verify_exit_codes() {
    let pass = bin()
        .args(["verify", "REMARK_BT", "--k", "8", "--format", "md"])
        .output()
        .unwrap();
    assert_eq!(pass.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&pass.stdout).starts_with("# REMARK_BT"));
    let unmet = bin()
        .args(["verify", "UCT2_SECOND", "--k", "8"])
        .output()
        .unwrap();
    assert_eq!(unmet.status.code(), Some(2));
    let bad = bin().args(["verify", "NOPE"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let list = bin().args(["verify", "--list"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&list.stdout).lines().count(), 23);
}

#[test]
fn verify_writes_report_file() {
    let out = scratch("report.csv");
    let st = bin()
        .args(["verify", "B2C_LEMMA", "--format", "csv", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(st.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("theorem_id,label"));
}
