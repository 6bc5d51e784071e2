use std::process::{Command, Output};

fn demazure(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_demazure"))
        .args(args)
        .output()
        .expect("failed to run demazure")
}

fn stdout(args: &[&str]) -> String {
    let out = demazure(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn xi_examples() {
    assert_eq!(stdout(&["xi", "--a", "0", "--b", "0", "--i", "2", "--k", "0"]), "1");
    assert_eq!(stdout(&["xi", "--a", "2", "--b", "3", "--i", "2", "--k", "6"]), "0");
    let oracle = stdout(&["xi", "--a", "3", "--b", "5", "--i", "2", "--k", "4", "--method", "oracle"]);
    let formula = stdout(&["xi", "--a", "3", "--b", "5", "--i", "2", "--k", "4", "--method", "formula"]);
    let recursion = stdout(&["xi", "--a", "3", "--b", "5", "--i", "2", "--k", "4", "--method", "recursion"]);
    assert_eq!(oracle, formula);
    assert_eq!(oracle, recursion);
    assert_eq!(stdout(&["xi", "--a", "0", "--b", "0", "--i", "1", "--k", "0"]), "-p^-2");
}

#[test]
fn xi_json() {
    let text = stdout(&["xi", "--a", "0", "--b", "0", "--i", "3", "--k", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["value"]["-2"], "-1");
}

#[test]
fn word_and_magic() {
    assert_eq!(stdout(&["word", "--a", "3", "--b", "5", "--i", "2"]), "1 2 3 1 3 2 1 3 2");
    assert_eq!(
        stdout(&["magic", "--nu", "8", "--k", "4", "--beta", "3", "--eps", "0"]),
        "q^-48 + q^-36 + 2*q^-34 + 3*q^-32 + 2*q^-30 + q^-28 + q^-20 + 2*q^-18 + 3*q^-16 + 2*q^-14 + q^-12 + 1"
    );
    assert_eq!(
        stdout(&["magic", "--nu", "8", "--k", "3", "--beta", "3", "--eps", "0"]),
        "q^-57 + q^-55 + q^-53 + q^-51 + q^-41 + 2*q^-39 + 3*q^-37 + 3*q^-35 + 2*q^-33 + q^-31 + q^-21 + q^-19 + q^-17 + q^-15"
    );
}

#[test]
fn xi_rou_methods_agree() {
    assert_eq!(stdout(&["xi-rou", "--m", "3", "--a", "1", "--i", "1"]), "0");
    for a in ["2", "4", "6"] {
        let f = stdout(&["xi-rou", "--m", "3", "--a", a, "--i", "2"]);
        let s = stdout(&["xi-rou", "--m", "3", "--a", a, "--i", "2", "--method", "specialize"]);
        let c = stdout(&["xi-rou", "--m", "3", "--a", a, "--i", "2", "--method", "corollary"]);
        assert_eq!(f, s);
        assert_eq!(f, c);
        assert_ne!(f, "0");
    }
}

#[test]
fn verify_exit_codes() {
    let ok = demazure(&["verify", "calibration"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("result: PASS"));

    let ok = demazure(&["verify", "formula-vs-oracle", "--max-len", "10"]);
    assert_eq!(ok.status.code(), Some(0));
    let ok = demazure(&["verify", "rou-xi", "--max-m", "4", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["pass"], true);
    assert_eq!(v["ranges"]["max_m"], 4);

    assert_eq!(demazure(&["verify", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(demazure(&["xi", "--a", "1", "--b", "1", "--i", "4", "--k", "0"]).status.code(), Some(2));
    assert_eq!(demazure(&["xi", "--a", "1", "--b", "1", "--i", "1", "--k", "9"]).status.code(), Some(2));
    assert_eq!(demazure(&["magic", "--nu", "4", "--k", "1", "--beta", "1", "--eps", "2"]).status.code(), Some(2));
    assert_eq!(demazure(&["xi", "--a", "1"]).status.code(), Some(2));
    assert_eq!(demazure(&["xi-rou", "--m", "1", "--a", "0", "--i", "1"]).status.code(), Some(2));
}

#[test]
fn reports_are_reproducible_and_written() {
    let dir = std::env::temp_dir().join(format!("demazure-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let args = ["verify", "magic-recursion", "--max-nu", "5", "--format", "json", "--jobs", "1"];
    let seq = demazure(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert_eq!(seq.status.code(), Some(0));
    let par = demazure(&["verify", "magic-recursion", "--max-nu", "5", "--format", "json", "--jobs", "3"]);
    assert_eq!(seq.stdout, par.stdout);
    assert_eq!(std::fs::read(&path).unwrap(), seq.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
