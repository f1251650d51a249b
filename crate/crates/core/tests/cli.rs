use std::process::{Command, Output};

fn keyvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_keyvar")).args(args).current_dir(env!("CARGO_MANIFEST_DIR")).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_p3_file() {
    let o = keyvar(&["classify", "--hypermatrix", "data/p3.txt"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("O3, D_H = 0, flattening ranks (2,2,2)\n"));
}

#[test]
fn hilbert_with_weight_file() {
    let o = keyvar(&["hilbert", "--weights", "data/wH.json", "--sections", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degree 11/2, h0 5, genus 3"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(keyvar(&["classify", "--hypermatrix", "data/missing.txt"]).status.code(), Some(2));
    assert_eq!(keyvar(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(keyvar(&["hilbert", "--weights", "data/p3.txt"]).status.code(), Some(2));
    assert_eq!(keyvar(&["chart", "--inject", "nothing"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let dir = std::env::temp_dir();
    let a = dir.join("keyvar-det-a.json");
    let b = dir.join("keyvar-det-b.json");
    for p in [&a, &b] {
        let o = keyvar(&["prop76", "--seed", "11", "--samples", "5", "--json", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    let v: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v["schema"], 1);
    let ids: Vec<&str> = v["claims"].as_array().unwrap().iter().map(|c| c["claim_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn injected_chart_defect_names_a_residual() {
    let o = keyvar(&["chart", "--inject", "chart", "--json", "-"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.starts_with("FAIL chart.u1."), "{err}");
    let out = stdout(&o);
    let json = &out[out.find('{').unwrap()..];
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    let red = v["claims"].as_array().unwrap().iter().find(|c| c["claim_id"] == "chart.u1.reduction").unwrap();
    assert_eq!(red["status"], "fail");
    let labels: Vec<String> =
        red["residuals"].as_array().unwrap().iter().map(|r| r.as_str().unwrap().split(':').next().unwrap().to_string()).collect();
    assert_eq!(labels, ["G3a", "G3b", "G4", "G5"]);
}
