//! The twelve acceptance criteria, one line each. Exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::Command as Process;

use keyvar::cli::{run, Command, Options};
use keyvar::report::Claim;

struct Claims(BTreeMap<String, Claim>);

impl Claims {
    fn collect(cmds: &[Command]) -> Self {
        let opts = Options { seed: 7, ..Options::default() };
        let mut all = BTreeMap::new();
        for cmd in cmds {
            for c in run(*cmd, &opts).report.claims {
                all.insert(c.claim_id.clone(), c);
            }
        }
        Claims(all)
    }

    /// All claims whose id starts with one of `prefixes`; at least `min` of them, all passing.
    fn check(&self, prefixes: &[&str], min: usize) -> Result<String, String> {
        let picked: Vec<&Claim> =
            self.0.values().filter(|c| prefixes.iter().any(|p| c.claim_id.starts_with(p))).collect();
        if picked.len() < min {
            return Err(format!("only {} claims for {prefixes:?}", picked.len()));
        }
        if let Some(c) = picked.iter().find(|c| !c.passed()) {
            return Err(format!("{}: {}", c.claim_id, c.residuals.first().cloned().unwrap_or_default()));
        }
        Ok(format!("{} claims", picked.len()))
    }

    fn witness(&self, id: &str) -> &serde_json::Value {
        &self.0[id].witness
    }
}

fn criterion_10(c: &Claims) -> Result<String, String> {
    c.check(&["hilbert."], 3)?;
    let cd = c.witness("hilbert.canonical");
    let got: Vec<&str> = ["c", "d", "delta", "weight_sum", "omega_h_twist"].iter().map(|k| cd[k].as_str().unwrap_or("")).collect();
    if got != ["4", "6", "10", "20", "-10"] {
        return Err(format!("c, d, delta, sum, twist = {got:?}"));
    }
    let num = c.witness("hilbert.numerator");
    if num != "1 - 6t^3 - t^4 + 12t^5 - t^6 - 6t^7 + t^10" {
        return Err(format!("Num = {num}"));
    }
    let f = c.witness("hilbert.fano");
    if f["degree"] != "11/2" || f["genus"] != 3 {
        return Err(format!("invariants {f}"));
    }
    Ok("c=4 d=6 delta=10 sum=20, degree 11/2, genus 3".into())
}

fn criterion_12() -> Result<String, String> {
    let exe = env!("CARGO_BIN_EXE_keyvar");
    let mut seen = Vec::new();
    for (cmd, defect) in [("verify-axioms", "sharp"), ("chart", "chart"), ("specialize", "dictionary")] {
        let out = Process::new(exe).args([cmd, "--inject", defect]).output().map_err(|e| e.to_string())?;
        let stderr = String::from_utf8_lossy(&out.stderr);
        if out.status.code() != Some(1) {
            return Err(format!("{defect}: exit {:?}", out.status.code()));
        }
        if !stderr.starts_with("FAIL ") || stderr.trim().ends_with(": failed") {
            return Err(format!("{defect}: no residual on stderr"));
        }
        seen.push(defect);
    }
    Ok(format!("{} defects detected", seen.len()))
}

fn main() {
    let c = Claims::collect(&[
        Command::VerifyAxioms,
        Command::Classify,
        Command::Fiber,
        Command::Chart,
        Command::Radicals,
        Command::Specialize,
        Command::ClusterMaps,
        Command::Weights,
        Command::Hilbert,
    ]);
    let results: Vec<(&str, Result<String, String>)> = vec![
        ("sharp conditions", c.check(&["axioms.sharp"], 3)),
        ("table and sharp map", c.check(&["table."], 4)),
        ("cubic form at origin, p2, p3", c.check(&["norm."], 3)),
        ("equivariance", c.check(&["equivariance."], 10)),
        ("orbit classifier", c.check(&["classify."], 10)),
        ("fibers", c.check(&["fiber."], 5)),
        ("u1-chart and Pfaffians", c.check(&["chart."], 3)),
        ("radicals", c.check(&["radicals."], 6)),
        ("specializations", c.check(&["specialize.m8", "specialize.s6", "specialize.c2", "cluster_map."], 5)),
        ("grading and Hilbert series", criterion_10(&c)),
        ("bigradings and the 5052 weights on H12", c.check(&["weights.wtmat", "weights.5052"], 6)),
        ("negative controls", criterion_12()),
    ];
    let mut failed = 0;
    for (n, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(msg) => println!("criterion {:>2} PASS  {name} ({msg})", n + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", n + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
