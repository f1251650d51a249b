use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use keyvar::cli::{run, Command, Inject, Options};
use keyvar::coord8::Hypermatrix;
use keyvar::grading::WeightSystem;
use keyvar::Rational;

/// Exact checks for the key variety H13 and its relatives.
#[derive(Parser, Debug)]
#[command(name = "keyvar", version)]
struct Args {
    /// verify-axioms, classify, fiber, chart, radicals, specialize, prop76, weights, hilbert or all
    command: Command,
    /// Hypermatrix file: 8 rationals in p order, or JSON {"p111": ..., ...}
    #[arg(long)]
    hypermatrix: Option<PathBuf>,
    /// Weight file: JSON {var: w} or {var: [w1, w2]}
    #[arg(long)]
    weights: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here ("-" for standard output)
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 30)]
    samples: usize,
    /// Number of weight-1 hyperplane sections for `hilbert`
    #[arg(long, default_value_t = 9)]
    sections: usize,
    /// Negative control: sharp | chart | dictionary
    #[arg(long)]
    inject: Option<Inject>,
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn options(args: &Args) -> Result<Options, String> {
    let hypermatrix = match &args.hypermatrix {
        Some(p) => Some(read(p)?.parse::<Hypermatrix<Rational>>().map_err(|e| format!("{}: {e}", p.display()))?),
        None => None,
    };
    let weights = match &args.weights {
        Some(p) => Some(WeightSystem::from_json(&read(p)?).map_err(|e| format!("{}: {e}", p.display()))?),
        None => None,
    };
    if let Some(w) = &weights {
        let names = keyvar::coord8::COORD_NAMES.iter().chain(keyvar::coord8::P_NAMES.iter());
        if let Some(n) = names.into_iter().find(|n| w.get(n).is_none()) {
            return Err(format!("weights file gives no weight for {n}"));
        }
    }
    Ok(Options { seed: args.seed, samples: args.samples, hypermatrix, weights, sections: args.sections, inject: args.inject })
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let opts = match options(&args) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = run(args.command, &opts);
    for line in &outcome.lines {
        println!("{line}");
    }
    let s = &outcome.report.summary;
    println!("{}: {} of {} claims pass", args.command, s.passed, s.total);
    if let Some(path) = &args.json {
        let text = outcome.report.to_json();
        if path.as_os_str() == "-" {
            println!("{text}");
        } else if let Err(e) = std::fs::write(path, text + "\n") {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if let Some(msg) = outcome.failure_message() {
        eprintln!("FAIL {msg}");
    }
    ExitCode::from(outcome.exit_code() as u8)
}
