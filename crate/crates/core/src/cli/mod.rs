//! Commands of the `keyvar` binary: each runs a suite of claims and returns
//! a [`Report`] plus lines for standard output.

mod suites;

use std::fmt;
use std::str::FromStr;

use crate::coord8::Hypermatrix;
use crate::grading::WeightSystem;
use crate::report::{Claim, Report};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    VerifyAxioms,
    Classify,
    Fiber,
    Chart,
    Radicals,
    Specialize,
    ClusterMaps,
    Weights,
    Hilbert,
    All,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::VerifyAxioms,
        Command::Classify,
        Command::Fiber,
        Command::Chart,
        Command::Radicals,
        Command::Specialize,
        Command::ClusterMaps,
        Command::Weights,
        Command::Hilbert,
        Command::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::VerifyAxioms => "verify-axioms",
            Command::Classify => "classify",
            Command::Fiber => "fiber",
            Command::Chart => "chart",
            Command::Radicals => "radicals",
            Command::Specialize => "specialize",
            Command::ClusterMaps => "prop76",
            Command::Weights => "weights",
            Command::Hilbert => "hilbert",
            Command::All => "all",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown command {s:?}"))
    }
}

/// Deliberate defects for the negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inject {
    /// `x11^2` added to the first component of the sharp map.
    Sharp,
    /// The `u1`-chart without its `u3` substitution.
    Chart,
    /// The `C2` dictionary with `u1 -> -th12`.
    Dictionary,
}

impl FromStr for Inject {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sharp" => Ok(Inject::Sharp),
            "chart" => Ok(Inject::Chart),
            "dictionary" => Ok(Inject::Dictionary),
            other => Err(format!("unknown defect {other:?}")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    pub seed: u64,
    pub samples: usize,
    pub hypermatrix: Option<Hypermatrix<Rational>>,
    pub weights: Option<WeightSystem>,
    pub sections: usize,
    pub inject: Option<Inject>,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, samples: 30, hypermatrix: None, weights: None, sections: 9, inject: None }
    }
}

pub struct Outcome {
    pub report: Report,
    /// Human-readable results for standard output.
    pub lines: Vec<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.all_passed() {
            0
        } else {
            1
        }
    }

    /// The first failing claim with its first residual, for standard error.
    pub fn failure_message(&self) -> Option<String> {
        self.report.first_failure().map(|c| match c.residuals.first() {
            Some(r) => format!("{}: {r}", c.claim_id),
            None => format!("{}: failed", c.claim_id),
        })
    }
}

pub(crate) struct Suite {
    pub claims: Vec<Claim>,
    pub lines: Vec<String>,
}

pub fn run(cmd: Command, opts: &Options) -> Outcome {
    let suites: Vec<Suite> = match cmd {
        Command::VerifyAxioms => vec![suites::verify_axioms(opts)],
        Command::Classify => vec![suites::classify(opts)],
        Command::Fiber => vec![suites::fiber(opts)],
        Command::Chart => vec![suites::chart(opts)],
        Command::Radicals => vec![suites::radicals(opts)],
        Command::Specialize => vec![suites::specialize(opts)],
        Command::ClusterMaps => vec![suites::cluster_maps(opts)],
        Command::Weights => vec![suites::weights(opts)],
        Command::Hilbert => vec![suites::hilbert(opts)],
        Command::All => vec![
            suites::verify_axioms(opts),
            suites::classify(opts),
            suites::fiber(opts),
            suites::chart(opts),
            suites::radicals(opts),
            suites::specialize(opts),
            suites::cluster_maps(opts),
            suites::weights(opts),
            suites::hilbert(opts),
        ],
    };
    let mut claims = Vec::new();
    let mut lines = Vec::new();
    for s in suites {
        claims.extend(s.claims);
        lines.extend(s.lines);
    }
    Outcome { report: Report::new(cmd.name(), opts.seed, claims), lines }
}
