//! Built-in worked examples with their expected invariants.

use serde::{Deserialize, Serialize};

use crate::classify::{burch_check, classify, CheckStatus, ClassifyOptions, InvariantReport};
use crate::error::Result;
use crate::invariants::ModuleSpec;
use crate::poly::PolyRing;
use crate::reductions::{reduction_number_wrt, DEFAULT_RMAX};

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub variables: &'static [&'static str],
    pub ambient_rank: usize,
    pub generators: &'static [&'static [&'static str]],
    /// A candidate reduction checked against `candidate_r`.
    pub candidate: Option<&'static [&'static [&'static str]]>,
    /// Largest Rees power used for the depth inequality check.
    pub burch_nmax: Option<usize>,
    pub expected: &'static [(&'static str, &'static str)],
}

impl CorpusEntry {
    pub fn module(&self) -> Result<ModuleSpec> {
        let ring = PolyRing::rationals(self.variables.iter().copied());
        ModuleSpec::parse(&ring, self.ambient_rank, &to_strings(self.generators))
    }

    pub fn candidate_module(&self, module: &ModuleSpec) -> Option<Result<ModuleSpec>> {
        self.candidate
            .map(|c| ModuleSpec::parse(module.ring(), self.ambient_rank, &to_strings(c)))
    }
}

fn to_strings(cols: &[&[&str]]) -> Vec<Vec<String>> {
    cols.iter()
        .map(|c| c.iter().map(|s| s.to_string()).collect())
        .collect()
}

pub const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "prime_sum",
        description: "(x1,x2) ⊕ (x1,x3) over Q[x1,x2,x3]",
        variables: &["x1", "x2", "x3"],
        ambient_rank: 2,
        generators: &[&["x1", "0"], &["x2", "0"], &["0", "x1"], &["0", "x3"]],
        candidate: None,
        burch_nmax: None,
        expected: &[
            ("mu", "4"),
            ("rank", "2"),
            ("ht_fe", "2"),
            ("analytic_spread", "4"),
            ("deviation", "1"),
            ("analytic_deviation", "1"),
            ("r", "0"),
            ("complete_intersection", "false"),
            ("equimultiple", "false"),
            ("generically_ci", "true"),
            ("ideal_module", "true"),
            ("free_punctured_spectrum", "false"),
        ],
    },
    CorpusEntry {
        name: "maximal_sum",
        description: "(x,y) ⊕ (x,y) over Q[x,y]",
        variables: &["x", "y"],
        ambient_rank: 2,
        generators: &[&["x", "0"], &["y", "0"], &["0", "x"], &["0", "y"]],
        candidate: Some(&[&["x", "0"], &["0", "x + y"], &["y", "x"]]),
        burch_nmax: Some(3),
        expected: &[
            ("mu", "4"),
            ("rank", "2"),
            ("ht_fe", "2"),
            ("analytic_spread", "3"),
            ("deviation", "1"),
            ("analytic_deviation", "0"),
            ("r", "1"),
            ("complete_intersection", "false"),
            ("equimultiple", "true"),
            ("linear_type", "false"),
            ("ideal_module", "true"),
            ("free_punctured_spectrum", "true"),
            ("dim_quotient", "0"),
            ("candidate_r", "1"),
            ("burch", "pass_equality"),
        ],
    },
    CorpusEntry {
        name: "maximal_ideal",
        description: "(x,y) ⊆ Q[x,y]",
        variables: &["x", "y"],
        ambient_rank: 1,
        generators: &[&["x"], &["y"]],
        candidate: None,
        burch_nmax: None,
        expected: &[
            ("mu", "2"),
            ("ht_fe", "2"),
            ("analytic_spread", "2"),
            ("deviation", "0"),
            ("analytic_deviation", "0"),
            ("r", "0"),
            ("complete_intersection", "true"),
            ("equimultiple", "true"),
            ("linear_type", "true"),
        ],
    },
    CorpusEntry {
        name: "free",
        description: "R^2 over Q[x,y]",
        variables: &["x", "y"],
        ambient_rank: 2,
        generators: &[&["1", "0"], &["0", "1"]],
        candidate: None,
        burch_nmax: Some(2),
        expected: &[
            ("mu", "2"),
            ("analytic_spread", "2"),
            ("trivially_free", "true"),
            ("linear_type", "true"),
            ("r", "0"),
            ("burch", "skipped"),
        ],
    },
    CorpusEntry {
        name: "free_plus_ideal",
        description: "R ⊕ (x,y) over Q[x,y,z]",
        variables: &["x", "y", "z"],
        ambient_rank: 2,
        generators: &[&["1", "0"], &["0", "x"], &["0", "y"]],
        candidate: None,
        burch_nmax: None,
        expected: &[
            ("mu", "3"),
            ("ht_fe", "2"),
            ("analytic_spread", "3"),
            ("complete_intersection", "true"),
            ("equimultiple", "true"),
            ("ideal_module", "true"),
        ],
    },
];

pub fn entry(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusCheck {
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusOutcome {
    pub name: String,
    pub description: String,
    pub checks: Vec<CorpusCheck>,
}

impl CorpusOutcome {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "none".into(), |x| x.to_string())
}

/// The value of `key` in a report, rendered as text.
pub fn report_value(report: &InvariantReport, key: &str) -> Option<String> {
    let f = &report.flags;
    Some(match key {
        "mu" => report.mu.to_string(),
        "rank" => report.rank.to_string(),
        "ht_fe" => report.ht_fe.to_string(),
        "analytic_spread" => report.analytic_spread.to_string(),
        "deviation" => opt(report.deviation),
        "analytic_deviation" => opt(report.analytic_deviation),
        "grade_quotient" => report.grade_quotient.to_string(),
        "dim_quotient" => report.dim_quotient.to_string(),
        "r" => opt(report.reduction_number()),
        "trivially_free" => f.trivially_free.to_string(),
        "ideal_module" => f.ideal_module.to_string(),
        "complete_intersection" => opt(f.complete_intersection),
        "equimultiple" => opt(f.equimultiple),
        "generically_ci" => opt(f.generically_ci.as_ref().and_then(|g| g.value)),
        "free_punctured_spectrum" => f.free_punctured_spectrum.to_string(),
        "linear_type" => f.linear_type.to_string(),
        _ => return None,
    })
}

/// Runs one entry and compares every expected value.
pub fn run_entry(entry: &CorpusEntry) -> Result<CorpusOutcome> {
    let module = entry.module()?;
    let report = classify(&module, &ClassifyOptions::default())?;
    let mut checks = Vec::new();
    for &(key, expected) in entry.expected {
        let actual = match key {
            "candidate_r" => match entry.candidate_module(&module) {
                Some(u) => reduction_number_wrt(&u?, &module, DEFAULT_RMAX)?.describe(),
                None => "no candidate".into(),
            },
            "burch" => {
                let b = burch_check(&module, entry.burch_nmax.unwrap_or(1))?;
                match (b.status, b.equality) {
                    (CheckStatus::Pass, true) => "pass_equality".into(),
                    (status, _) => status.as_str().into(),
                }
            }
            _ => report_value(&report, key).unwrap_or_else(|| "unknown key".into()),
        };
        let pass = match key {
            "candidate_r" => actual == format!("reduction with r = {expected}"),
            _ => actual == expected,
        };
        checks.push(CorpusCheck {
            key: key.into(),
            expected: expected.into(),
            actual,
            pass,
        });
    }
    Ok(CorpusOutcome {
        name: entry.name.into(),
        description: entry.description.into(),
        checks,
    })
}

pub fn run_all() -> Result<Vec<CorpusOutcome>> {
    ENTRIES.iter().map(run_entry).collect()
}
