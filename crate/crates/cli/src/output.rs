//! JSON and aligned-text rendering.

use serde::Serialize;

use reesmod::classify::InvariantReport;

use crate::{ClassifyOutput, CorpusOutput, FittingOutput, ReductionOutput, ReesOutput, SpreadOutput};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

pub trait Render {
    fn text(&self) -> String;

    fn warnings(&self) -> &[String] {
        &[]
    }
}

pub fn render<T: Serialize + Render>(format: Format, value: &T) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable output"),
        Format::Text => value.text(),
    }
}

fn aligned(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn row(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

fn columns(cols: &[Vec<String>]) -> String {
    cols.iter()
        .map(|c| format!("({})", c.join(", ")))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Render for InvariantReport {
    fn text(&self) -> String {
        let f = &self.flags;
        let mut rows = vec![
            row("nvars", self.nvars),
            row("ambient_rank", self.ambient_rank),
            row("num_generators", self.num_generators),
            row("rank", self.rank),
            row("mu", self.mu),
            row("ht_fe", self.ht_fe),
            row("analytic_spread", self.analytic_spread),
            row("deviation", opt(self.deviation)),
            row("analytic_deviation", opt(self.analytic_deviation)),
            row("grade_quotient", self.grade_quotient),
            row("dim_quotient", self.dim_quotient),
            row("trivially_free", f.trivially_free),
            row("ideal_module", f.ideal_module),
            row("complete_intersection", opt(f.complete_intersection)),
            row("equimultiple", opt(f.equimultiple)),
            row(
                "generically_ci",
                f.generically_ci
                    .as_ref()
                    .map_or("-".into(), |g| g.value.map_or("undetermined".into(), |b| b.to_string())),
            ),
            row("free_punctured_spectrum", f.free_punctured_spectrum),
            row("linear_type", f.linear_type),
        ];
        if let Some(c) = &self.reduction {
            rows.push(row("reduction", c.outcome.describe()));
            rows.push(row("reduction_generators", columns(&c.generators)));
            rows.push(row("seed", opt(c.seed)));
        }
        for n in &self.notes {
            rows.push(row("note", n));
        }
        aligned(&rows)
    }
}

impl Render for FittingOutput {
    fn text(&self) -> String {
        aligned(&[
            row("index", self.index),
            row("height", self.height),
            row("generators", self.generators.join(", ")),
        ])
    }
}

impl Render for SpreadOutput {
    fn text(&self) -> String {
        aligned(&[
            row("analytic_spread", self.analytic_spread),
            row("kernel_generators", self.kernel_generators),
            row("fiber_generators", self.fiber_generators),
        ])
    }
}

impl Render for ReesOutput {
    fn text(&self) -> String {
        aligned(&[
            row("power", self.power),
            row("ambient_rank", self.ambient_rank),
            row("rank", self.rank),
            row("expected_rank", self.expected_rank),
            row("rank_check", self.rank_check),
            row("generators", columns(&self.generators)),
        ])
    }

    fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

impl Render for ReductionOutput {
    fn text(&self) -> String {
        let c = &self.certificate;
        let mut rows = vec![
            row("verdict", &self.verdict),
            row("verified", c.verified),
            row("search_bound", c.search_bound),
            row("generators", columns(&c.generators)),
        ];
        if let Some(s) = c.seed {
            rows.push(row("seed", s));
        }
        if let Some(t) = c.trial {
            rows.push(row("trial", t));
        }
        aligned(&rows)
    }

    fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

impl Render for ClassifyOutput {
    fn text(&self) -> String {
        let mut rows: Vec<(String, String)> = self
            .provenance
            .iter()
            .map(|p| (p.flag.clone(), format!("{}  ({})", p.value, p.reason)))
            .collect();
        for c in &self.crosschecks {
            rows.push((c.name.clone(), format!("{}  ({})", c.status.as_str(), c.detail)));
        }
        for n in &self.notes {
            rows.push(row("note", n));
        }
        aligned(&rows)
    }
}

impl Render for CorpusOutput {
    fn text(&self) -> String {
        let mut lines = Vec::new();
        for entry in &self.entries {
            for c in &entry.checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                let mut line = format!("{tag} {} {} = {}", entry.name, c.key, c.actual);
                if !c.pass {
                    line.push_str(&format!(" (expected {})", c.expected));
                }
                lines.push(line);
            }
        }
        lines.push(if self.pass { "all PASS".into() } else { "corpus mismatch".into() });
        lines.join("\n")
    }
}
