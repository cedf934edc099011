//! The report envelope shared by all subcommands, and its renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use versal_core::{MonomialBasis, TruncatedSeries, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRow {
    pub degree: usize,
    pub monomials: Vec<String>,
}

/// Envelope emitted by every subcommand. Coefficients are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub prime: u32,
    pub max_degree: usize,
    pub kind: String,
    pub series: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<BasisRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<Verdict>>,
    /// Scalar result for `equivalences`, `hz-compare` and `collision`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub auxiliary_series: BTreeMap<String, Vec<String>>,
    pub assumptions: Vec<String>,
}

impl Report {
    pub fn new(prime: u32, max_degree: usize, kind: &str) -> Self {
        Report {
            prime,
            max_degree,
            kind: kind.to_owned(),
            series: Vec::new(),
            basis: None,
            verdicts: None,
            value: None,
            auxiliary_series: BTreeMap::new(),
            assumptions: Vec::new(),
        }
    }

    pub fn with_series(mut self, series: &TruncatedSeries) -> Self {
        self.series = series_strings(series);
        self
    }

    pub fn with_basis(mut self, basis: &MonomialBasis) -> Self {
        self.basis = Some(
            (0..=basis.max_degree())
                .map(|degree| BasisRow {
                    degree,
                    monomials: basis.rendered_bucket(degree),
                })
                .collect(),
        );
        self
    }

    pub fn with_auxiliary(mut self, name: &str, series: &TruncatedSeries) -> Self {
        self.auxiliary_series
            .insert(name.to_owned(), series_strings(series));
        self
    }

    pub fn with_assumption(mut self, text: &str) -> Self {
        self.assumptions.push(text.to_owned());
        self
    }

    pub fn all_verdicts_pass(&self) -> bool {
        self.verdicts
            .as_ref()
            .is_none_or(|v| v.iter().all(|v| v.passed))
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.render_table(),
            OutputFormat::Json => self.render_json(),
            OutputFormat::Csv => self.render_csv(),
        }
    }

    pub fn render_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        match self.kind.as_str() {
            "equivalences" | "hz-compare" => {
                let _ = writeln!(out, "{}", self.value.as_deref().unwrap_or(""));
            }
            "collision" => {
                if let (Some(basis), Some(image)) = (&self.basis, &self.value) {
                    for row in basis {
                        for m in &row.monomials {
                            let _ = writeln!(out, "{m} -> {image}");
                        }
                    }
                }
            }
            "verify" => {
                for v in self.verdicts.iter().flatten() {
                    let status = if v.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{status}  {:<16}{}", v.name, v.detail);
                }
            }
            _ => {
                if let Some(basis) = &self.basis {
                    let _ = writeln!(out, "degree  dim  monomials");
                    for row in basis {
                        let _ = writeln!(
                            out,
                            "{:>6}  {:>3}  {}",
                            row.degree,
                            row.monomials.len(),
                            row.monomials.join(", ")
                        );
                    }
                } else if self.auxiliary_series.is_empty() {
                    let _ = writeln!(out, "degree  coefficient");
                    for (n, c) in self.series.iter().enumerate() {
                        let _ = writeln!(out, "{n:>6}  {c}");
                    }
                } else {
                    let names: Vec<&String> = self.auxiliary_series.keys().collect();
                    let _ = write!(out, "degree  {:>11}", self.kind);
                    for name in &names {
                        let _ = write!(out, "  {name:>11}");
                    }
                    out.push('\n');
                    for (n, c) in self.series.iter().enumerate() {
                        let _ = write!(out, "{n:>6}  {c:>11}");
                        for name in &names {
                            let _ = write!(out, "  {:>11}", self.auxiliary_series[*name][n]);
                        }
                        out.push('\n');
                    }
                }
                for v in self.verdicts.iter().flatten() {
                    let status = if v.passed { "pass" } else { "FAIL" };
                    let _ = writeln!(out, "{}: {status}", v.name);
                }
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let mut row = |fields: &[&str]| writer.write_record(fields).expect("in-memory csv");
        match self.kind.as_str() {
            "equivalences" | "hz-compare" => {
                row(&["prime", "value"]);
                row(&[&self.prime.to_string(), self.value.as_deref().unwrap_or("")]);
            }
            "collision" => {
                row(&["source", "image"]);
                let image = self.value.as_deref().unwrap_or("");
                for r in self.basis.iter().flatten() {
                    for m in &r.monomials {
                        row(&[m, image]);
                    }
                }
            }
            "verify" => {
                row(&["check", "passed", "detail"]);
                for v in self.verdicts.iter().flatten() {
                    row(&[&v.name, if v.passed { "true" } else { "false" }, &v.detail]);
                }
            }
            _ => {
                if let Some(basis) = &self.basis {
                    row(&["degree", "monomial"]);
                    for r in basis {
                        let degree = r.degree.to_string();
                        for m in &r.monomials {
                            row(&[&degree, m]);
                        }
                    }
                } else {
                    row(&["degree", "coefficient"]);
                    for (n, c) in self.series.iter().enumerate() {
                        row(&[&n.to_string(), c]);
                    }
                }
            }
        }
        String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("utf-8 fields")
    }
}

fn series_strings(series: &TruncatedSeries) -> Vec<String> {
    series
        .coefficients()
        .iter()
        .map(ToString::to_string)
        .collect()
}
