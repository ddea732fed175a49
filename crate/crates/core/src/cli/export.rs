//! Rendering of command results as text, CSV, JSON or Markdown.
//!
//! JSON reports always carry the keys `inputs`, `status`, `factors` and
//! `evidence`, emitted in sorted order. CSV output is the result table with
//! a fixed header; an empty table is just the header.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use crate::g0::G0ClassP;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub partition: String,
    pub multiplicity: i64,
}

pub fn factors_of(class: &G0ClassP) -> Vec<Factor> {
    class
        .factors()
        .map(|(lambda, m)| Factor {
            partition: lambda.to_string(),
            multiplicity: m,
        })
        .collect()
}

/// A rectangular result.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// Everything a command produces, independent of the output format.
#[derive(Clone, Debug)]
pub struct Report {
    pub inputs: Value,
    pub status: String,
    pub factors: Vec<Factor>,
    pub evidence: Value,
    pub table: Table,
    /// Human-readable summary used when no format is requested.
    pub text: Vec<String>,
    /// Markdown body; defaults to a rendering of `table`.
    pub markdown: Option<String>,
}

impl Report {
    pub fn new(inputs: Value, status: impl Into<String>) -> Self {
        Self {
            inputs,
            status: status.into(),
            factors: Vec::new(),
            evidence: json!({}),
            table: Table::default(),
            text: Vec::new(),
            markdown: None,
        }
    }

    pub fn render(&self, format: Option<Format>) -> String {
        match format {
            None => {
                let mut out = self.text.join("\n");
                out.push('\n');
                out
            }
            Some(Format::Json) => to_json(self),
            Some(Format::Csv) => to_csv(&self.table),
            Some(Format::Md) => self
                .markdown
                .clone()
                .unwrap_or_else(|| to_markdown(&self.table)),
        }
    }
}

pub fn to_json(report: &Report) -> String {
    let value = json!({
        "inputs": report.inputs,
        "status": report.status,
        "factors": report.factors,
        "evidence": report.evidence,
    });
    let mut out = serde_json::to_string_pretty(&value).expect("reports serialize");
    out.push('\n');
    out
}

pub fn to_csv(table: &Table) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(&table.header).expect("in-memory write");
    for row in &table.rows {
        writer.write_record(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn to_markdown(table: &Table) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", table.header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(table.header.len()));
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|c| c.replace('|', "\\|")).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new(json!({"n": 3, "k": 2}), "OK");
        r.table = Table::new(&["n", "d", "k", "dim_qa", "dim_Qd", "dim_K"]);
        r.table
            .push(["3", "2", "2", "3", "3", "0"].map(String::from).to_vec());
        r.factors = vec![Factor {
            partition: "2,1".into(),
            multiplicity: 1,
        }];
        r
    }

    #[test]
    fn csv_quotes_partitions() {
        let mut t = Table::new(&["partition", "multiplicity"]);
        t.push(vec!["2,1".into(), "1".into()]);
        assert_eq!(to_csv(&t), "partition,multiplicity\n\"2,1\",1\n");
        assert_eq!(to_csv(&Table::new(&["a", "b"])), "a,b\n");
    }

    #[test]
    fn json_keys_are_sorted_and_stable() {
        let a = to_json(&sample());
        assert_eq!(a, to_json(&sample()));
        let keys: Vec<usize> = ["evidence", "factors", "inputs", "status"]
            .iter()
            .map(|k| a.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        let back: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(back["factors"][0]["partition"], "2,1");
        assert_eq!(back["inputs"]["k"], 2);
    }

    #[test]
    fn markdown_table() {
        let md = to_markdown(&sample().table);
        assert!(md.starts_with("| n | d | k | dim_qa | dim_Qd | dim_K |\n|---|"));
    }
}
