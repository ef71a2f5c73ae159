//! Rendering of Monte Carlo summaries in the Mean / MAD / MSE per sample-size layout.
//!
//! One row per (row label, parameter); one column group per sample size, ascending.

use std::str::FromStr;

use serde::Serialize;

use super::McSummary;
use crate::error::{Error, Result};
use crate::sim::Param;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    Text,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "text" | "txt" => Ok(TableFormat::Text),
            other => Err(Error::Config(format!("unknown table format '{other}'"))),
        }
    }
}

impl TableFormat {
    pub fn extension(self) -> &'static str {
        match self {
            TableFormat::Csv => "csv",
            TableFormat::Json => "json",
            TableFormat::Text => "txt",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct Cell {
    sample_size: usize,
    mean: f64,
    mad: f64,
    mse: f64,
    replications: usize,
    failed: usize,
}

#[derive(Debug, Clone, Serialize)]
struct Row {
    row: String,
    param: Param,
    truth: f64,
    cells: Vec<Option<Cell>>,
}

struct Layout {
    sizes: Vec<usize>,
    rows: Vec<Row>,
}

fn layout(summaries: &[McSummary]) -> Result<Layout> {
    if let Some(first) = summaries.first() {
        let name = first.config.estimator.name();
        if let Some(s) = summaries.iter().find(|s| s.config.estimator.name() != name) {
            return Err(Error::Config(format!(
                "cannot tabulate '{}' next to '{name}' summaries",
                s.config.estimator.name()
            )));
        }
    }
    let mut sizes: Vec<usize> = summaries.iter().map(|s| s.config.sample_size).collect();
    sizes.sort_unstable();
    sizes.dedup();

    let mut rows: Vec<Row> = Vec::new();
    for s in summaries {
        let label = s.config.row_label();
        let col = sizes.binary_search(&s.config.sample_size).expect("size collected above");
        for r in &s.rows {
            let idx = match rows.iter().position(|x| x.row == label && x.param == r.param) {
                Some(i) => i,
                None => {
                    rows.push(Row {
                        row: label.clone(),
                        param: r.param,
                        truth: r.truth,
                        cells: vec![None; sizes.len()],
                    });
                    rows.len() - 1
                }
            };
            if rows[idx].cells[col].is_some() {
                return Err(Error::Config(format!(
                    "two summaries for row '{label}', {} at N = {}",
                    r.param.as_str(),
                    s.config.sample_size
                )));
            }
            rows[idx].cells[col] = Some(Cell {
                sample_size: s.config.sample_size,
                mean: r.mean,
                mad: r.mad,
                mse: r.mse,
                replications: s.config.replications,
                failed: s.failed,
            });
        }
    }
    Ok(Layout { sizes, rows })
}

/// Renders summaries as csv, json or aligned text.
pub fn emit_table(summaries: &[McSummary], format: TableFormat) -> Result<String> {
    let layout = layout(summaries)?;
    match format {
        TableFormat::Csv => csv_table(&layout),
        TableFormat::Json => {
            let rows: Vec<serde_json::Value> = layout
                .rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "row": r.row,
                        "param": r.param,
                        "truth": r.truth,
                        "cells": r.cells.iter().flatten().collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&rows).map_err(|e| Error::Config(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        TableFormat::Text => Ok(text_table(&layout)),
    }
}

fn csv_table(layout: &Layout) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["row".to_string(), "param".to_string(), "truth".to_string()];
    for n in &layout.sizes {
        for stat in ["mean", "mad", "mse"] {
            header.push(format!("n{n}_{stat}"));
        }
    }
    let to_err = |e: csv::Error| Error::Config(format!("csv encoding failed: {e}"));
    w.write_record(&header).map_err(to_err)?;
    for r in &layout.rows {
        let mut rec = vec![r.row.clone(), r.param.as_str().to_string(), r.truth.to_string()];
        for c in &r.cells {
            match c {
                Some(c) => rec.extend([c.mean.to_string(), c.mad.to_string(), c.mse.to_string()]),
                None => rec.extend([String::new(), String::new(), String::new()]),
            }
        }
        w.write_record(&rec).map_err(to_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Config(format!("csv encoding failed: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Config(e.to_string()))
}

fn text_table(layout: &Layout) -> String {
    const GROUP: usize = 30;
    let label_w = layout
        .rows
        .iter()
        .map(|r| r.row.chars().count())
        .max()
        .unwrap_or(0)
        .max(3);
    let lead = label_w + 2 + 7;
    let mut lines = Vec::new();
    let mut line = " ".repeat(lead);
    for n in &layout.sizes {
        line.push_str(&format!("{:^GROUP$}", format!("N={n}")));
    }
    lines.push(line);
    let mut line = format!("{:<label_w$}  {:<5}  ", "row", "param");
    for _ in &layout.sizes {
        line.push_str(&format!("{:>8} {:>8} {:>11} ", "Mean", "MAD", "MSE"));
    }
    lines.push(line);
    for r in &layout.rows {
        let mut line = format!("{:<label_w$}  {:<5}  ", r.row, r.param.as_str());
        for c in &r.cells {
            match c {
                Some(c) => line.push_str(&format!("{:>8.4} {:>8.4} {:>11.4e} ", c.mean, c.mad, c.mse)),
                None => line.push_str(&format!("{:>8} {:>8} {:>11} ", "-", "-", "-")),
            }
        }
        lines.push(line);
    }
    let mut out = String::new();
    for l in lines {
        out.push_str(l.trim_end());
        out.push('\n');
    }
    out
}
