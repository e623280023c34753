//! Per-field reports: one row per divisor `k | q - 1`.

use std::fmt::Write;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use gpgraph_core::spectrum::{mu, srg_parameters};
use gpgraph_core::{arith, FiniteField, GpGraph, Nature, WaringResult};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldReportRow {
    pub q: u64,
    pub p: u64,
    pub m: u32,
    pub k: u64,
    pub n: u64,
    pub structure: String,
    pub directed: bool,
    pub components: u64,
    pub nature: String,
    pub mu: usize,
    pub srg: Option<String>,
    pub period: u64,
    pub g: Option<u32>,
    pub w: Option<u32>,
}

impl FieldReportRow {
    pub fn of(graph: &GpGraph) -> FieldReportRow {
        let f = graph.field();
        let waring = WaringResult::of(graph);
        FieldReportRow {
            q: graph.q() as u64,
            p: f.p() as u64,
            m: f.m(),
            k: graph.k() as u64,
            n: graph.n() as u64,
            structure: graph.classify_structure().to_string(),
            directed: graph.is_directed(),
            components: graph.components().component_count,
            nature: Nature::of(graph).as_str().to_string(),
            mu: mu(graph),
            srg: srg_parameters(graph).map(|s| s.to_string()),
            period: graph.period(),
            g: waring.g,
            w: waring.w,
        }
    }
}

pub fn field_report(q: u64) -> Result<Vec<FieldReportRow>> {
    let Some((p, m)) = arith::prime_power(q) else {
        bail!(gpgraph_core::Error::NotPrimePower(q));
    };
    let field = Arc::new(FiniteField::new(p, m)?);
    arith::divisors(q - 1)
        .into_par_iter()
        .map(|k| Ok(FieldReportRow::of(&GpGraph::new(field.clone(), k)?)))
        .collect()
}

const HEADER: [&str; 14] = [
    "q", "p", "m", "k", "n", "structure", "directed", "components", "nature", "mu", "srg",
    "period", "g", "w",
];

fn cells(row: &FieldReportRow) -> [String; 14] {
    let opt = |v: &Option<u32>| v.map_or("-".to_string(), |x| x.to_string());
    [
        row.q.to_string(),
        row.p.to_string(),
        row.m.to_string(),
        row.k.to_string(),
        row.n.to_string(),
        row.structure.clone(),
        if row.directed { "yes" } else { "no" }.to_string(),
        row.components.to_string(),
        row.nature.clone(),
        row.mu.to_string(),
        row.srg.clone().unwrap_or_else(|| "-".to_string()),
        row.period.to_string(),
        opt(&row.g),
        opt(&row.w),
    ]
}

/// Pipe-separated columns padded to a common width.
pub fn render_table(rows: &[FieldReportRow]) -> String {
    let body: Vec<[String; 14]> = rows.iter().map(cells).collect();
    let mut widths = HEADER.map(str::len);
    for r in &body {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cols: &[String]| {
        let padded: Vec<String> = cols
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "{}", padded.join(" | ").trim_end()).unwrap();
    };
    line(&mut out, &HEADER.map(String::from));
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    writeln!(out, "{}", rule.join("-|-")).unwrap();
    for r in &body {
        line(&mut out, r);
    }
    out
}

pub fn parse_table(text: &str) -> Result<Vec<FieldReportRow>> {
    let opt = |s: &str| -> Result<Option<u32>> {
        Ok(if s == "-" { None } else { Some(s.parse()?) })
    };
    text.lines()
        .skip(2)
        .map(|line| {
            let c: Vec<&str> = line.split('|').map(str::trim).collect();
            if c.len() != 14 {
                bail!("expected 14 columns in {line:?}");
            }
            Ok(FieldReportRow {
                q: c[0].parse()?,
                p: c[1].parse()?,
                m: c[2].parse()?,
                k: c[3].parse()?,
                n: c[4].parse()?,
                structure: c[5].to_string(),
                directed: c[6] == "yes",
                components: c[7].parse()?,
                nature: c[8].to_string(),
                mu: c[9].parse()?,
                srg: (c[10] != "-").then(|| c[10].to_string()),
                period: c[11].parse()?,
                g: opt(c[12])?,
                w: opt(c[13])?,
            })
        })
        .collect()
}

/// One JSON object per line.
pub fn render_records(rows: &[FieldReportRow]) -> String {
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("rows serialize") + "\n")
        .collect()
}

pub fn parse_records(text: &str) -> Result<Vec<FieldReportRow>> {
    text.lines()
        .enumerate()
        .map(|(i, line)| serde_json::from_str(line).with_context(|| format!("record {}", i + 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_field() {
        let rows = field_report(4).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].structure, "K_4");
        assert_eq!(rows[1].structure, "2 x K_2");
        assert_eq!(rows[1].g, None);
        assert!(field_report(12).is_err());
    }

    #[test]
    fn absent_values_render_as_dash_and_null() {
        let rows = field_report(9).unwrap();
        let table = render_table(&rows);
        assert!(table.lines().last().unwrap().ends_with("| - | -"));
        assert!(render_records(&rows).contains("\"g\":null"));
    }
}
