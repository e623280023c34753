//! Text output for the `spectrum` and `waring` commands.

use std::fmt::Write;

use anyhow::{bail, Result};
use gpgraph_core::spectrum::{mu_doubling_gap, SpectrumReport};
use gpgraph_core::waring::witness;
use gpgraph_core::{FieldElement, FiniteField, GpGraph, WaringResult};

pub fn render_spectrum(graph: &GpGraph, report: &SpectrumReport) -> String {
    let mut out = String::new();
    writeln!(out, "{graph:?}: n = {}, nature {}, mu = {}", report.n, report.nature, report.mu).unwrap();
    let rows: Vec<(String, String, u64)> = report
        .eigenvalues
        .iter()
        .map(|(l, m)| (l.render_exact(), l.render_numeric(), *m))
        .collect();
    let we = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    let wn = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(0);
    for (exact, numeric, mult) in rows {
        writeln!(out, "{exact:<we$}  {numeric:<wn$}  x{mult}").unwrap();
    }
    if let Some(gap) = mu_doubling_gap(graph) {
        writeln!(out, "mu(Γ({},{})) - mu = {gap}", 2 * graph.k(), graph.q()).unwrap();
    }
    out
}

/// Parses `c0,c1,...` (constant term first) into an element of `field`.
pub fn parse_element(field: &FiniteField, text: &str) -> Result<FieldElement> {
    let coeffs = text
        .split(',')
        .map(|c| c.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() > field.m() as usize {
        bail!("{text:?} has more than {} coefficients", field.m());
    }
    Ok(field.element(&coeffs)?)
}

pub fn render_waring(graph: &GpGraph, target: Option<FieldElement>) -> Result<String> {
    let r = WaringResult::of(graph);
    let show = |v: Option<u32>| v.map_or("-".to_string(), |x| x.to_string());
    let mut out = format!("g({},{}) = {}\nw({},{}) = {}\n", r.k, r.q, show(r.g), r.k, r.q, show(r.w));
    if let Some(reason) = &r.reason_if_absent {
        writeln!(out, "absent: {reason}").unwrap();
    }
    if let Some(t) = target {
        let f = graph.field();
        let e = graph.k_raw();
        for signed in [false, true] {
            let terms = witness(graph, t, signed)?;
            let body: Vec<String> = terms
                .iter()
                .enumerate()
                .map(|(i, &(s, x))| {
                    let sign = match (i, s < 0) {
                        (0, false) => "",
                        (0, true) => "-",
                        (_, false) => " + ",
                        (_, true) => " - ",
                    };
                    format!("{sign}({})^{e}", f.display(x))
                })
                .collect();
            let body = if body.is_empty() { "0 (empty sum)".to_string() } else { body.concat() };
            let label = if signed { "signed" } else { "sum" };
            writeln!(out, "{label}: {} = {body}", f.display(t)).unwrap();
        }
    }
    Ok(out)
}
