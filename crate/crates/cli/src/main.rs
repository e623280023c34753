use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use gpgraph::families::{self, FamilyArgs};
use gpgraph::{oracle, render, report, verify};
use gpgraph_core::{arith, FiniteField, GpGraph, DEFAULT_MAX_Q};

#[derive(Parser)]
#[command(name = "gpgraph", version, about = "Generalized Paley graphs Γ(k, q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// One row per divisor k of q - 1.
    Report {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the invariant checks over every field of size at most max-q.
    Verify {
        #[arg(long)]
        max_q: u64,
    },
    /// Enumerate an infinite family of integral graphs.
    Families {
        #[arg(long, value_parser = families::KINDS)]
        kind: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        d: Option<u32>,
        /// Base field for a tower.
        #[arg(long)]
        base_q: Option<u64>,
        /// Inner family of a two-parameter family.
        #[arg(long, value_parser = families::KINDS)]
        inner: Option<String>,
        #[arg(long, default_value_t = 1 << 20)]
        max_q: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Exact spectrum of Γ(k, q).
    Spectrum {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u64,
        /// Also compare against dense numeric eigenvalues.
        #[arg(long)]
        oracle: bool,
    },
    /// Waring numbers g(k, q) and w(k, q).
    Waring {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u64,
        /// Element as coefficients c0,c1,... (constant term first).
        #[arg(long)]
        witness: Option<String>,
    },
}

fn graph(q: u64, k: u64) -> anyhow::Result<GpGraph> {
    let (p, m) = arith::prime_power(q).ok_or(gpgraph_core::Error::NotPrimePower(q))?;
    Ok(GpGraph::new(Arc::new(FiniteField::new(p, m)?), k)?)
}

/// `Ok(false)` is a verification failure, `Err` a usage error.
fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Report { q, format } => {
            let rows = report::field_report(q)?;
            match format {
                Format::Table => print!("{}", report::render_table(&rows)),
                Format::Records => print!("{}", report::render_records(&rows)),
            }
        }
        Command::Verify { max_q } => {
            if max_q > DEFAULT_MAX_Q {
                anyhow::bail!(gpgraph_core::Error::SizeBudgetExceeded { size: max_q, budget: DEFAULT_MAX_Q });
            }
            let summary = verify::run_verify(max_q);
            println!("{summary}");
            return Ok(summary.passed());
        }
        Command::Families { kind, p, k, d, base_q, inner, max_q, format } => {
            let family = families::descriptor(&FamilyArgs { kind, p, k, d, base_q, inner })?;
            let members = families::members(&family, max_q)?;
            match format {
                Format::Table => print!("{}", families::render_table(&family, &members)),
                Format::Records => print!("{}", families::render_records(&members)),
            }
            return Ok(members.iter().all(|m| m.integral));
        }
        Command::Spectrum { q, k, oracle: check } => {
            let g = graph(q, k)?;
            let report = gpgraph_core::spectrum::spectrum(&g);
            print!("{}", render::render_spectrum(&g, &report));
            if check {
                let numeric = oracle::dense_eigenvalues(&g)?;
                let dev = oracle::greedy_match(&report, &numeric);
                println!("numeric oracle: max deviation {dev:.3e}");
                return Ok(dev < 1e-8);
            }
        }
        Command::Waring { q, k, witness } => {
            let g = graph(q, k)?;
            let target = witness.map(|w| render::parse_element(g.field(), &w)).transpose()?;
            print!("{}", render::render_waring(&g, target)?);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
