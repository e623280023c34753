//! Dense floating-point eigenvalues, used to cross-check exact spectra.

use anyhow::{bail, Context, Result};
use gpgraph_core::spectrum::SpectrumReport;
use gpgraph_core::{Error, GpGraph};
use nalgebra::linalg::{Schur, SymmetricEigen};
use nalgebra::{Complex, DMatrix};

pub const ORACLE_MAX_Q: u64 = 512;

// nalgebra's unbounded defaults iterate to machine epsilon and can stall
const TOLERANCE: f64 = 1e-14;
const MAX_SWEEPS: usize = 100_000;

pub fn adjacency_matrix(graph: &GpGraph) -> DMatrix<f64> {
    let q = graph.q() as usize;
    let f = graph.field();
    let mut a = DMatrix::zeros(q, q);
    for u in f.elements() {
        for &s in graph.connection_set() {
            a[(u.index(), f.add(u, s).index())] = 1.0;
        }
    }
    a
}

pub fn dense_eigenvalues(graph: &GpGraph) -> Result<Vec<Complex<f64>>> {
    let q = graph.q() as u64;
    if q > ORACLE_MAX_Q {
        bail!(Error::SizeBudgetExceeded { size: q, budget: ORACLE_MAX_Q });
    }
    let a = adjacency_matrix(graph);
    Ok(if graph.is_directed() {
        Schur::try_new(a, TOLERANCE, MAX_SWEEPS)
            .with_context(|| format!("Schur iteration did not converge for {graph:?}"))?
            .complex_eigenvalues()
            .iter()
            .copied()
            .collect()
    } else {
        SymmetricEigen::try_new(a, TOLERANCE, MAX_SWEEPS)
            .with_context(|| format!("symmetric eigensolver did not converge for {graph:?}"))?
            .eigenvalues
            .iter()
            .map(|&x| Complex::new(x, 0.0))
            .collect()
    })
}

/// Pairs every exact eigenvalue (with multiplicity) with the nearest unused
/// numeric one and returns the largest distance.
pub fn greedy_match(exact: &SpectrumReport, numeric: &[Complex<f64>]) -> f64 {
    assert_eq!(exact.total_multiplicity() as usize, numeric.len());
    let mut used = vec![false; numeric.len()];
    let mut worst = 0.0f64;
    for (lambda, mult) in &exact.eigenvalues {
        let z = lambda.embed_numeric();
        for _ in 0..*mult {
            let (i, d) = numeric
                .iter()
                .enumerate()
                .filter(|(i, _)| !used[*i])
                .map(|(i, w)| (i, (w - z).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .expect("as many numeric values as exact ones");
            used[i] = true;
            worst = worst.max(d);
        }
    }
    worst
}

/// Largest deviation between the exact spectrum and the dense one.
pub fn numeric_deviation(graph: &GpGraph) -> Result<f64> {
    let numeric = dense_eigenvalues(graph)?;
    Ok(greedy_match(&gpgraph_core::spectrum::spectrum(graph), &numeric))
}
