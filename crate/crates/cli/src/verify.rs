//! Invariant sweeps over every `Γ(k, q)` with `q ≤ max_q`.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use gpgraph_core::families::{census, census_by_enumeration};
use gpgraph_core::spectrum::{self, boundary_spectrum, mu, verify_2re};
use gpgraph_core::waring::{waring_g, waring_w};
use gpgraph_core::{arith, FieldElement, FiniteField, GpGraph, Nature};
use rayon::prelude::*;

pub type NatureRule = fn(u64, u32, u64) -> Nature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Nature,
    Trace,
    Components,
    TwoRe,
    Period,
    WaringFormula,
    Census,
    DirectedMu,
    Boundary,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Nature,
        Check::Trace,
        Check::Components,
        Check::TwoRe,
        Check::Period,
        Check::WaringFormula,
        Check::Census,
        Check::DirectedMu,
        Check::Boundary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Nature => "nature",
            Check::Trace => "trace identities",
            Check::Components => "components",
            Check::TwoRe => "2Re relation",
            Check::Period => "period formula",
            Check::WaringFormula => "w/g formula",
            Check::Census => "census",
            Check::DirectedMu => "mu >= 3 (directed)",
            Check::Boundary => "boundary spectrum",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub q: u64,
    pub k: Option<u64>,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "(k,q) = ({k},{}): {}", self.q, self.message),
            None => write!(f, "q = {}: {}", self.q, self.message),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
    /// The failure with the smallest `(q, k)`, so the report does not
    /// depend on scheduling.
    pub first_failure: Option<Failure>,
}

impl Tally {
    fn record(&mut self, outcome: Result<(), Failure>) {
        match outcome {
            Ok(()) => self.passed += 1,
            Err(f) => {
                self.failed += 1;
                self.keep_first(Some(f));
            }
        }
    }

    fn keep_first(&mut self, candidate: Option<Failure>) {
        let key = |f: &Failure| (f.q, f.k);
        self.first_failure = match (self.first_failure.take(), candidate) {
            (Some(a), Some(b)) => Some(if key(&b) < key(&a) { b } else { a }),
            (a, b) => a.or(b),
        };
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.passed += other.passed;
        self.failed += other.failed;
        self.keep_first(other.first_failure);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub max_q: u64,
    pub tallies: Vec<(Check, Tally)>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.tallies.iter().all(|(_, t)| t.failed == 0)
    }

    pub fn tally(&self, check: Check) -> &Tally {
        &self.tallies.iter().find(|(c, _)| *c == check).expect("every check is tallied").1
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify q <= {}", self.max_q)?;
        for (check, t) in &self.tallies {
            let status = if t.failed == 0 { "PASS" } else { "FAIL" };
            write!(f, "{status} {:<20} {} passed, {} failed", check.name(), t.passed, t.failed)?;
            if let Some(first) = &t.first_failure {
                write!(f, "; first: {first}")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}", if self.passed() { "all checks passed" } else { "verification FAILED" })
    }
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    payload
        .downcast_ref::<String>()
        .cloned()
        .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panic".to_string())
}

/// Runs `body`, turning both `Err` and internal assertion failures into a
/// [`Failure`].
fn guarded(q: u64, k: Option<u64>, body: impl FnOnce() -> Result<(), String>) -> Result<(), Failure> {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| Err(panic_message(p)));
    outcome.map_err(|message| Failure { q, k, message })
}

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(message()) }
}

enum Job {
    Field(u64, u32),
    Graph(Arc<FiniteField>, u64),
}

fn field_checks(p: u64, m: u32) -> Vec<(Check, Result<(), Failure>)> {
    let q = p.pow(m);
    let trace = guarded(q, None, || {
        let f = FiniteField::new(p, m).map_err(|e| e.to_string())?;
        let table = f.trace_table();
        for x in f.elements() {
            ensure(f.trace(x) == table[x.index()], || format!("trace routes differ at {}", f.display(x)))?;
            ensure(f.trace(f.pow(x, p)) == table[x.index()], || format!("Tr(x^p) ≠ Tr(x) at {}", f.display(x)))?;
        }
        // additivity against a fixed element set keeps the sweep linear
        let probes: Vec<FieldElement> = f.elements().step_by((q as usize / 64).max(1)).collect();
        for x in f.elements() {
            for &y in &probes {
                let lhs = table[f.add(x, y).index()];
                ensure(lhs == (table[x.index()] + table[y.index()]) % p as u32, || {
                    format!("Tr not additive at ({}, {})", f.display(x), f.display(y))
                })?;
            }
        }
        ensure(table.iter().any(|&t| t != 0), || "trace map is zero".into())
    });
    let census_check = guarded(q, None, || {
        let by_formula = census(q).map_err(|e| e.to_string())?;
        let by_count = census_by_enumeration(q).map_err(|e| e.to_string())?;
        ensure(by_formula == by_count, || format!("{by_formula:?} ≠ {by_count:?}"))
    });
    vec![(Check::Trace, trace), (Check::Census, census_check)]
}

fn graph_checks(graph: &GpGraph, rule: NatureRule) -> Vec<(Check, Result<(), Failure>)> {
    let q = graph.q() as u64;
    let k = Some(graph.k() as u64);
    let p = graph.field().p() as u64;
    let m = graph.field().m();
    let mut out = Vec::new();
    out.push((
        Check::Nature,
        guarded(q, k, || {
            let exact = spectrum::spectrum(graph).nature;
            let predicted = rule(p, m, graph.k() as u64);
            ensure(exact == predicted, || format!("eigenvalues are {exact}, the rule says {predicted}"))
        }),
    ));
    out.push((
        Check::Components,
        guarded(q, k, || {
            let c = graph.components();
            let a = arith::multiplicative_order(p, graph.n() as u64);
            ensure(c.component_count == p.pow(m - a), || format!("{} components", c.component_count))
        }),
    ));
    out.push((
        Check::Period,
        guarded(q, k, || {
            let expected = match (graph.is_directed(), graph.k() as u64 == q - 1) {
                (true, true) => p,
                (false, true) if p == 2 => 2,
                _ => 1,
            };
            let period = graph.period();
            ensure(period == expected, || format!("period {period}, expected {expected}"))
        }),
    ));
    out.push((
        Check::WaringFormula,
        guarded(q, k, || {
            let g = waring_g(graph);
            ensure(g.is_some() == graph.is_connected(), || "existence ≠ connectivity".into())?;
            let w = waring_w(graph);
            let formula = if graph.is_directed() { waring_g(&graph.symmetrize()).filter(|_| g.is_some()) } else { g };
            ensure(w == formula, || format!("w = {w:?}, formula gives {formula:?}"))
        }),
    ));
    out.push((
        Check::Boundary,
        guarded(q, k, || {
            boundary_spectrum(graph);
            Ok(())
        }),
    ));
    if graph.is_directed() {
        out.push((
            Check::TwoRe,
            guarded(q, k, || ensure(verify_2re(graph).map_err(|e| e.to_string())?, || "2Re relation fails".into())),
        ));
        out.push((
            Check::DirectedMu,
            guarded(q, k, || {
                let mu = mu(graph);
                ensure(mu >= 3, || format!("mu = {mu}"))
            }),
        ));
    }
    out
}

pub fn run_verify(max_q: u64) -> VerifySummary {
    run_verify_with(max_q, Nature::predict)
}

/// As [`run_verify`], with the nature rule under test supplied by the caller.
/// The sweep starts at `q = 3`.
pub fn run_verify_with(max_q: u64, rule: NatureRule) -> VerifySummary {
    let mut jobs = Vec::new();
    for q in 3..=max_q {
        let Some((p, m)) = arith::prime_power(q) else { continue };
        jobs.push(Job::Field(p, m));
        let Ok(field) = FiniteField::new(p, m) else { continue };
        let field = Arc::new(field);
        for k in arith::divisors(q - 1) {
            jobs.push(Job::Graph(field.clone(), k));
        }
    }
    let empty = || Check::ALL.map(|c| (c, Tally::default())).to_vec();
    let tallies = jobs
        .into_par_iter()
        .map(|job| {
            let results = match job {
                Job::Field(p, m) => field_checks(p, m),
                Job::Graph(field, k) => match GpGraph::new(field, k) {
                    Ok(graph) => graph_checks(&graph, rule),
                    Err(e) => vec![(Check::Components, Err(Failure { q: 0, k: Some(k), message: e.to_string() }))],
                },
            };
            let mut t = empty();
            for (check, outcome) in results {
                t.iter_mut().find(|(c, _)| *c == check).unwrap().1.record(outcome);
            }
            t
        })
        .reduce(empty, |a, b| {
            a.into_iter().zip(b).map(|((c, x), (_, y))| (c, x.merge(y))).collect()
        });
    VerifySummary { max_q, tallies }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_prime_field() {
        let s = run_verify(3);
        assert!(s.passed(), "{s}");
        assert_eq!(s.tally(Check::Nature).passed, 2);
        assert_eq!(s.tally(Check::TwoRe).passed, 1);
    }

    #[test]
    fn first_failure_is_the_smallest() {
        let mut t = Tally::default();
        for (q, k) in [(49, 16), (25, 8), (49, 2)] {
            t.record(Err(Failure { q, k: Some(k), message: String::new() }));
        }
        assert_eq!(t.first_failure.unwrap().q, 25);
        assert_eq!(t.failed, 3);
    }
}
