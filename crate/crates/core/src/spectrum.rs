//! Exact spectra of GP-graphs.
//!
//! The eigenvalue attached to the additive character `χ_α(x) = ζ_p^{Tr(αx)}`
//! is `λ_α = Σ_{s ∈ R_k} ζ_p^{Tr(αs)}`. It only depends on the coset of `α`
//! modulo `R_k`, which gives the Gaussian periods `η_i`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith;
use crate::cyclotomic::{Classification, CyclotomicInteger};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::graph::{self, GpGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Nature {
    Integral,
    RealNonIntegral,
    Complex,
}

impl Nature {
    /// Nature from arithmetic alone: integral iff `q` is even or
    /// `k | (q-1)/(p-1)`, real iff `k | (q-1)/2`.
    pub fn predict(p: u64, m: u32, k: u64) -> Nature {
        let q = p.pow(m);
        let k = arith::gcd(k, q - 1);
        if p == 2 || ((q - 1) / (p - 1)) % k == 0 {
            Nature::Integral
        } else if ((q - 1) / 2) % k == 0 {
            Nature::RealNonIntegral
        } else {
            Nature::Complex
        }
    }

    pub fn of(graph: &GpGraph) -> Nature {
        Nature::predict(graph.field().p() as u64, graph.field().m(), graph.k() as u64)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Nature::Integral => "integral",
            Nature::RealNonIntegral => "real",
            Nature::Complex => "complex",
        }
    }
}

impl fmt::Display for Nature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// One character sum per `α ∈ F_q`.
    PerCharacter,
    /// One Gaussian period per coset, each with multiplicity `n`.
    Cosets,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub n: u64,
    /// Distinct eigenvalues with multiplicities, by decreasing real part then
    /// decreasing imaginary part.
    pub eigenvalues: Vec<(CyclotomicInteger, u64)>,
    pub nature: Nature,
    pub mu: usize,
    pub principal_multiplicity: u64,
}

impl SpectrumReport {
    fn from_multiset(p: u32, n: u64, map: BTreeMap<CyclotomicInteger, u64>) -> Self {
        let mut eigenvalues: Vec<_> = map.into_iter().collect();
        eigenvalues.sort_by(|(a, _), (b, _)| numeric_order(a, b));
        let nature = if eigenvalues.iter().all(|(l, _)| l.as_integer().is_some()) {
            Nature::Integral
        } else if eigenvalues.iter().all(|(l, _)| l.is_real()) {
            Nature::RealNonIntegral
        } else {
            Nature::Complex
        };
        let principal = CyclotomicInteger::integer(p, n);
        let principal_multiplicity = eigenvalues
            .iter()
            .find(|(l, _)| *l == principal)
            .map_or(0, |(_, mult)| *mult);
        SpectrumReport {
            n,
            mu: eigenvalues.len(),
            eigenvalues,
            nature,
            principal_multiplicity,
        }
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.eigenvalues.iter().map(|(_, m)| m).sum()
    }

    /// `Σ λ^j · mult(λ)`, i.e. the trace of `A^j`.
    pub fn power_sum(&self, j: u32) -> CyclotomicInteger {
        let p = self.eigenvalues[0].0.p();
        let mut acc = CyclotomicInteger::zero(p);
        for (lambda, mult) in &self.eigenvalues {
            let mut pw = CyclotomicInteger::one(p);
            for _ in 0..j {
                pw = &pw * lambda;
            }
            acc = &acc + &pw.scale(&BigInt::from(*mult));
        }
        acc
    }

    pub fn multiplicity(&self, lambda: &CyclotomicInteger) -> u64 {
        self.eigenvalues
            .iter()
            .find(|(l, _)| l == lambda)
            .map_or(0, |(_, m)| *m)
    }

    /// Eigenvalues of absolute value `n`, decided by `λ·λ̄ = n²`.
    pub fn boundary(&self) -> Vec<CyclotomicInteger> {
        let n2 = BigInt::from(self.n) * BigInt::from(self.n);
        self.eigenvalues
            .iter()
            .filter(|(l, _)| {
                let norm = l * &l.conjugate();
                norm.as_integer() == Some(&n2)
            })
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// The multiset as a map, for exact comparisons.
    pub fn as_multiset(&self) -> BTreeMap<CyclotomicInteger, u64> {
        self.eigenvalues.iter().cloned().collect()
    }
}

fn numeric_order(a: &CyclotomicInteger, b: &CyclotomicInteger) -> Ordering {
    let (za, zb) = (a.embed_numeric(), b.embed_numeric());
    let round = |x: f64| libm::round(x * 1e9);
    round(zb.re)
        .total_cmp(&round(za.re))
        .then(round(zb.im).total_cmp(&round(za.im)))
        .then_with(|| a.cmp(b))
}

/// Histogram of `Tr(x)` over the coset `C_i = ω^i ⟨ω^k⟩`.
fn coset_trace_counts(field: &FiniteField, k: u64, i: u64) -> Vec<i64> {
    let traces = field.trace_table();
    let n = (field.q() as u64 - 1) / k;
    let mut counts = vec![0i64; field.p() as usize];
    for j in 0..n {
        let x = field.omega_pow((i + k * j) as i64);
        counts[traces[x.index()] as usize] += 1;
    }
    counts
}

/// The Gaussian period `η_i = Σ_{x ∈ C_i} ζ_p^{Tr(x)}`.
pub fn gaussian_period(field: &FiniteField, k: u64, i: u64) -> Result<CyclotomicInteger> {
    let order = field.q() as u64 - 1;
    if k == 0 || order % k != 0 {
        return Err(Error::PreconditionViolated(format!(
            "k = {k} does not divide q - 1 = {order}"
        )));
    }
    if i >= k {
        return Err(Error::IndexOutOfRange { index: i, k });
    }
    Ok(CyclotomicInteger::from_counts(field.p(), &coset_trace_counts(field, k, i)))
}

/// `λ_α` as a single character sum over the connection set.
pub fn character_eigenvalue(graph: &GpGraph, alpha: FieldElement) -> CyclotomicInteger {
    let field = graph.field();
    let traces = field.trace_table();
    let mut counts = vec![0i64; field.p() as usize];
    for &s in graph.connection_set() {
        counts[traces[field.mul(alpha, s).index()] as usize] += 1;
    }
    CyclotomicInteger::from_counts(field.p(), &counts)
}

pub fn spectrum_via(graph: &GpGraph, route: Route) -> SpectrumReport {
    let field = graph.field();
    let p = field.p();
    let n = graph.n() as u64;
    let k = graph.k() as u64;
    let mut map: BTreeMap<CyclotomicInteger, u64> = BTreeMap::new();
    match route {
        Route::PerCharacter => {
            for alpha in field.elements() {
                *map.entry(character_eigenvalue(graph, alpha)).or_default() += 1;
            }
        }
        Route::Cosets => {
            *map.entry(CyclotomicInteger::integer(p, n)).or_default() += 1;
            for i in 0..k {
                let eta = gaussian_period(field, k, i).expect("k divides q - 1");
                *map.entry(eta).or_default() += n;
            }
        }
    }
    SpectrumReport::from_multiset(p, n, map)
}

/// Exact spectrum. Connected graphs go through the Gaussian periods, the rest
/// through one character sum per vertex. The nature read off the eigenvalues
/// is checked against [`Nature::predict`] and the multiplicity of `n`
/// against the number of components.
pub fn spectrum(graph: &GpGraph) -> SpectrumReport {
    let route = if graph.is_connected() { Route::Cosets } else { Route::PerCharacter };
    let report = spectrum_via(graph, route);
    assert_eq!(report.total_multiplicity(), graph.q() as u64);
    assert_eq!(
        report.nature,
        Nature::of(graph),
        "spectral nature of {graph:?} disagrees with the divisibility rule"
    );
    let p = graph.field().p() as u64;
    let a = arith::multiplicative_order(p, graph.n() as u64);
    assert_eq!(report.principal_multiplicity, p.pow(graph.field().m() - a));
    report
}

/// Canonical sparse key of `Σ counts[j] ζ^j`: subtract the most frequent
/// coefficient (smallest on ties) and keep the entries that differ from it.
/// Equal keys ⟺ equal elements of `Z[ζ_p]`.
fn sparse_key(p: usize, touched: &[(u32, i64)]) -> Vec<(u32, i64)> {
    let mut freq: BTreeMap<i64, usize> = BTreeMap::new();
    for &(_, c) in touched {
        *freq.entry(c).or_default() += 1;
    }
    let zeros = p - touched.len();
    if zeros > 0 {
        *freq.entry(0).or_default() += zeros;
    }
    let mode = freq
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(&v, _)| v)
        .unwrap_or(0);
    if mode == 0 {
        return touched.to_vec();
    }
    let mut dense = vec![0i64; p];
    for &(j, c) in touched {
        dense[j as usize] = c;
    }
    dense
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c != mode)
        .map(|(j, c)| (j as u32, c - mode))
        .collect()
}

/// Number of distinct eigenvalues, without building the big-integer
/// spectrum. Runs in `O(q)` plus the size of the keys.
pub fn mu(graph: &GpGraph) -> usize {
    let field = graph.field();
    let p = field.p() as usize;
    let traces = field.trace_table();
    let k = graph.k() as u64;
    let n = graph.n() as u64;
    let mut keys: BTreeSet<Vec<(u32, i64)>> = BTreeSet::new();
    keys.insert(sparse_key(p, &[(0, n as i64)]));

    let mut counts = vec![0i64; p];
    let mut touched: Vec<u32> = Vec::new();
    for i in 0..k {
        for j in 0..n {
            let t = traces[field.omega_pow((i + k * j) as i64).index()];
            if counts[t as usize] == 0 {
                touched.push(t);
            }
            counts[t as usize] += 1;
        }
        touched.sort_unstable();
        let entries: Vec<(u32, i64)> = touched.iter().map(|&t| (t, counts[t as usize])).collect();
        keys.insert(sparse_key(p, &entries));
        for &t in &touched {
            counts[t as usize] = 0;
        }
        touched.clear();
    }
    keys.len()
}

/// `μ(Γ(2k, q)) - μ(Γ(k, q))`, or `None` when `2k ∤ q - 1`.
pub fn mu_doubling_gap(graph: &GpGraph) -> Option<i64> {
    let k2 = 2 * graph.k() as u64;
    if (graph.q() as u64 - 1) % k2 != 0 {
        return None;
    }
    let doubled = GpGraph::new(graph.field_arc().clone(), k2).expect("2k divides q - 1");
    Some(mu(&doubled) as i64 - mu(graph) as i64)
}

/// Checks `Spec(Γ(k/2, q)) = 2 Re Spec(Γ(k, q))` for a directed `Γ(k, q)`.
pub fn verify_2re(graph: &GpGraph) -> Result<bool> {
    if !graph.is_directed() {
        return Err(Error::NotDirected { k: graph.k() as u64, q: graph.q() as u64 });
    }
    let mut doubled: BTreeMap<CyclotomicInteger, u64> = BTreeMap::new();
    for (lambda, mult) in spectrum(graph).eigenvalues {
        *doubled.entry(lambda.twice_real_part()).or_default() += mult;
    }
    let half = spectrum(&graph.symmetrize());
    Ok(doubled == half.as_multiset())
}

/// `p^{m-a}` disjoint copies of the directed Paley graph on `p^a` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectedPaleyUnion {
    pub copies: u64,
    pub order: u64,
}

impl fmt::Display for DirectedPaleyUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x P->_{}", self.copies, self.order)
    }
}

/// A directed GP-graph has exactly three eigenvalues iff
/// `k = 2(p^m - 1)/(p^a - 1)` with `a = ord_n(p)` and `p^a ≡ 3 (mod 4)`,
/// in which case it is a union of directed Paley graphs.
pub fn detect_three_ev_digraph(graph: &GpGraph) -> Result<Option<DirectedPaleyUnion>> {
    if !graph.is_directed() {
        return Err(Error::NotDirected { k: graph.k() as u64, q: graph.q() as u64 });
    }
    let p = graph.field().p() as u64;
    let m = graph.field().m();
    let q = graph.q() as u64;
    let a = arith::multiplicative_order(p, graph.n() as u64);
    let pa = p.pow(a);
    let found = (graph.k() as u64 * (pa - 1) == 2 * (q - 1) && pa % 4 == 3)
        .then(|| DirectedPaleyUnion { copies: p.pow(m - a), order: pa });
    let mu = mu(graph);
    assert!(mu >= 3, "directed {graph:?} with only {mu} eigenvalues");
    assert_eq!(found.is_some(), mu == 3, "three-eigenvalue law fails for {graph:?}");
    Ok(found)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SrgParameters {
    pub v: u64,
    pub r: u64,
    pub e: u64,
    pub d: u64,
}

impl fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "srg({},{},{},{})", self.v, self.r, self.e, self.d)
    }
}

fn common_neighbours(graph: &GpGraph, v: FieldElement) -> u64 {
    let field = graph.field();
    let k = graph.k();
    graph
        .connection_set()
        .iter()
        .filter(|&&x| field.is_power_residue(field.sub(x, v), k))
        .count() as u64
}

/// Parameters of a connected undirected graph with three eigenvalues, from
/// common-neighbour counts of `0` with one neighbour and one non-neighbour.
pub fn srg_parameters(graph: &GpGraph) -> Option<SrgParameters> {
    if graph.is_directed() || !graph.is_connected() || mu(graph) != 3 {
        return None;
    }
    let field = graph.field();
    let neighbour = graph.connection_set()[0];
    let stranger = field
        .elements()
        .find(|&x| !x.is_zero() && !field.is_power_residue(x, graph.k()))?;
    let v = graph.q() as u64;
    let r = graph.n() as u64;
    let e = common_neighbours(graph, neighbour);
    let d = common_neighbours(graph, stranger);
    assert_eq!((v - r - 1) * d, r * (r - e - 1), "not strongly regular: {graph:?}");
    Some(SrgParameters { v, r, e, d })
}

/// The eigenvalues of modulus `n`. Equals `{n}` unless `k = q - 1`, where
/// it is `{ζ_p^j}` (or `{±1}` for `p = 2`).
pub fn boundary_spectrum(graph: &GpGraph) -> Vec<CyclotomicInteger> {
    let report = spectrum(graph);
    let boundary = report.boundary();
    let p = graph.field().p();
    let mut expected: Vec<CyclotomicInteger> = if graph.k() as u64 == graph.q() as u64 - 1 {
        if p == 2 {
            vec![CyclotomicInteger::integer(2, 1), CyclotomicInteger::integer(2, -1)]
        } else {
            (0..p as i64).map(|j| CyclotomicInteger::root_power(p, j)).collect()
        }
    } else {
        vec![CyclotomicInteger::integer(p, graph.n() as u64)]
    };
    let mut sorted = boundary.clone();
    sorted.sort();
    expected.sort();
    assert_eq!(sorted, expected, "boundary spectrum law fails for {graph:?}");
    boundary
}

/// `Spec(Γ(2, q))` for odd `q`: `(q-1)/2` once and `(-1 ± √(±q))/2` with
/// multiplicity `(q-1)/2`, the surd written through the quadratic Gauss sum.
pub fn paley_closed_form(p: u32, m: u32) -> Vec<(CyclotomicInteger, u64)> {
    assert!(p % 2 == 1);
    let q = (p as u64).pow(m);
    let half = (q - 1) / 2;
    let root = if m % 2 == 0 {
        CyclotomicInteger::integer(p, (p as u64).pow(m / 2))
    } else {
        CyclotomicInteger::quadratic_gauss_sum(p)
            .scale(&BigInt::from((p as u64).pow((m - 1) / 2)))
    };
    let minus_one = CyclotomicInteger::integer(p, -1);
    let two = BigInt::from(2);
    let plus = (&minus_one + &root).div_exact(&two).expect("(-1 + √q*)/2 is integral");
    let minus = (&minus_one - &root).div_exact(&two).expect("(-1 - √q*)/2 is integral");
    vec![
        (CyclotomicInteger::integer(p, half), 1),
        (plus, half),
        (minus, half),
    ]
}

/// The three integer eigenvalues of a semiprimitive `Γ(k, q)` with `m` even:
/// `n`, `(σ(k-1)√q - 1)/k` and `-(σ√q + 1)/k`, where `t` is least with
/// `k | p^t + 1`, `m = 2ts` and `σ = (-1)^{s+1}`.
pub fn semiprimitive_closed_form(p: u64, m: u32, k: u64) -> Option<[(i64, u64); 3]> {
    let q = p.pow(m);
    if m % 2 == 1 || !graph::is_semiprimitive(p, m, k, q) {
        return None;
    }
    let t = (1..=m / 2).find(|&t| (p.pow(t) + 1) % k == 0)?;
    let s = m / (2 * t);
    let sigma: i64 = if s % 2 == 1 { 1 } else { -1 };
    let root = p.pow(m / 2) as i64;
    let k_i = k as i64;
    let n = (q - 1) / k;
    let first = sigma * (k_i - 1) * root - 1;
    let second = -(sigma * root + 1);
    assert!(first % k_i == 0 && second % k_i == 0);
    Some([(n as i64, 1), (first / k_i, n), (second / k_i, (k - 1) * n)])
}

/// `Spec(H(b, base)) = {[ℓ·base - b]^{C(b,ℓ)(base-1)^{b-ℓ}}}`.
pub fn hamming_closed_form(b: u32, base: u64) -> Vec<(i64, u64)> {
    let mut binom = 1u64;
    let mut out = Vec::new();
    for l in 0..=b as u64 {
        if l > 0 {
            binom = binom * (b as u64 - l + 1) / l;
        }
        let value = (l * base) as i64 - b as i64;
        out.push((value, binom * (base - 1).pow(b - l as u32)));
    }
    out
}

/// Numeric form of a closed-form integer list, for comparisons.
pub fn integer_multiset(p: u32, values: &[(i64, u64)]) -> BTreeMap<CyclotomicInteger, u64> {
    let mut map = BTreeMap::new();
    for &(v, mult) in values {
        *map.entry(CyclotomicInteger::integer(p, v)).or_default() += mult;
    }
    map
}

/// Integer value of a rational eigenvalue, if it fits.
pub fn rational_value(lambda: &CyclotomicInteger) -> Option<i64> {
    match lambda.classify() {
        Classification::Rational(v) => v.to_i64(),
        _ => None,
    }
}
