//! Waring numbers as graph diameters.
//!
//! `g(k, q)` is the least `s` such that every element of `F_q` is a sum of
//! `s` k-th powers, and `w(k, q)` the same with signed sums. They exist iff
//! `Γ(k, q)` is connected, and then `g = diam Γ(k, q)` and
//! `w = diam W(k, q)`. Both graphs are vertex-transitive, so the diameter is
//! the eccentricity of 0.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField, DEFAULT_MAX_Q};
use crate::graph::{bfs, GpGraph, UNREACHED};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaringResult {
    pub k: u64,
    pub q: u64,
    pub exists: bool,
    pub g: Option<u32>,
    pub w: Option<u32>,
    pub reason_if_absent: Option<String>,
}

impl WaringResult {
    pub fn of(graph: &GpGraph) -> WaringResult {
        let g = waring_g(graph);
        let w = waring_w(graph);
        assert_eq!(g.is_some(), w.is_some());
        let reason_if_absent = g.is_none().then(|| {
            let c = graph.components();
            format!(
                "Γ({},{}) has {} components, each a copy of Γ({},{})",
                graph.k(),
                graph.q(),
                c.component_count,
                c.component_k,
                c.component_q
            )
        });
        WaringResult {
            k: graph.k() as u64,
            q: graph.q() as u64,
            exists: g.is_some(),
            g,
            w,
            reason_if_absent,
        }
    }
}

/// `g(k, q)`, or `None` when `Γ(k, q)` is disconnected.
pub fn waring_g(graph: &GpGraph) -> Option<u32> {
    if !graph.is_connected() {
        return None;
    }
    let tree = bfs(graph.field(), graph.connection_set(), FieldElement::ZERO);
    debug_assert_eq!(tree.reached, graph.q() as usize);
    Some(tree.eccentricity)
}

fn signed_steps(graph: &GpGraph) -> Vec<(i8, FieldElement)> {
    let field = graph.field();
    let mut steps: Vec<(i8, FieldElement)> = graph.connection_set().iter().map(|&s| (1, s)).collect();
    let mut seen: Vec<bool> = alloc::vec![false; field.q() as usize];
    for &s in graph.connection_set() {
        seen[s.index()] = true;
    }
    for &s in graph.connection_set() {
        let neg = field.neg(s);
        if !seen[neg.index()] {
            seen[neg.index()] = true;
            steps.push((-1, s));
        }
    }
    steps
}

fn step_value(field: &FiniteField, (sign, y): (i8, FieldElement)) -> FieldElement {
    if sign < 0 { field.neg(y) } else { y }
}

/// `w(k, q)`, computed twice: as the diameter of `Cay(F_q, R_k ∪ -R_k)`
/// built directly, and as `g(k, q)` or `g(k/2, q)` depending on
/// directedness. The two must agree.
pub fn waring_w(graph: &GpGraph) -> Option<u32> {
    let g = waring_g(graph)?;
    let field = graph.field();
    let steps: Vec<FieldElement> = signed_steps(graph)
        .into_iter()
        .map(|st| step_value(field, st))
        .collect();
    let by_bfs = bfs(field, &steps, FieldElement::ZERO).eccentricity;
    let by_formula = if graph.is_directed() {
        waring_g(&graph.symmetrize()).expect("W(k,q) is connected with Γ(k,q)")
    } else {
        g
    };
    assert_eq!(by_bfs, by_formula, "w({},{}) routes disagree", graph.k(), graph.q());
    assert!(by_bfs <= g);
    Some(by_bfs)
}

/// Some `x` with `x^e = y`, for `y` an `e`-th power.
pub fn kth_root(field: &FiniteField, y: FieldElement, e: u64) -> Option<FieldElement> {
    if y.is_zero() {
        return Some(FieldElement::ZERO);
    }
    let order = field.q() as u64 - 1;
    let d = arith::gcd(e, order);
    let log = field.discrete_log(y).ok()? as u64;
    if log % d != 0 {
        return None;
    }
    let modulus = order / d;
    let t = if modulus == 1 {
        0
    } else {
        let inv = mod_inverse((e / d) % modulus, modulus)?;
        ((log / d) as u128 * inv as u128 % modulus as u128) as u64
    };
    let x = field.omega_pow(t as i64);
    debug_assert_eq!(field.pow(x, e), y);
    Some(x)
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}

/// A shortest decomposition `target = Σ sign_i · x_i^{k_raw}` read off the BFS
/// tree. Unsigned decompositions use only `+`. The empty list represents 0.
pub fn witness(graph: &GpGraph, target: FieldElement, signed: bool) -> Result<Vec<(i8, FieldElement)>> {
    let field = graph.field();
    if !field.contains(target) {
        return Err(Error::InvalidElement);
    }
    if !graph.is_connected() {
        let c = graph.components();
        return Err(Error::NumberDoesNotExist {
            k: graph.k_raw(),
            q: graph.q() as u64,
            reason: format!("the graph has {} components", c.component_count),
        });
    }
    let steps: Vec<(i8, FieldElement)> = if signed {
        signed_steps(graph)
    } else {
        graph.connection_set().iter().map(|&s| (1, s)).collect()
    };
    let values: Vec<FieldElement> = steps.iter().map(|&st| step_value(field, st)).collect();
    let tree = bfs(field, &values, FieldElement::ZERO);
    assert_ne!(tree.dist[target.index()], UNREACHED);

    let mut terms = Vec::new();
    let mut v = target;
    while !v.is_zero() {
        let i = tree.parent_step[v.index()] as usize;
        let (sign, y) = steps[i];
        let x = kth_root(field, y, graph.k_raw()).expect("connection set elements are k-th powers");
        terms.push((sign, x));
        v = field.sub(v, values[i]);
    }
    terms.reverse();
    assert_eq!(terms.len() as u32, tree.dist[target.index()]);
    Ok(terms)
}

/// Evaluates `Σ sign_i · x_i^e`.
pub fn evaluate_terms(field: &FiniteField, terms: &[(i8, FieldElement)], e: u64) -> FieldElement {
    terms.iter().fold(FieldElement::ZERO, |acc, &(sign, x)| {
        let t = field.pow(x, e);
        if sign < 0 { field.sub(acc, t) } else { field.add(acc, t) }
    })
}

/// Checks `w((p^{ab}-1)/(bc), p^{ab}) = b · w((p^a-1)/c, p^a)` by two
/// independent BFS runs. Requires `c † p^a - 1` and `bc † p^{ab} - 1`.
pub fn verify_reduction(p: u64, a: u32, b: u32, c: u64) -> Result<bool> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::PreconditionViolated("a, b and c must be positive".into()));
    }
    let big = arith::checked_pow(p, a * b)
        .filter(|&q| q <= DEFAULT_MAX_Q)
        .ok_or(Error::SizeBudgetExceeded {
            size: arith::checked_pow(p, a * b).unwrap_or(u64::MAX),
            budget: DEFAULT_MAX_Q,
        })?;
    let small = p.pow(a);
    if !arith::is_primitive_divisor(c, p, a) {
        return Err(Error::PreconditionViolated(format!(
            "c = {c} is not a primitive divisor of {p}^{a} - 1"
        )));
    }
    let bc = b as u64 * c;
    if !arith::is_primitive_divisor(bc, p, a * b) {
        return Err(Error::PreconditionViolated(format!(
            "bc = {bc} is not a primitive divisor of {p}^{} - 1",
            a * b
        )));
    }
    let lhs_graph = GpGraph::new(Arc::new(FiniteField::new(p, a * b)?), (big - 1) / bc)?;
    let rhs_graph = GpGraph::new(Arc::new(FiniteField::new(p, a)?), (small - 1) / c)?;
    let lhs = waring_w(&lhs_graph).expect("bc † p^(ab) - 1 forces connectivity");
    let rhs = waring_w(&rhs_graph).expect("c † p^a - 1 forces connectivity");
    Ok(lhs == b * rhs)
}
