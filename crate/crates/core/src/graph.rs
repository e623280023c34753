//! The generalized Paley graph `Γ(k, q) = Cay(F_q, R_k)`.
//!
//! Arcs are implicit: `u → v` iff `v - u ∈ R_k`. Nothing quadratic in `q` is
//! ever allocated.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};

pub(crate) const UNREACHED: u32 = u32::MAX;

#[derive(Clone)]
pub struct GpGraph {
    field: Arc<FiniteField>,
    k_raw: u64,
    k: u32,
    n: u32,
    connection_set: Vec<FieldElement>,
    directed: bool,
}

impl fmt::Debug for GpGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ({},{})", self.k, self.field.q())
    }
}

/// Connected components of `Γ(k, q)`: `p^{m-a}` copies of `Γ(k_a, p^a)` with
/// `a = ord_n(p)` and `k_a = (p^a - 1)/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub a: u32,
    pub component_count: u64,
    pub component_k: u64,
    pub component_q: u64,
}

impl ComponentDecomposition {
    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }
}

/// Structural label; the first matching variant in declaration order wins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureLabel {
    /// `copies` disjoint `K_order`.
    CompleteUnion { copies: u64, order: u64 },
    /// `copies` disjoint Paley graphs `P_order` (oriented when `directed`).
    PaleyUnion { copies: u64, order: u64, directed: bool },
    /// `copies` disjoint `p`-cycles.
    CycleUnion { copies: u64, length: u64, directed: bool },
    K2Union { copies: u64 },
    /// The Hamming graph `H(b, base)`.
    Hamming { b: u32, base: u64 },
    Semiprimitive,
    /// None of the above; `copies` components isomorphic to
    /// `Γ(component_k, component_q)`.
    Generic { copies: u64, component_k: u64, component_q: u64 },
}

impl fmt::Display for StructureLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = |f: &mut fmt::Formatter<'_>, copies: u64| {
            if copies > 1 {
                write!(f, "{copies} x ")
            } else {
                Ok(())
            }
        };
        match *self {
            StructureLabel::CompleteUnion { copies, order } => {
                prefix(f, copies)?;
                write!(f, "K_{order}")
            }
            StructureLabel::PaleyUnion { copies, order, directed } => {
                prefix(f, copies)?;
                write!(f, "{}_{order}", if directed { "P->" } else { "P" })
            }
            StructureLabel::CycleUnion { copies, length, directed } => {
                prefix(f, copies)?;
                write!(f, "{}_{length}", if directed { "C->" } else { "C" })
            }
            StructureLabel::K2Union { copies } => {
                prefix(f, copies)?;
                f.write_str("K_2")
            }
            StructureLabel::Hamming { b: 2, base } => write!(f, "L_{{{base},{base}}}"),
            StructureLabel::Hamming { b, base } => write!(f, "H({b},{base})"),
            StructureLabel::Semiprimitive => f.write_str("semiprimitive"),
            StructureLabel::Generic { copies: 1, .. } => f.write_str("generic"),
            StructureLabel::Generic { copies, component_k, component_q } => {
                write!(f, "{copies} x G({component_k},{component_q})")
            }
        }
    }
}

/// Breadth-first search tree over a Cayley graph of `F_q`.
pub(crate) struct Bfs {
    pub dist: Vec<u32>,
    /// Index into the step set of the arc that discovered each vertex.
    pub parent_step: Vec<u32>,
    pub reached: usize,
    pub eccentricity: u32,
}

/// BFS from `root` using arcs `v → v + s`, `s ∈ steps`. Stops as soon as
/// every vertex has been discovered.
pub(crate) fn bfs(field: &FiniteField, steps: &[FieldElement], root: FieldElement) -> Bfs {
    let q = field.q() as usize;
    let mut dist = vec![UNREACHED; q];
    let mut parent_step = vec![u32::MAX; q];
    let mut queue = VecDeque::new();
    dist[root.index()] = 0;
    queue.push_back(root);
    let mut reached = 1;
    let mut eccentricity = 0;
    'outer: while let Some(u) = queue.pop_front() {
        let du = dist[u.index()];
        for (i, &s) in steps.iter().enumerate() {
            let v = field.add(u, s);
            if dist[v.index()] == UNREACHED {
                dist[v.index()] = du + 1;
                parent_step[v.index()] = i as u32;
                eccentricity = du + 1;
                reached += 1;
                if reached == q {
                    break 'outer;
                }
                queue.push_back(v);
            }
        }
    }
    Bfs { dist, parent_step, reached, eccentricity }
}

impl GpGraph {
    /// `Γ(k_raw, q)`; the exponent is reduced to `k = gcd(k_raw, q - 1)`.
    pub fn new(field: Arc<FiniteField>, k_raw: u64) -> Result<Self> {
        if k_raw == 0 {
            return Err(Error::PreconditionViolated("k must be positive".into()));
        }
        let q = field.q() as u64;
        let k = arith::gcd(k_raw, q - 1).max(1);
        let n = (q - 1) / k;
        let connection_set = field.power_residues(k);
        debug_assert_eq!(connection_set.len() as u64, n);

        let directed = q % 2 == 1 && k % 2 == 0 && arith::v2(k) == arith::v2(q - 1);
        let minus_one = field.neg(FieldElement::ONE);
        let symmetric = field.is_power_residue(minus_one, k as u32);
        assert_eq!(
            directed, !symmetric,
            "valuation rule and -1 ∈ R_k disagree for Γ({k},{q})"
        );

        Ok(GpGraph {
            field,
            k_raw,
            k: k as u32,
            n: n as u32,
            connection_set,
            directed,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn k_raw(&self) -> u64 {
        self.k_raw
    }

    /// Reduced exponent `gcd(k_raw, q - 1)`.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Regularity degree `(q - 1)/k`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn connection_set(&self) -> &[FieldElement] {
        &self.connection_set
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_arc(&self, u: FieldElement, v: FieldElement) -> bool {
        self.field.is_power_residue(self.field.sub(v, u), self.k)
    }

    /// The additive order of the component structure, checked against an
    /// explicit BFS. Forward reachability from 0 in a Cayley digraph of a
    /// finite group is the subgroup generated by `R_k`, so it coincides with
    /// the weak (and strong) component of 0.
    pub fn components(&self) -> ComponentDecomposition {
        let p = self.field.p() as u64;
        let m = self.field.m();
        let n = self.n as u64;
        let a = arith::multiplicative_order(p, n);
        let component_q = p.pow(a);
        let decomposition = ComponentDecomposition {
            a,
            component_count: p.pow(m - a),
            component_k: (component_q - 1) / n,
            component_q,
        };

        let reach = bfs(&self.field, &self.connection_set, FieldElement::ZERO).reached as u64;
        let q = self.q() as u64;
        assert_eq!(q % reach, 0);
        assert_eq!(
            q / reach,
            decomposition.component_count,
            "BFS component count disagrees with p^(m - ord_n(p)) for {self:?}"
        );
        decomposition
    }

    pub fn is_connected(&self) -> bool {
        arith::multiplicative_order(self.field.p() as u64, self.n as u64) == self.field.m()
    }

    /// The underlying undirected graph `W(k, q) = Cay(F_q, R_k ∪ -R_k)`.
    /// For a directed graph this is `Γ(k/2, q)`.
    pub fn symmetrize(&self) -> GpGraph {
        if !self.directed {
            return self.clone();
        }
        let mut union: Vec<FieldElement> = self
            .connection_set
            .iter()
            .flat_map(|&s| [s, self.field.neg(s)])
            .collect();
        union.sort_unstable();
        union.dedup();
        let half = GpGraph::new(self.field.clone(), (self.k / 2) as u64)
            .expect("k/2 is positive");
        assert_eq!(union, half.connection_set, "R_k ∪ -R_k must equal R_(k/2)");
        half
    }

    /// The period: gcd of all directed cycle lengths. Undirected edges count
    /// as a pair of opposite arcs, so undirected graphs get 1 when
    /// non-bipartite and 2 when bipartite.
    ///
    /// Computed on the component of 0 as the gcd of
    /// `level(u) + 1 - level(v)` over all arcs `u → v`; all components are
    /// translates of each other.
    pub fn period(&self) -> u64 {
        let tree = bfs(&self.field, &self.connection_set, FieldElement::ZERO);
        let mut g = 0u64;
        for u in self.field.elements() {
            let lu = tree.dist[u.index()];
            if lu == UNREACHED {
                continue;
            }
            for &s in &self.connection_set {
                let lv = tree.dist[self.field.add(u, s).index()];
                g = arith::gcd(g, (lu as i64 + 1 - lv as i64).unsigned_abs());
                if g == 1 {
                    break;
                }
            }
            if g == 1 {
                break;
            }
        }

        let q = self.q() as u64;
        let p = self.field.p() as u64;
        let expected = if self.directed {
            if self.k as u64 == q - 1 { p } else { 1 }
        } else if p == 2 && self.k as u64 == q - 1 {
            2
        } else {
            1
        };
        assert_eq!(g, expected, "period of {self:?} disagrees with the closed form");
        g
    }

    /// Lengths of the simple directed cycles through vertex 0, by exhaustive
    /// search. Exponential; intended for very small graphs only.
    pub fn directed_cycle_lengths(&self) -> BTreeSet<u32> {
        assert!(self.q() <= 32, "exhaustive cycle search is limited to q ≤ 32");
        let mut lengths = BTreeSet::new();
        let mut on_path = vec![false; self.q() as usize];
        on_path[0] = true;
        self.extend_path(FieldElement::ZERO, 1, &mut on_path, &mut lengths);
        lengths
    }

    fn extend_path(
        &self,
        u: FieldElement,
        len: u32,
        on_path: &mut [bool],
        lengths: &mut BTreeSet<u32>,
    ) {
        for &s in &self.connection_set {
            let v = self.field.add(u, s);
            if v.is_zero() {
                // an undirected edge walked back and forth is not a cycle
                if self.directed || len > 2 {
                    lengths.insert(len);
                }
            } else if !on_path[v.index()] {
                on_path[v.index()] = true;
                self.extend_path(v, len + 1, on_path, lengths);
                on_path[v.index()] = false;
            }
        }
    }

    pub fn classify_structure(&self) -> StructureLabel {
        let p = self.field.p() as u64;
        let m = self.field.m();
        let q = self.q() as u64;
        let k = self.k as u64;
        let n = self.n as u64;
        let components = self.components();
        let copies = components.component_count;
        let order = components.component_q;

        if n == order - 1 {
            return StructureLabel::CompleteUnion { copies, order };
        }
        if p % 2 == 1 && 2 * n == order - 1 {
            return StructureLabel::PaleyUnion { copies, order, directed: self.directed };
        }
        if p % 2 == 1 && (k == q - 1 || 2 * k == q - 1) {
            return StructureLabel::CycleUnion {
                copies: q / p,
                length: p,
                directed: k == q - 1,
            };
        }
        if p == 2 && k == q - 1 {
            return StructureLabel::K2Union { copies: q / 2 };
        }
        if components.is_connected() {
            for b in arith::divisors(m as u64).into_iter().filter(|&b| b >= 2) {
                let base = p.pow(m / b as u32);
                let ratio = (q - 1) / (base - 1);
                if ratio % b == 0 && ratio / b == k {
                    return StructureLabel::Hamming { b: b as u32, base };
                }
            }
        }
        if is_semiprimitive(p, m, k, q) {
            return StructureLabel::Semiprimitive;
        }
        StructureLabel::Generic {
            copies,
            component_k: components.component_k,
            component_q: order,
        }
    }
}

/// `k = 2` with `q ≡ 1 (mod 4)`, or `k > 2` with `k | p^t + 1` for some
/// `t | m/2` and `k ≠ p^{m/2} + 1`.
pub fn is_semiprimitive(p: u64, m: u32, k: u64, q: u64) -> bool {
    if k == 2 {
        return q % 4 == 1;
    }
    if k < 2 || m % 2 == 1 {
        return false;
    }
    let half = m / 2;
    if k == p.pow(half) + 1 {
        return false;
    }
    arith::divisors(half as u64)
        .into_iter()
        .any(|t| (p.pow(t as u32) + 1) % k == 0)
}
