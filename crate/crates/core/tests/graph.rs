mod common;

use std::collections::{BTreeMap, VecDeque};

use common::{all_graphs, field, graph, prime_powers};
use gpgraph_core::arith;
use gpgraph_core::{FieldElement, GpGraph, StructureLabel};

/// Distance histogram from `root`, by a BFS that tests adjacency with
/// `is_arc` only.
fn distance_profile(g: &GpGraph, root: FieldElement) -> BTreeMap<u32, usize> {
    let f = g.field();
    let mut dist = vec![u32::MAX; g.q() as usize];
    dist[root.index()] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for v in f.elements() {
            if dist[v.index()] == u32::MAX && g.is_arc(u, v) {
                dist[v.index()] = dist[u.index()] + 1;
                queue.push_back(v);
            }
        }
    }
    let mut profile = BTreeMap::new();
    for d in dist {
        *profile.entry(d).or_insert(0) += 1;
    }
    profile
}

#[test]
fn construction_examples() {
    let g = graph(5, 2, 8);
    assert!(g.is_directed());
    assert_eq!(g.n(), 3);
    assert!(g.components().is_connected());
    let g = graph(7, 2, 16);
    assert!(g.is_directed());
    assert_eq!(g.n(), 3);
    let k = graph(11, 1, 1);
    assert!(!k.is_directed());
    assert_eq!(k.n(), 10);
    assert_eq!(graph(5, 2, 28).k(), 4);
}

#[test]
fn degrees_are_n_exhaustive() {
    for g in all_graphs(343) {
        let f = g.field();
        let n = g.n() as usize;
        let mut indeg = vec![0usize; g.q() as usize];
        for u in f.elements() {
            let out = f.elements().filter(|&v| g.is_arc(u, v)).count();
            assert_eq!(out, n, "{g:?}");
            for &s in g.connection_set() {
                indeg[f.add(u, s).index()] += 1;
            }
        }
        assert!(indeg.iter().all(|&d| d == n), "{g:?}");
        assert_eq!(g.connection_set().len(), n);
    }
}

#[test]
fn directedness_rules_agree() {
    for g in all_graphs(343) {
        let q = g.q() as u64;
        let k = g.k() as u64;
        let by_valuation = q % 2 == 1 && arith::v2(k) == arith::v2(q - 1) && arith::v2(k) > 0;
        let f = g.field();
        let minus_one = f.neg(FieldElement::ONE);
        assert_eq!(by_valuation, !g.connection_set().contains(&minus_one));
        assert_eq!(g.is_directed(), by_valuation);
        if g.is_directed() {
            for &s in g.connection_set() {
                assert!(!g.connection_set().contains(&f.neg(s)), "R_k ∩ -R_k ≠ ∅ in {g:?}");
            }
        }
    }
}

#[test]
fn components_match_bfs_exhaustive() {
    for g in all_graphs(343) {
        // components() asserts BFS count = p^(m - ord_n(p))
        let c = g.components();
        assert_eq!(c.component_count * c.component_q, g.q() as u64);
        assert_eq!((c.component_q - 1) % g.n() as u64, 0);
        assert_eq!(c.is_connected(), c.a == g.field().m());
    }
    let c = graph(5, 2, 6).components();
    assert_eq!((c.component_count, c.component_k, c.component_q), (5, 1, 5));
    let c = graph(2, 8, 51).components();
    assert_eq!((c.component_count, c.component_k, c.component_q), (16, 3, 16));
}

#[test]
fn vertex_transitivity_proxy() {
    for (p, m, q) in prime_powers(125) {
        let f = field(p, m);
        for k in arith::divisors(q - 1) {
            let g = GpGraph::new(f.clone(), k).unwrap();
            let from_zero = distance_profile(&g, FieldElement::ZERO);
            for v in [1, q as u32 / 2, q as u32 - 1] {
                assert_eq!(from_zero, distance_profile(&g, FieldElement(v)), "{g:?}");
            }
        }
    }
}

#[test]
fn symmetrization() {
    for g in all_graphs(343) {
        let w = g.symmetrize();
        assert!(!w.is_directed());
        assert_eq!(w.symmetrize().connection_set(), w.connection_set());
        if g.is_directed() {
            assert_eq!(w.k(), g.k() / 2);
        } else {
            assert_eq!(w.k(), g.k());
        }
    }
    assert_eq!(graph(13, 1, 2).symmetrize().k(), 2);
}

#[test]
fn period_law_exhaustive() {
    for g in all_graphs(343) {
        let q = g.q() as u64;
        let period = g.period();
        if g.is_directed() {
            let expected = if g.k() as u64 == q - 1 { g.field().p() as u64 } else { 1 };
            assert_eq!(period, expected, "{g:?}");
        }
    }
    assert_eq!(graph(2, 8, 255).period(), 2);
}

#[test]
fn period_equals_cycle_gcd_on_tiny_graphs() {
    let lengths = graph(7, 1, 2).directed_cycle_lengths();
    assert!([3, 4, 6, 7].iter().all(|l| lengths.contains(l)));
    for (p, m, q) in prime_powers(9) {
        for k in arith::divisors(q - 1) {
            let g = graph(p, m, k);
            let g_cycles = g.directed_cycle_lengths().into_iter().fold(0u64, |a, l| arith::gcd(a, l as u64));
            // an undirected edge is a 2-cycle under the arc-pair convention
            let with_edges = if g.is_directed() { g_cycles } else { arith::gcd(g_cycles, 2) };
            assert_eq!(g.period(), with_edges, "{g:?}");
        }
    }
}

#[test]
fn structure_labels_of_worked_fields() {
    let label = |p, m, k| graph(p, m, k).classify_structure().to_string();
    let q25: Vec<_> = [1, 2, 3, 4, 6, 8, 12, 24].iter().map(|&k| label(5, 2, k)).collect();
    assert_eq!(
        q25,
        ["K_25", "P_25", "L_{5,5}", "generic", "5 x K_5", "generic", "5 x P_5", "5 x C->_5"]
    );
    let q49: Vec<_> = [1, 2, 3, 4, 6, 8, 12, 16, 24, 48].iter().map(|&k| label(7, 2, k)).collect();
    assert_eq!(
        q49,
        [
            "K_49", "P_49", "generic", "L_{7,7}", "generic", "7 x K_7", "generic", "7 x P->_7",
            "7 x C_7", "7 x C->_7"
        ]
    );
    let q81: Vec<_> = [1, 2, 4, 5, 8, 10, 16, 20, 40, 80].iter().map(|&k| label(3, 4, k)).collect();
    assert_eq!(
        q81,
        [
            "K_81", "P_81", "semiprimitive", "L_{9,9}", "generic", "9 x K_9", "generic",
            "9 x P_9", "27 x K_3", "27 x P->_3"
        ]
    );
    let q256: Vec<_> = [1, 3, 5, 15, 17, 51, 85, 255].iter().map(|&k| label(2, 8, k)).collect();
    assert_eq!(
        q256,
        [
            "K_256", "semiprimitive", "semiprimitive", "generic", "16 x K_16", "16 x G(3,16)",
            "64 x K_4", "128 x K_2"
        ]
    );
    assert_eq!(
        graph(2, 6, 7).classify_structure(),
        StructureLabel::Hamming { b: 3, base: 4 }
    );
}
