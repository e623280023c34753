#![allow(dead_code)]

use std::sync::Arc;

use gpgraph_core::arith;
use gpgraph_core::{FiniteField, GpGraph};

/// `(p, m, q)` for every prime power `2 ≤ q ≤ limit`.
pub fn prime_powers(limit: u64) -> Vec<(u64, u32, u64)> {
    (2..=limit)
        .filter_map(|q| arith::prime_power(q).map(|(p, m)| (p, m, q)))
        .collect()
}

pub fn field(p: u64, m: u32) -> Arc<FiniteField> {
    Arc::new(FiniteField::new(p, m).unwrap())
}

pub fn graph(p: u64, m: u32, k: u64) -> GpGraph {
    GpGraph::new(field(p, m), k).unwrap()
}

/// Every `Γ(k, q)` with `q ≤ limit`, one per divisor `k | q - 1`.
pub fn all_graphs(limit: u64) -> Vec<GpGraph> {
    let mut out = Vec::new();
    for (p, m, q) in prime_powers(limit) {
        let f = field(p, m);
        for k in arith::divisors(q - 1) {
            out.push(GpGraph::new(f.clone(), k).unwrap());
        }
    }
    out
}

/// Schoolbook arithmetic on coefficient vectors, independent of the
/// field's tables.
pub struct NaiveField {
    pub p: u64,
    pub modulus: Vec<u64>,
}

impl NaiveField {
    pub fn of(f: &FiniteField) -> Self {
        NaiveField {
            p: f.p() as u64,
            modulus: f.modulus().iter().map(|&c| c as u64).collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let m = self.m();
        let mut prod = vec![0u64; 2 * m];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % self.p;
            }
        }
        for d in (m..2 * m).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for j in 0..m {
                let sub = c * self.modulus[j] % self.p;
                prod[d - m + j] = (prod[d - m + j] + self.p - sub) % self.p;
            }
        }
        prod.truncate(m);
        prod
    }

    pub fn pow(&self, a: &[u64], e: u64) -> Vec<u64> {
        let mut r = vec![0u64; self.m()];
        r[0] = 1;
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    /// `x + x^p + … + x^{p^{m-1}}` by plain multiplication.
    pub fn trace(&self, a: &[u64]) -> Vec<u64> {
        let mut acc = a.to_vec();
        let mut frob = a.to_vec();
        for _ in 1..self.m() {
            frob = self.pow(&frob, self.p);
            acc = self.add(&acc, &frob);
        }
        acc
    }
}

pub fn coeffs64(f: &FiniteField, x: gpgraph_core::FieldElement) -> Vec<u64> {
    f.coeffs(x).into_iter().map(u64::from).collect()
}
