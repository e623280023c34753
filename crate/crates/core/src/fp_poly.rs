//! Dense polynomials over `F_p`, constant term first. Only what field
//! construction needs: reduction, modular powers and gcd.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime and a != 0
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub(crate) fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let f = trim(f.to_vec());
    assert!(!f.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        let shift = dr - df;
        for (j, &fj) in f.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * fj % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(out)
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

pub(crate) fn pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    result
}

/// Ben-Or test: a monic `f` of degree `m` is irreducible iff
/// `gcd(x^{p^i} - x, f) = 1` for every `1 ≤ i ≤ m/2`, i.e. `f` has no root in
/// any proper subfield extension of degree at most `m/2`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    let x = [0u64, 1];
    let mut h = rem(&x, &f, p);
    for _ in 1..=m / 2 {
        h = pow_mod(&h, p, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}
