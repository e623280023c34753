//! Finite fields `F_q`, `q = p^m`.
//!
//! Elements are stored as polynomials of degree `< m` over `F_p` modulo a
//! fixed monic irreducible polynomial. A [`FieldElement`] is the index
//! `c_0 + c_1 p + … + c_{m-1} p^{m-1}` of its coefficient vector, which is
//! also the enumeration order of the field.
//!
//! [`FiniteField::new`] is fully deterministic: the modulus is the
//! lexicographically least monic irreducible polynomial (coefficients compared
//! constant term first) and the primitive element is the enumeration-least
//! generator of `F_q*`. Full exponential and logarithm tables are built, so
//! fields are limited to [`DEFAULT_MAX_Q`] elements unless a larger budget is
//! passed explicitly.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::fp_poly;

/// Largest field built by [`FiniteField::new`].
pub const DEFAULT_MAX_Q: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

/// An element of some [`FiniteField`], identified by its enumeration index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    omega: FieldElement,
    /// `exp[e]` is `ω^e` for `0 ≤ e < q - 1`.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `Tr(x)` for every element, computed through the linear route.
    traces: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("omega", &self.omega)
            .finish()
    }
}

/// Monic irreducible polynomials of degree `m` over `F_p` in lexicographic
/// order, coefficients compared constant term first. Each item is the full
/// coefficient vector (length `m + 1`, last entry `1`).
pub fn irreducible_moduli(p: u32, m: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as u64).pow(m);
    (0..total).filter_map(move |mut idx| {
        // constant term is the most significant digit of `idx`
        let mut coeffs = vec![0u32; m as usize + 1];
        for j in (0..m as usize).rev() {
            coeffs[j] = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        coeffs[m as usize] = 1;
        let wide: Vec<u64> = coeffs.iter().map(|&c| c as u64).collect();
        fp_poly::is_irreducible(&wide, p as u64).then_some(coeffs)
    })
}

impl FiniteField {
    /// Builds the canonical `F_{p^m}` with the default size budget.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_budget(p, m, DEFAULT_MAX_Q)
    }

    pub fn with_budget(p: u64, m: u32, max_q: u64) -> Result<Self> {
        let q = Self::check_size(p, m, max_q)?;
        let modulus = irreducible_moduli(p as u32, m)
            .next()
            .expect("an irreducible polynomial exists in every degree");
        Self::assemble(p as u32, m, q, modulus, None)
    }

    /// Builds `F_{p^m}` from an explicit monic irreducible `modulus`
    /// (constant term first, length `m + 1`). If `omega` is `None` the
    /// enumeration-least generator is used.
    pub fn with_modulus(p: u64, modulus: &[u32], omega: Option<&[u32]>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus(0));
        }
        let m = (modulus.len() - 1) as u32;
        let q = Self::check_size(p, m, DEFAULT_MAX_Q)?;
        let wide: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
        if modulus[m as usize] != 1
            || modulus.iter().any(|&c| c as u64 >= p)
            || !fp_poly::is_irreducible(&wide, p)
        {
            return Err(Error::InvalidModulus(m));
        }
        let omega = match omega {
            Some(c) => Some(encode(p as u32, m, c)?),
            None => None,
        };
        Self::assemble(p as u32, m, q, modulus.to_vec(), omega)
    }

    /// The field over the `index`-th monic irreducible of degree `m` in the
    /// same lexicographic order used by [`FiniteField::new`] (index 0).
    pub fn with_modulus_rank(p: u64, m: u32, index: usize) -> Result<Self> {
        let q = Self::check_size(p, m, DEFAULT_MAX_Q)?;
        let modulus = irreducible_moduli(p as u32, m)
            .nth(index)
            .ok_or_else(|| Error::PreconditionViolated(alloc::format!(
                "fewer than {} irreducible polynomials of degree {m} over F_{p}",
                index + 1
            )))?;
        Self::assemble(p as u32, m, q, modulus, None)
    }

    fn check_size(p: u64, m: u32, max_q: u64) -> Result<u32> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::PreconditionViolated("extension degree must be at least 1".into()));
        }
        let q = arith::checked_pow(p, m).unwrap_or(u64::MAX);
        if q > max_q || q > u32::MAX as u64 {
            return Err(Error::SizeBudgetExceeded { size: q, budget: max_q });
        }
        Ok(q as u32)
    }

    fn assemble(
        p: u32,
        m: u32,
        q: u32,
        modulus: Vec<u32>,
        omega: Option<FieldElement>,
    ) -> Result<Self> {
        let pw = p as u64;
        let f: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
        let group_order = (q - 1) as u64;
        let prime_factors: Vec<u64> = arith::factorize(group_order.max(1))
            .into_iter()
            .map(|(r, _)| r)
            .collect();
        let is_generator = |idx: u32| -> bool {
            if idx == 0 {
                return false;
            }
            let poly = decode_poly(p, m, idx);
            prime_factors.iter().all(|&r| {
                let v = fp_poly::pow_mod(&poly, group_order / r, &f, pw);
                v != [1]
            })
        };
        let omega = match omega {
            Some(w) => {
                if !is_generator(w.0) {
                    return Err(Error::NotPrimitive);
                }
                w
            }
            None => FieldElement(
                (1..q)
                    .find(|&i| is_generator(i))
                    .expect("F_q* is cyclic"),
            ),
        };

        let omega_poly = decode_poly(p, m, omega.0);
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![NO_LOG; q as usize];
        let mut cur: Vec<u64> = vec![1];
        for e in 0..(q - 1) {
            let idx = encode_poly(p, &cur);
            assert_eq!(log[idx as usize], NO_LOG, "ω has order below q - 1");
            log[idx as usize] = e;
            exp.push(idx);
            cur = fp_poly::mul_mod(&cur, &omega_poly, &f, pw);
        }
        assert_eq!(cur, [1], "ω^(q-1) must be 1");

        let mut field = FiniteField {
            p,
            m,
            q,
            modulus,
            omega,
            exp,
            log,
            traces: Vec::new(),
        };
        field.traces = field.linear_trace_table();
        Ok(field)
    }

    // Tr is F_p-linear: Tr(Σ c_j α^j) = Σ c_j Tr(α^j).
    fn linear_trace_table(&self) -> Vec<u32> {
        let p = self.p as u64;
        let basis: Vec<u64> = (0..self.m)
            .map(|j| self.trace(FieldElement((self.p).pow(j))) as u64)
            .collect();
        (0..self.q)
            .map(|idx| {
                let mut rest = idx;
                let mut acc = 0u64;
                for &t in &basis {
                    acc += (rest % self.p) as u64 * t;
                    rest /= self.p;
                }
                (acc % p) as u32
            })
            .collect()
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// The modulus polynomial, constant term first, monic of degree `m`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element `ω`.
    #[inline]
    pub fn omega(&self) -> FieldElement {
        self.omega
    }

    /// The class of `x` modulo the modulus. For `m = 1` this is the residue
    /// `-c_0` of the modulus `x + c_0`.
    pub fn alpha(&self) -> FieldElement {
        if self.m == 1 {
            self.from_int(-(self.modulus[0] as i64))
        } else {
            FieldElement(self.p)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        encode(self.p, self.m, coeffs)
    }

    /// Coefficient vector of `x`, constant term first, length exactly `m`.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        let mut rest = x.0;
        (0..self.m)
            .map(|_| {
                let c = rest % self.p;
                rest /= self.p;
                c
            })
            .collect()
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> FieldElement {
        FieldElement(c.rem_euclid(self.p as i64) as u32)
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.0 < self.q
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.m == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..self.m {
            let mut d = x % self.p + y % self.p;
            if d >= self.p {
                d -= self.p;
            }
            out += d * place;
            place *= self.p;
            x /= self.p;
            y /= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..self.m {
            let d = x % self.p;
            out += if d == 0 { 0 } else { self.p - d } * place;
            place *= self.p;
            x /= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let e = self.log[a.index()] as u64 + self.log[b.index()] as u64;
        FieldElement(self.exp[(e % (self.q as u64 - 1)) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        let e = (order - self.log[a.index()]) % order;
        Ok(FieldElement(self.exp[e as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let order = self.q as u64 - 1;
        let l = self.log[a.index()] as u64;
        FieldElement(self.exp[((l * (e % order)) % order) as usize])
    }

    /// `ω^e` for any integer exponent.
    pub fn omega_pow(&self, e: i64) -> FieldElement {
        let order = self.q as i64 - 1;
        FieldElement(self.exp[e.rem_euclid(order) as usize])
    }

    /// The unique `e ∈ [0, q-2]` with `ω^e = x`.
    pub fn discrete_log(&self, x: FieldElement) -> Result<u32> {
        if x.is_zero() {
            return Err(Error::ZeroHasNoLog);
        }
        Ok(self.log[x.index()])
    }

    /// `Tr(x) = x + x^p + … + x^{p^{m-1}}` through repeated Frobenius powers.
    pub fn trace(&self, x: FieldElement) -> u32 {
        let mut acc = x;
        let mut frob = x;
        for _ in 1..self.m {
            frob = self.pow(frob, self.p as u64);
            acc = self.add(acc, frob);
        }
        assert!(acc.0 < self.p, "trace must lie in the prime subfield");
        acc.0
    }

    /// Precomputed trace of every element, indexed by element.
    pub fn trace_table(&self) -> &[u32] {
        &self.traces
    }

    /// `R_k = {x^k : x ∈ F_q*}`, the subgroup of order `(q-1)/gcd(k, q-1)`,
    /// sorted by element index.
    pub fn power_residues(&self, k: u64) -> Vec<FieldElement> {
        let order = self.q as u64 - 1;
        let step = arith::gcd(k, order);
        let mut out: Vec<FieldElement> = (0..order / step)
            .map(|j| FieldElement(self.exp[(j * step) as usize]))
            .collect();
        out.sort_unstable();
        out
    }

    /// Membership in `R_k` for `k | q - 1`, by discrete log residue.
    #[inline]
    pub fn is_power_residue(&self, x: FieldElement, k: u32) -> bool {
        !x.is_zero() && self.log[x.index()] % k == 0
    }

    /// Renders `x` as a polynomial in `a` (the class of the variable), e.g.
    /// `3a+1`. Prime-field elements render as plain residues.
    pub fn display(&self, x: FieldElement) -> alloc::string::String {
        use alloc::string::String;
        use core::fmt::Write;
        let c = self.coeffs(x);
        let mut s = String::new();
        for j in (0..c.len()).rev() {
            if c[j] == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            match (j, c[j]) {
                (0, v) => write!(s, "{v}").unwrap(),
                (1, 1) => s.push('a'),
                (1, v) => write!(s, "{v}a").unwrap(),
                (_, 1) => write!(s, "a^{j}").unwrap(),
                (_, v) => write!(s, "{v}a^{j}").unwrap(),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

fn encode(p: u32, m: u32, coeffs: &[u32]) -> Result<FieldElement> {
    if coeffs.len() > m as usize || coeffs.iter().any(|&c| c >= p) {
        return Err(Error::InvalidElement);
    }
    let mut idx = 0u32;
    for &c in coeffs.iter().rev() {
        idx = idx * p + c;
    }
    Ok(FieldElement(idx))
}

fn decode_poly(p: u32, m: u32, mut idx: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push((idx % p) as u64);
        idx /= p;
    }
    fp_poly::trim(out)
}

fn encode_poly(p: u32, poly: &[u64]) -> u32 {
    poly.iter().rev().fold(0u32, |acc, &c| acc * p + c as u32)
}
