//! Counting and generating integral GP-graphs.
//!
//! `Γ(k, q)` has integral spectrum iff `q` is even or `k | (q-1)/(p-1)`.
//! This module counts the graphs of each nature over a fixed field, lists
//! the elementary criteria that force integrality, and enumerates the
//! infinite integral families built from them.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::spectrum::Nature;

/// Numbers of GP-graphs over `F_q` by nature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldCensus {
    pub q: u64,
    /// `σ(q-1)`, the number of distinct graphs `Γ(k, q)`.
    pub sigma: u64,
    pub n_complex: u64,
    /// Graphs with real spectrum, integral ones included.
    pub n_real: u64,
    pub n_integral: u64,
    pub n_real_nonintegral: u64,
}

/// Counts from the factorizations of `q-1` and `(q-1)/(p-1)`: with
/// `q - 1 = 2^t r`, `r` odd, there are `σ(r)` complex graphs and `t·σ(r)`
/// real ones. Over even `q` every graph is undirected and integral.
pub fn census(q: u64) -> Result<FieldCensus> {
    let (p, _) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let sigma = arith::divisor_count(q - 1);
    let n_integral = arith::divisor_count((q - 1) / (p - 1));
    let (n_complex, n_real) = if p == 2 {
        (0, sigma)
    } else {
        let t = arith::v2(q - 1) as u64;
        let nc = arith::divisor_count((q - 1) >> t);
        (nc, t * nc)
    };
    let census = FieldCensus {
        q,
        sigma,
        n_complex,
        n_real,
        n_integral,
        n_real_nonintegral: sigma - n_complex - n_integral,
    };
    assert_eq!(census, census_by_enumeration(q)?, "census identities fail for q = {q}");
    if p != 2 {
        assert_eq!(sigma, (arith::v2(q - 1) as u64 + 1) * n_complex);
    }
    Ok(census)
}

/// The same counts by classifying every divisor `k | q-1`.
pub fn census_by_enumeration(q: u64) -> Result<FieldCensus> {
    let (p, m) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let mut by_nature: BTreeMap<Nature, u64> = BTreeMap::new();
    let divisors = arith::divisors(q - 1);
    for &k in &divisors {
        *by_nature.entry(Nature::predict(p, m, k)).or_default() += 1;
    }
    let get = |n| by_nature.get(&n).copied().unwrap_or(0);
    let n_integral = get(Nature::Integral);
    let n_rni = get(Nature::RealNonIntegral);
    Ok(FieldCensus {
        q,
        sigma: divisors.len() as u64,
        n_complex: get(Nature::Complex),
        n_real: n_integral + n_rni,
        n_integral,
        n_real_nonintegral: n_rni,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Criterion {
    /// `gcd(k, p-1) = 1`.
    CoprimePMinus1,
    /// `p ≡ 1 (mod k)` and `k | m`.
    BPlusCongruence,
    /// `p ≡ -1 (mod k)` and `m` even.
    CMinusCongruence,
    /// `k | Φ_d(p)` for this `d | m`, `d > 1`.
    CyclotomicDivisor(u32),
    /// `k | (q-1)/(p-1)`, equivalent to integrality.
    MasterDivisibility,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Criterion::CoprimePMinus1 => f.write_str("gcd(k,p-1)=1"),
            Criterion::BPlusCongruence => f.write_str("p=1 mod k, k|m"),
            Criterion::CMinusCongruence => f.write_str("p=-1 mod k, m even"),
            Criterion::CyclotomicDivisor(d) => write!(f, "k|Phi_{d}(p)"),
            Criterion::MasterDivisibility => f.write_str("k|(q-1)/(p-1)"),
        }
    }
}

/// Every criterion satisfied by `(p, m, k)`. Any of the sufficient ones
/// implies [`Criterion::MasterDivisibility`].
pub fn integrality_reasons(p: u64, m: u32, k: u64) -> Result<Vec<Criterion>> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let q = arith::checked_pow(p, m)
        .ok_or_else(|| Error::PreconditionViolated(format!("{p}^{m} overflows")))?;
    if k == 0 || (q - 1) % k != 0 {
        return Err(Error::PreconditionViolated(format!("k = {k} does not divide {q} - 1")));
    }
    let mut out = Vec::new();
    if arith::gcd(k, p - 1) == 1 {
        out.push(Criterion::CoprimePMinus1);
    }
    if (p - 1) % k == 0 && m as u64 % k == 0 {
        out.push(Criterion::BPlusCongruence);
    }
    if (p + 1) % k == 0 && m % 2 == 0 {
        out.push(Criterion::CMinusCongruence);
    }
    let big_k = BigInt::from(k);
    let big_p = BigInt::from(p);
    for d in arith::divisors(m as u64).into_iter().filter(|&d| d > 1) {
        let value = cyclotomic_poly(d as u32).eval_mod(&big_p, &big_k);
        if value.is_zero() {
            out.push(Criterion::CyclotomicDivisor(d as u32));
        }
    }
    let master = ((q - 1) / (p - 1)) % k == 0;
    assert!(
        out.is_empty() || master,
        "a sufficient criterion holds for Γ({k},{q}) but k ∤ (q-1)/(p-1)"
    );
    if master {
        out.push(Criterion::MasterDivisibility);
    }
    Ok(out)
}

/// Integer polynomial, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    fn trimmed(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    /// `x^d - 1`.
    pub fn x_pow_minus_one(d: u32) -> IntPoly {
        let mut c = vec![BigInt::zero(); d as usize + 1];
        c[0] = -BigInt::one();
        c[d as usize] = BigInt::one();
        IntPoly(c)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return IntPoly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::trimmed(out)
    }

    /// Exact quotient by a monic polynomial; `None` if the remainder is
    /// nonzero.
    pub fn div_exact_monic(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree();
        assert!(divisor.0.last().is_some_and(One::is_one), "divisor must be monic");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return rem.iter().all(Zero::is_zero).then(|| IntPoly(Vec::new()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.0.iter().enumerate() {
                rem[i + j] -= &c * b;
            }
            quot[i] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::trimmed(quot))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Value at `x`, reduced modulo `modulus` into `[0, modulus)`.
    pub fn eval_mod(&self, x: &BigInt, modulus: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(modulus))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                _ if !unit => write!(f, "{abs}*")?,
                _ => {}
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `Φ_d(x)`, by exact division of `x^d - 1` by `Φ_e` for the proper
/// divisors `e` of `d`.
pub fn cyclotomic_poly(d: u32) -> IntPoly {
    assert!(d >= 1, "Φ_0 is not defined");
    let mut cache: BTreeMap<u64, IntPoly> = BTreeMap::new();
    let divisors = arith::divisors(d as u64);
    for &e in &divisors {
        let mut poly = IntPoly::x_pow_minus_one(e as u32);
        for &f in divisors.iter().filter(|&&f| f < e && e % f == 0) {
            poly = poly.div_exact_monic(&cache[&f]).expect("Φ_f divides x^e - 1");
        }
        cache.insert(e, poly);
    }
    cache.remove(&(d as u64)).expect("d divides itself")
}

/// An infinite family of integral GP-graphs `Γ(k, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyDescriptor {
    /// `{Γ(k, p^{kt})}` for `k | p - 1`.
    SubfieldDivisor { p: u64, k: u64 },
    /// `{Γ(k, p^{2t})}` for `k | p + 1`.
    SemiprimitiveDivisor { p: u64, k: u64 },
    /// `{Γ(k, p^{φ(k)t})}` for odd `k` with `gcd(k, p(p-1)) = 1`. Products of
    /// prime powers `r_i^{e_i}` with `r_i > p` are instances of this family.
    TotientPower { p: u64, k: u64 },
    /// `{Γ(Φ_d(p), p^{dt})}` for `d > 1`.
    CyclotomicValue { p: u64, d: u32 },
    /// `{Γ(k(q^a - 1)/(q - 1), q^a)}` over an integral base `Γ(k, q)`.
    Tower { k: u64, q: u64 },
    /// `{Γ(k(Q^a - 1)/(Q - 1), Q^a)}` for every member `Γ(k, Q)` of one of the
    /// first four families.
    TwoParameter(Box<FamilyDescriptor>),
}

impl FamilyDescriptor {
    /// The tower over `Γ(p+1, p²)`, i.e. `{Γ((p^{2t}-1)/(p-1), p^{2t})}`.
    pub fn quadratic_tower(p: u64) -> FamilyDescriptor {
        FamilyDescriptor::Tower { k: p + 1, q: p * p }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyDescriptor::SubfieldDivisor { .. } => "subfield-divisor",
            FamilyDescriptor::SemiprimitiveDivisor { .. } => "semiprimitive-divisor",
            FamilyDescriptor::TotientPower { .. } => "totient-power",
            FamilyDescriptor::CyclotomicValue { .. } => "cyclotomic-value",
            FamilyDescriptor::Tower { .. } => "tower",
            FamilyDescriptor::TwoParameter(_) => "two-parameter",
        }
    }

    fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::HypothesisViolated(msg));
        let prime = |p: u64| {
            if arith::is_prime(p) {
                Ok(())
            } else {
                Err(Error::HypothesisViolated(format!("{p} is not prime")))
            }
        };
        match *self {
            FamilyDescriptor::SubfieldDivisor { p, k } => {
                prime(p)?;
                if k == 0 || (p - 1) % k != 0 {
                    return fail(format!("k = {k} does not divide p - 1 = {}", p - 1));
                }
            }
            FamilyDescriptor::SemiprimitiveDivisor { p, k } => {
                prime(p)?;
                if k == 0 || (p + 1) % k != 0 {
                    return fail(format!("k = {k} does not divide p + 1 = {}", p + 1));
                }
            }
            FamilyDescriptor::TotientPower { p, k } => {
                prime(p)?;
                if k == 0 || k % 2 == 0 {
                    return fail(format!("k = {k} is not odd"));
                }
                if arith::gcd(k, p * (p - 1)) != 1 {
                    return fail(format!("gcd(k, p(p-1)) = gcd({k}, {}) ≠ 1", p * (p - 1)));
                }
            }
            FamilyDescriptor::CyclotomicValue { p, d } => {
                prime(p)?;
                if d < 2 {
                    return fail(format!("d = {d} must exceed 1"));
                }
            }
            FamilyDescriptor::Tower { k, q } => {
                let (p, m) = arith::prime_power(q)
                    .ok_or_else(|| Error::HypothesisViolated(format!("{q} is not a prime power")))?;
                if k == 0 || (q - 1) % k != 0 {
                    return fail(format!("k = {k} does not divide q - 1 = {}", q - 1));
                }
                if Nature::predict(p, m, k) != Nature::Integral {
                    return fail(format!("the base Γ({k},{q}) is not integral"));
                }
            }
            FamilyDescriptor::TwoParameter(ref inner) => {
                if matches!(
                    **inner,
                    FamilyDescriptor::Tower { .. } | FamilyDescriptor::TwoParameter(_)
                ) {
                    return fail("the inner family must be one of the four base families".into());
                }
                inner.check()?;
            }
        }
        Ok(())
    }

    /// `(k, q)` members with `q ≤ max_q`, by `q` then `k`.
    pub fn enumerate(&self, max_q: u64) -> Result<Vec<(u64, u64)>> {
        self.check()?;
        let mut out: BTreeSet<(u64, u64)> = BTreeSet::new();
        let powers = |base: u64, step: u32| {
            (1u32..)
                .map_while(move |t| step.checked_mul(t).and_then(|e| base.checked_pow(e)))
                .take_while(move |&q| q <= max_q)
        };
        match *self {
            FamilyDescriptor::SubfieldDivisor { p, k } => {
                out.extend(powers(p, k as u32).map(|q| (q, k)));
            }
            FamilyDescriptor::SemiprimitiveDivisor { p, k } => {
                out.extend(powers(p, 2).map(|q| (q, k)));
            }
            FamilyDescriptor::TotientPower { p, k } => {
                out.extend(powers(p, arith::euler_phi(k) as u32).map(|q| (q, k)));
            }
            FamilyDescriptor::CyclotomicValue { p, d } => {
                let phi = cyclotomic_poly(d).eval(&BigInt::from(p));
                if let Some(k) = phi.to_u64() {
                    out.extend(powers(p, d).map(|q| (q, k)));
                }
            }
            FamilyDescriptor::Tower { k, q } => {
                for big in powers(q, 1) {
                    out.insert((big, k * ((big - 1) / (q - 1))));
                }
            }
            FamilyDescriptor::TwoParameter(ref inner) => {
                for (k, q) in inner.enumerate(max_q)? {
                    for big in powers(q, 1) {
                        out.insert((big, k * ((big - 1) / (q - 1))));
                    }
                }
            }
        }
        let pairs: Vec<(u64, u64)> = out.into_iter().map(|(q, k)| (k, q)).collect();
        for &(k, q) in &pairs {
            let (p, m) = arith::prime_power(q).expect("family members live over fields");
            assert_eq!((q - 1) % k, 0, "Γ({k},{q}): k ∤ q - 1");
            assert_eq!(
                Nature::predict(p, m, k),
                Nature::Integral,
                "family {} emitted the non-integral Γ({k},{q})",
                self.name()
            );
        }
        Ok(pairs)
    }
}
