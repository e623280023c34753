//! Exact arithmetic in `Z[ζ_p]`.
//!
//! A value is a length-`p` vector of integers `c` meaning `Σ c_j ζ_p^j`. The
//! relation `1 + ζ + … + ζ^{p-1} = 0` makes this redundant, so values are kept
//! in canonical form with `c_{p-1} = 0`; two values are equal iff their
//! canonical vectors are identical.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclotomicInteger {
    p: u32,
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Rational(BigInt),
    RealIrrational,
    NonReal,
}

impl CyclotomicInteger {
    /// Builds from a (possibly non-canonical) coefficient vector of length
    /// `p`; shorter vectors are zero padded.
    pub fn from_coeffs(p: u32, coeffs: Vec<BigInt>) -> Self {
        assert!(p >= 2, "ζ_p needs p ≥ 2");
        assert!(coeffs.len() <= p as usize, "more than p coefficients");
        let mut coeffs = coeffs;
        coeffs.resize(p as usize, BigInt::zero());
        let mut v = CyclotomicInteger { p, coeffs };
        v.canonicalize();
        v
    }

    pub fn from_i64s(p: u32, coeffs: &[i64]) -> Self {
        Self::from_coeffs(p, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `Σ_j counts[j] ζ^j`; used for character sums.
    pub fn from_counts(p: u32, counts: &[i64]) -> Self {
        Self::from_i64s(p, counts)
    }

    pub fn integer(p: u32, value: impl Into<BigInt>) -> Self {
        let mut coeffs = vec![BigInt::zero(); p as usize];
        coeffs[0] = value.into();
        CyclotomicInteger { p, coeffs }
    }

    pub fn zero(p: u32) -> Self {
        Self::integer(p, 0)
    }

    pub fn one(p: u32) -> Self {
        Self::integer(p, 1)
    }

    /// `ζ_p^j`, exponent taken modulo `p`.
    pub fn root_power(p: u32, j: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); p as usize];
        coeffs[j.rem_euclid(p as i64) as usize] = BigInt::one();
        let mut v = CyclotomicInteger { p, coeffs };
        v.canonicalize();
        v
    }

    /// The quadratic Gauss sum `Σ_{x ∈ F_p*} (x/p) ζ_p^x`. It squares to
    /// `(-1/p)·p`, so it equals `√p` for `p ≡ 1 (mod 4)` and `i√p` for
    /// `p ≡ 3 (mod 4)`. Requires `p` odd.
    pub fn quadratic_gauss_sum(p: u32) -> Self {
        assert!(p % 2 == 1, "the quadratic Gauss sum needs an odd prime");
        let mut coeffs = vec![-1i64; p as usize];
        coeffs[0] = 0;
        for x in 1..p as u64 {
            coeffs[((x * x) % p as u64) as usize] = 1;
        }
        Self::from_i64s(p, &coeffs)
    }

    fn canonicalize(&mut self) {
        let last = self.coeffs[self.p as usize - 1].clone();
        if !last.is_zero() {
            for c in self.coeffs.iter_mut() {
                *c -= &last;
            }
        }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Canonical coefficients; the last entry is always zero.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            Err(Error::MixedRootOrders(self.p, other.p))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        // sum of canonical vectors is canonical
        Ok(CyclotomicInteger { p: self.p, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CyclotomicInteger { p: self.p, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = self.p as usize;
        let mut out = vec![BigInt::zero(); p];
        let rhs: Vec<(usize, &BigInt)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs {
                let slot = &mut out[(i + j) % p];
                *slot += a * b;
            }
        }
        let mut v = CyclotomicInteger { p: self.p, coeffs: out };
        v.canonicalize();
        Ok(v)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        CyclotomicInteger {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Exact division by a nonzero integer; `None` unless every canonical
    /// coefficient is divisible (the canonical coefficients below `p - 1` are
    /// coordinates in the integral basis `1, ζ, …, ζ^{p-2}`).
    pub fn div_exact(&self, divisor: &BigInt) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(divisor);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(CyclotomicInteger { p: self.p, coeffs })
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> Self {
        let p = self.p as usize;
        let mut coeffs = vec![BigInt::zero(); p];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[(p - j) % p] = c.clone();
        }
        let mut v = CyclotomicInteger { p: self.p, coeffs };
        v.canonicalize();
        v
    }

    /// `λ + conj(λ) = 2 Re(λ)`.
    pub fn twice_real_part(&self) -> Self {
        self + &self.conjugate()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn classify(&self) -> Classification {
        if let Some(v) = self.as_integer() {
            Classification::Rational(v.clone())
        } else if self.is_real() {
            Classification::RealIrrational
        } else {
            Classification::NonReal
        }
    }

    /// Numeric value under `ζ_p = e^{2πi/p}`.
    pub fn embed_numeric(&self) -> Complex64 {
        let p = self.p as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * core::f64::consts::PI * j as f64 / p;
            re += c * libm::cos(theta);
            im += c * libm::sin(theta);
        }
        Complex64::new(re, im)
    }

    /// Exact form: integers print plainly, otherwise `c0 + c1*z + c2*z^2 …`
    /// with `z = ζ_p`, zero terms omitted and unit coefficients elided.
    pub fn render_exact(&self) -> String {
        if let Some(v) = self.as_integer() {
            return alloc::format!("{v}");
        }
        let mut s = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match j {
                0 => write!(s, "{mag}").unwrap(),
                _ => {
                    if !mag.is_one() {
                        write!(s, "{mag}*").unwrap();
                    }
                    if j == 1 {
                        s.push('z');
                    } else {
                        write!(s, "z^{j}").unwrap();
                    }
                }
            }
        }
        s
    }

    /// Numeric form with six decimals; real values omit the imaginary part.
    pub fn render_numeric(&self) -> String {
        let z = self.embed_numeric();
        let re = fix_negative_zero(z.re);
        if self.is_real() {
            alloc::format!("{re:.6}")
        } else {
            let im = fix_negative_zero(z.im);
            let sign = if im < 0.0 { '-' } else { '+' };
            alloc::format!("{re:.6}{sign}{:.6}i", libm::fabs(im))
        }
    }
}

fn fix_negative_zero(x: f64) -> f64 {
    // values that round to zero must not print as -0.000000
    if libm::fabs(x) < 5e-7 {
        0.0
    } else {
        x
    }
}

impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_exact())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a CyclotomicInteger> for &'a CyclotomicInteger {
            type Output = CyclotomicInteger;
            fn $method(self, rhs: &'a CyclotomicInteger) -> CyclotomicInteger {
                self.$checked(rhs).expect("operands over different roots of unity")
            }
        }
        impl $trait for CyclotomicInteger {
            type Output = CyclotomicInteger;
            fn $method(self, rhs: CyclotomicInteger) -> CyclotomicInteger {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn neg(self) -> CyclotomicInteger {
        CyclotomicInteger {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn neg(self) -> CyclotomicInteger {
        -&self
    }
}
