//! Integer number theory used throughout the crate.
//!
//! Factorization is trial division up to `10^6`, followed by a deterministic
//! Miller-Rabin test and Pollard's rho on whatever cofactor is left.

use alloc::vec;
use alloc::vec::Vec;

const TRIAL_LIMIT: u64 = 1_000_000;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Exponent of the prime `r` in `n` (`n > 0`).
pub fn valuation(mut n: u64, r: u64) -> u32 {
    debug_assert!(n > 0 && r > 1);
    let mut v = 0;
    while n % r == 0 {
        n /= r;
        v += 1;
    }
    v
}

/// 2-adic valuation; `v2(0)` is not defined and panics.
pub fn v2(n: u64) -> u32 {
    assert!(n > 0, "v2(0) is undefined");
    n.trailing_zeros()
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic primality test for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &sp in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
/// `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "cannot factor 0");
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut r = 2u64;
    while r <= TRIAL_LIMIT && r * r <= n {
        if n % r == 0 {
            let mut e = 0;
            while n % r == 0 {
                n /= r;
                e += 1;
            }
            out.push((r, e));
        }
        r += if r == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let mut rest = Vec::new();
        factor_large(n, &mut rest);
        rest.sort_unstable();
        for f in rest {
            match out.last_mut() {
                Some((last, e)) if *last == f => *e += 1,
                _ => out.push((f, 1)),
            }
        }
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (r, e) in factorize(n) {
        let len = divs.len();
        let mut pw = 1u64;
        for _ in 0..e {
            pw *= r;
            for i in 0..len {
                divs.push(divs[i] * pw);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Number of divisors `σ(n)`.
pub fn divisor_count(n: u64) -> u64 {
    factorize(n).iter().map(|&(_, e)| e as u64 + 1).product()
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(r, _)| acc / r * (r - 1))
}

/// Decomposes `q = p^m`; `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// Multiplicative order of `p` modulo `n`, i.e. the least `a ≥ 1` with
/// `n | p^a - 1`. Requires `gcd(p, n) = 1`; `ord_1(p) = 1`.
pub fn multiplicative_order(p: u64, n: u64) -> u32 {
    assert!(n > 0 && gcd(p, n) == 1, "p must be a unit modulo n");
    if n == 1 {
        return 1;
    }
    let base = p % n;
    let mut x = base;
    let mut a = 1;
    while x != 1 {
        x = mul_mod(x, base, n);
        a += 1;
    }
    a
}

/// `c † p^a - 1`: `c` divides `p^a - 1` but no `p^t - 1` with `1 ≤ t < a`.
pub fn is_primitive_divisor(c: u64, p: u64, a: u32) -> bool {
    c > 0 && gcd(p, c) == 1 && multiplicative_order(p, c) == a
}
