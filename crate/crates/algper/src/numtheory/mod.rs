//! Elementary multiplicative number theory on machine integers, plus exact
//! integer polynomials and cyclotomic polynomials.
//!
//! Everything here is index arithmetic: inputs are positive `u64` and the
//! outputs (Möbius values, totients, divisor lists, Ramanujan sums) are
//! bounded by their inputs, so machine words suffice. Unbounded quantities
//! live in [`poly::IntPolynomial`] and the sequence types built on top.

mod poly;

pub use poly::IntPolynomial;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Möbius function: 0 on non-squarefree n, else (-1)^(number of prime factors).
pub fn mobius(n: u64) -> i64 {
    assert!(n > 0, "mobius is defined on positive integers");
    let mut m = n;
    let mut factors = 0u32;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if m > 1 {
        factors += 1;
    }
    if factors.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler totient via trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "euler_phi is defined on positive integers");
    let mut m = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            phi = phi / p * (p - 1);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi = phi / m * (m - 1);
    }
    phi
}

/// All positive divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors is defined on positive integers");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// All m with φ(m) = n, ascending. Every preimage satisfies m ≤ 2n², so a
/// direct scan of that range is exhaustive. Empty for nontotients (odd n > 1,
/// and even values like 14, 26, 34 with no preimage).
pub fn inverse_totient(n: u64) -> Vec<u64> {
    assert!(n > 0, "inverse_totient is defined on positive integers");
    let bound = 2 * n * n;
    (1..=bound).filter(|&m| euler_phi(m) == n).collect()
}

/// Ramanujan sum c_k(n) = Σ_{d | gcd(k,n)} μ(k/d) d, the sum of n-th powers
/// of the primitive k-th roots of unity. In particular c_k(n) = φ(k) when
/// k | n, and c_k(·) has period k.
pub fn ramanujan_sum(k: u64, n: u64) -> i64 {
    assert!(k > 0, "ramanujan_sum needs a positive order");
    // c_k(0) = c_k(k) = φ(k); accept n = 0 so trace matrices can index by
    // exponent sums directly.
    let g = num_integer::gcd(k, if n == 0 { k } else { n });
    divisors(g)
        .into_iter()
        .map(|d| mobius(k / d) * d as i64)
        .sum()
}

/// reg_k(n): k if k | n, else 0. These are the indicator sequences of the
/// divisibility lattice; Σ_{d|k} c_d(n) = reg_k(n).
pub fn reg(k: u64, n: u64) -> u64 {
    assert!(k > 0 && n > 0, "reg is defined on positive integers");
    if n.is_multiple_of(k) {
        k
    } else {
        0
    }
}

/// The k-th cyclotomic polynomial, computed by exact division
/// Φ_k = (x^k − 1) / Π_{d|k, d<k} Φ_d and memoized process-wide.
pub fn cyclotomic(k: u64) -> IntPolynomial {
    assert!(k > 0, "cyclotomic is defined on positive integers");
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&k) {
        return hit.clone();
    }
    let mut quotient = IntPolynomial::x_pow_minus_one(k);
    for d in divisors(k) {
        if d < k {
            quotient = quotient.exact_div(&cyclotomic(d));
        }
    }
    cache.lock().unwrap().insert(k, quotient.clone());
    quotient
}

/// lcm of `values` if it stays within `cap`, else None. Folds with early
/// exit so huge supports never overflow.
pub fn lcm_capped(values: impl IntoIterator<Item = u64>, cap: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for v in values {
        assert!(v > 0, "lcm_capped is defined on positive integers");
        let g = num_integer::gcd(acc, v);
        let next = (acc / g).checked_mul(v)?;
        if next > cap {
            return None;
        }
        acc = next;
    }
    Some(acc)
}
