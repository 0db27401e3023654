//! The prime class Π, Fermat primes and the term-equivalence predicate.

use serde::{Deserialize, Serialize};

/// Membership of `n` in Π: odd primes `n` with `2^m ≢ ±1 (mod n)` for all
/// `0 < m < (n-1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiVerdict {
    pub n: u64,
    pub in_pi: bool,
    /// Least `m` with `2^m ≡ ±1`, for odd primes outside Π.
    pub witness_m: Option<u64>,
    /// `+1` or `-1`, the residue of `2^witness_m`.
    pub sign: Option<i8>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn in_pi(n: u64) -> PiVerdict {
    let mut v = PiVerdict {
        n,
        in_pi: false,
        witness_m: None,
        sign: None,
    };
    if n.is_multiple_of(2) || !is_prime(n) {
        return v;
    }
    let half = (n - 1) / 2;
    let mut r = 1u64;
    for m in 1..=half {
        r = r * 2 % n;
        if r == 1 || r == n - 1 {
            if m < half {
                v.witness_m = Some(m);
                v.sign = Some(if r == 1 { 1 } else { -1 });
                return v;
            }
            v.in_pi = true;
            return v;
        }
    }
    panic!("2^((n-1)/2) is not ±1 modulo the prime {n}");
}

pub fn is_fermat_prime(n: u64) -> bool {
    is_prime(n) && (n - 1).is_power_of_two()
}

/// Whether Ł_{n+1} and Ł*_{n+1} are term-equivalent.
pub fn term_equivalent(n: u64) -> bool {
    match n {
        0 => false,
        1 | 2 | 4 => true,
        _ if n.is_multiple_of(2) => false,
        _ => in_pi(n).in_pi,
    }
}

/// Members of Π below `limit`, ascending.
pub fn pi_below(limit: u64) -> Vec<u64> {
    (3..limit).step_by(2).filter(|&n| in_pi(n).in_pi).collect()
}
