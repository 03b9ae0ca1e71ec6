//! The sawtooth function and Dedekind sums.
//!
//! `s(m, n) = sum_{k=1}^{n} ((k/n)) ((mk/n))` for coprime `m` and `n >= 1`,
//! and the normalized `S(m, n) = 12 s(m, n)` used by the rest of the crate.
//!
//! Two evaluators are provided. [`dedekind_sum_naive`] sums the definition
//! term by term and serves as the oracle. [`dedekind_sum_fast`] descends
//! through the Euclidean remainder sequence using the reciprocity law
//!
//! ```text
//! S(a, b) + S(b, a) = (a² + b² + 1) / (ab) - 3        (a, b >= 1 coprime)
//! ```
//!
//! and needs only `O(log n)` big-integer operations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{gcd, Rational};
use crate::error::{Error, Result};

/// Default bound on `n` for the term-by-term oracle.
pub const DEFAULT_ORACLE_CAP: u64 = 1_000_000;

/// Hard ceiling for the oracle; keeps the scaled partial sums inside `i128`.
const ORACLE_HARD_LIMIT: u64 = 1 << 40;

/// A Dedekind-sum argument `(m, n)` with `n >= 1` and `gcd(m, n) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoprimePair {
    m: BigInt,
    n: BigInt,
}

impl CoprimePair {
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self> {
        let (m, n) = (m.into(), n.into());
        if n < BigInt::one() {
            return Err(Error::NonPositiveDenominator(n));
        }
        if !gcd(&m, &n).is_one() {
            return Err(Error::NotCoprime { a: m, b: n });
        }
        Ok(CoprimePair { m, n })
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// `(-m, n)`.
    pub fn negated(&self) -> Self {
        CoprimePair {
            m: -&self.m,
            n: self.n.clone(),
        }
    }
}

impl fmt::Display for CoprimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// `((t))`: `t - floor(t) - 1/2` off the integers, `0` on them.
pub fn sawtooth(t: &Rational) -> Rational {
    if t.is_integer() {
        return Rational::zero();
    }
    t - Rational::from(t.floor()) - Rational::frac(1, 2)
}

/// `2n * ((a/n))` as an integer, for `0 <= a` and `n >= 1`.
fn scaled_sawtooth(a: u64, n: u64) -> i128 {
    let r = a % n;
    if r == 0 {
        0
    } else {
        2 * r as i128 - n as i128
    }
}

/// `s(m, n)` by direct summation over `k = 1..=n`.
///
/// Each term `((k/n)) ((mk/n))` is carried as an integer multiple of
/// `1 / (4n²)`, so the sum is exact without per-term rational reductions.
pub fn dedekind_sum_naive(p: &CoprimePair, cap: u64) -> Result<Rational> {
    let cap = cap.min(ORACLE_HARD_LIMIT);
    let n = match p.n.to_u64() {
        Some(n) if n <= cap => n,
        _ => {
            return Err(Error::OracleCapExceeded {
                n: p.n.clone(),
                cap,
            })
        }
    };
    let m = p.m.mod_floor(&p.n).to_u64().expect("reduced below n");
    let mut total: i128 = 0;
    for k in 1..=n {
        let mk = ((m as u128 * k as u128) % n as u128) as u64;
        total += scaled_sawtooth(k, n) * scaled_sawtooth(mk, n);
    }
    let denom = BigInt::from(4u8) * &p.n * &p.n;
    Rational::new(total, denom)
}

/// `s(m, n)` by reciprocity descent.
pub fn dedekind_sum_fast(p: &CoprimePair) -> Rational {
    big_s(p) / Rational::from(12)
}

/// `S(m, n) = 12 s(m, n)`.
pub fn big_s(p: &CoprimePair) -> Rational {
    // Remainder chain (a_i, b_i) with b_{i+1} = a_i and a_{i+1} = b_i mod a_i,
    // stopping once b reaches 1 where S vanishes.
    let mut chain = Vec::new();
    let mut a = p.m.mod_floor(&p.n);
    let mut b = p.n.clone();
    while !b.is_one() {
        let next = b.mod_floor(&a);
        chain.push((a.clone(), b));
        b = a;
        a = next;
    }
    // Fold from the bottom so every intermediate denominator stays bounded by
    // the current b rather than accumulating across the whole chain.
    let three = Rational::from(3);
    chain.iter().rev().fold(Rational::zero(), |inner, (a, b)| {
        let reciprocity = Rational::new(a * a + b * b + 1u8, a * b).expect("a, b >= 1");
        reciprocity - &three - inner
    })
}

/// `S(m, n)` from the naive oracle.
pub fn big_s_naive(p: &CoprimePair, cap: u64) -> Result<Rational> {
    Ok(dedekind_sum_naive(p, cap)? * Rational::from(12))
}

/// Reduces `m` into `[1, n]`, or to `0` when `n = 1`.
pub fn normalize_arg(p: &CoprimePair) -> CoprimePair {
    let mut m = p.m.mod_floor(&p.n);
    if m.is_zero() && !p.n.is_one() {
        m = p.n.clone();
    }
    debug_assert!(!m.is_negative());
    CoprimePair { m, n: p.n.clone() }
}
