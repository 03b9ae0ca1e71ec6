//! Fixtures shared by the benchmarks.

use dedekind::{build_plan, CoprimePair, Rational};

/// `(F_{k}, F_{k+1})`: consecutive Fibonacci numbers, the longest Euclidean
/// descent for their size.
pub fn fibonacci_pair(k: usize) -> CoprimePair {
    let (mut a, mut b) = (dedekind::BigInt::from(1u8), dedekind::BigInt::from(1u8));
    for _ in 0..k {
        let next = &a + &b;
        a = b;
        b = next;
    }
    CoprimePair::new(a, b).expect("consecutive Fibonacci numbers are coprime")
}

/// The pair produced for `7/11` with tolerance `1/100`.
pub fn worked_example_pair() -> CoprimePair {
    build_plan(&Rational::frac(7, 11), &Rational::frac(1, 100))
        .expect("valid plan")
        .pair()
}

/// A pair with `n = 10^e + 1` and `m` near `0.618 n`, small enough for the
/// naive oracle.
pub fn oracle_pair(exponent: u32) -> CoprimePair {
    let n = 10i64.pow(exponent) + 1;
    (n * 618 / 1000..n)
        .find_map(|m| CoprimePair::new(m, n).ok())
        .expect("n - 1 is always coprime to n")
}
