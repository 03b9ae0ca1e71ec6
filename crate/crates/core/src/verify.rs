//! Randomized and exhaustive exact-identity suites.
//!
//! Each trial draws from its own ChaCha stream keyed by `(seed, check, trial)`,
//! so results do not depend on thread scheduling and reports come back in
//! trial order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::approx::build_plan;
use crate::arith::{gcd, mod_inverse, Rational};
use crate::dedekind::{
    big_s, big_s_naive, dedekind_sum_fast, dedekind_sum_naive, sawtooth, CoprimePair,
};
use crate::identities::{theorem2_value, three_term_check, three_term_check_with};

/// Upper bound on `n` for randomly drawn oracle pairs.
pub const ORACLE_RANDOM_MAX_N: u64 = 1_000_000;
/// Upper bound on `n` (and `d`) in the identity suites.
pub const IDENTITY_MAX_N: u64 = 10_000;
/// Upper bound on `n` in the symmetry-property suite.
pub const PROPERTY_MAX_N: u64 = 1_000_000;
/// Failures kept verbatim per check; the rest are only counted.
const MAX_RECORDED_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Oracle,
    Theorem2,
    ThreeTerm,
    Properties,
    Sweep,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Oracle,
        Suite::Theorem2,
        Suite::ThreeTerm,
        Suite::Properties,
        Suite::Sweep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Theorem2 => "theorem2",
            Suite::ThreeTerm => "three-term",
            Suite::Properties => "properties",
            Suite::Sweep => "sweep",
        }
    }

    /// Random trials per check when none are requested.
    pub fn default_trials(self) -> usize {
        match self {
            Suite::Oracle => 500,
            Suite::Theorem2 => 200,
            Suite::ThreeTerm => 1000,
            Suite::Properties => 1000,
            Suite::Sweep => 500,
        }
    }

    pub fn run(self, config: &SuiteConfig) -> SuiteReport {
        let trials = config.trials.unwrap_or_else(|| self.default_trials());
        let seed = config.seed;
        let checks = match self {
            Suite::Oracle => vec![oracle_exhaustive(config.max_n), oracle_random(trials, seed)],
            Suite::Theorem2 => vec![theorem2_random(trials, seed)],
            Suite::ThreeTerm => vec![
                three_term_random(trials, seed),
                bezout_shift_random(trials, seed),
            ],
            Suite::Properties => vec![
                periodicity(trials, seed),
                negation(trials, seed),
                inverse_invariance(trials, seed),
                sawtooth_oddness(trials, seed),
            ],
            Suite::Sweep => vec![approximation_sweep(trials, seed)],
        };
        SuiteReport {
            suite: self,
            checks,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Overrides every random check's trial count.
    pub trials: Option<usize>,
    pub seed: u64,
    /// Exhaustive oracle range: all coprime `1 <= m <= n <= max_n`.
    pub max_n: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: None,
            seed: 0,
            max_n: 200,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub trials: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn failed(&self) -> usize {
        self.trials - self.passed
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckReport::all_passed)
    }
}

type Outcome = Result<(), String>;

fn collect(name: &'static str, outcomes: Vec<Outcome>) -> CheckReport {
    let trials = outcomes.len();
    let mut passed = 0;
    let mut failures = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(()) => passed += 1,
            Err(msg) if failures.len() < MAX_RECORDED_FAILURES => failures.push(msg),
            Err(_) => {}
        }
    }
    CheckReport {
        name,
        trials,
        passed,
        failures,
    }
}

/// Runs `trials` independent trials, each with its own deterministic stream.
fn run_trials<F>(name: &'static str, stream: u64, trials: usize, seed: u64, trial: F) -> CheckReport
where
    F: Fn(&mut ChaCha8Rng) -> Outcome + Sync,
{
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, stream, i as u64);
            trial(&mut rng)
        })
        .collect();
    collect(name, outcomes)
}

/// The RNG for one trial of one check.
pub fn trial_rng(seed: u64, stream: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((stream << 40) | trial);
    rng
}

/// Log-uniform integer in `[lo, hi]`, so small and large magnitudes are
/// equally represented.
pub fn log_uniform<R: Rng>(rng: &mut R, lo: u64, hi: u64) -> u64 {
    debug_assert!(1 <= lo && lo <= hi);
    let (a, b) = ((lo as f64).ln(), ((hi + 1) as f64).ln());
    let v = rng.gen_range(a..b).exp() as u64;
    v.clamp(lo, hi)
}

/// A coprime pair with `n` log-uniform in `[1, max_n]` and `m` uniform in
/// `[m_lo * n, m_hi * n]`.
pub fn random_pair<R: Rng>(rng: &mut R, max_n: u64, m_lo: i64, m_hi: i64) -> CoprimePair {
    let n = log_uniform(rng, 1, max_n) as i64;
    loop {
        let m = rng.gen_range(m_lo * n..=m_hi * n);
        if num_integer::gcd(m, n) == 1 {
            return CoprimePair::new(m, n).expect("coprime by construction");
        }
    }
}

fn expect_eq(what: &str, lhs: &Rational, rhs: &Rational) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

fn oracle_exhaustive(max_n: u64) -> CheckReport {
    let outcomes: Vec<Vec<Outcome>> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            (1..=n)
                .filter(|&m| num_integer::gcd(m, n) == 1)
                .map(|m| {
                    let p = CoprimePair::new(m, n).expect("coprime");
                    let naive = dedekind_sum_naive(&p, max_n).map_err(|e| e.to_string())?;
                    expect_eq(&format!("s{p}"), &dedekind_sum_fast(&p), &naive)?;
                    // 12 s(m, n) has denominator dividing n
                    let s12 = naive * Rational::from(12);
                    if !p.n().is_multiple_of(s12.denom()) {
                        return Err(format!("denominator of S{p} = {s12} does not divide n"));
                    }
                    Ok(())
                })
                .collect()
        })
        .collect();
    collect(
        "exhaustive fast = naive",
        outcomes.into_iter().flatten().collect(),
    )
}

fn oracle_random(trials: usize, seed: u64) -> CheckReport {
    run_trials("random fast = naive", 1, trials, seed, |rng| {
        let p = random_pair(rng, ORACLE_RANDOM_MAX_N, 0, 1);
        let naive = dedekind_sum_naive(&p, ORACLE_RANDOM_MAX_N).map_err(|e| e.to_string())?;
        expect_eq(&format!("s{p}"), &dedekind_sum_fast(&p), &naive)
    })
}

fn theorem2_random(trials: usize, seed: u64) -> CheckReport {
    run_trials("closed form S(mt+1, nt)", 2, trials, seed, |rng| {
        let p = random_pair(rng, IDENTITY_MAX_N, -1, 2);
        let (m, n) = (p.m(), p.n());
        let l: u32 = rng.gen_range(1..=20);
        let inverse = mod_inverse(m, n).map_err(|e| e.to_string())?;
        let mut m_star = inverse - n * l;
        while m <= &m_star {
            m_star -= n;
        }
        let th =
            theorem2_value(m, n, &m_star).map_err(|e| format!("m={m} n={n} m*={m_star}: {e}"))?;
        if !gcd(th.pair.m(), th.pair.n()).is_one() {
            return Err(format!("gcd{} != 1", th.pair));
        }
        if th.pair.n() <= &BigInt::from(200_000) {
            let naive = big_s_naive(&th.pair, 200_000).map_err(|e| e.to_string())?;
            expect_eq(&format!("naive S{}", th.pair), &naive, &th.value)?;
        }
        Ok(())
    })
}

/// `(m, n, c, d)` with both pairs coprime and `q = md - nc > 0`.
fn random_three_term_args<R: Rng>(rng: &mut R) -> (CoprimePair, CoprimePair) {
    loop {
        let src = random_pair(rng, IDENTITY_MAX_N, -2, 2);
        let other = random_pair(rng, IDENTITY_MAX_N, -2, 2);
        let q = src.m() * other.n() - src.n() * other.m();
        if q.is_positive() {
            return (src, other);
        }
    }
}

fn three_term_random(trials: usize, seed: u64) -> CheckReport {
    run_trials("three-term relation", 3, trials, seed, |rng| {
        let (src, other) = random_three_term_args(rng);
        let check = three_term_check(src.m(), src.n(), other.m(), other.n())
            .map_err(|e| format!("{src} {other}: {e}"))?;
        if check.holds {
            Ok(())
        } else {
            Err(format!(
                "{src} {other}: lhs {} != rhs {}",
                check.lhs, check.rhs
            ))
        }
    })
}

fn bezout_shift_random(trials: usize, seed: u64) -> CheckReport {
    run_trials("Bézout-choice independence", 4, trials, seed, |rng| {
        let (src, other) = random_three_term_args(rng);
        let base = three_term_check(src.m(), src.n(), other.m(), other.n())
            .map_err(|e| format!("{src} {other}: {e}"))?;
        let s = BigInt::from(rng.gen_range(-3i64..=3));
        let shifted = base.bezout.shifted(&s);
        let q = &base.bezout.q;
        let s_r =
            big_s(&CoprimePair::new(base.bezout.r.clone(), q.clone()).map_err(|e| e.to_string())?);
        let s_r_shifted =
            big_s(&CoprimePair::new(shifted.r.clone(), q.clone()).map_err(|e| e.to_string())?);
        expect_eq(&format!("S(r + {s}q, q)"), &s_r_shifted, &s_r)?;
        let check = three_term_check_with(src.m(), src.n(), shifted).map_err(|e| e.to_string())?;
        if !check.holds || check.rhs != base.rhs {
            return Err(format!("{src} {other} shift {s}: verdict changed"));
        }
        Ok(())
    })
}

fn periodicity(trials: usize, seed: u64) -> CheckReport {
    run_trials("periodicity S(m+n, n) = S(m, n)", 5, trials, seed, |rng| {
        let p = random_pair(rng, PROPERTY_MAX_N, -3, 3);
        let shifted = CoprimePair::new(p.m() + p.n(), p.n().clone()).map_err(|e| e.to_string())?;
        expect_eq(&format!("S{shifted} vs S{p}"), &big_s(&shifted), &big_s(&p))
    })
}

fn negation(trials: usize, seed: u64) -> CheckReport {
    run_trials("negation S(-m, n) = -S(m, n)", 6, trials, seed, |rng| {
        let p = random_pair(rng, PROPERTY_MAX_N, -3, 3);
        expect_eq(
            &format!("S{} vs -S{p}", p.negated()),
            &big_s(&p.negated()),
            &-big_s(&p),
        )
    })
}

fn inverse_invariance(trials: usize, seed: u64) -> CheckReport {
    run_trials(
        "inverse invariance S(m*, n) = S(m, n)",
        7,
        trials,
        seed,
        |rng| {
            let p = random_pair(rng, PROPERTY_MAX_N, -3, 3);
            let inv = mod_inverse(p.m(), p.n()).map_err(|e| e.to_string())?;
            // any representative of the inverse class will do
            let shift: i64 = rng.gen_range(-2..=2);
            let inv = inv + p.n() * shift;
            let q = CoprimePair::new(inv, p.n().clone()).map_err(|e| e.to_string())?;
            expect_eq(&format!("S{q} vs S{p}"), &big_s(&q), &big_s(&p))
        },
    )
}

fn sawtooth_oddness(trials: usize, seed: u64) -> CheckReport {
    let half = Rational::frac(1, 2);
    run_trials("sawtooth odd and bounded", 8, trials, seed, |rng| {
        let den: i64 = rng.gen_range(1..=10_000);
        let num: i64 = rng.gen_range(-1_000_000..=1_000_000);
        let t = Rational::frac(num, den);
        let s = sawtooth(&t);
        expect_eq(&format!("(({})) oddness", -&t), &sawtooth(&-&t), &-&s)?;
        if s.abs() >= half {
            return Err(format!("(({t})) = {s} outside (-1/2, 1/2)"));
        }
        Ok(())
    })
}

/// A random target `x = p/q` in `[-50, 50]` with `q <= 1000`, and
/// `ε = 10^-e` for `e` in `1..=8`.
pub fn random_target<R: Rng>(rng: &mut R) -> (Rational, Rational) {
    let q: i64 = rng.gen_range(1..=1000);
    let p: i64 = rng.gen_range(-50 * q..=50 * q);
    let e: u32 = rng.gen_range(1..=8);
    (Rational::frac(p, q), Rational::frac(1, 10i64.pow(e)))
}

fn approximation_sweep(trials: usize, seed: u64) -> CheckReport {
    run_trials("approximation |S - x| < ε", 9, trials, seed, |rng| {
        let (x, eps) = random_target(rng);
        let plan = build_plan(&x, &eps).map_err(|e| format!("x={x} ε={eps}: {e}"))?;
        let ev = plan.evaluate().map_err(|e| format!("x={x} ε={eps}: {e}"))?;
        let base = plan.decomposition.value();
        let surplus = if plan.negated {
            -(&ev.value) - &base
        } else {
            &ev.value - &base
        };
        expect_eq(
            &format!("x={x} ε={eps} surplus"),
            &surplus,
            &plan.predicted_error(),
        )?;
        if ev.error.abs() >= eps || !surplus.is_positive() {
            return Err(format!("x={x} ε={eps}: error {} out of range", ev.error));
        }
        Ok(())
    })
}
