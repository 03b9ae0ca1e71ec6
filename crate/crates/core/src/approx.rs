//! Explicit Dedekind-sum approximations of rational numbers.
//!
//! A target `x >= -3` is written as `l - 3 - j/k` with `0 < j <= k`
//! coprime and `l >= 1`. Picking `m >= 2/(kε) + 1` with `mj ≡ 1 (mod k)`,
//! and setting
//!
//! ```text
//! n = k(m² + 1),   t = 2m + ln - j(m² + 1),
//! ```
//!
//! the pair `(mt + 1, nt)` satisfies `S(mt+1, nt) = l - 3 - j/k + E` with
//! `E = 2m/n + 2/(nt)` and `0 < E < ε`. Targets below `-3` are reached
//! through `S(-M, N) = -S(M, N)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{gcd, mod_inverse, Rational};
use crate::dedekind::{big_s, CoprimePair};
use crate::error::{Error, Result};

/// The representation `l - 3 - j/k` of a rational `>= -3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub l: BigInt,
    pub j: BigInt,
    pub k: BigInt,
}

impl Decomposition {
    pub fn new(l: impl Into<BigInt>, j: impl Into<BigInt>, k: impl Into<BigInt>) -> Result<Self> {
        let (l, j, k) = (l.into(), j.into(), k.into());
        if l < BigInt::one() {
            return Err(Error::PlanInconsistent(format!(
                "l = {l} must be at least 1"
            )));
        }
        if !j.is_positive() || j > k {
            return Err(Error::PlanInconsistent(format!(
                "need 0 < j <= k, got j = {j}, k = {k}"
            )));
        }
        if !gcd(&j, &k).is_one() {
            return Err(Error::NotCoprime { a: j, b: k });
        }
        Ok(Decomposition { l, j, k })
    }

    /// `l - 3 - j/k`.
    pub fn value(&self) -> Rational {
        Rational::from(&self.l - 3u8)
            - Rational::new(self.j.clone(), self.k.clone()).expect("k >= 1")
    }
}

/// Writes `x >= -3` as `l - 3 - j/k`: `l = floor(x + 3) + 1` and `j/k` is
/// what remains, in lowest terms.
pub fn decompose(x: &Rational) -> Result<Decomposition> {
    let y = x + Rational::from(3);
    if y.is_negative() {
        return Err(Error::BelowRange(x.clone()));
    }
    let l = y.floor() + 1u8;
    let rest = Rational::from(l.clone()) - y;
    Ok(Decomposition {
        l,
        j: rest.numer().clone(),
        k: rest.denom().clone(),
    })
}

/// `2/(kε) + 1`, the lower bound on `m`.
pub fn m_lower_bound(k: &BigInt, epsilon: &Rational) -> Result<Rational> {
    if !epsilon.is_positive() {
        return Err(Error::InvalidEpsilon(epsilon.clone()));
    }
    let k_eps = Rational::from(k.clone()) * epsilon;
    Ok(Rational::from(2) / k_eps + Rational::one())
}

/// Smallest `m >= 2/(kε) + 1` with `mj ≡ 1 (mod k)`.
pub fn choose_m(dec: &Decomposition, epsilon: &Rational) -> Result<BigInt> {
    let start = m_lower_bound(&dec.k, epsilon)?.ceil();
    let residue = mod_inverse(&dec.j, &dec.k)?;
    Ok(&start + (residue - &start).mod_floor(&dec.k))
}

/// Checks a caller-supplied `m` against both admissibility conditions.
pub fn validate_m(dec: &Decomposition, epsilon: &Rational, m: &BigInt) -> Result<()> {
    let bound = m_lower_bound(&dec.k, epsilon)?;
    if Rational::from(m.clone()) < bound {
        return Err(Error::InvalidM {
            m: m.clone(),
            reason: format!("below the bound 2/(kε) + 1 = {bound}"),
        });
    }
    if !(m * &dec.j - 1u8).is_multiple_of(&dec.k) {
        return Err(Error::InvalidM {
            m: m.clone(),
            reason: format!("m*j = {} is not 1 mod k = {}", m * &dec.j, dec.k),
        });
    }
    Ok(())
}

/// Every parameter of one approximation, from target to the final pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationPlan {
    pub decomposition: Decomposition,
    pub m: BigInt,
    pub n: BigInt,
    pub t: BigInt,
    /// `m t + 1`
    pub big_m: BigInt,
    /// `n t`
    pub big_n: BigInt,
    /// When set, the reported pair is `(-M, N)` and the target is `-(l - 3 - j/k)`.
    pub negated: bool,
    pub target: Rational,
    pub epsilon: Rational,
}

pub fn build_plan(x: &Rational, epsilon: &Rational) -> Result<ApproximationPlan> {
    build_plan_with_m(x, epsilon, None)
}

/// Builds a plan, optionally with a caller-chosen `m` instead of the minimal one.
pub fn build_plan_with_m(
    x: &Rational,
    epsilon: &Rational,
    m: Option<&BigInt>,
) -> Result<ApproximationPlan> {
    if !epsilon.is_positive() {
        return Err(Error::InvalidEpsilon(epsilon.clone()));
    }
    let negated = *x < Rational::from(-3);
    let positive_target = if negated { -x } else { x.clone() };
    let decomposition = decompose(&positive_target)?;
    let m = match m {
        Some(m) => {
            validate_m(&decomposition, epsilon, m)?;
            m.clone()
        }
        None => choose_m(&decomposition, epsilon)?,
    };
    let Decomposition { l, j, k } = &decomposition;
    let m_sq_plus_one = &m * &m + 1u8;
    let n = k * &m_sq_plus_one;
    let t = BigInt::from(2u8) * &m + l * &n - j * &m_sq_plus_one;
    let big_m = &m * &t + 1u8;
    let big_n = &n * &t;
    let plan = ApproximationPlan {
        decomposition,
        m,
        n,
        t,
        big_m,
        big_n,
        negated,
        target: x.clone(),
        epsilon: epsilon.clone(),
    };
    plan.check_invariants()?;
    Ok(plan)
}

impl ApproximationPlan {
    /// The reported Dedekind-sum argument, `(±M, N)`.
    pub fn pair(&self) -> CoprimePair {
        let m = if self.negated {
            -&self.big_m
        } else {
            self.big_m.clone()
        };
        CoprimePair::new(m, self.big_n.clone()).expect("plan invariants guarantee coprimality")
    }

    /// `m* = -m + jn/k - ln`, the inverse of `m` modulo `n` whose gap to `m` is `t`.
    pub fn m_star(&self) -> BigInt {
        let Decomposition { l, j, k } = &self.decomposition;
        -&self.m + (j * &self.n) / k - l * &self.n
    }

    /// `E = 2m/n + 2/(nt)`, the exact surplus over `l - 3 - j/k`.
    pub fn predicted_error(&self) -> Rational {
        Rational::new(BigInt::from(2u8) * &self.m, self.n.clone()).expect("n >= 1")
            + Rational::new(2, self.big_n.clone()).expect("N >= 1")
    }

    /// `(2m² + 1)/(km³)`, which strictly dominates the surplus.
    pub fn error_bound(&self) -> Rational {
        let m = &self.m;
        Rational::new(
            BigInt::from(2u8) * m * m + 1u8,
            &self.decomposition.k * m * m * m,
        )
        .expect("k, m >= 1")
    }

    /// `N` in bits.
    pub fn big_n_bits(&self) -> u64 {
        self.big_n.bits()
    }

    pub fn check_invariants(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::PlanInconsistent(what.to_string()));
        let Decomposition { l, j, k } = &self.decomposition;
        let m = &self.m;
        if !(m * j - 1u8).is_multiple_of(k) {
            return fail("m*j is not 1 mod k");
        }
        if Rational::from(m.clone()) < m_lower_bound(k, &self.epsilon)? {
            return fail("m is below 2/(kε) + 1");
        }
        let m_sq_plus_one = m * m + 1u8;
        if self.n != k * &m_sq_plus_one {
            return fail("n != k(m² + 1)");
        }
        if self.t != BigInt::from(2u8) * m + l * &self.n - j * &m_sq_plus_one {
            return fail("t != 2m + ln - j(m² + 1)");
        }
        if !self.t.is_positive() {
            return fail("t is not positive");
        }
        if self.big_m != m * &self.t + 1u8 || self.big_n != &self.n * &self.t {
            return fail("(M, N) != (mt + 1, nt)");
        }
        if !gcd(&self.big_m, &self.big_n).is_one() {
            return fail("gcd(M, N) != 1");
        }
        // -m + jn/k is an integer inverse of m mod n
        let (jn_over_k, rem) = (j * &self.n).div_rem(k);
        if !rem.is_zero() {
            return fail("jn/k is not an integer");
        }
        if !(m * (jn_over_k - m) - 1u8).is_multiple_of(&self.n) {
            return fail("-m + jn/k is not an inverse of m mod n");
        }
        if m - self.m_star() != self.t {
            return fail("m - m* != t");
        }
        let base = self.decomposition.value();
        let expected_target = if self.negated { -base } else { base };
        if self.target != expected_target {
            return fail("target does not match the decomposition");
        }
        Ok(())
    }

    /// Evaluates `S(±M, N)` and confirms the surplus is exactly the predicted
    /// error, on the expected side of the target, and within `ε`.
    pub fn evaluate(&self) -> Result<Evaluation> {
        let value = big_s(&self.pair());
        let error = &value - &self.target;
        let predicted = self.predicted_error();
        let signed_predicted = if self.negated {
            -predicted.clone()
        } else {
            predicted.clone()
        };
        if error != signed_predicted {
            return Err(Error::PlanInconsistent(format!(
                "S{} - x = {error}, expected {signed_predicted}",
                self.pair()
            )));
        }
        if error.abs() >= self.epsilon {
            return Err(Error::PlanInconsistent(format!(
                "|error| = {} is not below ε = {}",
                error.abs(),
                self.epsilon
            )));
        }
        Ok(Evaluation {
            value,
            error,
            predicted_error: predicted,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    /// `S(±M, N)`
    pub value: Rational,
    /// `value - x`
    pub error: Rational,
    /// `2m/n + 2/(nt)`, always positive
    pub predicted_error: Rational,
}
