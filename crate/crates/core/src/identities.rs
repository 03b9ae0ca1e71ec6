//! Exact identities between Dedekind sums.
//!
//! * The closed form `S(mt+1, nt) = -3 + 2/(nt) + t/n`, where `t = m - m*`
//!   and `m*` is any inverse of `m` modulo `n` below `m`.
//! * The Rademacher–Dieter three-term relation
//!   `S(m, n) = S(c, d) + S(r, q) + (n² + d² + q²)/(ndq) - 3`
//!   with `q = md - nc > 0`, `-cj + dk = 1` and `r = -nk + mj`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{extended_gcd, Rational};
use crate::dedekind::{big_s, CoprimePair};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem2 {
    pub t: BigInt,
    pub pair: CoprimePair,
    pub value: Rational,
}

/// `-3 + 2/(nt) + t/n` and the pair `(mt + 1, nt)`, without evaluating the
/// Dedekind sum itself.
pub fn theorem2_closed_form(m: &BigInt, n: &BigInt, m_star: &BigInt) -> Result<Theorem2> {
    CoprimePair::new(m.clone(), n.clone())?;
    if !(m * m_star - 1u8).is_multiple_of(n) {
        return Err(Error::NotInverse {
            m: m.clone(),
            m_star: m_star.clone(),
            n: n.clone(),
        });
    }
    if m <= m_star {
        return Err(Error::NotLess {
            m: m.clone(),
            m_star: m_star.clone(),
        });
    }
    let t = m - m_star;
    let nt = n * &t;
    let pair = CoprimePair::new(m * &t + 1u8, nt.clone())
        .map_err(|e| Error::PlanInconsistent(format!("(mt+1, nt) not coprime: {e}")))?;
    let value = Rational::from(-3)
        + Rational::new(2, nt).expect("nt >= 1")
        + Rational::new(t.clone(), n.clone()).expect("n >= 1");
    Ok(Theorem2 { t, pair, value })
}

/// Like [`theorem2_closed_form`], and also confirms `S(mt+1, nt)` equals the
/// closed form exactly.
pub fn theorem2_value(m: &BigInt, n: &BigInt, m_star: &BigInt) -> Result<Theorem2> {
    let th = theorem2_closed_form(m, n, m_star)?;
    let s = big_s(&th.pair);
    if s != th.value {
        return Err(Error::PlanInconsistent(format!(
            "S{} = {s} but the closed form gives {}",
            th.pair, th.value
        )));
    }
    Ok(th)
}

/// Bézout data linking the source pair `(m, n)` to `(c, d)` in the
/// three-term relation. `j`, `k` here solve `-cj + dk = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutData {
    pub c: BigInt,
    pub d: BigInt,
    pub j: BigInt,
    pub k: BigInt,
    pub q: BigInt,
    pub r: BigInt,
}

impl BezoutData {
    /// The solution `(j + ds, k + cs)`; `r` moves by `qs`.
    pub fn shifted(&self, s: &BigInt) -> Self {
        BezoutData {
            c: self.c.clone(),
            d: self.d.clone(),
            j: &self.j + &self.d * s,
            k: &self.k + &self.c * s,
            q: self.q.clone(),
            r: &self.r + &self.q * s,
        }
    }

    /// Rebuilds the datum around a caller-chosen `j`, solving for `k`.
    pub fn with_j(m: &BigInt, n: &BigInt, c: &BigInt, d: &BigInt, j: BigInt) -> Result<Self> {
        let q = check_three_term_args(m, n, c, d)?;
        let (k, rem) = (BigInt::one() + c * &j).div_rem(d);
        if !rem.is_zero() {
            return Err(Error::PlanInconsistent(format!(
                "no k with -({c})({j}) + ({d})k = 1"
            )));
        }
        let r = -(n * &k) + m * &j;
        Ok(BezoutData {
            c: c.clone(),
            d: d.clone(),
            j,
            k,
            q,
            r,
        })
    }

    fn satisfies_bezout(&self) -> bool {
        (-(&self.c * &self.j) + &self.d * &self.k).is_one()
    }
}

fn check_three_term_args(m: &BigInt, n: &BigInt, c: &BigInt, d: &BigInt) -> Result<BigInt> {
    CoprimePair::new(m.clone(), n.clone())?;
    CoprimePair::new(c.clone(), d.clone())?;
    let q = m * d - n * c;
    if q <= BigInt::zero() {
        return Err(Error::NotPositiveQ(q));
    }
    Ok(q)
}

/// Canonical Bézout datum: `j` reduced into `[0, d)` (so `j = 0`, `k = 1`
/// when `d = 1`).
pub fn bezout_for_three_term(m: &BigInt, n: &BigInt, c: &BigInt, d: &BigInt) -> Result<BezoutData> {
    check_three_term_args(m, n, c, d)?;
    let e = extended_gcd(&-c, d);
    debug_assert!(e.g.is_one());
    BezoutData::with_j(m, n, c, d, e.u.mod_floor(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTermCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    pub bezout: BezoutData,
}

/// Evaluates both sides of the three-term relation with the canonical
/// Bézout datum.
pub fn three_term_check(m: &BigInt, n: &BigInt, c: &BigInt, d: &BigInt) -> Result<ThreeTermCheck> {
    let bezout = bezout_for_three_term(m, n, c, d)?;
    three_term_check_with(m, n, bezout)
}

/// Evaluates both sides of the three-term relation for a given Bézout datum.
pub fn three_term_check_with(m: &BigInt, n: &BigInt, bezout: BezoutData) -> Result<ThreeTermCheck> {
    let q = check_three_term_args(m, n, &bezout.c, &bezout.d)?;
    if q != bezout.q || !bezout.satisfies_bezout() || bezout.r != -(n * &bezout.k) + m * &bezout.j {
        return Err(Error::PlanInconsistent(format!(
            "Bézout datum {bezout:?} does not match ({m}, {n})"
        )));
    }
    let lhs = big_s(&CoprimePair::new(m.clone(), n.clone())?);
    let d = &bezout.d;
    let correction = Rational::new(n * n + d * d + &q * &q, n * d * &q).expect("ndq > 0");
    let rhs = big_s(&CoprimePair::new(bezout.c.clone(), d.clone())?)
        + big_s(&CoprimePair::new(bezout.r.clone(), q)?)
        + correction
        - Rational::from(3);
    let holds = lhs == rhs;
    Ok(ThreeTermCheck {
        lhs,
        rhs,
        holds,
        bezout,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::mod_inverse;
    use crate::dedekind::{big_s_naive, DEFAULT_ORACLE_CAP};

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn theorem2_small() {
        let th = theorem2_value(&big(2), &big(3), &big(-1)).unwrap();
        assert_eq!(th.t, big(3));
        assert_eq!(th.pair, CoprimePair::new(7, 9).unwrap());
        assert_eq!(th.value, q("-16/9"));
        assert_eq!(
            big_s_naive(&th.pair, DEFAULT_ORACLE_CAP).unwrap(),
            q("-16/9")
        );

        let th = theorem2_value(&big(1), &big(1), &big(0)).unwrap();
        assert_eq!(th.t, big(1));
        assert_eq!(th.pair, CoprimePair::new(2, 1).unwrap());
        assert_eq!(th.value, Rational::zero());
    }

    #[test]
    fn closed_form_worked_example() {
        let th = theorem2_value(&big(25), &big(6886), &big(-25065)).unwrap();
        assert_eq!(th.t, big(25090));
        assert_eq!(th.pair, CoprimePair::new(627251, 172769740).unwrap());
        assert_eq!(th.value, q("55599441/86384870"));
    }

    #[test]
    fn theorem2_errors() {
        assert!(matches!(
            theorem2_value(&big(2), &big(3), &big(1)),
            Err(Error::NotInverse { .. })
        ));
        assert!(matches!(
            theorem2_value(&big(2), &big(3), &big(5)),
            Err(Error::NotLess { .. })
        ));
        assert!(matches!(
            theorem2_value(&big(3), &big(6), &big(1)),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn bezout_examples() {
        let b = bezout_for_three_term(&big(3), &big(5), &big(1), &big(2)).unwrap();
        assert_eq!(
            (b.q.clone(), b.j.clone(), b.k.clone(), b.r.clone()),
            (big(1), big(1), big(1), big(-2))
        );

        let b = bezout_for_three_term(&big(1), &big(1), &big(0), &big(1)).unwrap();
        assert_eq!(
            (b.q.clone(), b.j.clone(), b.k.clone(), b.r.clone()),
            (big(1), big(0), big(1), big(-1))
        );

        assert!(matches!(
            bezout_for_three_term(&big(1), &big(2), &big(1), &big(2)),
            Err(Error::NotPositiveQ(_))
        ));
        assert!(matches!(
            bezout_for_three_term(&big(2), &big(4), &big(1), &big(2)),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn bezout_in_theorem2_setting() {
        // c = m*, d = n: then j = -m solves -cj + dk = 1 and r = -mt - 1.
        let (m, n) = (big(25), big(6886));
        let m_star = big(-25065);
        let t = &m - &m_star;
        let canonical = bezout_for_three_term(&m, &n, &m_star, &n).unwrap();
        assert_eq!(canonical.q, &n * &t);
        let b = BezoutData::with_j(&m, &n, &m_star, &n, -m.clone()).unwrap();
        assert_eq!(b.r, -(&m * &t) - 1u8);
        assert_eq!((&b.j - &canonical.j).mod_floor(&n), BigInt::zero());
        let check = three_term_check_with(&m, &n, b).unwrap();
        assert!(check.holds);
        // S(m*, n) = S(m, n) then turns the relation into the closed form
        assert_eq!(mod_inverse(&m, &n).unwrap(), m_star.mod_floor(&n));
    }

    #[test]
    fn three_term_examples() {
        let c = three_term_check(&big(3), &big(5), &big(1), &big(2)).unwrap();
        assert_eq!(c.lhs, Rational::zero());
        assert_eq!(c.rhs, Rational::zero());
        assert!(c.holds);

        let c = three_term_check(&big(1), &big(1), &big(0), &big(1)).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, Rational::zero());

        let c = three_term_check(&big(2), &big(3), &big(1), &big(2)).unwrap();
        assert_eq!(c.bezout.q, big(1));
        assert!(c.holds);
        assert_eq!(
            c.lhs,
            big_s_naive(&CoprimePair::new(2, 3).unwrap(), 100).unwrap()
        );
    }

    #[test]
    fn three_term_rejects_bad_datum() {
        let mut b = bezout_for_three_term(&big(3), &big(5), &big(1), &big(2)).unwrap();
        b.k += 1;
        assert!(matches!(
            three_term_check_with(&big(3), &big(5), b),
            Err(Error::PlanInconsistent(_))
        ));
    }

    #[test]
    fn shifted_choices_agree() {
        let (m, n, c, d) = (big(7), big(12), big(2), big(5));
        let base = three_term_check(&m, &n, &c, &d).unwrap();
        assert!(base.holds);
        for s in -3..=3 {
            let shifted = base.bezout.shifted(&big(s));
            assert!(shifted.satisfies_bezout());
            let check = three_term_check_with(&m, &n, shifted).unwrap();
            assert!(check.holds);
            assert_eq!(check.rhs, base.rhs);
        }
    }
}
