//! Exact integer and rational arithmetic.
//!
//! Integers are [`num_bigint::BigInt`]. [`Rational`] wraps a normalized
//! [`num_rational::BigRational`] and adds the text formats used across the
//! crate: `p/q`, plain integers, and exact decimals such as `0.001`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Non-negative greatest common divisor. `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Bézout data for a pair of integers: `u * a + v * b = g` with `g = gcd(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bezout {
    pub g: BigInt,
    pub u: BigInt,
    pub v: BigInt,
}

pub fn extended_gcd(a: &BigInt, b: &BigInt) -> Bezout {
    let e = a.extended_gcd(b);
    Bezout {
        g: e.gcd,
        u: e.x,
        v: e.y,
    }
}

/// The inverse of `a` modulo `modulus`, as the representative in `[0, modulus)`.
///
/// For `modulus = 1` every integer is its own inverse class and `0` is returned.
pub fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Result<BigInt> {
    if modulus < &BigInt::one() {
        return Err(Error::InvalidModulus(modulus.clone()));
    }
    if modulus.is_one() {
        return Ok(BigInt::zero());
    }
    let e = extended_gcd(&a.mod_floor(modulus), modulus);
    if !e.g.is_one() {
        return Err(Error::NotCoprime {
            a: a.clone(),
            b: modulus.clone(),
        });
    }
    Ok(e.u.mod_floor(modulus))
}

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Panicking constructor for literals in code and tests.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Greatest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// Least integer `>= self`.
    pub fn ceil(&self) -> BigInt {
        self.numer().div_ceil(self.denom())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Decimal expansion truncated toward zero after `digits` fractional
    /// digits. A trailing `…` marks an expansion that continues.
    pub fn render_decimal(&self, digits: usize) -> String {
        let den = self.denom();
        let (int_part, mut rem) = self.numer().abs().div_rem(den);
        let mut out = String::new();
        if self.is_negative() {
            out.push('-');
        }
        out.push_str(&int_part.to_string());
        if digits > 0 {
            out.push('.');
            let ten = BigInt::from(10u8);
            for _ in 0..digits {
                rem *= &ten;
                let (d, r) = rem.div_rem(den);
                out.push_str(&d.to_string());
                rem = r;
            }
        }
        if !rem.is_zero() {
            out.push('…');
        }
        out
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

fn parse_int(input: &str, s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            input: input.to_string(),
            reason: "expected an integer",
        });
    }
    Ok(s.parse().expect("validated digits"))
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q`, `p`, or a decimal `d.ddd`; decimals are read exactly.
    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p = parse_int(input, p)?;
            let q = parse_int(input, q)?;
            if q.is_zero() {
                return Err(Error::Parse {
                    input: input.to_string(),
                    reason: "zero denominator",
                });
            }
            return Rational::new(p, q);
        }
        if let Some((int, frac)) = s.split_once('.') {
            let (negative, int) = match int.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, int.strip_prefix('+').unwrap_or(int)),
            };
            let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
            if (int.is_empty() && frac.is_empty()) || !all_digits(int) || !all_digits(frac) {
                return Err(Error::Parse {
                    input: input.to_string(),
                    reason: "malformed decimal",
                });
            }
            let mut numer: BigInt = format!("0{int}{frac}").parse().expect("validated digits");
            if negative {
                numer = -numer;
            }
            let denom = num_traits::pow(BigInt::from(10u8), frac.len());
            return Rational::new(numer, denom);
        }
        Ok(Rational::from_integer(parse_int(input, s)?))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor; use `checked_div` for fallible division.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn gcd_cases() {
        assert_eq!(gcd(&big(4), &big(11)), big(1));
        assert_eq!(gcd(&big(0), &big(7)), big(7));
        assert_eq!(gcd(&big(0), &big(0)), big(0));
        assert_eq!(gcd(&big(-6), &big(9)), big(3));
        assert_eq!(gcd(&big(627251), &big(172769740)), big(1));
    }

    #[test]
    fn extended_gcd_cases() {
        for (a, b, g) in [(4, 11, 1), (1, 1, 1), (6, 9, 3), (0, 0, 0), (-35, 15, 5)] {
            let e = extended_gcd(&big(a), &big(b));
            assert_eq!(e.g, big(g));
            assert_eq!(&e.u * big(a) + &e.v * big(b), e.g);
        }
        // the pair quoted for (4, 11): 3*4 - 1*11 = 1
        assert_eq!(3 * 4 - 11, 1);
    }

    #[test]
    fn mod_inverse_cases() {
        assert_eq!(mod_inverse(&big(4), &big(11)).unwrap(), big(3));
        assert_eq!(mod_inverse(&big(5), &big(1)).unwrap(), big(0));
        assert_eq!(mod_inverse(&big(3), &big(7)).unwrap(), big(5));
        assert_eq!(mod_inverse(&big(-3), &big(7)).unwrap(), big(2));
        assert!(matches!(
            mod_inverse(&big(6), &big(9)),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            mod_inverse(&big(1), &big(0)),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn arithmetic_and_floor() {
        assert_eq!(q("40/11").floor(), big(3));
        assert_eq!(q("-1/4").floor(), big(-1));
        assert_eq!(q("-1/4").ceil(), big(0));
        assert_eq!(q("7/11") + Rational::from(3), q("40/11"));
        assert!(q("2/172769740") < q("1/100"));
        assert_eq!(q("1/2") * q("2/3"), q("1/3"));
        assert_eq!(q("1/2") - q("1/3"), q("1/6"));
        assert_eq!(
            q("1/2").checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!(Rational::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn always_reduced() {
        let r = Rational::new(-6, -4).unwrap();
        assert_eq!(r.numer(), &big(3));
        assert_eq!(r.denom(), &big(2));
        let r = Rational::new(6, -4).unwrap();
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn parsing() {
        assert_eq!(q("7/11"), Rational::frac(7, 11));
        assert_eq!(q("-7/11"), Rational::frac(-7, 11));
        assert_eq!(q("-3"), Rational::from(-3));
        assert_eq!(q("0.01"), Rational::frac(1, 100));
        assert_eq!(q("-1.25"), Rational::frac(-5, 4));
        assert_eq!(q(".5"), Rational::frac(1, 2));
        assert_eq!(q("2."), Rational::from(2));
        assert_eq!(q("0.00000001"), Rational::frac(1, 100_000_000));
        for bad in [
            "", "1/0", "a", "1/2/3", ".", "1.2.3", "--1", "1/-", "1e5", "0x10",
        ] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn display_round_trip() {
        for s in ["55599441/86384870", "-2/3", "0", "17", "-627251/86384870"] {
            assert_eq!(q(s).to_string(), s);
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(q("55599441/86384870").render_decimal(7), "0.6436247…");
        assert_eq!(q("-2/3").render_decimal(4), "-0.6666…");
        assert_eq!(q("1/2").render_decimal(3), "0.500");
        assert_eq!(q("1/2").render_decimal(0), "0…");
        assert_eq!(q("5").render_decimal(2), "5.00");
        assert_eq!(q("-40/11").render_decimal(2), "-3.63…");
        assert_eq!(q("-1/1000").render_decimal(2), "-0.00…");
    }
}
