use dedekind::{
    big_s, big_s_naive, build_plan, choose_m, decompose, extended_gcd, mod_inverse, sawtooth,
    three_term_check, three_term_check_with, BigInt, CoprimePair, Decomposition, Rational,
    DEFAULT_ORACLE_CAP,
};
use proptest::prelude::*;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// A coprime `(m, n)` with `1 <= n <= max_n` and `m` anywhere in `[-3n, 3n]`.
fn coprime_pair(max_n: i64) -> impl Strategy<Value = (i64, i64)> {
    (1..=max_n)
        .prop_flat_map(|n| (-3 * n..=3 * n, Just(n)))
        .prop_filter("coprime", |&(m, n)| num_integer::gcd(m, n) == 1)
}

fn rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1..=1_000_000_000i64).prop_map(|(p, q)| Rational::frac(p, q))
}

proptest! {
    #[test]
    fn bezout_identity(a in any::<i64>(), b in any::<i64>()) {
        let (a, b) = (big(a), big(b));
        let e = extended_gcd(&a, &b);
        prop_assert_eq!(&e.u * &a + &e.v * &b, e.g.clone());
        prop_assert!(e.g >= big(0));
    }

    #[test]
    fn inverse_is_inverse((a, m) in coprime_pair(1_000_000).prop_filter("m > 1", |&(_, m)| m > 1)) {
        let inv = mod_inverse(&big(a), &big(m)).unwrap();
        prop_assert!(inv >= big(0) && inv < big(m));
        prop_assert_eq!(num_integer::Integer::mod_floor(&(big(a) * inv), &big(m)), big(1));
    }

    #[test]
    fn arithmetic_is_reduced(x in rational(), y in rational()) {
        for r in [&x + &y, &x - &y, &x * &y] {
            prop_assert_eq!(num_integer::Integer::gcd(r.numer(), r.denom()), big(1));
            prop_assert!(r.denom() >= &big(1));
            let again = Rational::new(r.numer().clone(), r.denom().clone()).unwrap();
            prop_assert_eq!(again, r);
        }
    }

    #[test]
    fn fraction_text_round_trips(x in rational()) {
        let text = x.to_string();
        let back: Rational = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, x);
    }

    #[test]
    fn floor_brackets(x in rational()) {
        let f = Rational::from(x.floor());
        prop_assert!(f <= x && x < f + Rational::one());
    }

    #[test]
    fn decimal_truncation_is_prefix_stable(x in rational(), digits in 1usize..30) {
        let long = x.render_decimal(digits);
        let short = x.render_decimal(digits - 1);
        let strip = |s: &str| s.trim_end_matches('…').trim_end_matches('.').to_string();
        let long_digits = strip(&long);
        prop_assert_eq!(strip(&long_digits[..long_digits.len() - 1]), strip(&short));
    }

    #[test]
    fn sawtooth_odd_and_bounded(x in rational()) {
        let s = sawtooth(&x);
        prop_assert_eq!(sawtooth(&-&x), -&s);
        prop_assert!(s.abs() < Rational::frac(1, 2));
        prop_assert_eq!(sawtooth(&(&x + Rational::one())), s);
    }

    #[test]
    fn fast_matches_naive((m, n) in coprime_pair(3000)) {
        let p = CoprimePair::new(m, n).unwrap();
        prop_assert_eq!(big_s(&p), big_s_naive(&p, DEFAULT_ORACLE_CAP).unwrap());
    }

    #[test]
    fn symmetries((m, n) in coprime_pair(1_000_000), shift in -3i64..=3) {
        let p = CoprimePair::new(m, n).unwrap();
        let s = big_s(&p);
        let periodic = CoprimePair::new(m + shift * n, n).unwrap();
        prop_assert_eq!(big_s(&periodic), s.clone());
        prop_assert_eq!(big_s(&p.negated()), -&s);
        let inv = mod_inverse(&big(m), &big(n)).unwrap() + big(shift * n);
        prop_assert_eq!(big_s(&CoprimePair::new(inv, n).unwrap()), s);
    }

    #[test]
    fn three_term_any_bezout_choice(
        (m, n) in coprime_pair(5000),
        (c, d) in coprime_pair(5000),
        s in -3i64..=3,
    ) {
        prop_assume!(m * d - n * c > 0);
        let base = three_term_check(&big(m), &big(n), &big(c), &big(d)).unwrap();
        prop_assert!(base.holds);
        let shifted = three_term_check_with(&big(m), &big(n), base.bezout.shifted(&big(s))).unwrap();
        prop_assert!(shifted.holds);
        prop_assert_eq!(shifted.rhs, base.rhs);
    }

    #[test]
    fn decomposition_round_trip(l in 1i64..100, (j, k) in (1i64..500).prop_flat_map(|k| (1..=k, Just(k)))) {
        prop_assume!(num_integer::gcd(j, k) == 1);
        let dec = Decomposition::new(l, j, k).unwrap();
        prop_assert_eq!(decompose(&dec.value()).unwrap(), dec);
    }

    #[test]
    fn chosen_m_is_minimal(x in rational(), e in 1u32..12) {
        let eps = Rational::new(1, big(10).pow(e)).unwrap();
        prop_assume!(x >= Rational::from(-3));
        let dec = decompose(&x).unwrap();
        let m = choose_m(&dec, &eps).unwrap();
        let bound = Rational::from(2) / (Rational::from(dec.k.clone()) * &eps) + Rational::one();
        prop_assert!(Rational::from(m.clone()) >= bound);
        prop_assert_eq!(num_integer::Integer::mod_floor(&(&m * &dec.j - 1), &dec.k), big(0));
        // the previous value with the right residue is below the bound
        prop_assert!(Rational::from(&m - &dec.k) < bound);
    }

    #[test]
    fn plans_hit_their_targets(p in -50_000i64..=50_000, q in 1i64..=1000, e in 1u32..=12) {
        let x = Rational::frac(p, q);
        let eps = Rational::new(1, big(10).pow(e)).unwrap();
        let plan = build_plan(&x, &eps).unwrap();
        prop_assert!(plan.t > big(0));
        prop_assert_eq!(plan.negated, x < Rational::from(-3));
        let ev = plan.evaluate().unwrap();
        prop_assert!(ev.error.abs() < eps);
        prop_assert!(ev.predicted_error < plan.error_bound());
        prop_assert_eq!(ev.error.is_positive(), !plan.negated);
    }
}
