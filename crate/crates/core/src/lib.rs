//! Exact Dedekind sums and explicit approximation of rationals by them.
//!
//! The crate evaluates `S(m, n) = 12 s(m, n)` exactly (by definition and by
//! reciprocity descent), checks the closed-form and three-term identities
//! between such sums, and constructs for any rational `x` and tolerance `ε`
//! an explicit pair `(M, N)` with `|S(M, N) - x| < ε`.
//!
//! ```
//! use dedekind::{build_plan, Rational};
//!
//! let x: Rational = "7/11".parse().unwrap();
//! let eps: Rational = "1/100".parse().unwrap();
//! let plan = build_plan(&x, &eps).unwrap();
//! assert_eq!(plan.big_m.to_string(), "627251");
//! assert_eq!(plan.big_n.to_string(), "172769740");
//!
//! let ev = plan.evaluate().unwrap();
//! assert_eq!(ev.value.render_decimal(7), "0.6436247…");
//! assert!(ev.error.abs() < eps);
//! ```

pub mod approx;
pub mod arith;
pub mod dedekind;
pub mod error;
pub mod identities;
pub mod verify;

pub use num_bigint::BigInt;

pub use approx::{
    build_plan, build_plan_with_m, choose_m, decompose, validate_m, ApproximationPlan,
    Decomposition, Evaluation,
};
pub use arith::{extended_gcd, gcd, mod_inverse, Bezout, Rational};
pub use dedekind::{
    big_s, big_s_naive, dedekind_sum_fast, dedekind_sum_naive, normalize_arg, sawtooth,
    CoprimePair, DEFAULT_ORACLE_CAP,
};
pub use error::{Error, Result};
pub use identities::{
    bezout_for_three_term, theorem2_closed_form, theorem2_value, three_term_check,
    three_term_check_with, BezoutData, Theorem2, ThreeTermCheck,
};
pub use verify::{CheckReport, Suite, SuiteConfig, SuiteReport};
