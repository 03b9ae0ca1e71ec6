mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use dedekind::{
    big_s, build_plan_with_m, dedekind_sum_fast, dedekind_sum_naive, BigInt, CoprimePair, Error,
    Rational, Suite, SuiteConfig, DEFAULT_ORACLE_CAP,
};
use serde_json::json;

use output::OutputRecord;

/// Exact Dedekind sums S(m, n) = 12 s(m, n) and explicit approximations of
/// rationals by them.
///
/// Decimal renderings are truncated toward zero, never rounded; a trailing
/// "…" marks an expansion that continues.
#[derive(Debug, Parser)]
#[command(name = "dedekind", version)]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate S(M, N) exactly.
    Sum {
        #[arg(allow_hyphen_values = true)]
        m: BigInt,
        n: BigInt,
        /// Also print the unnormalized sum s(M, N) = S(M, N) / 12.
        #[arg(long)]
        raw: bool,
        /// Sum the definition term by term instead of using reciprocity.
        #[arg(long)]
        naive: bool,
        /// Largest N accepted by --naive.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: u64,
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
    /// Build a pair (M, N) with |S(M, N) - x| < eps.
    ///
    /// Rationals may be given as p/q, p, or an exact decimal such as 0.001.
    Approx {
        #[arg(allow_hyphen_values = true)]
        x: Rational,
        #[arg(allow_hyphen_values = true)]
        eps: Rational,
        /// Use this m instead of the smallest admissible one.
        #[arg(long = "m", allow_hyphen_values = true)]
        m: Option<BigInt>,
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
    /// Run an exact-identity verification suite.
    Verify {
        suite: SuiteArg,
        /// Random trials per check (each suite has its own default).
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exhaustive oracle range: every coprime 1 <= m <= n <= max-n.
        #[arg(long, default_value_t = 200)]
        max_n: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracle,
    Theorem2,
    ThreeTerm,
    Properties,
    Sweep,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Oracle => vec![Suite::Oracle],
            SuiteArg::Theorem2 => vec![Suite::Theorem2],
            SuiteArg::ThreeTerm => vec![Suite::ThreeTerm],
            SuiteArg::Properties => vec![Suite::Properties],
            SuiteArg::Sweep => vec![Suite::Sweep],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Errors that reflect bad input rather than a failed check.
fn is_usage_error(e: &Error) -> bool {
    !matches!(e, Error::PlanInconsistent(_))
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if is_usage_error(&e) {
        EXIT_USAGE
    } else {
        EXIT_FAILURE
    })
}

fn emit(record: &OutputRecord, json: bool) {
    if json {
        println!("{}", record.to_json());
    } else {
        print!("{}", record.to_text());
    }
}

fn cmd_sum(
    m: BigInt,
    n: BigInt,
    raw: bool,
    naive: bool,
    oracle_cap: u64,
    digits: usize,
    json: bool,
) -> ExitCode {
    let pair = match CoprimePair::new(m, n) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let start = Instant::now();
    let s = if naive {
        match dedekind_sum_naive(&pair, oracle_cap) {
            Ok(s) => s,
            Err(e) => return fail(e),
        }
    } else {
        dedekind_sum_fast(&pair)
    };
    let elapsed = start.elapsed();
    let big = &s * Rational::from(12);

    let mut record = OutputRecord::new("sum");
    record
        .push("M", pair.m().to_string())
        .push("N", pair.n().to_string())
        .push("method", if naive { "naive" } else { "fast" });
    record.push_exact("S", &big, digits);
    if raw {
        record.push_exact("s", &s, digits);
    }
    record.push("elapsed_us", elapsed.as_micros() as u64);
    emit(&record, json);
    ExitCode::SUCCESS
}

fn cmd_approx(
    x: Rational,
    eps: Rational,
    m: Option<BigInt>,
    digits: usize,
    json: bool,
) -> ExitCode {
    let start = Instant::now();
    let plan = match build_plan_with_m(&x, &eps, m.as_ref()) {
        Ok(plan) => plan,
        Err(e) => return fail(e),
    };
    let pair = plan.pair();
    let value = big_s(&pair);
    let error = &value - &x;
    let verdict = plan.evaluate();
    let elapsed = start.elapsed();

    let dec = &plan.decomposition;
    let mut record = OutputRecord::new("approx");
    record
        .push("x", x.to_string())
        .push("epsilon", eps.to_string());
    record
        .push("l", dec.l.to_string())
        .push("j", dec.j.to_string())
        .push("k", dec.k.to_string())
        .push("m", plan.m.to_string())
        .push("n", plan.n.to_string())
        .push("t", plan.t.to_string())
        .push("M", plan.big_m.to_string())
        .push("N", plan.big_n.to_string())
        .push("N_bits", plan.big_n_bits())
        .push("negated", plan.negated)
        .push("pair", format!("({}, {})", pair.m(), pair.n()));
    let base = if plan.negated {
        -dec.value()
    } else {
        dec.value()
    };
    record.push("base", base.to_string());
    record.push_exact("S", &value, digits);
    record.push_exact("error", &error, digits);
    record.push("predicted_error", plan.predicted_error().to_string());
    if plan.negated {
        record.push("error_side", "below x, in (-epsilon, 0)");
    } else {
        record.push("error_side", "above x, in (0, epsilon)");
    }
    let code = match &verdict {
        Ok(_) => {
            record.push("verdict", "PASS");
            ExitCode::SUCCESS
        }
        Err(e) => {
            record.push("verdict", format!("FAIL: {e}"));
            ExitCode::from(EXIT_FAILURE)
        }
    };
    record.push("elapsed_us", elapsed.as_micros() as u64);
    emit(&record, json);
    code
}

fn cmd_verify(
    suite: SuiteArg,
    trials: Option<usize>,
    seed: u64,
    max_n: u64,
    json: bool,
) -> ExitCode {
    let config = SuiteConfig {
        trials,
        seed,
        max_n,
    };
    let start = Instant::now();
    let reports: Vec<_> = suite.suites().into_iter().map(|s| s.run(&config)).collect();
    let elapsed = start.elapsed();
    let all_passed = reports.iter().all(|r| r.all_passed());
    let verdict = if all_passed { "PASS" } else { "FAIL" };

    if json {
        let suites: Vec<_> = reports
            .iter()
            .map(|r| {
                let checks: Vec<_> = r
                    .checks
                    .iter()
                    .map(|c| {
                        json!({
                            "name": c.name,
                            "trials": c.trials,
                            "passed": c.passed,
                            "failed": c.failed(),
                            "failures": c.failures,
                        })
                    })
                    .collect();
                json!({ "suite": r.suite.name(), "passed": r.all_passed(), "checks": checks })
            })
            .collect();
        let doc = json!({
            "command": "verify",
            "seed": seed,
            "trials": trials,
            "max_n": max_n,
            "suites": suites,
            "verdict": verdict,
            "elapsed_ms": elapsed.as_millis() as u64,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("json values serialize")
        );
    } else {
        println!("seed = {seed}");
        for r in &reports {
            println!("suite {}", r.suite);
            for c in &r.checks {
                println!("  {}: {}/{} passed", c.name, c.passed, c.trials);
                for f in &c.failures {
                    println!("    failure: {f}");
                }
            }
        }
        println!("verdict = {verdict}");
        println!("elapsed_ms = {}", elapsed.as_millis());
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Sum {
            m,
            n,
            raw,
            naive,
            oracle_cap,
            digits,
        } => cmd_sum(m, n, raw, naive, oracle_cap, digits, cli.json),
        Command::Approx { x, eps, m, digits } => cmd_approx(x, eps, m, digits, cli.json),
        Command::Verify {
            suite,
            trials,
            seed,
            max_n,
        } => cmd_verify(suite, trials, seed, max_n, cli.json),
    }
}
