//! Grid sweeps comparing identity evaluators against their oracles, strategy
//! benchmarking, and report rendering.
//!
//! Each verification target pairs one evaluator with one independently
//! implemented oracle, so no single bug can sit on both sides of a
//! comparison:
//!
//! - `theorem1`: fib_multiple vs fast doubling
//! - `theorem2`: lucas_multiple vs the iterative Lucas recurrence
//! - `theorem3`: gen_multiple vs the iterative generalized recurrence
//! - `docagne`: docagne_residual vs zero
//! - `waring`: the sign-folded theorem sums vs the unfolded power-sum
//!   evaluators fed S = L(n), P = (-1)^n
//!
//! Sweeps may fan out across grid points; aggregation is order-independent
//! (the reported counterexample is the lexicographically smallest failing
//! grid point, not the temporally first).

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binomial::{waring_diff_poly, waring_sum_poly, WaringArguments};
use crate::error::{Error, Result};
use crate::identities::{
    docagne_residual, fib_multiple, gen_multiple, lucas_multiple, standard_seeds, DocagnePair,
    MultipleIndexQuery,
};
use crate::sequences::{
    fib, fib_fast_doubling, gen_fib, lucas, GeneralizedSeed, SeqIndex, SeqValue,
};

/// A verifiable identity family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Theorem1,
    Theorem2,
    Theorem3,
    Docagne,
    Waring,
}

impl Target {
    pub const ALL: [Target; 5] = [
        Target::Theorem1,
        Target::Theorem2,
        Target::Theorem3,
        Target::Docagne,
        Target::Waring,
    ];

    /// Targets built on the multiple-index identities need n, m >= 1; the
    /// d'Ocagne residual accepts any integers.
    fn requires_positive_indices(self) -> bool {
        !matches!(self, Target::Docagne)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Target::Theorem1 => "theorem1",
            Target::Theorem2 => "theorem2",
            Target::Theorem3 => "theorem3",
            Target::Docagne => "docagne",
            Target::Waring => "waring",
        };
        f.write_str(name)
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "theorem1" | "t1" => Ok(Target::Theorem1),
            "theorem2" | "t2" => Ok(Target::Theorem2),
            "theorem3" | "t3" => Ok(Target::Theorem3),
            "docagne" => Ok(Target::Docagne),
            "waring" => Ok(Target::Waring),
            other => Err(Error::ConfigError(format!(
                "unknown target `{other}` (expected theorem1/t1, theorem2/t2, theorem3/t3, docagne, or waring)"
            ))),
        }
    }
}

/// What to sweep: index ranges, seeds for theorem3, targets, and whether to
/// stop at the first failure.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n_range: RangeInclusive<SeqIndex>,
    pub m_range: RangeInclusive<SeqIndex>,
    pub seeds: Vec<GeneralizedSeed>,
    pub targets: Vec<Target>,
    pub fail_fast: bool,
}

impl SweepConfig {
    /// Full grids with the built-in seed set; `fail_fast` off, so failure
    /// maps are complete.
    pub fn new(
        targets: impl Into<Vec<Target>>,
        n_range: RangeInclusive<SeqIndex>,
        m_range: RangeInclusive<SeqIndex>,
    ) -> Self {
        Self {
            n_range,
            m_range,
            seeds: standard_seeds(),
            targets: targets.into(),
            fail_fast: false,
        }
    }

    fn validate(&self) -> Result<()> {
        for (name, range) in [("n", &self.n_range), ("m", &self.m_range)] {
            if range.is_empty() {
                return Err(Error::ConfigError(format!(
                    "{name} range {}..={} is empty",
                    range.start(),
                    range.end()
                )));
            }
        }
        if self.targets.is_empty() {
            return Err(Error::ConfigError("no targets selected".into()));
        }
        for target in &self.targets {
            if target.requires_positive_indices()
                && (*self.n_range.start() < 1 || *self.m_range.start() < 1)
            {
                return Err(Error::ConfigError(format!(
                    "target {target} requires n and m lower bounds >= 1, got {}..={} and {}..={}",
                    self.n_range.start(),
                    self.n_range.end(),
                    self.m_range.start(),
                    self.m_range.end()
                )));
            }
        }
        if self.targets.iter().any(|t| t.requires_positive_indices())
            && self
                .n_range
                .end()
                .checked_mul(*self.m_range.end())
                .is_none()
        {
            return Err(Error::ConfigError(
                "grid corner n*m overflows the index type".into(),
            ));
        }
        Ok(())
    }
}

/// Case counts for one target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetSummary {
    pub target: Target,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
}

/// The lexicographically smallest failing grid point of a sweep. Values are
/// decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub target: Target,
    pub inputs: BTreeMap<String, String>,
    pub expected: String,
    pub actual: String,
}

/// Aggregated sweep outcome. `checked = passed + failed` per target and in
/// total; `counterexample` is present exactly when `failed > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub targets: Vec<TargetSummary>,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// Joins two reports (e.g. sweeps over different ranges), keeping the
    /// earlier report's counterexample when both have one.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.targets.extend(other.targets);
        self.checked += other.checked;
        self.passed += other.passed;
        self.failed += other.failed;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self.wall_time_ms += other.wall_time_ms;
        self
    }
}

/// One grid case. Enumeration order is lexicographic in `key`, and the
/// parallel path re-sorts failures by the same key, so reports never depend
/// on scheduling.
enum CaseSpec {
    Theorem1 {
        n: SeqIndex,
        m: SeqIndex,
    },
    Theorem2 {
        n: SeqIndex,
        m: SeqIndex,
    },
    Theorem3 {
        n: SeqIndex,
        m: SeqIndex,
        seed_index: usize,
        seed: GeneralizedSeed,
    },
    Docagne {
        a: SeqIndex,
        b: SeqIndex,
    },
    WaringDiff {
        n: SeqIndex,
        m: SeqIndex,
    },
    WaringSum {
        n: SeqIndex,
        m: SeqIndex,
    },
}

struct CaseFailure {
    inputs: BTreeMap<String, String>,
    expected: SeqValue,
    actual: SeqValue,
}

fn inputs_from(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

impl CaseSpec {
    fn key(&self) -> (SeqIndex, SeqIndex, i64) {
        match self {
            CaseSpec::Theorem1 { n, m } | CaseSpec::Theorem2 { n, m } => (*n, *m, 0),
            CaseSpec::Theorem3 {
                n, m, seed_index, ..
            } => (*n, *m, *seed_index as i64),
            CaseSpec::Docagne { a, b } => (*a, *b, 0),
            CaseSpec::WaringDiff { n, m } => (*n, *m, 0),
            CaseSpec::WaringSum { n, m } => (*n, *m, 1),
        }
    }

    fn run(&self) -> Option<CaseFailure> {
        let fail = |inputs, expected: SeqValue, actual: SeqValue| {
            (actual != expected).then_some(CaseFailure {
                inputs,
                expected,
                actual,
            })
        };
        match self {
            CaseSpec::Theorem1 { n, m } => {
                let actual = fib_multiple(&MultipleIndexQuery::new(*n, *m))
                    .expect("config guarantees n, m >= 1");
                let expected = fib_fast_doubling(n * m);
                fail(
                    inputs_from(&[("n", n.to_string()), ("m", m.to_string())]),
                    expected,
                    actual,
                )
            }
            CaseSpec::Theorem2 { n, m } => {
                let actual = lucas_multiple(&MultipleIndexQuery::new(*n, *m))
                    .expect("config guarantees n, m >= 1");
                let expected = lucas(n * m);
                fail(
                    inputs_from(&[("n", n.to_string()), ("m", m.to_string())]),
                    expected,
                    actual,
                )
            }
            CaseSpec::Theorem3 { n, m, seed, .. } => {
                let actual = gen_multiple(seed, &MultipleIndexQuery::new(*n, *m))
                    .expect("config guarantees n, m >= 1");
                let expected = gen_fib(seed, n * m).expect("n*m >= 1");
                fail(
                    inputs_from(&[
                        ("n", n.to_string()),
                        ("m", m.to_string()),
                        ("g0", seed.g0.to_string()),
                        ("g1", seed.g1.to_string()),
                    ]),
                    expected,
                    actual,
                )
            }
            CaseSpec::Docagne { a, b } => {
                let actual = docagne_residual(&DocagnePair::new(*a, *b));
                fail(
                    inputs_from(&[("a", a.to_string()), ("b", b.to_string())]),
                    SeqValue::from(0),
                    actual,
                )
            }
            CaseSpec::WaringDiff { n, m } => {
                let actual = fib_multiple(&MultipleIndexQuery::new(*n, *m))
                    .expect("config guarantees n, m >= 1");
                let args = WaringArguments::new(lucas(*n), if n % 2 == 0 { 1 } else { -1 }, *m);
                let expected = fib(*n) * waring_diff_poly(&args).expect("m >= 1");
                fail(
                    inputs_from(&[
                        ("n", n.to_string()),
                        ("m", m.to_string()),
                        ("form", "difference".to_string()),
                    ]),
                    expected,
                    actual,
                )
            }
            CaseSpec::WaringSum { n, m } => {
                let actual = lucas_multiple(&MultipleIndexQuery::new(*n, *m))
                    .expect("config guarantees n, m >= 1");
                let args = WaringArguments::new(lucas(*n), if n % 2 == 0 { 1 } else { -1 }, *m);
                let expected = waring_sum_poly(&args).expect("m >= 1");
                fail(
                    inputs_from(&[
                        ("n", n.to_string()),
                        ("m", m.to_string()),
                        ("form", "sum".to_string()),
                    ]),
                    expected,
                    actual,
                )
            }
        }
    }
}

fn enumerate_cases(target: Target, config: &SweepConfig) -> Vec<CaseSpec> {
    let mut cases = Vec::new();
    for n in config.n_range.clone() {
        for m in config.m_range.clone() {
            match target {
                Target::Theorem1 => cases.push(CaseSpec::Theorem1 { n, m }),
                Target::Theorem2 => cases.push(CaseSpec::Theorem2 { n, m }),
                Target::Theorem3 => {
                    for (seed_index, seed) in config.seeds.iter().enumerate() {
                        cases.push(CaseSpec::Theorem3 {
                            n,
                            m,
                            seed_index,
                            seed: seed.clone(),
                        });
                    }
                }
                Target::Docagne => cases.push(CaseSpec::Docagne { a: n, b: m }),
                Target::Waring => {
                    cases.push(CaseSpec::WaringDiff { n, m });
                    cases.push(CaseSpec::WaringSum { n, m });
                }
            }
        }
    }
    cases
}

fn run_cases(
    target: Target,
    cases: Vec<CaseSpec>,
    fail_fast: bool,
) -> (TargetSummary, Option<Counterexample>) {
    let into_counterexample = |failure: CaseFailure| Counterexample {
        target,
        inputs: failure.inputs,
        expected: failure.expected.to_string(),
        actual: failure.actual.to_string(),
    };
    if fail_fast {
        let mut checked = 0;
        for case in &cases {
            checked += 1;
            if let Some(failure) = case.run() {
                let summary = TargetSummary {
                    target,
                    checked,
                    passed: checked - 1,
                    failed: 1,
                };
                return (summary, Some(into_counterexample(failure)));
            }
        }
        let summary = TargetSummary {
            target,
            checked,
            passed: checked,
            failed: 0,
        };
        (summary, None)
    } else {
        let mut failures: Vec<_> = cases
            .par_iter()
            .filter_map(|case| case.run().map(|failure| (case.key(), failure)))
            .collect();
        failures.sort_by_key(|(key, _)| *key);
        let checked = cases.len() as u64;
        let failed = failures.len() as u64;
        let summary = TargetSummary {
            target,
            checked,
            passed: checked - failed,
            failed,
        };
        let first = failures
            .into_iter()
            .next()
            .map(|(_, failure)| into_counterexample(failure));
        (summary, first)
    }
}

/// Runs every selected target over the configured grids and aggregates the
/// outcome. Deterministic given the config (up to wall time), regardless of
/// how the work is scheduled.
pub fn sweep_verify(config: &SweepConfig) -> Result<VerificationReport> {
    config.validate()?;
    let start = Instant::now();
    let mut targets_seen = Vec::new();
    let mut summaries = Vec::new();
    let mut counterexample = None;
    for &target in &config.targets {
        if targets_seen.contains(&target) {
            continue;
        }
        targets_seen.push(target);
        let (summary, first) = run_cases(target, enumerate_cases(target, config), config.fail_fast);
        if counterexample.is_none() {
            counterexample = first;
        }
        let failed = summary.failed;
        summaries.push(summary);
        if config.fail_fast && failed > 0 {
            break;
        }
    }
    Ok(VerificationReport {
        checked: summaries.iter().map(|s| s.checked).sum(),
        passed: summaries.iter().map(|s| s.passed).sum(),
        failed: summaries.iter().map(|s| s.failed).sum(),
        targets: summaries,
        counterexample,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Evaluation strategy for F(n*m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    BinomialSum,
    FastDoubling,
    Iterative,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Strategy::BinomialSum => "binomial_sum",
            Strategy::FastDoubling => "fast_doubling",
            Strategy::Iterative => "iterative",
        };
        f.write_str(name)
    }
}

/// Median wall time of one strategy on one input, reported only after all
/// strategies were shown to agree on the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub strategy: Strategy,
    pub n: SeqIndex,
    pub m: SeqIndex,
    pub result_digits: u64,
    pub wall_time_ns: u64,
}

/// Times the three F(n*m) strategies on identical inputs. Value equality is
/// asserted before any timing; one warm-up run per strategy is excluded from
/// the median.
pub fn bench_compare(n: SeqIndex, m: SeqIndex, repetitions: usize) -> Result<Vec<BenchRecord>> {
    if n < 1 || m < 1 {
        return Err(Error::DomainError(format!(
            "bench indices must be positive, got n = {n}, m = {m}"
        )));
    }
    if repetitions < 1 {
        return Err(Error::DomainError("repetitions must be at least 1".into()));
    }
    let product = n
        .checked_mul(m)
        .ok_or_else(|| Error::DomainError(format!("index product {n}*{m} overflows")))?;
    let query = MultipleIndexQuery::new(n, m);

    let reference = fib_multiple(&query)?;
    assert_eq!(
        reference,
        fib_fast_doubling(product),
        "strategy disagreement"
    );
    assert_eq!(reference, fib(product), "strategy disagreement");
    let result_digits = reference.to_string().trim_start_matches('-').len() as u64;

    let strategies: [(Strategy, Box<dyn Fn() -> SeqValue>); 3] = [
        (
            Strategy::BinomialSum,
            Box::new(move || fib_multiple(&query).expect("validated above")),
        ),
        (
            Strategy::FastDoubling,
            Box::new(move || fib_fast_doubling(product)),
        ),
        (Strategy::Iterative, Box::new(move || fib(product))),
    ];

    let mut records = Vec::with_capacity(strategies.len());
    for (strategy, runner) in strategies {
        std::hint::black_box(runner());
        let mut times = Vec::with_capacity(repetitions);
        for _ in 0..repetitions {
            let begin = Instant::now();
            let value = runner();
            times.push(begin.elapsed().as_nanos() as u64);
            std::hint::black_box(value);
        }
        times.sort_unstable();
        let wall_time_ns = if times.len() % 2 == 1 {
            times[times.len() / 2]
        } else {
            let upper = times.len() / 2;
            (times[upper - 1] + times[upper]) / 2
        };
        records.push(BenchRecord {
            strategy,
            n,
            m,
            result_digits,
            wall_time_ns,
        });
    }
    Ok(records)
}

/// Output encoding for rendered reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

/// Renderable report payload.
pub enum ReportBody<'a> {
    Verification(&'a VerificationReport),
    Bench(&'a [BenchRecord]),
}

/// Serializes a report deterministically. Big integers are already decimal
/// strings by construction, so every format is lossless.
pub fn report_render(body: &ReportBody<'_>, format: OutputFormat) -> String {
    match body {
        ReportBody::Verification(report) => match format {
            OutputFormat::Json => {
                serde_json::to_string_pretty(report).expect("report serialization cannot fail")
            }
            OutputFormat::Csv => {
                let mut out = String::from("target,checked,passed,failed\n");
                for t in &report.targets {
                    let _ = writeln!(out, "{},{},{},{}", t.target, t.checked, t.passed, t.failed);
                }
                let _ = writeln!(
                    out,
                    "total,{},{},{}",
                    report.checked, report.passed, report.failed
                );
                out
            }
            OutputFormat::Text => {
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "{:<10} {:>8} {:>8} {:>8}",
                    "target", "checked", "passed", "failed"
                );
                for t in &report.targets {
                    let _ = writeln!(
                        out,
                        "{:<10} {:>8} {:>8} {:>8}",
                        t.target.to_string(),
                        t.checked,
                        t.passed,
                        t.failed
                    );
                }
                let _ = writeln!(
                    out,
                    "{:<10} {:>8} {:>8} {:>8}",
                    "total", report.checked, report.passed, report.failed
                );
                if let Some(cx) = &report.counterexample {
                    let _ = writeln!(out, "first counterexample in {}:", cx.target);
                    for (name, value) in &cx.inputs {
                        let _ = writeln!(out, "  {name} = {value}");
                    }
                    let _ = writeln!(out, "  expected: {}", cx.expected);
                    let _ = writeln!(out, "  actual:   {}", cx.actual);
                }
                let _ = writeln!(out, "wall time: {} ms", report.wall_time_ms);
                out
            }
        },
        ReportBody::Bench(records) => match format {
            OutputFormat::Json => {
                serde_json::to_string_pretty(records).expect("report serialization cannot fail")
            }
            OutputFormat::Csv => {
                let mut out = String::from("strategy,n,m,result_digits,wall_time_ns\n");
                for r in *records {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{}",
                        r.strategy, r.n, r.m, r.result_digits, r.wall_time_ns
                    );
                }
                out
            }
            OutputFormat::Text => {
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "{:<14} {:>8} {:>8} {:>8} {:>12}",
                    "strategy", "n", "m", "digits", "median_ns"
                );
                for r in *records {
                    let _ = writeln!(
                        out,
                        "{:<14} {:>8} {:>8} {:>8} {:>12}",
                        r.strategy.to_string(),
                        r.n,
                        r.m,
                        r.result_digits,
                        r.wall_time_ns
                    );
                }
                out
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(targets: &[Target], n: RangeInclusive<i64>, m: RangeInclusive<i64>) -> SweepConfig {
        SweepConfig::new(targets.to_vec(), n, m)
    }

    #[test]
    fn theorem1_grid_counts() {
        let report = sweep_verify(&config(&[Target::Theorem1], 1..=10, 1..=10)).unwrap();
        assert_eq!(report.checked, 100);
        assert_eq!(report.passed, 100);
        assert_eq!(report.failed, 0);
        assert!(report.counterexample.is_none());
        assert!(report.all_passed());
    }

    #[test]
    fn single_point_two_targets() {
        let report =
            sweep_verify(&config(&[Target::Theorem1, Target::Theorem2], 1..=1, 1..=1)).unwrap();
        assert_eq!(report.checked, 2);
        assert_eq!(report.failed, 0);
        assert_eq!(report.targets.len(), 2);
    }

    #[test]
    fn docagne_grid_counts() {
        let report = sweep_verify(&config(&[Target::Docagne], -5..=5, -5..=5)).unwrap();
        assert_eq!(report.checked, 121);
        assert_eq!(report.failed, 0);
    }

    #[test]
    fn theorem3_counts_scale_with_seeds() {
        let mut cfg = config(&[Target::Theorem3], 1..=4, 1..=5);
        assert_eq!(cfg.seeds.len(), 6);
        let report = sweep_verify(&cfg).unwrap();
        assert_eq!(report.checked, 4 * 5 * 6);
        assert_eq!(report.failed, 0);

        cfg.seeds.truncate(2);
        let report = sweep_verify(&cfg).unwrap();
        assert_eq!(report.checked, 4 * 5 * 2);
    }

    #[test]
    fn waring_target_checks_both_forms() {
        let report = sweep_verify(&config(&[Target::Waring], 1..=6, 1..=6)).unwrap();
        assert_eq!(report.checked, 2 * 36);
        assert_eq!(report.failed, 0);
    }

    #[test]
    fn duplicate_targets_run_once() {
        let report =
            sweep_verify(&config(&[Target::Theorem1, Target::Theorem1], 1..=3, 1..=3)).unwrap();
        assert_eq!(report.targets.len(), 1);
        assert_eq!(report.checked, 9);
    }

    #[test]
    fn reports_are_reproducible() {
        let cfg = config(&Target::ALL, 1..=6, 1..=6);
        let mut a = sweep_verify(&cfg).unwrap();
        let mut b = sweep_verify(&cfg).unwrap();
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        assert_eq!(a, b);
    }

    #[test]
    fn fail_fast_matches_full_run_on_passing_grids() {
        let mut cfg = config(&[Target::Theorem1, Target::Docagne], 1..=5, 1..=5);
        let full = sweep_verify(&cfg).unwrap();
        cfg.fail_fast = true;
        let mut fast = sweep_verify(&cfg).unwrap();
        fast.wall_time_ms = full.wall_time_ms;
        assert_eq!(full, fast);
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)] // the empty range is the case under test
    fn invalid_configs_are_rejected() {
        let empty_range = config(&[Target::Theorem1], 5..=1, 1..=3);
        assert!(matches!(
            sweep_verify(&empty_range),
            Err(Error::ConfigError(_))
        ));

        let no_targets = config(&[], 1..=3, 1..=3);
        assert!(matches!(
            sweep_verify(&no_targets),
            Err(Error::ConfigError(_))
        ));

        let nonpositive = config(&[Target::Theorem2], 0..=3, 1..=3);
        assert!(matches!(
            sweep_verify(&nonpositive),
            Err(Error::ConfigError(_))
        ));

        // The same range is fine for the residual target.
        let docagne = config(&[Target::Docagne], 0..=3, 1..=3);
        assert!(sweep_verify(&docagne).is_ok());
    }

    #[test]
    fn case_enumeration_is_lexicographic() {
        let cfg = config(&[Target::Theorem3], 1..=3, 1..=3);
        for target in Target::ALL {
            let keys: Vec<_> = enumerate_cases(target, &cfg)
                .iter()
                .map(CaseSpec::key)
                .collect();
            let mut sorted = keys.clone();
            sorted.sort_unstable();
            assert_eq!(keys, sorted, "enumeration out of order for {target}");
        }
    }

    #[test]
    fn target_names_parse_and_print() {
        for target in Target::ALL {
            assert_eq!(target.to_string().parse::<Target>().unwrap(), target);
        }
        assert_eq!("t1".parse::<Target>().unwrap(), Target::Theorem1);
        assert_eq!("T2".parse::<Target>().unwrap(), Target::Theorem2);
        assert_eq!("t3".parse::<Target>().unwrap(), Target::Theorem3);
        assert!(matches!(
            "theorem4".parse::<Target>(),
            Err(Error::ConfigError(_))
        ));
    }

    #[test]
    fn format_names_parse() {
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert_eq!("TEXT".parse::<OutputFormat>().unwrap(), OutputFormat::Text);
        assert_eq!(
            "yaml".parse::<OutputFormat>().unwrap_err(),
            Error::UnknownFormat("yaml".into())
        );
    }

    #[test]
    fn json_report_round_trips() {
        let report = sweep_verify(&config(&Target::ALL, 1..=4, 1..=4)).unwrap();
        let json = report_render(&ReportBody::Verification(&report), OutputFormat::Json);
        let parsed: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
        // Passing reports carry no counterexample field at all.
        assert!(!json.contains("counterexample"));
    }

    #[test]
    fn failing_report_renders_inputs() {
        let report = VerificationReport {
            targets: vec![TargetSummary {
                target: Target::Theorem1,
                checked: 4,
                passed: 3,
                failed: 1,
            }],
            checked: 4,
            passed: 3,
            failed: 1,
            counterexample: Some(Counterexample {
                target: Target::Theorem1,
                inputs: inputs_from(&[("n", "2".to_string()), ("m", "3".to_string())]),
                expected: "8".to_string(),
                actual: "9".to_string(),
            }),
            wall_time_ms: 1,
        };
        let text = report_render(&ReportBody::Verification(&report), OutputFormat::Text);
        assert!(text.contains("first counterexample in theorem1"));
        assert!(text.contains("n = 2"));
        assert!(text.contains("m = 3"));
        assert!(text.contains("expected: 8"));

        let json = report_render(&ReportBody::Verification(&report), OutputFormat::Json);
        let parsed: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);

        let csv = report_render(&ReportBody::Verification(&report), OutputFormat::Csv);
        assert!(csv.starts_with("target,checked,passed,failed\n"));
        assert!(csv.contains("theorem1,4,3,1"));
    }

    #[test]
    fn merged_reports_add_up() {
        let a = sweep_verify(&config(&[Target::Theorem1], 1..=3, 1..=3)).unwrap();
        let b = sweep_verify(&config(&[Target::Docagne], -2..=2, -2..=2)).unwrap();
        let merged = a.clone().merge(b.clone());
        assert_eq!(merged.checked, a.checked + b.checked);
        assert_eq!(merged.targets.len(), 2);
        assert!(merged.all_passed());
    }

    #[test]
    fn bench_gate_and_records() {
        let records = bench_compare(2, 50, 2).unwrap();
        assert_eq!(records.len(), 3);
        // fib(100) has 21 digits; all strategies agreed on the value.
        for r in &records {
            assert_eq!(r.result_digits, 21);
            assert_eq!((r.n, r.m), (2, 50));
        }
        let strategies: Vec<_> = records.iter().map(|r| r.strategy).collect();
        assert_eq!(
            strategies,
            vec![
                Strategy::BinomialSum,
                Strategy::FastDoubling,
                Strategy::Iterative
            ]
        );

        let trivial = bench_compare(1, 1, 1).unwrap();
        for r in &trivial {
            assert_eq!(r.result_digits, 1);
        }
    }

    #[test]
    fn bench_rejects_invalid_inputs() {
        assert!(matches!(bench_compare(0, 3, 1), Err(Error::DomainError(_))));
        assert!(matches!(bench_compare(3, 0, 1), Err(Error::DomainError(_))));
        assert!(matches!(bench_compare(3, 3, 0), Err(Error::DomainError(_))));
    }

    #[test]
    fn bench_csv_header_only_when_empty() {
        let csv = report_render(&ReportBody::Bench(&[]), OutputFormat::Csv);
        assert_eq!(csv, "strategy,n,m,result_digits,wall_time_ns\n");

        let records = bench_compare(3, 4, 1).unwrap();
        let csv = report_render(&ReportBody::Bench(&records), OutputFormat::Csv);
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.lines().nth(1).unwrap().starts_with("binomial_sum,3,4,"));

        let json = report_render(&ReportBody::Bench(&records), OutputFormat::Json);
        let parsed: Vec<BenchRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, records);
    }
}
