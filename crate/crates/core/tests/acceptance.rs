//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria 6 and 11 contain statements that are false as written; they are
//! expected to print FAIL. The test itself fails only when a criterion's
//! outcome differs from the recorded expectation.

mod common;

use std::time::{Duration, Instant};

use gainv::casebook;
use gainv::report::VerificationReport;
use gainv::roberts::{self, roberts};
use gainv::separating;
use gainv::sl2::{self, RepSum};

/// Wall-time limits per criterion.
const LIMIT_INVARIANTS: Duration = Duration::from_secs(1);
const LIMIT_Y1: Duration = Duration::from_secs(5);
const LIMIT_BETA: Duration = Duration::from_secs(60);
const LIMIT_KERNELS: Duration = Duration::from_secs(30);
const LIMIT_SAGBI: Duration = Duration::from_secs(300);
const LIMIT_AN: Duration = Duration::from_secs(300);
const LIMIT_RADICAL: Duration = Duration::from_secs(120);
const LIMIT_FIXED: Duration = Duration::from_secs(60);
const LIMIT_SL2: Duration = Duration::from_secs(180);
const LIMIT_SEPARATING: Duration = Duration::from_secs(120);
const LIMIT_CASEBOOK: Duration = Duration::from_secs(60);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(180);

/// Bounds and sample sizes.
const BETA_MAX_N: u32 = 5;
const SAGBI_MAX_N: u32 = 3;
const SAGBI_DEGREE_BOUND: u64 = 10;
const AN_MAX_N: u32 = 3;
const AN_COMPONENT_BOUND: i64 = 6;
const AN_A0_DEGREE_BOUND: u64 = 8;
const RADICAL_N: u32 = 3;
const RADICAL_POWER_BOUND: u32 = 6;
const FIXED_N: u32 = 4;
const SL2_MAX_N: u32 = 8;
const SL2_DEGREE_BOUND: u32 = 3;
const SL2_SAMPLES: usize = 200;
const SEPARATING_TRIALS: usize = 1000;
const CASEBOOK_DEGREE_BOUND: u32 = 6;
const CASEBOOK_TRIALS: usize = 500;
const PROPERTY_SEED: u64 = 0x5eed_0012;

const BETA_1_2: &str =
    "x1*z^2 - 2*x2^2*x3^2*y1*z - x1^5*x2*x3*y2*y3 + x1^2*x2^4*x3*y1*y3 + x1^2*x2*x3^4*y1*y2";

/// Criteria whose statements fail as written.
const EXPECTED_FAIL: [usize; 2] = [6, 11];

struct Outcome {
    id: usize,
    title: &'static str,
    passed: bool,
    elapsed: Duration,
    details: Vec<String>,
}

fn criterion(
    id: usize,
    title: &'static str,
    limit: Duration,
    body: impl FnOnce() -> Vec<VerificationReport>,
) -> Outcome {
    let start = Instant::now();
    let reports = body();
    let elapsed = start.elapsed();
    let mut details = Vec::new();
    let mut passed = elapsed <= limit;
    if !passed {
        details.push(format!("took {elapsed:?}, limit {limit:?}"));
    }
    for r in &reports {
        if !r.passed() {
            passed = false;
            details.push(r.text_line());
            details.extend(r.failures().take(4).map(|d| format!("  {d}")));
        }
    }
    Outcome {
        id,
        title,
        passed,
        elapsed,
        details,
    }
}

fn check(id: &str, ok: bool, line: String) -> VerificationReport {
    let mut r = VerificationReport::new(id, "acceptance side condition");
    r.expect(ok, line);
    r
}

fn property_reports() -> Vec<VerificationReport> {
    let runs = [
        common::leibniz_suite(4000, PROPERTY_SEED),
        common::flow_group_law_suite(3000, PROPERTY_SEED + 1),
        common::certificate_replay_suite(1500, PROPERTY_SEED + 2),
        common::quadric_normal_form_suite(3000, PROPERTY_SEED + 3),
    ];
    let total: usize = runs.iter().map(|r| r.cases).sum();
    let mut out: Vec<VerificationReport> = runs
        .iter()
        .map(|run| {
            let mut r = VerificationReport::new(run.name, "randomized property");
            for f in &run.failures {
                r.fail(f.clone());
            }
            r
        })
        .collect();
    out.push(check("properties-count", total >= 10_000, format!("{total} randomized cases")));
    out
}

#[test]
fn acceptance() {
    let outcomes = vec![
        criterion(1, "invariance identities and the Y0 relation", LIMIT_INVARIANTS, || {
            vec![roberts::invariance_check()]
        }),
        criterion(2, "the five generators of I(Y1)", LIMIT_Y1, || vec![roberts::y1_ideal_check()]),
        criterion(3, "beta construction for n <= 5", LIMIT_BETA, || {
            let b12 = roberts().beta(1, 2).map(|b| b.to_string()).unwrap_or_default();
            vec![
                roberts::beta_checks(BETA_MAX_N),
                check("beta1_2-text", b12 == BETA_1_2, format!("beta1_2 = {b12}")),
            ]
        }),
        criterion(4, "graded kernels (3,2,2) and (5,4,4)", LIMIT_KERNELS, || {
            vec![roberts::graded_kernel_check()]
        }),
        criterion(5, "SAGBI bases S_N for N <= 3", LIMIT_SAGBI, || {
            (0..=SAGBI_MAX_N).map(|n| roberts::sagbi_check(n, SAGBI_DEGREE_BOUND)).collect()
        }),
        criterion(6, "A_N lemma sweep for N <= 3", LIMIT_AN, || {
            (0..=AN_MAX_N)
                .map(|n| roberts::an_lemma_checks(n, AN_COMPONENT_BOUND, AN_A0_DEGREE_BOUND))
                .collect()
        }),
        criterion(7, "radical structure", LIMIT_RADICAL, || {
            vec![roberts::radical_structure_check(RADICAL_N, RADICAL_POWER_BOUND)]
        }),
        criterion(8, "fixed-point collapse", LIMIT_FIXED, || vec![roberts::fixed_point_check(FIXED_N)]),
        criterion(9, "SL2 binary forms", LIMIT_SL2, || {
            let mut out = vec![sl2::quadratic_invariants_check(SL2_MAX_N)];
            for spec in ["V[2]", "V[3]", "V[4]", "V[4]+V[2]"] {
                let rep = RepSum::parse(spec).unwrap();
                out.push(sl2::positive_weight_vanishing_check(&rep, SL2_DEGREE_BOUND, SL2_SAMPLES, sl2::DEFAULT_SEED));
                out.push(sl2::component_containment_check(&rep, SL2_DEGREE_BOUND, SL2_SAMPLES, sl2::DEFAULT_SEED));
            }
            out
        }),
        criterion(10, "separation sampling", LIMIT_SEPARATING, || {
            separating::roberts_separation_checks(SEPARATING_TRIALS, separating::DEFAULT_SEED)
        }),
        criterion(11, "casebook", LIMIT_CASEBOOK, || {
            casebook::casebook_reports(CASEBOOK_DEGREE_BOUND, CASEBOOK_TRIALS, casebook::DEFAULT_SEED)
        }),
        criterion(12, "property suites", LIMIT_PROPERTIES, property_reports),
    ];

    let mut unexpected = Vec::new();
    for o in &outcomes {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {:>2}: {} ({} ms)", o.id, o.title, o.elapsed.as_millis());
        for d in &o.details {
            println!("        {d}");
        }
        if o.passed == EXPECTED_FAIL.contains(&o.id) {
            unexpected.push(o.id);
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}
