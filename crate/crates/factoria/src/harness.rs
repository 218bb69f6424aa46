//! Range verification against the oracle and benchmark measurement.
//!
//! `verify_range` compares a test's verdict with the sieve on every n in a
//! range and reports mismatches; a report "conforms" when the mismatch
//! positions are exactly the method's expected exception set restricted to
//! the range. `bench_method` measures median wall time and the
//! deterministic multiplication count per input.

use crate::error::{Error, Result};
use crate::modmath::{mul_count, reset_mul_count};
use crate::oracle::{sieve, trial_division_is_prime, PrimeTable};
use crate::theorems::{
    clement_test, theorem1_raw, theorem1_test, theorem2_raw, theorem2_test, wilson_test, Method,
    THEOREM1_EXCEPTIONS, THEOREM2_EXCEPTION,
};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::hint::black_box;
use std::time::{Duration, Instant};

/// Default ceiling on verification ranges; a full scan costs O(n) modular
/// multiplications per prime, so this keeps a routine run around a minute.
pub const DEFAULT_VERIFY_CAP: u64 = 100_000;

/// One disagreement between a test and the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub theorem_verdict: bool,
    pub oracle_verdict: bool,
}

/// Outcome of an oracle-vs-test scan over [lo, hi].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeReport {
    pub method: Method,
    pub lo: u64,
    pub hi: u64,
    pub checked: u64,
    /// Sorted by n.
    pub mismatches: Vec<Mismatch>,
    /// The method's full expected exception set, not restricted to the
    /// range; `conforms` applies the restriction.
    pub expected_mismatches: BTreeSet<u64>,
    pub conforms: bool,
}

impl RangeReport {
    pub fn mismatch_positions(&self) -> Vec<u64> {
        self.mismatches.iter().map(|m| m.n).collect()
    }

    /// Combines reports over adjacent ranges into the report a single scan
    /// of the union would have produced. Panics if the ranges are not
    /// adjacent or the runs are not comparable.
    pub fn merge(self, other: RangeReport) -> RangeReport {
        assert_eq!(self.method, other.method, "merging different methods");
        assert_eq!(
            self.expected_mismatches, other.expected_mismatches,
            "merging raw with corrected runs"
        );
        assert_eq!(self.hi + 1, other.lo, "ranges not adjacent");
        let mut mismatches = self.mismatches;
        mismatches.extend(other.mismatches);
        mismatches.sort_by_key(|m| m.n);
        let conforms = conforms(self.lo, other.hi, &mismatches, &self.expected_mismatches);
        RangeReport {
            method: self.method,
            lo: self.lo,
            hi: other.hi,
            checked: self.checked + other.checked,
            mismatches,
            expected_mismatches: self.expected_mismatches,
            conforms,
        }
    }
}

/// One timing measurement: median elapsed wall time over the repetitions
/// plus the input's deterministic multiplication count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchRecord {
    pub method: Method,
    pub n: u64,
    pub elapsed_ns: u64,
    pub multiplications: u64,
}

fn conforms(lo: u64, hi: u64, mismatches: &[Mismatch], expected: &BTreeSet<u64>) -> bool {
    let got: BTreeSet<u64> = mismatches.iter().map(|m| m.n).collect();
    let want: BTreeSet<u64> = expected
        .iter()
        .copied()
        .filter(|&n| lo <= n && n <= hi)
        .collect();
    got == want
}

fn expected_mismatches(method: Method, use_raw: bool) -> BTreeSet<u64> {
    match (method, use_raw) {
        (Method::Theorem1, true) => THEOREM1_EXCEPTIONS.into_iter().collect(),
        (Method::Theorem2, true) => BTreeSet::from([THEOREM2_EXCEPTION]),
        _ => BTreeSet::new(),
    }
}

/// Test verdict and oracle verdict for one n. Domain errors cannot occur
/// here: the range floor was checked before the scan started.
fn verdict_pair(method: Method, n: u64, use_raw: bool, table: &PrimeTable) -> (bool, bool) {
    match method {
        Method::Wilson => (
            wilson_test(n).expect("floor checked").is_prime,
            table.is_prime(n),
        ),
        Method::Theorem1 => {
            let v = if use_raw {
                theorem1_raw(n)
            } else {
                theorem1_test(n)
            };
            (v.expect("floor checked").is_prime, table.is_prime(n))
        }
        Method::Clement => (
            clement_test(n).expect("floor checked").is_twin_pair,
            table.is_twin_start(n),
        ),
        Method::Theorem2 => {
            let v = if use_raw {
                theorem2_raw(n)
            } else {
                theorem2_test(n)
            };
            (v.expect("floor checked").is_twin_pair, table.is_twin_start(n))
        }
        Method::Oracle => unreachable!("rejected before the scan"),
    }
}

/// Scans [lo, hi] with the default cap.
pub fn verify_range(method: Method, lo: u64, hi: u64, use_raw: bool) -> Result<RangeReport> {
    verify_range_capped(method, lo, hi, use_raw, DEFAULT_VERIFY_CAP)
}

/// Scans [lo, hi], comparing the chosen test against the oracle on every
/// n. Sub-ranges may run on worker threads; the report is identical to a
/// sequential scan's.
pub fn verify_range_capped(
    method: Method,
    lo: u64,
    hi: u64,
    use_raw: bool,
    cap: u64,
) -> Result<RangeReport> {
    if method == Method::Oracle {
        return Err(Error::OracleNotVerifiable);
    }
    let floor = method.domain_floor();
    if lo < floor {
        return Err(Error::BelowFloor {
            what: method.name(),
            floor,
            n: lo,
        });
    }
    if hi < lo {
        return Err(Error::EmptyRange { lo, hi });
    }
    if hi > cap {
        return Err(Error::CapExceeded {
            what: "verification range end",
            requested: hi,
            cap,
        });
    }
    // Twin methods look two past the end of the range.
    let table = if method.is_twin_method() {
        sieve(hi + 2)?
    } else {
        sieve(hi)?
    };
    let mut mismatches: Vec<Mismatch> = (lo..=hi)
        .into_par_iter()
        .filter_map(|n| {
            let (theorem_verdict, oracle_verdict) = verdict_pair(method, n, use_raw, &table);
            (theorem_verdict != oracle_verdict).then_some(Mismatch {
                n,
                theorem_verdict,
                oracle_verdict,
            })
        })
        .collect();
    mismatches.sort_by_key(|m| m.n);
    let expected = expected_mismatches(method, use_raw);
    let conforms = conforms(lo, hi, &mismatches, &expected);
    Ok(RangeReport {
        method,
        lo,
        hi,
        checked: hi - lo + 1,
        mismatches,
        expected_mismatches: expected,
        conforms,
    })
}

/// Runs the corrected form of the method once, or the trial-division
/// oracle; the value only matters to the optimizer fence.
fn run_once(method: Method, n: u64) -> Result<()> {
    match method {
        Method::Wilson => {
            black_box(wilson_test(black_box(n))?);
        }
        Method::Theorem1 => {
            black_box(theorem1_test(black_box(n))?);
        }
        Method::Clement => {
            black_box(clement_test(black_box(n))?);
        }
        Method::Theorem2 => {
            black_box(theorem2_test(black_box(n))?);
        }
        Method::Oracle => {
            black_box(trial_division_is_prime(black_box(n)));
        }
    }
    Ok(())
}

fn median_ns(sorted: &[Duration]) -> u64 {
    let len = sorted.len();
    if len % 2 == 1 {
        sorted[len / 2].as_nanos() as u64
    } else {
        ((sorted[len / 2 - 1].as_nanos() + sorted[len / 2].as_nanos()) / 2) as u64
    }
}

/// One record per input: median elapsed over `repetitions` timed runs,
/// multiplication count from a separate instrumented run. Single-threaded
/// so the timings mean something.
pub fn bench_method(method: Method, inputs: &[u64], repetitions: u64) -> Result<Vec<BenchRecord>> {
    if repetitions == 0 {
        return Err(Error::NoRepetitions);
    }
    let mut records = Vec::with_capacity(inputs.len());
    for &n in inputs {
        // The counting run also validates the input before anything is timed.
        reset_mul_count();
        run_once(method, n)?;
        let multiplications = mul_count();
        let mut times = Vec::with_capacity(repetitions as usize);
        for _ in 0..repetitions {
            let start = Instant::now();
            run_once(method, n)?;
            times.push(start.elapsed());
        }
        times.sort();
        records.push(BenchRecord {
            method,
            n,
            elapsed_ns: median_ns(&times),
            multiplications,
        });
    }
    Ok(records)
}
