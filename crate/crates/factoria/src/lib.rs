//! Factorial-congruence primality and twin-prime testing.
//!
//! Four classical tests over one modular kernel: Wilson's congruence, an
//! indivisibility test on 4*(m-5)!, Clement's twin-prime congruence, and a
//! split twin test on 4*(n-3)!+2+n — each in raw form (the congruence
//! verbatim) and corrected form (raw plus its known exception set). An
//! independent sieve/trial-division oracle, a range verifier, and a
//! benchmark harness check the tests instead of trusting them.

pub mod cli;
pub mod error;
pub mod harness;
pub mod modmath;
pub mod oracle;
pub mod output;
pub mod theorems;

pub use error::{Error, Result};
pub use harness::{bench_method, verify_range, verify_range_capped, BenchRecord, RangeReport};
pub use modmath::{
    exact_expression_value, factorial_mod, factorial_mod_pair, legendre_valuation, mulmod,
    scaled_factorial_mod, Modulus, Residue,
};
pub use oracle::{sieve, sieve_with_cap, trial_division_is_prime, twin_pairs_upto, PrimeTable};
pub use theorems::{
    clement_test, theorem1_raw, theorem1_test, theorem2_raw, theorem2_test, wilson_test, Method,
    PrimalityVerdict, TwinVerdict,
};
