//! The four congruence tests. Each comes in a raw form — the congruence
//! applied verbatim, wrong exactly on its known exception set — and a
//! corrected form that overrides the raw verdict on those exceptions and
//! says so via `exception_applied`.
//!
//! - wilson:   n >= 2 prime  iff (n-1)! + 1 ≡ 0 (mod n)
//! - theorem1: m >= 5 prime  iff 4*(m-5)! ≢ 0 (mod m), except m = 6, 9
//! - clement:  n, n+2 twin   iff 4*((n-1)!+1) + n ≡ 0 (mod n(n+2))
//! - theorem2: n, n+2 twin   iff n divides 4*(n-3)!+2+n and n+2 does not,
//!   except n = 7

use crate::error::{Error, Result};
use crate::modmath::{
    addmod, factorial_mod, factorial_mod_pair, mul_reduced, scaled_factorial_mod, Modulus, Residue,
};
use std::fmt;

/// The raw indivisibility congruence misclassifies exactly these.
pub const THEOREM1_EXCEPTIONS: [u64; 2] = [6, 9];

/// The raw split twin congruence misclassifies exactly this one.
pub const THEOREM2_EXCEPTION: u64 = 7;

/// Largest n for which the Clement modulus n*(n+2) stays below 2^62.
pub const CLEMENT_MAX_N: u64 = 2_147_483_647;

/// Which test produced a verdict. `Oracle` marks sieve / trial-division
/// ground truth in benchmark output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Wilson,
    Theorem1,
    Clement,
    Theorem2,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Wilson => "wilson",
            Method::Theorem1 => "theorem1",
            Method::Clement => "clement",
            Method::Theorem2 => "theorem2",
            Method::Oracle => "oracle",
        }
    }

    /// Smallest n the method is defined for.
    pub fn domain_floor(self) -> u64 {
        match self {
            Method::Wilson => 2,
            Method::Theorem1 => 5,
            Method::Clement => 2,
            Method::Theorem2 => 3,
            Method::Oracle => 0,
        }
    }

    /// True for the tests that decide twin pairs rather than primality.
    pub fn is_twin_method(self) -> bool {
        matches!(self, Method::Clement | Method::Theorem2)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a single-number primality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimalityVerdict {
    pub n: u64,
    pub is_prime: bool,
    pub method: Method,
    /// The residue whose (non)vanishing decided the verdict, mod n.
    pub witness: Residue,
    pub exception_applied: bool,
}

/// Outcome of a twin-pair test at n, covering the pair (n, n+2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwinVerdict {
    pub n: u64,
    pub residue_mod_n: Residue,
    pub residue_mod_n_plus_2: Residue,
    pub is_twin_pair: bool,
    pub method: Method,
    pub exception_applied: bool,
}

/// Wilson's congruence: n >= 2 is prime iff (n-1)! + 1 ≡ 0 (mod n).
/// Exceptionless, so there is no separate raw form.
pub fn wilson_test(n: u64) -> Result<PrimalityVerdict> {
    if n < 2 {
        return Err(Error::BelowFloor {
            what: "wilson",
            floor: 2,
            n,
        });
    }
    let m = Modulus::new(n)?;
    let f = factorial_mod(n - 1, m);
    let witness = Residue::new(addmod(f.value(), 1, m), m);
    Ok(PrimalityVerdict {
        n,
        is_prime: witness.is_zero(),
        method: Method::Wilson,
        witness,
        exception_applied: false,
    })
}

/// The indivisibility congruence verbatim: m >= 5 prime iff m does not
/// divide 4*(m-5)!. Deliberately wrong at m = 6 and m = 9.
pub fn theorem1_raw(m: u64) -> Result<PrimalityVerdict> {
    if m < 5 {
        return Err(Error::BelowFloor {
            what: "theorem1",
            floor: 5,
            n: m,
        });
    }
    let md = Modulus::new(m)?;
    let witness = scaled_factorial_mod(4, m - 5, md);
    Ok(PrimalityVerdict {
        n: m,
        is_prime: !witness.is_zero(),
        method: Method::Theorem1,
        witness,
        exception_applied: false,
    })
}

/// The indivisibility test with its exception set applied: 6 and 9 are
/// reported composite, witness preserved for auditability.
pub fn theorem1_test(m: u64) -> Result<PrimalityVerdict> {
    let mut verdict = theorem1_raw(m)?;
    if THEOREM1_EXCEPTIONS.contains(&m) {
        verdict.is_prime = false;
        verdict.exception_applied = true;
    }
    Ok(verdict)
}

/// Clement's congruence: n and n+2 are twin primes iff
/// 4*((n-1)! + 1) + n ≡ 0 (mod n(n+2)). Evaluated directly against the
/// pair modulus, then split into the two residues by reduction.
pub fn clement_test(n: u64) -> Result<TwinVerdict> {
    if n < 2 {
        return Err(Error::BelowFloor {
            what: "clement",
            floor: 2,
            n,
        });
    }
    if n > CLEMENT_MAX_N {
        return Err(Error::AboveCeiling {
            what: "clement",
            max: CLEMENT_MAX_N,
            n,
        });
    }
    let pair = Modulus::new(n * (n + 2))?;
    let f = factorial_mod(n - 1, pair);
    let scaled = mul_reduced(4, addmod(f.value(), 1, pair), pair);
    let value = addmod(scaled, n, pair);
    let mod_n = Modulus::new(n)?;
    let mod_n2 = Modulus::new(n + 2)?;
    Ok(TwinVerdict {
        n,
        residue_mod_n: Residue::new(value % n, mod_n),
        residue_mod_n_plus_2: Residue::new(value % (n + 2), mod_n2),
        is_twin_pair: value == 0,
        method: Method::Clement,
        exception_applied: false,
    })
}

/// The split twin congruence verbatim: n and n+2 are twin primes iff
/// n divides 4*(n-3)!+2+n and n+2 does not. Both residues come out of one
/// factorial walk. Deliberately wrong at n = 7.
pub fn theorem2_raw(n: u64) -> Result<TwinVerdict> {
    if n < 3 {
        return Err(Error::BelowFloor {
            what: "theorem2",
            floor: 3,
            n,
        });
    }
    let mod_n = Modulus::new(n)?;
    let mod_n2 = Modulus::new(n + 2)?;
    let (f1, f2) = factorial_mod_pair(n - 3, mod_n, mod_n2);
    let r1 = addmod(mul_reduced(4 % n, f1.value(), mod_n), (2 + n) % n, mod_n);
    let r2 = addmod(
        mul_reduced(4 % (n + 2), f2.value(), mod_n2),
        (2 + n) % (n + 2),
        mod_n2,
    );
    Ok(TwinVerdict {
        n,
        residue_mod_n: Residue::new(r1, mod_n),
        residue_mod_n_plus_2: Residue::new(r2, mod_n2),
        is_twin_pair: r1 == 0 && r2 != 0,
        method: Method::Theorem2,
        exception_applied: false,
    })
}

/// The split twin test with its exception applied: n = 7 is reported
/// not-twin (9 is composite), residues preserved.
pub fn theorem2_test(n: u64) -> Result<TwinVerdict> {
    let mut verdict = theorem2_raw(n)?;
    if n == THEOREM2_EXCEPTION {
        verdict.is_twin_pair = false;
        verdict.exception_applied = true;
    }
    Ok(verdict)
}
