//! Independent ground truth: sieve of Eratosthenes, trial division, and
//! twin-pair enumeration. Shares no code with the congruence tests, so a
//! bug there cannot silently validate itself; the two oracles here also
//! cross-check each other.

use crate::error::{Error, Result};

/// Largest sieve limit accepted by default; beyond it allocation, not
/// correctness, is the concern.
pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

/// Primality flags for every integer up to `limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    flags: Vec<bool>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// flags()[i] is true iff i is prime.
    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    pub fn is_prime(&self, n: u64) -> bool {
        assert!(n <= self.limit, "n = {n} beyond sieve limit {}", self.limit);
        self.flags[n as usize]
    }

    /// Both n and n+2 prime, per the table.
    pub fn is_twin_start(&self, n: u64) -> bool {
        self.is_prime(n) && self.is_prime(n + 2)
    }

    /// Ascending primes up to the limit.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.flags
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(i, _)| i as u64)
    }
}

/// Sieve of Eratosthenes up to `limit` (inclusive), with the default cap.
pub fn sieve(limit: u64) -> Result<PrimeTable> {
    sieve_with_cap(limit, DEFAULT_SIEVE_CAP)
}

/// Sieve with an explicit resource cap.
pub fn sieve_with_cap(limit: u64, cap: u64) -> Result<PrimeTable> {
    if limit < 2 {
        return Err(Error::BelowFloor {
            what: "sieve limit",
            floor: 2,
            n: limit,
        });
    }
    if limit > cap {
        return Err(Error::CapExceeded {
            what: "sieve limit",
            requested: limit,
            cap,
        });
    }
    let n = limit as usize;
    let mut flags = vec![true; n + 1];
    flags[0] = false;
    flags[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if flags[i] {
            let mut j = i * i;
            while j <= n {
                flags[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    Ok(PrimeTable { limit, flags })
}

/// Primality by trial division over the 6k±1 wheel. Independent of the
/// sieve on purpose.
pub fn trial_division_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true; // 2 and 3
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    // d <= n / d instead of d * d <= n so the bound cannot overflow.
    while d <= n / d {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// All twin pairs (p, p+2) with p + 2 <= limit, ascending in p. The
/// smallest pair is (3, 5), hence the floor of 5.
pub fn twin_pairs_upto(limit: u64) -> Result<Vec<(u64, u64)>> {
    if limit < 5 {
        return Err(Error::BelowFloor {
            what: "twin_pairs_upto limit",
            floor: 5,
            n: limit,
        });
    }
    let table = sieve(limit)?;
    let mut pairs = Vec::new();
    for p in 3..=limit - 2 {
        if table.is_prime(p) && table.is_prime(p + 2) {
            pairs.push((p, p + 2));
        }
    }
    Ok(pairs)
}
