//! Overflow-safe modular arithmetic kernel: products, factorials, and
//! scaled factorials modulo m, plus the p-adic valuation of factorials.

use crate::error::{Error, Result};
use std::cell::Cell;

/// Exclusive upper bound on moduli. Below it the double-width product of
/// two reduced operands reduces exactly, so no modulus is silently wrong.
pub const MODULUS_LIMIT: u64 = 1 << 62;

/// A modulus m with 2 <= m < 2^62.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(value: u64) -> Result<Modulus> {
        if !(2..MODULUS_LIMIT).contains(&value) {
            return Err(Error::BadModulus(value));
        }
        Ok(Modulus(value))
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

/// A value reduced modulo its attached modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub(crate) fn new(value: u64, modulus: Modulus) -> Residue {
        debug_assert!(value < modulus.value());
        Residue { value, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

thread_local! {
    static MUL_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Zeroes this thread's modular-multiplication counter.
pub fn reset_mul_count() {
    MUL_COUNT.with(|c| c.set(0));
}

/// Modular multiplications performed on this thread since the last reset.
pub fn mul_count() -> u64 {
    MUL_COUNT.with(|c| c.get())
}

fn tally(muls: u64) {
    if muls > 0 {
        MUL_COUNT.with(|c| c.set(c.get().wrapping_add(muls)));
    }
}

/// Uncounted (a * b) mod md for reduced operands. Small moduli keep the
/// product inside u64; larger ones take the double-width path.
#[inline]
fn product_mod(a: u64, b: u64, md: u64) -> u64 {
    if md <= u32::MAX as u64 {
        (a * b) % md
    } else {
        ((a as u128 * b as u128) % md as u128) as u64
    }
}

/// Counted multiply for operands already known to be reduced mod m.
pub(crate) fn mul_reduced(a: u64, b: u64, m: Modulus) -> u64 {
    tally(1);
    product_mod(a, b, m.value())
}

/// (a + b) mod m for reduced operands; the sum stays below 2^63.
pub(crate) fn addmod(a: u64, b: u64, m: Modulus) -> u64 {
    let s = a + b;
    if s >= m.value() {
        s - m.value()
    } else {
        s
    }
}

/// (a * b) mod m, exact for any modulus below 2^62. Unreduced operands are
/// rejected rather than silently folded in.
pub fn mulmod(a: u64, b: u64, m: Modulus) -> Result<Residue> {
    if a >= m.value() {
        return Err(Error::UnreducedOperand {
            operand: a,
            modulus: m.value(),
        });
    }
    if b >= m.value() {
        return Err(Error::UnreducedOperand {
            operand: b,
            modulus: m.value(),
        });
    }
    Ok(Residue::new(mul_reduced(a, b, m), m))
}

/// k! mod m, folding i = 1..=k into the accumulator and stopping at the
/// first zero: once the product is 0 mod m it stays 0, which makes
/// composite moduli cheap long before i reaches k.
pub fn factorial_mod(k: u64, m: Modulus) -> Residue {
    let md = m.value();
    let mut acc = 1u64;
    let mut muls = 0u64;
    for i in 1..=k {
        // i never exceeds md here: the i == md step zeroes the accumulator
        // and exits, so the reduction branch is only taken once.
        let f = if i < md { i } else { i % md };
        acc = product_mod(acc, f, md);
        muls += 1;
        if acc == 0 {
            break;
        }
    }
    tally(muls);
    Residue::new(acc, m)
}

/// k! reduced simultaneously mod m1 and mod m2 in a single walk, for
/// callers that need both residues of the same factorial. Each accumulator
/// early-exits independently; the walk stops when both are zero.
pub fn factorial_mod_pair(k: u64, m1: Modulus, m2: Modulus) -> (Residue, Residue) {
    let (d1, d2) = (m1.value(), m2.value());
    let (mut a1, mut a2) = (1u64, 1u64);
    let mut muls = 0u64;
    let mut i = 1u64;
    while i <= k && (a1 != 0 || a2 != 0) {
        if a1 != 0 {
            let f = if i < d1 { i } else { i % d1 };
            a1 = product_mod(a1, f, d1);
            muls += 1;
        }
        if a2 != 0 {
            let f = if i < d2 { i } else { i % d2 };
            a2 = product_mod(a2, f, d2);
            muls += 1;
        }
        i += 1;
    }
    tally(muls);
    (Residue::new(a1, m1), Residue::new(a2, m2))
}

/// (c * k!) mod m: the factorial walk followed by one scaling multiply of
/// the reduced c.
pub fn scaled_factorial_mod(c: u64, k: u64, m: Modulus) -> Residue {
    let f = factorial_mod(k, m);
    Residue::new(mul_reduced(c % m.value(), f.value(), m), m)
}

/// v_p(n!), the exponent of the prime p in n!, by Legendre's formula
/// sum_{j>=1} floor(n / p^j). Primality of p is the caller's contract.
pub fn legendre_valuation(p: u64, n: u64) -> u64 {
    assert!(p >= 2, "legendre_valuation needs a prime p >= 2");
    let mut rest = n;
    let mut total = 0u64;
    while rest > 0 {
        rest /= p;
        total += rest;
    }
    total
}

/// Exact value of 4*(n-3)! + 2 + n for 3 <= n <= 22; n = 22 is the last
/// value that fits in 63 bits, larger n must go through the residue ops.
pub fn exact_expression_value(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::BelowFloor {
            what: "exact_expression_value",
            floor: 3,
            n,
        });
    }
    if n > 22 {
        return Err(Error::AboveCeiling {
            what: "exact_expression_value",
            max: 22,
            n,
        });
    }
    let mut fact = 1u64;
    for i in 2..=(n - 3) {
        fact *= i;
    }
    Ok(4 * fact + 2 + n)
}
