//! Error taxonomy shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong short of a bug: bad moduli, unreduced
/// operands, out-of-domain inputs, and exceeded scan caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} out of range: need 2 <= m < 2^62")]
    BadModulus(u64),
    #[error("operand {operand} is not reduced mod {modulus}")]
    UnreducedOperand { operand: u64, modulus: u64 },
    #[error("{what} requires at least {floor}, got {n}")]
    BelowFloor {
        what: &'static str,
        floor: u64,
        n: u64,
    },
    #[error("{what} accepts at most {max}, got {n}")]
    AboveCeiling {
        what: &'static str,
        max: u64,
        n: u64,
    },
    #[error("empty range: lo {lo} exceeds hi {hi}")]
    EmptyRange { lo: u64, hi: u64 },
    #[error("{what} {requested} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u64,
        cap: u64,
    },
    #[error("bench requires at least one repetition")]
    NoRepetitions,
    #[error("the oracle is the reference; pick a congruence method to verify")]
    OracleNotVerifiable,
    #[error("{0} tests single-number primality; use the check subcommand")]
    NotATwinMethod(&'static str),
    #[error("{0} tests twin pairs; use the twins subcommand")]
    NotAPrimalityMethod(&'static str),
}
