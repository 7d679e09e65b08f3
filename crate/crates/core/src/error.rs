use num_bigint::BigInt;
use thiserror::Error;

use crate::moduli::StratumViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be non-negative, got {0}")]
    NegativeGenus(BigInt),

    #[error("invariant e = {e} violates Nagata's bound e >= -g for g = {g}")]
    Nagata { g: BigInt, e: BigInt },

    #[error("polarization needs a >= 1, got a = {0}")]
    PolarizationRank(BigInt),

    #[error("h = ({a}, {b}) cannot be very ample: {reason}")]
    NotVeryAmple {
        a: BigInt,
        b: BigInt,
        reason: &'static str,
    },

    #[error("(a-1)e = {0} is odd, so d(a,g,e) is not an integer")]
    Parity(BigInt),

    #[error("the exact oracle only covers genus 0, got g = {0}")]
    OracleGenus(BigInt),

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("stratum constraints violated: {}", join_violations(.0))]
    Stratum(Vec<StratumViolation>),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

fn join_violations(v: &[StratumViolation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
