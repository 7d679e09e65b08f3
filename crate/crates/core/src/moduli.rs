//! Theta divisors and Segre strata on moduli of bundles over the base curve.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::knowledge::{Citation, Genericity};
use crate::surface::RuledSurfaceParams;
use crate::ulrich::{d_invariant, DInvariant};

/// Space on which `Theta_F` lives for `F` of rank `r` and degree `d`:
/// `U(r1, r1(g-1) - d1)` with `j = gcd(r, d)`, `r = j r1`, `d = j d1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaTarget {
    pub j: BigInt,
    pub r1: BigInt,
    pub d1: BigInt,
    pub degree: BigInt,
}

impl ThetaTarget {
    /// The target is a Picard variety `Pic^degree(C)`.
    pub fn is_picard(&self) -> bool {
        self.r1.is_one()
    }
}

impl fmt::Display for ThetaTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_picard() {
            write!(f, "Pic^{}", self.degree)
        } else {
            write!(f, "U({}, {})", self.r1, self.degree)
        }
    }
}

pub fn theta_target(g: &BigInt, r: &BigInt, d: &BigInt) -> Result<ThetaTarget> {
    if *r < BigInt::one() {
        return Err(Error::Hypothesis(format!("rank must be positive, got {r}")));
    }
    let j = r.gcd(d);
    let (r1, d1) = (r / &j, d / &j);
    let degree = &r1 * (g - 1) - &d1;
    Ok(ThetaTarget { j, r1, d1, degree })
}

/// Theta target of `S^beta E` for a rank-2 bundle `E` of degree `d`.
///
/// `S^beta E` has rank `beta + 1` and degree `beta(beta+1)d/2`.
pub fn sym_power_theta_target(g: &BigInt, beta: &BigInt, d: &BigInt) -> Result<ThetaTarget> {
    if !beta.is_positive() {
        return Err(Error::Hypothesis(format!(
            "beta must be positive, got {beta}"
        )));
    }
    let rank = beta + 1;
    let degree = beta * &rank * d / 2;
    theta_target(g, &rank, &degree)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymPowerInvariants {
    /// Rank of `S^(a-1)E`, equal to `a`.
    pub rank: BigInt,
    /// `deg S^(a-1)E = -a(a-1)e/2`, always an integer.
    pub degree: BigInt,
    /// Degree of the twist `u`; integral iff `(a-1)e` is even.
    pub twist_degree: DInvariant,
    /// Slope of `(S^(a-1)E)(u)`, which is `g - 1`.
    pub twisted_slope: BigRational,
}

pub fn sym_power_invariants(s: &RuledSurfaceParams, a: &BigInt) -> Result<SymPowerInvariants> {
    let twist_degree = d_invariant(s, a)?;
    let rank = a.clone();
    let degree = -(a * (a - 1u32) * s.invariant()) / 2u32;
    let twisted_slope = (BigRational::from_integer(degree.clone())
        + twist_degree.value.clone() * BigRational::from_integer(rank.clone()))
        / BigRational::from_integer(rank.clone());
    if twisted_slope != BigRational::from_integer(s.genus() - 1) {
        return Err(Error::Invariant(format!(
            "twisted slope {twisted_slope} differs from g - 1"
        )));
    }
    Ok(SymPowerInvariants {
        rank,
        degree,
        twist_degree,
        twisted_slope,
    })
}

/// Individual reason a Segre stratum is empty or ill-posed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StratumViolation {
    GenusTooSmall {
        g: BigInt,
    },
    SubbundleRank {
        r: BigInt,
        r_prime: BigInt,
    },
    NonPositive {
        s: BigInt,
    },
    AboveMaximum {
        s: BigInt,
        max: BigInt,
    },
    Congruence {
        s: BigInt,
        residue: BigInt,
        r: BigInt,
    },
}

impl fmt::Display for StratumViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StratumViolation::GenusTooSmall { g } => {
                write!(
                    f,
                    "g = {g} < 2 admits no integers s satisfying the restrictions"
                )
            }
            StratumViolation::SubbundleRank { r, r_prime } => {
                write!(f, "need 0 < r' < r, got r' = {r_prime}, r = {r}")
            }
            StratumViolation::NonPositive { s } => write!(f, "need s > 0, got {s}"),
            StratumViolation::AboveMaximum { s, max } => {
                write!(f, "need s <= r'(r-r')(g-1) = {max}, got {s}")
            }
            StratumViolation::Congruence { s, residue, r } => {
                write!(f, "need s = r'd = {residue} mod {r}, got {s}")
            }
        }
    }
}

/// `U_{r',s}(r,d)`: bundles with Segre invariant `s_{r'} = s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SegreStratum {
    pub g: BigInt,
    pub r: BigInt,
    pub d: BigInt,
    pub r_prime: BigInt,
    pub s: BigInt,
    pub dimension: BigInt,
    /// `s + r` when that stratum exists; this one lies in its closure.
    pub in_closure_of: Option<BigInt>,
}

fn max_segre(g: &BigInt, r: &BigInt, r_prime: &BigInt) -> BigInt {
    r_prime * (r - r_prime) * (g - 1)
}

pub fn stratum(
    g: &BigInt,
    r: &BigInt,
    d: &BigInt,
    r_prime: &BigInt,
    s: &BigInt,
) -> Result<SegreStratum> {
    let mut violations = Vec::new();
    if *g < BigInt::from(2) {
        violations.push(StratumViolation::GenusTooSmall { g: g.clone() });
    }
    let ranks_ok = r_prime.is_positive() && r_prime < r;
    if !ranks_ok {
        violations.push(StratumViolation::SubbundleRank {
            r: r.clone(),
            r_prime: r_prime.clone(),
        });
    }
    let max = max_segre(g, r, r_prime);
    if !s.is_positive() {
        violations.push(StratumViolation::NonPositive { s: s.clone() });
    }
    if ranks_ok && *g >= BigInt::from(2) && s > &max {
        violations.push(StratumViolation::AboveMaximum {
            s: s.clone(),
            max: max.clone(),
        });
    }
    if ranks_ok {
        let residue = (r_prime * d).mod_floor(r);
        if s.mod_floor(r) != residue {
            violations.push(StratumViolation::Congruence {
                s: s.clone(),
                residue,
                r: r.clone(),
            });
        }
    }
    if !violations.is_empty() {
        return Err(Error::Stratum(violations));
    }
    let dimension = r * r * (g - 1) + 1 + s - &max;
    let next = s + r;
    Ok(SegreStratum {
        g: g.clone(),
        r: r.clone(),
        d: d.clone(),
        r_prime: r_prime.clone(),
        s: s.clone(),
        dimension,
        in_closure_of: (next <= max).then_some(next),
    })
}

/// All non-empty strata `U_{r',s}(r,d)` in increasing `s`.
pub fn strata(g: &BigInt, r: &BigInt, d: &BigInt, r_prime: &BigInt) -> Result<Vec<SegreStratum>> {
    if !r.is_positive() {
        return Err(Error::Hypothesis(format!("rank must be positive, got {r}")));
    }
    let first = (r_prime * d - 1u32).mod_floor(r) + 1u32;
    let max = max_segre(g, r, r_prime);
    let mut out = Vec::new();
    let mut s = first;
    // validate at least once so small genus and bad ranks surface as errors
    match stratum(g, r, d, r_prime, &s) {
        Ok(first) => out.push(first),
        Err(Error::Stratum(v))
            if v.iter()
                .all(|x| matches!(x, StratumViolation::AboveMaximum { .. })) =>
        {
            return Ok(out)
        }
        Err(e) => return Err(e),
    }
    s += r;
    while s <= max {
        out.push(stratum(g, r, d, r_prime, &s)?);
        s += r;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalizedDegree {
    /// Degree `(d - s)/2` of the line bundle to untwist by.
    pub twist_degree: BigInt,
    /// Degree of the normalized bundle, equal to `s`.
    pub degree: BigInt,
    /// `0 < s <= g`.
    pub within_bound: bool,
}

/// Normalizing a rank-2 bundle of degree `d` in the stratum `U_{1,s}(2,d)`.
pub fn normalized_degree_bound(g: &BigInt, d: &BigInt, s: &BigInt) -> Result<NormalizedDegree> {
    let diff = d - s;
    if diff.is_odd() {
        return Err(Error::Hypothesis(format!("d - s = {diff} must be even")));
    }
    Ok(NormalizedDegree {
        twist_degree: diff / 2,
        degree: s.clone(),
        within_bound: s.is_positive() && s <= g,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaStatus {
    /// Proper divisor of `Pic^d(C)` for general `E`, on every curve.
    ProperGenericBundle,
    /// Proper divisor for general `E` on a general curve.
    ProperGenericCurveAndBundle,
    Unknown,
}

impl ThetaStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ThetaStatus::ProperGenericBundle => "PROPER_GENERIC_BUNDLE",
            ThetaStatus::ProperGenericCurveAndBundle => "PROPER_GENERIC_CURVE_AND_BUNDLE",
            ThetaStatus::Unknown => "UNKNOWN",
        }
    }

    /// Whether the statement is expected, but not known, for every curve.
    pub fn conjectured_for_every_curve(self) -> bool {
        self == ThetaStatus::ProperGenericCurveAndBundle
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaAssessment {
    pub status: ThetaStatus,
    pub citation: Citation,
}

/// Whether `Theta_{S^(a-1)E}` is known to be a proper divisor of
/// `Pic^{d(a,g,e)}(C)` under the given assumptions.
pub fn theta_proper_status(
    s: &RuledSurfaceParams,
    a: &BigInt,
    flags: Genericity,
) -> Result<ThetaAssessment> {
    if *a < BigInt::from(2) {
        return Err(Error::Hypothesis(format!("a must be at least 2, got {a}")));
    }
    let e = s.invariant();
    let unknown = ThetaAssessment {
        status: ThetaStatus::Unknown,
        citation: Citation::Open,
    };
    if e.is_positive() {
        return Ok(unknown);
    }
    if e.is_even() {
        return Ok(if flags.bundle {
            ThetaAssessment {
                status: ThetaStatus::ProperGenericBundle,
                citation: Citation::ThetaEvenDegree,
            }
        } else {
            unknown
        });
    }
    // odd degree: only odd a gives a Picard target
    Ok(if a.is_odd() && flags.bundle && flags.curve {
        ThetaAssessment {
            status: ThetaStatus::ProperGenericCurveAndBundle,
            citation: Citation::ThetaOddDegree,
        }
    } else {
        unknown
    })
}
