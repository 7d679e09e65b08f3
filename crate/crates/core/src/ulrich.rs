//! Ulrich line bundles on ruled surfaces.
//!
//! A line bundle `O_S(D)` is Ulrich for `h = aC_0 + bf` exactly when
//! `d(a,g,e) = g - 1 + (a-1)e/2` is an integer and `D` is one of
//!
//! * `HIGH = (2a-1)C_0 + (b + u)f`,
//! * `LOW  = (a-1)C_0 + (2b + 2g - 2 - e - u)f`,
//!
//! with `deg u = d(a,g,e)` and `h^0((S^(a-1)E)(u)) = 0`. The two classes are
//! Ulrich duals of each other. Whether such a `u` exists is decided by the
//! table in [`existence_verdict`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cohom::{oracle_cohomology_g0, raynaud_star_status, RaynaudStatus};
use crate::error::{Error, Result};
use crate::knowledge::{Citation, Genericity};
use crate::moduli::{theta_proper_status, ThetaStatus};
use crate::surface::{DivisorClass, Polarization, RuledSurfaceParams};

/// `d(a,g,e) = g - 1 + (a-1)e/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DInvariant {
    pub value: BigRational,
}

impl DInvariant {
    pub fn is_integral(&self) -> bool {
        self.value.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integral().then(|| self.value.to_integer())
    }
}

pub fn d_invariant(s: &RuledSurfaceParams, a: &BigInt) -> Result<DInvariant> {
    if *a < BigInt::one() {
        return Err(Error::Hypothesis(format!("a must be at least 1, got {a}")));
    }
    let half_twist = BigRational::new((a - 1) * s.invariant(), BigInt::from(2));
    Ok(DInvariant {
        value: BigRational::from_integer(s.genus() - 1) + half_twist,
    })
}

fn integral_d(s: &RuledSurfaceParams, a: &BigInt) -> Result<BigInt> {
    d_invariant(s, a)?
        .to_integer()
        .ok_or_else(|| Error::Parity((a - 1) * s.invariant()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `C_0`-coefficient `2a - 1`.
    High,
    /// `C_0`-coefficient `a - 1`.
    Low,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::High => "high",
            Family::Low => "low",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UlrichCandidate {
    pub class: DivisorClass,
    pub family: Family,
    /// `deg u = d(a,g,e)`.
    pub u_degree: BigInt,
    /// `u` must be general in `Pic^d(C)`; false only over `P^1`.
    pub genericity_required: bool,
}

/// The HIGH and LOW candidates, in that order.
pub fn candidate_classes(s: &RuledSurfaceParams, h: &Polarization) -> Result<[UlrichCandidate; 2]> {
    let d = integral_d(s, h.a())?;
    let (a, b, g, e) = (h.a(), h.b(), s.genus(), s.invariant());
    let genericity_required = g.is_positive();
    let high = DivisorClass::new(BigInt::from(2) * a - 1, b + &d);
    let low = DivisorClass::new(
        a - 1,
        BigInt::from(2) * b + BigInt::from(2) * g - 2 - e - &d,
    );
    if &high + &low != ulrich_dual(s, h, &DivisorClass::zero()) {
        return Err(Error::Invariant(format!(
            "candidates {high} and {low} do not sum to 3h + K_S"
        )));
    }
    Ok([
        UlrichCandidate {
            class: high,
            family: Family::High,
            u_degree: d.clone(),
            genericity_required,
        },
        UlrichCandidate {
            class: low,
            family: Family::Low,
            u_degree: d,
            genericity_required,
        },
    ])
}

/// `D -> 3h + K_S - D`.
pub fn ulrich_dual(s: &RuledSurfaceParams, h: &Polarization, d: &DivisorClass) -> DivisorClass {
    h.class().scale(&BigInt::from(3)) + s.canonical_class() - d
}

/// `D^2 = 2(h^2 - 1 + g) + DK_S` and `Dh = (3h^2 + hK_S)/2`.
pub fn numerical_ulrich_check(
    s: &RuledSurfaceParams,
    h: &Polarization,
    d: &DivisorClass,
) -> Result<bool> {
    let k = s.canonical_class();
    let hh = s.self_intersection(h.class());
    let (target_dh, rem) =
        (BigInt::from(3) * &hh + s.intersect(h.class(), &k)).div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::Invariant(format!(
            "3h^2 + hK_S is odd for h = {}",
            h.class()
        )));
    }
    let first =
        s.self_intersection(d) == BigInt::from(2) * (hh - 1 + s.genus()) + s.intersect(d, &k);
    Ok(first && s.intersect(d, h.class()) == target_dh)
}

/// The four defining vanishings `h^1(D-h) = h^2(D-2h) = h^0(D-h) = h^1(D-2h) = 0`,
/// evaluated exactly on a Hirzebruch surface.
pub fn definitional_ulrich_check_g0(
    s: &RuledSurfaceParams,
    h: &Polarization,
    d: &DivisorClass,
) -> Result<bool> {
    let once = oracle_cohomology_g0(s, &(d - h.class()))?;
    let twice = oracle_cohomology_g0(s, &(d - &h.class().scale(&BigInt::from(2))))?;
    Ok(once.h0.is_zero() && once.h1.is_zero() && twice.h1.is_zero() && twice.h2.is_zero())
}

/// Every class `tC_0 + b'f` with `|t|, |b'| <= limit` that passes
/// [`definitional_ulrich_check_g0`], sorted.
pub fn brute_force_ulrich_g0(
    s: &RuledSurfaceParams,
    h: &Polarization,
    limit: u32,
) -> Result<Vec<DivisorClass>> {
    let limit = i64::from(limit);
    let mut found = Vec::new();
    for t in -limit..=limit {
        for b in -limit..=limit {
            let d = DivisorClass::new(t, b);
            if definitional_ulrich_check_g0(s, h, &d)? {
                found.push(d);
            }
        }
    }
    found.sort();
    Ok(found)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Exists,
    ExistsGenericBundle,
    ExistsGenericCurveAndBundle,
    NotExists,
    Open,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Exists => "EXISTS",
            Outcome::ExistsGenericBundle => "EXISTS_GENERIC_BUNDLE",
            Outcome::ExistsGenericCurveAndBundle => "EXISTS_GENERIC_CURVE_AND_BUNDLE",
            Outcome::NotExists => "NOT_EXISTS",
            Outcome::Open => "OPEN",
        }
    }

    pub fn from_str_opt(s: &str) -> Option<Self> {
        [
            Outcome::Exists,
            Outcome::ExistsGenericBundle,
            Outcome::ExistsGenericCurveAndBundle,
            Outcome::NotExists,
            Outcome::Open,
        ]
        .into_iter()
        .find(|o| o.as_str() == s)
    }

    pub fn exists(self) -> bool {
        matches!(
            self,
            Outcome::Exists | Outcome::ExistsGenericBundle | Outcome::ExistsGenericCurveAndBundle
        )
    }
}

/// Why a `NotExists` verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Obstruction {
    /// `(a-1)e` is odd.
    Parity,
    /// `e > 0` and `a >= 2`.
    PositiveInvariant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UlrichVerdict {
    pub outcome: Outcome,
    /// Dimension of each of the two families of Ulrich line bundles.
    pub family_dimension: Option<BigInt>,
    pub citation: Citation,
    pub obstruction: Option<Obstruction>,
    /// Echo of the caller's assumptions.
    pub assumptions: Genericity,
    pub notes: Vec<String>,
}

pub const PARITY_SCOPE_NOTE: &str =
    "parity obstruction read as applying to line bundles; rank-2 special Ulrich bundles are not excluded";
pub const ODD_DEGREE_NOTE: &str =
    "proved for a general curve; expected but not known for every curve";

/// First-match decision table for existence of Ulrich line bundles.
///
/// 1. `e > 0, a = 1`: exist.
/// 2. `e > 0, a >= 2`: none.
/// 3. `(a-1)e` odd: none.
/// 4. `(a-1)e = 0`: exist, two `g`-dimensional families.
/// 5. `e < 0`: the cases where Raynaud's condition is known (`g = 1`,
///    `a = 2`, `a = 3` with `g = 2`, `a = 3` on a general curve).
/// 6. Remaining cases via proper theta divisors, under the caller's
///    genericity assumptions; otherwise open.
pub fn existence_verdict(
    s: &RuledSurfaceParams,
    h: &Polarization,
    flags: Genericity,
) -> Result<UlrichVerdict> {
    if let Some(reason) = s.very_ample_obstruction(h.class()) {
        return Err(Error::NotVeryAmple {
            a: h.a().clone(),
            b: h.b().clone(),
            reason,
        });
    }
    let (a, g, e) = (h.a(), s.genus(), s.invariant());
    let exists = |outcome, citation| UlrichVerdict {
        outcome,
        family_dimension: Some(g.clone()),
        citation,
        obstruction: None,
        assumptions: flags,
        notes: Vec::new(),
    };
    let none = |citation, obstruction| UlrichVerdict {
        outcome: Outcome::NotExists,
        family_dimension: None,
        citation,
        obstruction: Some(obstruction),
        assumptions: flags,
        notes: Vec::new(),
    };

    if e.is_positive() {
        return Ok(if a.is_one() {
            exists(Outcome::Exists, Citation::PositiveInvariant)
        } else {
            none(Citation::PositiveInvariant, Obstruction::PositiveInvariant)
        });
    }
    let twist = (a - 1u32) * e;
    if twist.is_odd() {
        let mut v = none(Citation::Parity, Obstruction::Parity);
        v.notes.push(PARITY_SCOPE_NOTE.to_owned());
        return Ok(v);
    }
    if twist.is_zero() {
        return Ok(exists(Outcome::Exists, Citation::UntwistedFamilies));
    }

    let raynaud = raynaud_star_status(s, a)?;
    match raynaud.status {
        RaynaudStatus::Holds => return Ok(exists(Outcome::Exists, raynaud.citation)),
        RaynaudStatus::HoldsGeneric if flags.curve => {
            return Ok(exists(
                Outcome::ExistsGenericCurveAndBundle,
                raynaud.citation,
            ))
        }
        RaynaudStatus::Fails => {
            return Err(Error::Invariant(format!(
                "Raynaud's condition fails for e = {e} < 0"
            )))
        }
        _ => {}
    }

    let theta = theta_proper_status(s, a, flags)?;
    Ok(match theta.status {
        ThetaStatus::ProperGenericBundle => exists(Outcome::ExistsGenericBundle, theta.citation),
        ThetaStatus::ProperGenericCurveAndBundle => {
            let mut v = exists(Outcome::ExistsGenericCurveAndBundle, theta.citation);
            v.notes.push(ODD_DEGREE_NOTE.to_owned());
            v
        }
        ThetaStatus::Unknown => UlrichVerdict {
            outcome: Outcome::Open,
            family_dimension: None,
            citation: Citation::Open,
            obstruction: None,
            assumptions: flags,
            notes: Vec::new(),
        },
    })
}
