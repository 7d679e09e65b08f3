//! Cohomology models for line bundles on ruled surfaces.
//!
//! For `g = 0` the normalized bundle splits as `O + O(-e)` and every
//! `h^i(S, O_S(D))` is computed exactly. For `g >= 1` only the generic model
//! `h^0 = max(0, d - g + 1)` for line bundles on the base, and the two bounds
//! for symmetric powers, are available.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::knowledge::Citation;
use crate::surface::{DivisorClass, RuledSurfaceParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CohomologyMode {
    Exact,
    GenericModel,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyVector {
    pub h0: BigInt,
    pub h1: BigInt,
    pub h2: BigInt,
    pub mode: CohomologyMode,
}

impl CohomologyVector {
    pub fn chi(&self) -> BigInt {
        &self.h0 - &self.h1 + &self.h2
    }

    pub fn get(&self, i: usize) -> &BigInt {
        match i {
            0 => &self.h0,
            1 => &self.h1,
            2 => &self.h2,
            _ => panic!("surface cohomology lives in degrees 0..=2, asked for {i}"),
        }
    }

    fn zero(mode: CohomologyMode) -> Self {
        Self {
            h0: BigInt::zero(),
            h1: BigInt::zero(),
            h2: BigInt::zero(),
            mode,
        }
    }
}

/// `lo <= h^0 <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct H0Bounds {
    pub lo: BigInt,
    pub hi: BigInt,
}

impl H0Bounds {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &BigInt) -> bool {
        &self.lo <= v && v <= &self.hi
    }
}

/// How each line-bundle summand is evaluated in [`h0_sym_bounds`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum H0Model {
    /// A general line bundle of the given degree.
    Generic,
    /// Worst case over all line bundles of the given degree.
    Clifford,
}

impl H0Model {
    fn eval(self, g: &BigInt, d: &BigInt) -> BigInt {
        match self {
            H0Model::Generic => h0_line_generic(g, d),
            H0Model::Clifford => clifford_upper(g, d),
        }
    }
}

/// `h^0` of a general line bundle of degree `d` on a genus `g` curve.
pub fn h0_line_generic(g: &BigInt, d: &BigInt) -> BigInt {
    (d - g + 1u32).max(BigInt::zero())
}

/// Largest possible `h^0` of a degree `d` line bundle on a genus `g` curve:
/// zero in negative degree, `d - g + 1` above `2g - 2`, Clifford's
/// `floor(d/2) + 1` in between.
pub fn clifford_upper(g: &BigInt, d: &BigInt) -> BigInt {
    if d.is_negative() {
        BigInt::zero()
    } else if d > &(BigInt::from(2) * g - 2) {
        d - g + 1
    } else {
        d.div_floor(&BigInt::from(2)) + 1
    }
}

/// Bounds for `h^0(C, (S^t E)(d))`.
///
/// The lower bound is `max(0, d - g + 1)`, valid for every line bundle of
/// degree `d`; the upper bound sums the model over the graded pieces
/// `O(d + i e_C)`, `deg e_C = -e`. At `g = 0` the bundle splits and both
/// bounds collapse to the exact value.
pub fn h0_sym_bounds(s: &RuledSurfaceParams, t: u64, d: &BigInt, model: H0Model) -> H0Bounds {
    let (g, e) = (s.genus(), s.invariant());
    let hi = (0..=t)
        .map(|i| model.eval(g, &(d - e * BigInt::from(i))))
        .fold(BigInt::zero(), |acc, x| acc + x);
    if g.is_zero() {
        return H0Bounds { lo: hi.clone(), hi };
    }
    H0Bounds {
        lo: h0_line_generic(g, d),
        hi,
    }
}

/// `sum_{i=0}^{n-1} max(0, c - i*step)` for `step >= 0`, in closed form.
fn positive_part_sum(c: &BigInt, step: &BigInt, n: &BigInt) -> BigInt {
    debug_assert!(!step.is_negative());
    if !c.is_positive() || !n.is_positive() {
        return BigInt::zero();
    }
    if step.is_zero() {
        return n * c;
    }
    let positive_terms = (c - 1u32).div_floor(step) + 1u32;
    let m = positive_terms.min(n.clone());
    &m * c - step * &m * (&m - 1) / 2
}

/// Exact `h^i(F_e, O(D))` for a Hirzebruch surface.
///
/// For `D = tC_0 + bf` with `t >= 0`, push forward to `P^1`:
/// `h^0 = sum_{i=0}^t h^0(O(b - ie))`, `h^2 = 0`, and `h^1` follows from
/// Riemann-Roch. `t = -1` has no cohomology at all. For `t <= -2` use
/// Serre duality against `K_S - D`.
pub fn oracle_cohomology_g0(s: &RuledSurfaceParams, d: &DivisorClass) -> Result<CohomologyVector> {
    if !s.genus().is_zero() {
        return Err(Error::OracleGenus(s.genus().clone()));
    }
    let minus_one = -BigInt::one();
    if d.a < minus_one {
        let dual = oracle_cohomology_g0(s, &s.serre_dual_class(d))?;
        return Ok(CohomologyVector {
            h0: dual.h2,
            h1: dual.h1,
            h2: dual.h0,
            mode: CohomologyMode::Exact,
        });
    }
    if d.a == minus_one {
        return Ok(CohomologyVector::zero(CohomologyMode::Exact));
    }
    let h0 = positive_part_sum(&(&d.b + 1), s.invariant(), &(&d.a + 1));
    let h1 = &h0 - s.chi(d);
    if h1.is_negative() {
        return Err(Error::Invariant(format!(
            "negative h^1 = {h1} for D = {d} on F_{}",
            s.invariant()
        )));
    }
    Ok(CohomologyVector {
        h0,
        h1,
        h2: BigInt::zero(),
        mode: CohomologyMode::Exact,
    })
}

/// Generic-model cohomology of `O_S(D)` when `D` is a fibre class `bf`, the
/// class `-C_0 + bf`, or a Serre dual of one of those. The fibre case is
/// `h^i(C, O(b))` for a general degree `b` line bundle.
pub fn generic_cohomology(s: &RuledSurfaceParams, d: &DivisorClass) -> Result<CohomologyVector> {
    let g = s.genus();
    if d.a.is_zero() {
        let h0 = h0_line_generic(g, &d.b);
        let h1 = &h0 - (&d.b - g + 1);
        return Ok(CohomologyVector {
            h0,
            h1,
            h2: BigInt::zero(),
            mode: CohomologyMode::GenericModel,
        });
    }
    if d.a == -BigInt::one() {
        return Ok(CohomologyVector::zero(CohomologyMode::GenericModel));
    }
    if d.a == BigInt::from(-2) {
        let dual = generic_cohomology(s, &s.serre_dual_class(d))?;
        return Ok(CohomologyVector {
            h0: dual.h2,
            h1: dual.h1,
            h2: dual.h0,
            mode: CohomologyMode::GenericModel,
        });
    }
    Err(Error::Hypothesis(format!(
        "generic model only covers C_0-coefficients -2, -1, 0; got D = {d}"
    )))
}

/// Knowledge state for Raynaud's condition on `(S^(a-1)E)(u)`, `deg u = d(a,g,e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RaynaudStatus {
    Holds,
    /// Holds when the base curve is general in moduli.
    HoldsGeneric,
    /// Fails for every `u`: there are no Ulrich line bundles.
    Fails,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RaynaudAssessment {
    pub status: RaynaudStatus,
    pub citation: Citation,
}

pub fn raynaud_star_status(s: &RuledSurfaceParams, a: &BigInt) -> Result<RaynaudAssessment> {
    if *a < BigInt::one() {
        return Err(Error::Hypothesis(format!("a must be at least 1, got {a}")));
    }
    let (g, e) = (s.genus(), s.invariant());
    let twist = (a - 1u32) * e;
    if twist.is_odd() {
        return Err(Error::Parity(twist));
    }
    let verdict = |status, citation| Ok(RaynaudAssessment { status, citation });
    if twist.is_zero() {
        return verdict(RaynaudStatus::Holds, Citation::UntwistedFamilies);
    }
    if e.is_positive() {
        return verdict(RaynaudStatus::Fails, Citation::PositiveInvariant);
    }
    // e < 0 from here on: E and all twists of its symmetric powers are semistable
    if g.is_one() {
        verdict(RaynaudStatus::Holds, Citation::EllipticBase)
    } else if *a == BigInt::from(2) {
        verdict(RaynaudStatus::Holds, Citation::QuadricFibres)
    } else if *a == BigInt::from(3) && *g == BigInt::from(2) {
        verdict(RaynaudStatus::Holds, Citation::CubicGenusTwo)
    } else if *a == BigInt::from(3) {
        verdict(RaynaudStatus::HoldsGeneric, Citation::CubicGeneralCurve)
    } else {
        verdict(RaynaudStatus::Unknown, Citation::Open)
    }
}
