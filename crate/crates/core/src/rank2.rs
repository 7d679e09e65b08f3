//! Special rank-2 Ulrich bundles: Chern targets and the two extension
//! constructions
//!
//! ```text
//! 0 -> O_S(sub) -> F -> I_Z(quot) -> 0
//! ```
//!
//! with `c1(F) = sub + quot` and `c2(F) = sub.quot + deg Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::surface::{DivisorClass, Polarization, RuledSurfaceParams};

/// `c1 = 3h + K_S`, `c2 = (5h^2 + 3hK_S)/2 + 2 - 2g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecialUlrichTarget {
    pub c1: DivisorClass,
    pub c2: BigInt,
}

pub fn special_target(s: &RuledSurfaceParams, h: &Polarization) -> Result<SpecialUlrichTarget> {
    let k = s.canonical_class();
    let hh = s.self_intersection(h.class());
    let hk = s.intersect(h.class(), &k);
    let (half, rem) = (BigInt::from(5) * hh + BigInt::from(3) * hk).div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::Invariant(format!(
            "5h^2 + 3hK_S is odd for h = {}",
            h.class()
        )));
    }
    Ok(SpecialUlrichTarget {
        c1: h.class().scale(&BigInt::from(3)) + k,
        c2: half + 2 - BigInt::from(2) * s.genus(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionDatum {
    pub sub: DivisorClass,
    pub quot: DivisorClass,
    /// Length of the zero-dimensional scheme `Z`.
    pub z_degree: BigInt,
    /// `deg v = g - 1` for the general twist `v`.
    pub generic_v_degree: BigInt,
}

impl ExtensionDatum {
    pub fn c1(&self) -> DivisorClass {
        &self.sub + &self.quot
    }

    pub fn c2(&self, s: &RuledSurfaceParams) -> BigInt {
        s.intersect(&self.sub, &self.quot) + &self.z_degree
    }
}

pub fn extension_chern_check(
    s: &RuledSurfaceParams,
    datum: &ExtensionDatum,
    target: &SpecialUlrichTarget,
) -> bool {
    datum.c1() == target.c1 && datum.c2(s) == target.c2
}

fn ensure_chern(s: &RuledSurfaceParams, h: &Polarization, datum: &ExtensionDatum) -> Result<()> {
    let target = special_target(s, h)?;
    if extension_chern_check(s, datum, &target) {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "extension ({}, {}, z = {}) has c1 = {}, c2 = {}; expected {}, {}",
            datum.sub,
            datum.quot,
            datum.z_degree,
            datum.c1(),
            datum.c2(s),
            target.c1,
            target.c2
        )))
    }
}

/// `u_e = ae` if `e > 0`, else `e`.
pub fn u_e(s: &RuledSurfaceParams, a: &BigInt) -> BigInt {
    let e = s.invariant();
    if e.is_positive() {
        a * e
    } else {
        e.clone()
    }
}

/// How stability of the general extension is argued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilityArgument {
    /// `e > 0, a >= 2`: no Ulrich line bundle can destabilize.
    NoUlrichLineSubbundles,
    /// `e <= 0`: strictly semistable extensions form a smaller family.
    DimensionCount,
}

impl StabilityArgument {
    pub fn as_str(self) -> &'static str {
        match self {
            StabilityArgument::NoUlrichLineSubbundles => "no-ulrich-line-subbundles",
            StabilityArgument::DimensionCount => "dimension-count",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThresholdReport {
    pub datum: ExtensionDatum,
    /// `None` when `a = 2`, which needs no bound on `deg b`.
    pub threshold: Option<BigRational>,
    pub sufficient: bool,
    pub stability: StabilityArgument,
}

fn rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `max{((a-3)(g-1) + ea)/2, (g-1) + u_e, e(3a+1)/6 + 2g/3}`.
pub fn degree_threshold(s: &RuledSurfaceParams, a: &BigInt) -> BigRational {
    let (g, e) = (s.genus(), s.invariant());
    let two = BigInt::from(2);
    let first = BigRational::new((a - 3) * (g - 1) + e * a, two.clone());
    let second = rat(g - 1 + u_e(s, a));
    let third = BigRational::new(e * (BigInt::from(3) * a + 1), BigInt::from(6))
        + BigRational::new(two * g, BigInt::from(3));
    first.max(second).max(third)
}

/// Extension by `O_S(aC_0 + (b + v)f)` with quotient
/// `I_Z((2a-2)C_0 + (2b + 2g - 2 - e - v)f)`, `deg v = g - 1`,
/// `deg Z = (a-1)(b - ea/2)`.
///
/// Sufficient when `a = 2`, or `a >= 3` and `b` exceeds [`degree_threshold`].
pub fn threshold_extension(s: &RuledSurfaceParams, h: &Polarization) -> Result<ThresholdReport> {
    let (g, e) = (s.genus(), s.invariant());
    let (a, b) = (h.a(), h.b());
    if !g.is_positive() {
        return Err(Error::Hypothesis(format!("needs g >= 1, got g = {g}")));
    }
    if *a < BigInt::from(2) {
        return Err(Error::Hypothesis(format!("needs a >= 2, got a = {a}")));
    }
    let v = g - 1;
    let (twice_z, rem) = ((a - 1u32) * (BigInt::from(2) * b - e * a)).div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::Hypothesis(format!(
            "deg Z = (a-1)(b - ea/2) is not an integer for a = {a}, e = {e}"
        )));
    }
    let z_degree = twice_z;
    if z_degree.is_negative() {
        return Err(Error::Hypothesis(format!("deg Z = {z_degree} is negative")));
    }
    let datum = ExtensionDatum {
        sub: DivisorClass::new(a.clone(), b + &v),
        quot: DivisorClass::new(
            BigInt::from(2) * a - 2,
            BigInt::from(2) * b + BigInt::from(2) * g - 2 - e - &v,
        ),
        z_degree,
        generic_v_degree: v,
    };
    ensure_chern(s, h, &datum)?;
    let (threshold, sufficient) = if *a == BigInt::from(2) {
        (None, true)
    } else {
        let t = degree_threshold(s, a);
        let ok = rat(b.clone()) > t;
        (Some(t), ok)
    };
    let stability = if e.is_positive() {
        StabilityArgument::NoUlrichLineSubbundles
    } else {
        StabilityArgument::DimensionCount
    };
    Ok(ThresholdReport {
        datum,
        threshold,
        sufficient,
        stability,
    })
}

/// `2ab - ea^2 - (a-4)(g-1)`.
pub fn threshold_family_dimension(s: &RuledSurfaceParams, h: &Polarization) -> BigInt {
    let (a, b) = (h.a(), h.b());
    BigInt::from(2) * a * b - s.invariant() * a * a - (a - 4) * (s.genus() - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemistableBound {
    /// `(a-1)/2 (b + 2 - ae/2) - 1`, unclamped.
    pub bound: BigRational,
    pub family_dimension: BigInt,
    /// `3b >= e(3a+1)/2 + 2g`.
    pub hypothesis_holds: bool,
}

impl SemistableBound {
    pub fn dominated(&self) -> bool {
        self.bound < rat(self.family_dimension.clone())
    }
}

/// Upper bound on the dimension of strictly semistable members of the
/// threshold family, for `e <= 0`. Fails with an invariant error if the
/// hypothesis holds with `b >= 0` but the bound is not below the family
/// dimension.
pub fn semistable_family_bound(
    s: &RuledSurfaceParams,
    h: &Polarization,
) -> Result<SemistableBound> {
    let (g, e) = (s.genus(), s.invariant());
    if e.is_positive() {
        return Err(Error::Hypothesis(format!("needs e <= 0, got e = {e}")));
    }
    let (a, b) = (h.a(), h.b());
    if !g.is_positive() || *a < BigInt::from(2) {
        return Err(Error::Hypothesis(format!(
            "needs g >= 1 and a >= 2, got g = {g}, a = {a}"
        )));
    }
    let inner = rat(b + 2) - BigRational::new(a * e, BigInt::from(2));
    let bound = BigRational::new(a - 1, BigInt::from(2)) * inner - BigRational::one();
    let hypothesis_holds =
        BigInt::from(6) * b >= e * (BigInt::from(3) * a + 1) + BigInt::from(4) * g;
    let out = SemistableBound {
        bound,
        family_dimension: threshold_family_dimension(s, h),
        hypothesis_holds,
    };
    if out.hypothesis_holds && !b.is_negative() && !out.dominated() {
        return Err(Error::Invariant(format!(
            "semistable bound {} is not below family dimension {}",
            out.bound, out.family_dimension
        )));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSplitReport {
    /// `floor(a/2)`.
    pub alpha: BigInt,
    /// `a - 2 alpha`.
    pub epsilon: BigInt,
    /// `(3 alpha - 1 + epsilon)C_0 + (b + g - 1)f`.
    pub d_class: DivisorClass,
    /// `epsilon C_0 + bf`; `A + 2D = 3h + K_S`.
    pub a_class: DivisorClass,
    pub datum: ExtensionDatum,
}

pub const HALF_SPLIT_WORST_CASE_NOTE: &str =
    "deg Z covers the worst case alpha + epsilon + 1 <= (alpha + epsilon)b, which needs b >= 3";

/// Extension `0 -> O_S(D) -> F -> I_Z(A + D) -> 0` on `e = 0` surfaces with
/// `deg Z = (alpha + epsilon)b`.
pub fn half_split_extension(s: &RuledSurfaceParams, h: &Polarization) -> Result<HalfSplitReport> {
    let (g, e) = (s.genus(), s.invariant());
    let (a, b) = (h.a(), h.b());
    if !e.is_zero() {
        return Err(Error::Hypothesis(format!("needs e = 0, got e = {e}")));
    }
    if !g.is_positive() {
        return Err(Error::Hypothesis(format!("needs g >= 1, got g = {g}")));
    }
    if *a < BigInt::from(2) {
        return Err(Error::Hypothesis(format!("needs a >= 2, got a = {a}")));
    }
    if *b < BigInt::from(3) {
        return Err(Error::Hypothesis(format!(
            "needs deg b = hC_0 >= 3, got b = {b}"
        )));
    }
    let alpha = a.div_floor(&BigInt::from(2));
    let epsilon = a - BigInt::from(2) * &alpha;
    let v = g - 1;
    let d_class = DivisorClass::new(BigInt::from(3) * &alpha - 1 + &epsilon, b + &v);
    let a_class = DivisorClass::new(
        epsilon.clone(),
        b + BigInt::from(2) * g - 2 - BigInt::from(2) * &v - e,
    );
    let total = &a_class + &d_class.scale(&BigInt::from(2));
    let expected = special_target(s, h)?.c1;
    if total != expected {
        return Err(Error::Invariant(format!(
            "A + 2D = {total} differs from 3h + K_S = {expected}"
        )));
    }
    let datum = ExtensionDatum {
        quot: &a_class + &d_class,
        sub: d_class.clone(),
        z_degree: (&alpha + &epsilon) * b,
        generic_v_degree: v,
    };
    ensure_chern(s, h, &datum)?;
    Ok(HalfSplitReport {
        alpha,
        epsilon,
        d_class,
        a_class,
        datum,
    })
}
