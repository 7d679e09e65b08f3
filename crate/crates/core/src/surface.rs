//! Picard lattice of a geometrically ruled surface `S = P(E) -> C`.
//!
//! A divisor class is `aC_0 + bf`, where `C_0` is the class of the
//! tautological section and `b` is the degree of the pulled back divisor on
//! the base curve. Every numerical question below depends only on the genus
//! `g` of `C` and the invariant `e = -deg(det E)` of the normalized bundle.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The discrete invariants `(g, e)` of a geometrically ruled surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RuledSurfaceParams {
    g: BigInt,
    e: BigInt,
}

impl RuledSurfaceParams {
    /// Validates `g >= 0` and `e >= -g`. At `g = 0` the bound reads `e >= 0`.
    pub fn new(g: impl Into<BigInt>, e: impl Into<BigInt>) -> Result<Self> {
        let (g, e) = (g.into(), e.into());
        if g.is_negative() {
            return Err(Error::NegativeGenus(g));
        }
        if e < -&g {
            return Err(Error::Nagata { g, e });
        }
        Ok(Self { g, e })
    }

    /// The Hirzebruch surface `F_e`.
    pub fn hirzebruch(e: impl Into<BigInt>) -> Result<Self> {
        Self::new(0, e)
    }

    pub fn genus(&self) -> &BigInt {
        &self.g
    }

    pub fn invariant(&self) -> &BigInt {
        &self.e
    }

    /// `chi(O_S) = 1 - g`.
    pub fn chi_structure_sheaf(&self) -> BigInt {
        BigInt::one() - &self.g
    }

    /// `C_0^2 = -e`, `C_0 f = 1`, `f^2 = 0`, extended bilinearly.
    pub fn intersect(&self, x: &DivisorClass, y: &DivisorClass) -> BigInt {
        &x.a * &y.b + &y.a * &x.b - &x.a * &y.a * &self.e
    }

    pub fn self_intersection(&self, x: &DivisorClass) -> BigInt {
        self.intersect(x, x)
    }

    /// `K_S = -2C_0 + (2g - 2 - e)f`.
    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass {
            a: BigInt::from(-2),
            b: BigInt::from(2) * &self.g - 2 - &self.e,
        }
    }

    /// Riemann-Roch: `chi(D) = 1 - g + D(D - K_S)/2`.
    ///
    /// `D(D - K_S) = 2ab + 2b - 2a(g - 1) - (a^2 + a)e` is always even.
    pub fn chi(&self, d: &DivisorClass) -> BigInt {
        let twice = self.intersect(d, &(d - &self.canonical_class()));
        let (half, rem) = twice.div_rem(&BigInt::from(2));
        debug_assert!(rem.is_zero(), "D(D - K) must be even");
        self.chi_structure_sheaf() + half
    }

    /// `K_S - D`.
    pub fn serre_dual_class(&self, d: &DivisorClass) -> DivisorClass {
        &self.canonical_class() - d
    }

    /// Sufficient numerical test used for ampleness of twists `aC_0 + (b - v)f`
    /// with `deg v = g - 1`: `b - g + 1 > ae/2` if `e <= 0`, `b - g + 1 > ae`
    /// if `e > 0`.
    pub fn ample_sufficient(&self, h: &Polarization) -> bool {
        let lhs = h.b() - &self.g + 1;
        let ae = h.a() * &self.e;
        if self.e.is_positive() {
            lhs > ae
        } else {
            BigInt::from(2) * lhs > ae
        }
    }

    /// First necessary condition for very ampleness that fails, if any.
    pub fn very_ample_obstruction(&self, h: &DivisorClass) -> Option<&'static str> {
        if h.a < BigInt::one() {
            return Some("h.f = a must be at least 1");
        }
        if !self.self_intersection(h).is_positive() {
            return Some("h^2 must be positive");
        }
        let restricted = self.intersect(h, &DivisorClass::section());
        if restricted < BigInt::one() {
            return Some("h.C_0 = b - ae must be at least 1");
        }
        // The section C_0 is a copy of C of genus >= 1, embedded by h.
        if self.g.is_positive() && self.e.is_zero() && restricted < BigInt::from(3) {
            return Some("h.C_0 = b must be at least 3 when g >= 1 and e = 0");
        }
        None
    }

    pub fn very_ample_necessary(&self, h: &Polarization) -> bool {
        self.very_ample_obstruction(h.class()).is_none()
    }

    /// Combines the sufficient and the necessary test.
    pub fn ampleness(&self, h: &Polarization) -> Ampleness {
        if !self.very_ample_necessary(h) {
            Ampleness::Excluded
        } else if self.ample_sufficient(h) {
            Ampleness::Sufficient
        } else {
            Ampleness::Undecided
        }
    }
}

impl fmt::Display for RuledSurfaceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g = {}, e = {})", self.g, self.e)
    }
}

/// Tri-state answer of [`RuledSurfaceParams::ampleness`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ampleness {
    /// A necessary condition for very ampleness fails.
    Excluded,
    /// Necessary conditions hold and the sufficient inequality holds.
    Sufficient,
    Undecided,
}

/// Numerical class `aC_0 + bf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub a: BigInt,
    pub b: BigInt,
}

impl DivisorClass {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    /// `C_0`.
    pub fn section() -> Self {
        Self::new(1, 0)
    }

    /// `f`.
    pub fn fiber() -> Self {
        Self::new(0, 1)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            a: &self.a * k,
            b: &self.b * k,
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

macro_rules! lattice_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&DivisorClass> for &DivisorClass {
            type Output = DivisorClass;
            fn $method(self, rhs: &DivisorClass) -> DivisorClass {
                DivisorClass {
                    a: &self.a $op &rhs.a,
                    b: &self.b $op &rhs.b,
                }
            }
        }
        impl $tr<DivisorClass> for DivisorClass {
            type Output = DivisorClass;
            fn $method(self, rhs: DivisorClass) -> DivisorClass {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&DivisorClass> for DivisorClass {
            type Output = DivisorClass;
            fn $method(self, rhs: &DivisorClass) -> DivisorClass {
                (&self).$method(rhs)
            }
        }
        impl $tr<DivisorClass> for &DivisorClass {
            type Output = DivisorClass;
            fn $method(self, rhs: DivisorClass) -> DivisorClass {
                self.$method(&rhs)
            }
        }
    };
}

lattice_binop!(Add, add, +);
lattice_binop!(Sub, sub, -);

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        -self.clone()
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        rhs.scale(&BigInt::from(self))
    }
}

/// A polarization `h = aC_0 + bf` with `a >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polarization {
    class: DivisorClass,
    assumed_very_ample: bool,
}

impl Polarization {
    /// Only checks `a >= 1`; nothing is assumed about very ampleness.
    pub fn new(class: DivisorClass) -> Result<Self> {
        if class.a < BigInt::one() {
            return Err(Error::PolarizationRank(class.a));
        }
        Ok(Self {
            class,
            assumed_very_ample: false,
        })
    }

    /// Accepts `h` as very ample once every numerical necessary condition
    /// holds on `s`.
    pub fn very_ample(s: &RuledSurfaceParams, class: DivisorClass) -> Result<Self> {
        let mut h = Self::new(class)?;
        if let Some(reason) = s.very_ample_obstruction(&h.class) {
            return Err(Error::NotVeryAmple {
                a: h.class.a,
                b: h.class.b,
                reason,
            });
        }
        h.assumed_very_ample = true;
        Ok(h)
    }

    pub fn class(&self) -> &DivisorClass {
        &self.class
    }

    pub fn a(&self) -> &BigInt {
        &self.class.a
    }

    pub fn b(&self) -> &BigInt {
        &self.class.b
    }

    pub fn assumed_very_ample(&self) -> bool {
        self.assumed_very_ample
    }
}
