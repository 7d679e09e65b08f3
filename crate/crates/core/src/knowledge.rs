use std::fmt;

/// Which classification result justifies an answer.
///
/// The slug is stable and is what machine-readable output carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Citation {
    /// `e > 0`: Ulrich line bundles exist iff `a = 1`.
    PositiveInvariant,
    /// `(a-1)e` odd: `d(a,g,e)` is not an integer.
    Parity,
    /// `(a-1)e = 0`: two `g`-dimensional families twisted by general `u`.
    UntwistedFamilies,
    /// `g = 1`, `e < 0`: iff `a` is odd.
    EllipticBase,
    /// `a = 2`, `e < 0`: iff `e` is even.
    QuadricFibres,
    /// `a = 3`, `e < 0`, `g = 2`.
    CubicGenusTwo,
    /// `a = 3`, `e < 0`, base curve general in moduli.
    CubicGeneralCurve,
    /// `-e` even and `E` general: proper theta divisor on the Picard variety.
    ThetaEvenDegree,
    /// `-e` odd, `a` odd, curve and bundle general.
    ThetaOddDegree,
    Open,
}

impl Citation {
    pub const ALL: [Citation; 10] = [
        Citation::PositiveInvariant,
        Citation::Parity,
        Citation::UntwistedFamilies,
        Citation::EllipticBase,
        Citation::QuadricFibres,
        Citation::CubicGenusTwo,
        Citation::CubicGeneralCurve,
        Citation::ThetaEvenDegree,
        Citation::ThetaOddDegree,
        Citation::Open,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            Citation::PositiveInvariant => "e-positive",
            Citation::Parity => "parity",
            Citation::UntwistedFamilies => "untwisted",
            Citation::EllipticBase => "genus-one",
            Citation::QuadricFibres => "a2-even-e",
            Citation::CubicGenusTwo => "a3-genus-two",
            Citation::CubicGeneralCurve => "a3-general-curve",
            Citation::ThetaEvenDegree => "theta-even",
            Citation::ThetaOddDegree => "theta-odd",
            Citation::Open => "open",
        }
    }

    pub fn from_slug(slug: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.slug() == slug)
    }

    pub fn statement(self) -> &'static str {
        match self {
            Citation::PositiveInvariant => "e > 0: Ulrich line bundles exist if and only if a = 1",
            Citation::Parity => "(a-1)e odd: no Ulrich line bundles",
            Citation::UntwistedFamilies => {
                "(a-1)e = 0: two g-dimensional families of Ulrich line bundles"
            }
            Citation::EllipticBase => "g = 1, e < 0: Ulrich line bundles iff a is odd",
            Citation::QuadricFibres => "a = 2, e < 0: Ulrich line bundles iff e is even",
            Citation::CubicGenusTwo => "a = 3, e < 0, g = 2: Ulrich line bundles exist",
            Citation::CubicGeneralCurve => {
                "a = 3, e < 0, C general in moduli: Ulrich line bundles exist"
            }
            Citation::ThetaEvenDegree => {
                "e even, E general: the theta divisor of S^(a-1)E is proper"
            }
            Citation::ThetaOddDegree => {
                "e odd, a odd, C and E general: the theta divisor of S^(a-1)E is proper"
            }
            Citation::Open => "no known result decides this case",
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

/// Genericity assumptions supplied by the caller. Never inferred.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Genericity {
    /// The normalized bundle `E` is general among bundles with its invariants.
    pub bundle: bool,
    /// The base curve is general in its moduli space.
    pub curve: bool,
}

impl Genericity {
    pub const NONE: Genericity = Genericity {
        bundle: false,
        curve: false,
    };
    pub const BOTH: Genericity = Genericity {
        bundle: true,
        curve: true,
    };
}
