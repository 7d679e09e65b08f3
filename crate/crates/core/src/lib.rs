//! Exact intersection theory and Ulrich bundle calculus on geometrically
//! ruled surfaces `S = P(E) -> C`.
//!
//! * [`surface`]: Picard lattice, intersection pairing, Riemann-Roch, ampleness tests.
//! * [`cohom`]: exact cohomology on Hirzebruch surfaces and generic models for `g >= 1`.
//! * [`ulrich`]: Ulrich line bundle candidates, checks and the existence table.
//! * [`rank2`]: special rank-2 Ulrich bundles built as extensions.
//! * [`moduli`]: theta divisors and Segre strata over the base curve.
//!
//! All arithmetic is exact; nothing here uses floating point.

pub mod cohom;
pub mod error;
pub mod knowledge;
pub mod moduli;
pub mod rank2;
pub mod surface;
pub mod ulrich;

pub use error::{Error, Result};
pub use knowledge::{Citation, Genericity};
pub use surface::{Ampleness, DivisorClass, Polarization, RuledSurfaceParams};
pub use ulrich::{Outcome, UlrichVerdict};
