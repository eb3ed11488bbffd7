//! Euler-Chow series of projective varieties.
//!
//! The series `E_p(X) = Σ_α χ(C_{p,α}(X)) t^α` live in the completed monoid
//! ring of the monoid of effective `p`-cycle classes. This crate models those
//! monoids as free graded monoids, implements the ring operations together
//! with push-forward and pull-back along monoid morphisms, and assembles the
//! projective-bundle and Chow-quotient pipelines that produce the series of
//! projective bundles, Hirzebruch surfaces, blow-ups, the flag variety
//! `F(0,1;2)` and the Grassmannian `G(1,3)`.

pub mod catalog;
pub mod coeff;
pub mod io;
pub mod monoid;
pub mod oracle;
pub mod schubert;
pub mod series;
pub mod verify;

pub use catalog::{euler_chow, EulerChowResult, Method, Variety};
pub use coeff::{Coefficient, CoefficientKind, IntPoly};
pub use monoid::{Generator, GradedMonoid, MonoidElement, MonoidError, MonoidMorphism};
pub use series::{FormalSeries, IntSeries, PolySeries, RationalSeries, SeriesError};
