//! Finite commutative rings with unity, the classical, Bouvier and Fletcher
//! notions of irreducible element, harmless zero divisors, and an exhaustive
//! verifier for the implications between them.

pub mod error;
pub mod ideal;
pub mod irreducible;
pub mod pattern;
pub mod poly;
pub mod report;
pub mod ring;
pub mod spec;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{ElementId, FiniteRing};
pub use spec::RingSpec;
