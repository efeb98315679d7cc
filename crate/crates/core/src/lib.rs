//! Combinatorics of hyperelliptic symplectic Lefschetz fibrations.
//!
//! * [`braid`]: words in the sphere braid group and their images in the
//!   symmetric group and the mapping class group of the marked sphere.
//! * [`lifts`]: Dehn twists as conjugated standard braids, monodromy
//!   factorizations and their validation.
//! * [`homology`]: intersection arithmetic on Hirzebruch surfaces and their
//!   blow-ups, branch-class solving and component classification.
//! * [`invariants`]: characteristic numbers of the total space.
//! * [`hurwitz`]: Hurwitz moves, standard families, fibre sums and bounded
//!   equivalence search.
//! * [`format`]: the plain-text factorization file format.

pub mod braid;
mod error;
pub mod format;
pub mod homology;
pub mod hurwitz;
pub mod invariants;
pub mod lifts;

pub use error::{Error, Result};
