//! Word arithmetic in the sphere braid group `B(S², n)`, its mapping class
//! quotient `MC(S², n)` and the extension carrying the central letter `I`.

mod action;
pub mod free;
mod perm;
mod word;

pub use action::{
    artin_action, equal_in_mcg, is_identity_in_mcg, mapping_class, MappingClass, PeripheralAutomorphism,
    SphereActionBuilder,
};
pub use perm::{permutation_image, Permutation};
pub use word::{BraidWord, Generator, Letter};

/// Free reduction of `w`.
pub fn reduce_free(w: &BraidWord) -> BraidWord {
    w.reduce_free()
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.exponent_sum()
}
