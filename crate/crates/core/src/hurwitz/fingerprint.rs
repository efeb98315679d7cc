use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{mapping_class, permutation_image, BraidWord, MappingClass, Permutation};
use crate::error::Result;
use crate::lifts::Factorization;

/// Conjugation-sensitive summary of a braid: exponent sum modulo `2(n-1)`,
/// permutation image and normalized mapping class. Equal elements of
/// `B(S², n)` have equal fingerprints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub exponent_residue: i64,
    pub permutation: Permutation,
    pub class: MappingClass,
}

impl Fingerprint {
    pub fn modulus(strands: usize) -> i64 {
        2 * (strands as i64 - 1)
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[e={} p={} |φ|={}]", self.exponent_residue, self.permutation, self.class.total_len())
    }
}

pub fn fingerprint(w: &BraidWord) -> Fingerprint {
    Fingerprint {
        exponent_residue: w.exponent_sum().rem_euclid(Fingerprint::modulus(w.strands())),
        permutation: permutation_image(w),
        class: mapping_class(w),
    }
}

/// Fingerprints of the standard words of `f`, in order.
pub fn fingerprints(f: &Factorization) -> Result<Vec<Fingerprint>> {
    Ok(f.standard_words()?.iter().map(fingerprint).collect())
}
