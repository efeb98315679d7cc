//! Hyperelliptic Dehn twists as conjugated standard braids, and validation
//! of monodromy factorizations built from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{permutation_image, BraidWord, SphereActionBuilder};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TwistKind {
    /// Non-separating vanishing cycle; standard braid `x_1`.
    Irreducible,
    /// Separating cycle cutting off genus `h`; standard braid `(x_1 ... x_{2h})^{4h+2}`.
    Reducible(u32),
}

impl TwistKind {
    /// Local contribution to the virtual number of critical values of the
    /// branch curve: 1 for a node, `4h(2h+1)` for the infinitely close
    /// point of multiplicity `2h+1`.
    pub fn mu_virt_contribution(self) -> i64 {
        match self {
            TwistKind::Irreducible => 1,
            TwistKind::Reducible(h) => {
                let h = h as i64;
                4 * h * (2 * h + 1)
            }
        }
    }

    pub fn check_genus(self, genus: u32) -> Result<()> {
        if let TwistKind::Reducible(h) = self {
            let max = genus / 2;
            if h == 0 || h > max {
                return Err(Error::ReducibleOutOfRange { h, max, genus });
            }
        }
        Ok(())
    }
}

/// A Dehn twist `c · m · c^-1` with `m` the standard braid of its kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistDescriptor {
    pub kind: TwistKind,
    pub conjugator: BraidWord,
}

impl TwistDescriptor {
    pub fn new(kind: TwistKind, conjugator: BraidWord) -> Result<Self> {
        if conjugator.has_central() {
            return Err(Error::InconsistentInput("twist conjugators may not contain I".into()));
        }
        Ok(TwistDescriptor { kind, conjugator })
    }

    pub fn irreducible(conjugator: BraidWord) -> Result<Self> {
        Self::new(TwistKind::Irreducible, conjugator)
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    pub fn mu_virt_contribution(&self) -> i64 {
        self.kind.mu_virt_contribution()
    }
}

/// The braid `m` of a twist kind before conjugation.
pub fn model_word(kind: TwistKind, genus: u32) -> Result<BraidWord> {
    kind.check_genus(genus)?;
    let strands = 2 * genus as usize + 2;
    match kind {
        TwistKind::Irreducible => BraidWord::from_indices(strands, &[1]),
        TwistKind::Reducible(h) => {
            let block: Vec<i32> = (1..=2 * h as i32).collect();
            Ok(BraidWord::from_indices(strands, &block)?.pow(4 * h + 2))
        }
    }
}

/// Distinguished lift of the twist to `B(S², 2g+2)`, freely reduced.
pub fn standard_word(d: &TwistDescriptor, genus: u32) -> Result<BraidWord> {
    let strands = 2 * genus as usize + 2;
    if d.strands() != strands {
        return Err(Error::StrandMismatch(d.strands(), strands));
    }
    model_word(d.kind, genus)?.conjugate_by(&d.conjugator)
}

pub fn mu_virt_contribution(d: &TwistDescriptor) -> i64 {
    d.mu_virt_contribution()
}

/// An ordered tuple of twists whose product is the monodromy around all
/// critical values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    genus: u32,
    twists: Vec<TwistDescriptor>,
}

impl Factorization {
    pub fn new(genus: u32, twists: Vec<TwistDescriptor>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::BadGenus(genus));
        }
        let strands = 2 * genus as usize + 2;
        for t in &twists {
            if t.strands() != strands {
                return Err(Error::StrandMismatch(t.strands(), strands));
            }
            t.kind.check_genus(genus)?;
        }
        Ok(Factorization { genus, twists })
    }

    pub fn empty(genus: u32) -> Result<Self> {
        Self::new(genus, Vec::new())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn strands(&self) -> usize {
        2 * self.genus as usize + 2
    }

    pub fn twists(&self) -> &[TwistDescriptor] {
        &self.twists
    }

    pub fn into_twists(self) -> Vec<TwistDescriptor> {
        self.twists
    }

    pub fn mu(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    /// Number of reducible twists.
    pub fn t(&self) -> usize {
        self.twists.iter().filter(|d| d.kind != TwistKind::Irreducible).count()
    }

    /// Types `h_i` of the reducible twists, sorted.
    pub fn h_list(&self) -> Vec<u32> {
        let mut hs: Vec<u32> = self
            .twists
            .iter()
            .filter_map(|d| match d.kind {
                TwistKind::Reducible(h) => Some(h),
                TwistKind::Irreducible => None,
            })
            .collect();
        hs.sort_unstable();
        hs
    }

    /// Sum of the exponent sums of all standard words.
    pub fn exponent_sum(&self) -> i64 {
        self.twists.iter().map(|d| d.mu_virt_contribution()).sum()
    }

    pub fn standard_words(&self) -> Result<Vec<BraidWord>> {
        self.twists.iter().map(|d| standard_word(d, self.genus)).collect()
    }

    /// Product of all standard words, concatenated without reduction.
    pub fn product_word(&self) -> Result<BraidWord> {
        let mut out = BraidWord::identity(self.strands())?;
        for w in self.standard_words()? {
            out = out.concat(&w)?;
        }
        Ok(out)
    }
}

/// Which central element of `B(S², 2g+2)` the product of lifts is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CentralElement {
    Trivial,
    FullTwist,
    Undetermined,
}

impl fmt::Display for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CentralElement::Trivial => "trivial",
            CentralElement::FullTwist => "full_twist",
            CentralElement::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub mu: usize,
    pub t: usize,
    pub h_list: Vec<u32>,
    pub total_is_identity_in_mcg: bool,
    pub exponent_sum: i64,
    pub central_element: CentralElement,
}

pub fn validate(f: &Factorization) -> Result<ValidationReport> {
    validate_with_bundle(f, None)
}

/// Validates `f`; `bundle` (0 or 1) resolves the central element in odd
/// genus, where the exponent sum cannot.
pub fn validate_with_bundle(f: &Factorization, bundle: Option<u8>) -> Result<ValidationReport> {
    let mut action = SphereActionBuilder::new(f.strands());
    let mut perm = crate::braid::Permutation::identity(f.strands());
    for w in f.standard_words()? {
        perm = perm.then(&permutation_image(&w));
        for &l in w.letters() {
            action.push(l);
        }
    }
    if !perm.is_identity() || !action.finish().is_identity() {
        return Err(Error::InvalidMonodromy(format!(
            "product of the {} twists is not trivial in MC(S², {})",
            f.mu(),
            f.strands()
        )));
    }
    let exponent_sum = f.exponent_sum();
    Ok(ValidationReport {
        mu: f.mu(),
        t: f.t(),
        h_list: f.h_list(),
        total_is_identity_in_mcg: true,
        exponent_sum,
        central_element: central_element(f.genus(), exponent_sum, bundle),
    })
}

/// For even genus `d(d-1) ≡ 2 (mod 4)` with `d = 2g+2`, so the exponent sum
/// mod 4 singles out the bundle `n`; in odd genus both bundles give the same
/// residue and only a supplied `n` decides.
fn central_element(genus: u32, exponent_sum: i64, bundle: Option<u8>) -> CentralElement {
    let from_bundle = |n: u8| match n {
        0 => CentralElement::Trivial,
        1 => CentralElement::FullTwist,
        _ => CentralElement::Undetermined,
    };
    if genus.is_multiple_of(2) {
        match exponent_sum.rem_euclid(4) {
            0 => CentralElement::Trivial,
            2 => CentralElement::FullTwist,
            _ => CentralElement::Undetermined,
        }
    } else {
        bundle.map_or(CentralElement::Undetermined, from_bundle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::exponent_sum;

    fn word(n: usize, idx: &[i32]) -> BraidWord {
        BraidWord::from_indices(n, idx).unwrap()
    }

    #[test]
    fn standard_words() {
        let d = TwistDescriptor::irreducible(BraidWord::identity(6).unwrap()).unwrap();
        assert_eq!(standard_word(&d, 2).unwrap(), word(6, &[1]));

        let d = TwistDescriptor::new(TwistKind::Reducible(1), BraidWord::identity(6).unwrap()).unwrap();
        let sw = standard_word(&d, 2).unwrap();
        assert_eq!(sw.len(), 12);
        assert_eq!(sw, word(6, &[1, 2]).pow(6));

        let d = TwistDescriptor::irreducible(word(6, &[2])).unwrap();
        assert_eq!(standard_word(&d, 2).unwrap(), word(6, &[2, 1, -2]));
    }

    #[test]
    fn reducible_range() {
        let d = TwistDescriptor::new(TwistKind::Reducible(2), BraidWord::identity(6).unwrap()).unwrap();
        assert!(matches!(standard_word(&d, 2), Err(Error::ReducibleOutOfRange { h: 2, max: 1, genus: 2 })));
        assert!(matches!(
            Factorization::new(
                1,
                vec![TwistDescriptor::new(TwistKind::Reducible(1), BraidWord::identity(4).unwrap()).unwrap()]
            ),
            Err(Error::ReducibleOutOfRange { .. })
        ));
        assert!(TwistDescriptor::irreducible(BraidWord::parse(6, "I").unwrap()).is_err());
    }

    #[test]
    fn contributions() {
        assert_eq!(TwistKind::Irreducible.mu_virt_contribution(), 1);
        assert_eq!(TwistKind::Reducible(1).mu_virt_contribution(), 12);
        assert_eq!(TwistKind::Reducible(2).mu_virt_contribution(), 40);
        let d = TwistDescriptor::new(TwistKind::Reducible(2), BraidWord::identity(10).unwrap()).unwrap();
        assert_eq!(exponent_sum(&standard_word(&d, 4).unwrap()), 40);
    }

    #[test]
    fn single_twist_is_not_a_monodromy() {
        let f = Factorization::new(2, vec![TwistDescriptor::irreducible(BraidWord::identity(6).unwrap()).unwrap()])
            .unwrap();
        assert!(matches!(validate(&f), Err(Error::InvalidMonodromy(_))));
    }

    #[test]
    fn empty_factorization_validates() {
        let r = validate(&Factorization::empty(2).unwrap()).unwrap();
        assert_eq!((r.mu, r.t, r.exponent_sum), (0, 0, 0));
        assert_eq!(r.central_element, CentralElement::Trivial);
    }

    #[test]
    fn central_element_rules() {
        assert_eq!(central_element(2, 20, None), CentralElement::Trivial);
        assert_eq!(central_element(2, 30, None), CentralElement::FullTwist);
        assert_eq!(central_element(1, 12, None), CentralElement::Undetermined);
        assert_eq!(central_element(1, 12, Some(1)), CentralElement::FullTwist);
    }
}
