//! Hurwitz moves on factorizations, the standard genus-2 and elliptic
//! families, fibre sums and bounded equivalence search.

mod fingerprint;
mod search;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use fingerprint::{fingerprint, fingerprints, Fingerprint};
pub use search::{
    canonical_rep, equivalent, equivalent_with, orbit_size, CanonicalRep, Equivalence, OrbitSize, SearchOptions,
    Witness, DEFAULT_NODE_BUDGET,
};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::lifts::{standard_word, Factorization, TwistDescriptor, TwistKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Left,
    Right,
}

/// One step of an equivalence certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    /// Hurwitz move on entries `position` and `position + 1` (1-based).
    Hurwitz { position: usize, direction: Direction },
    /// Simultaneous conjugation `τ ↦ l τ l⁻¹` of every entry.
    Conjugate(Letter),
}

impl Move {
    pub fn right(position: usize) -> Self {
        Move::Hurwitz { position, direction: Direction::Right }
    }

    pub fn left(position: usize) -> Self {
        Move::Hurwitz { position, direction: Direction::Left }
    }

    pub fn inverse(self) -> Self {
        match self {
            Move::Hurwitz { position, direction: Direction::Left } => Move::right(position),
            Move::Hurwitz { position, direction: Direction::Right } => Move::left(position),
            Move::Conjugate(l) => Move::Conjugate(l.inv()),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Hurwitz { position, direction: Direction::Right } => write!(f, "R{position}"),
            Move::Hurwitz { position, direction: Direction::Left } => write!(f, "L{position}"),
            Move::Conjugate(l) => write!(f, "C({l})"),
        }
    }
}

/// A sequence of moves, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveSequence(pub Vec<Move>);

impl MoveSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> MoveSequence {
        MoveSequence(self.0.iter().rev().map(|m| m.inverse()).collect())
    }
}

impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Right move: `(τ_r, τ_{r+1}) ↦ (τ_r τ_{r+1} τ_r⁻¹, τ_r)`; left move is its
/// inverse `(σ, ρ) ↦ (ρ, ρ⁻¹ σ ρ)`. Positions are 1-based.
pub fn hurwitz_move(f: &Factorization, r: usize, direction: Direction) -> Result<Factorization> {
    let mu = f.mu();
    if r == 0 || r >= mu {
        return Err(Error::MoveOutOfRange { position: r, len: mu });
    }
    let g = f.genus();
    let mut twists = f.twists().to_vec();
    let (a, b) = (&f.twists()[r - 1], &f.twists()[r]);
    match direction {
        Direction::Right => {
            let conj = standard_word(a, g)?.concat(&b.conjugator)?.reduce_free();
            twists[r - 1] = TwistDescriptor::new(b.kind, conj)?;
            twists[r] = a.clone();
        }
        Direction::Left => {
            let conj = standard_word(b, g)?.inverse().concat(&a.conjugator)?.reduce_free();
            twists[r - 1] = b.clone();
            twists[r] = TwistDescriptor::new(a.kind, conj)?;
        }
    }
    Factorization::new(g, twists)
}

/// Conjugates every twist by the letter `l`.
pub fn conjugate_all(f: &Factorization, l: Letter) -> Result<Factorization> {
    let prefix = BraidWord::new(f.strands(), vec![l])?;
    let twists = f
        .twists()
        .iter()
        .map(|d| TwistDescriptor::new(d.kind, prefix.concat(&d.conjugator)?.reduce_free()))
        .collect::<Result<Vec<_>>>()?;
    Factorization::new(f.genus(), twists)
}

pub fn apply_move(f: &Factorization, m: Move) -> Result<Factorization> {
    match m {
        Move::Hurwitz { position, direction } => hurwitz_move(f, position, direction),
        Move::Conjugate(l) => conjugate_all(f, l),
    }
}

pub fn apply_moves(f: &Factorization, moves: &MoveSequence) -> Result<Factorization> {
    moves.0.iter().try_fold(f.clone(), |acc, &m| apply_move(&acc, m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `(x1 x2 x3 x4 x5 x5 x4 x3 x2 x1)^{2k}`, genus 2, k ≥ 1.
    I,
    /// The `I` block to the power `2k` followed by `(x1 x2 x3 x4 x5)^6`, k ≥ 0.
    II,
    /// `(x1 x2 x3 x4)^{10k}`, genus 2, k ≥ 1.
    III,
    /// `(x1 x2)^{μ/2}` in genus 1; the parameter is `μ`, a positive multiple of 12.
    Elliptic,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::I => "I",
            Family::II => "II",
            Family::III => "III",
            Family::Elliptic => "elliptic",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" => Ok(Family::I),
            "II" | "ii" => Ok(Family::II),
            "III" | "iii" => Ok(Family::III),
            "elliptic" | "Elliptic" | "E" => Ok(Family::Elliptic),
            _ => Err(Error::ParameterOutOfRange(format!("unknown family `{s}`"))),
        }
    }
}

/// Conjugator `c` with `c · x_1 · c⁻¹ = x_i` in the braid group:
/// `(x_{i-1} x_i)(x_{i-2} x_{i-1}) ... (x_1 x_2)`.
pub fn generator_conjugator(strands: usize, i: u16) -> Result<BraidWord> {
    let idx: Vec<i32> = (1..i as i32).rev().flat_map(|j| [j, j + 1]).collect();
    BraidWord::from_indices(strands, &idx)
}

fn half_twist_tuple(genus: u32, gens: &[u16]) -> Result<Factorization> {
    let strands = 2 * genus as usize + 2;
    let twists = gens
        .iter()
        .map(|&i| TwistDescriptor::irreducible(generator_conjugator(strands, i)?))
        .collect::<Result<Vec<_>>>()?;
    Factorization::new(genus, twists)
}

/// Tuple of half-twists `(x_{i_1}, ..., x_{i_μ})` as irreducible descriptors.
pub fn from_generators(genus: u32, gens: &[u16]) -> Result<Factorization> {
    half_twist_tuple(genus, gens)
}

/// For `Elliptic` the parameter is the number of singular fibres.
pub fn normal_form_family(family: Family, k: u32) -> Result<Factorization> {
    let out_of_range = || Error::ParameterOutOfRange(format!("family {family} needs k ≥ 1, got {k}"));
    let block_i: Vec<u16> = (1..=5).chain((1..=5).rev()).collect();
    let repeat =
        |block: &[u16], times: usize| -> Vec<u16> { block.iter().copied().cycle().take(block.len() * times).collect() };
    match family {
        Family::I => {
            if k == 0 {
                return Err(out_of_range());
            }
            half_twist_tuple(2, &repeat(&block_i, 2 * k as usize))
        }
        Family::II => {
            let mut gens = repeat(&block_i, 2 * k as usize);
            gens.extend(repeat(&[1, 2, 3, 4, 5], 6));
            half_twist_tuple(2, &gens)
        }
        Family::III => {
            if k == 0 {
                return Err(out_of_range());
            }
            half_twist_tuple(2, &repeat(&[1, 2, 3, 4], 10 * k as usize))
        }
        Family::Elliptic => {
            if k == 0 || !k.is_multiple_of(12) {
                return Err(Error::ParameterOutOfRange(format!(
                    "elliptic family needs μ ≡ 0 (mod 12), μ > 0, got {k}"
                )));
            }
            half_twist_tuple(1, &repeat(&[1, 2], k as usize / 2))
        }
    }
}

/// Fibre connected sum: concatenation of the two tuples.
pub fn fiber_sum(f1: &Factorization, f2: &Factorization) -> Result<Factorization> {
    if f1.genus() != f2.genus() {
        return Err(Error::GenusMismatch(f1.genus(), f2.genus()));
    }
    let mut twists = f1.twists().to_vec();
    twists.extend_from_slice(f2.twists());
    Factorization::new(f1.genus(), twists)
}

/// Multiset of twist kinds, sorted.
pub fn kind_multiset(f: &Factorization) -> Vec<TwistKind> {
    let mut kinds: Vec<TwistKind> = f.twists().iter().map(|d| d.kind).collect();
    kinds.sort_unstable();
    kinds
}
