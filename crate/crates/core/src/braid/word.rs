use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator of the sphere braid group, or the central letter `I` of the
/// extension in which the hyperelliptic involution is kept as a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    /// Half-twist exchanging strands `i` and `i + 1` (1-based).
    X(u16),
    /// `x_1 ... x_{n-1} x_{n-1} ... x_1`, central and of order two in the extension.
    I,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub const fn x(i: u16) -> Self {
        Letter { generator: Generator::X(i), inverse: false }
    }

    pub const fn x_inv(i: u16) -> Self {
        Letter { generator: Generator::X(i), inverse: true }
    }

    pub const fn central(inverse: bool) -> Self {
        Letter { generator: Generator::I, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { inverse: !self.inverse, ..self }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.generator {
            Generator::X(i) => write!(f, "x{i}")?,
            Generator::I => write!(f, "I")?,
        }
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the generators `x_1 .. x_{n-1}` (and optionally `I`) of the
/// braid group on `n` strands of the sphere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands < 3 {
            return Err(Error::TooFewStrands(strands));
        }
        for l in &letters {
            check_letter(strands, *l)?;
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed generator indices (`3` is `x3`, `-3` is `x3^-1`).
    pub fn from_indices(strands: usize, indices: &[i32]) -> Result<Self> {
        let letters = indices
            .iter()
            .map(|&i| {
                if i == 0 {
                    return Err(Error::GeneratorOutOfRange { index: 0, strands });
                }
                let idx = u16::try_from(i.unsigned_abs())
                    .map_err(|_| Error::GeneratorOutOfRange { index: i.unsigned_abs() as usize, strands })?;
                Ok(Letter { generator: Generator::X(idx), inverse: i < 0 })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    /// Parses the whitespace-separated token syntax `x1 x2^-1 I`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text.split_whitespace().map(|tok| tok.parse::<Letter>()).collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    /// `x_1 x_2 ... x_{n-1}`.
    pub fn cycle(strands: usize) -> Result<Self> {
        let letters = (1..strands as u16).map(Letter::x).collect();
        Self::new(strands, letters)
    }

    /// The full twist `(x_1 ... x_{n-1})^n`.
    pub fn full_twist(strands: usize) -> Result<Self> {
        Ok(Self::cycle(strands)?.pow(strands as u32))
    }

    /// The sphere relator `x_1 ... x_{n-1} x_{n-1} ... x_1`.
    pub fn sphere_relator(strands: usize) -> Result<Self> {
        let up = Self::cycle(strands)?;
        let mut letters = up.letters.clone();
        letters.extend(up.letters.iter().rev().copied());
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_central(&self) -> bool {
        self.letters.iter().any(|l| l.generator == Generator::I)
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        check_letter(self.strands, letter)?;
        self.letters.push(letter);
        Ok(())
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn pow(&self, k: u32) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() * k as usize);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// `c · self · c⁻¹`, freely reduced.
    pub fn conjugate_by(&self, c: &BraidWord) -> Result<BraidWord> {
        Ok(c.concat(self)?.concat(&c.inverse())?.reduce_free())
    }

    /// Free reduction: cancels adjacent letter/inverse pairs until none remain.
    pub fn reduce_free(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Signed letter count, with each `I` weighted by its length `2(n-1)`.
    pub fn exponent_sum(&self) -> i64 {
        let weight = 2 * (self.strands as i64 - 1);
        self.letters
            .iter()
            .map(|l| match l.generator {
                Generator::X(_) => l.sign(),
                Generator::I => weight * l.sign(),
            })
            .sum()
    }
}

fn check_letter(strands: usize, l: Letter) -> Result<()> {
    if let Generator::X(i) = l.generator {
        if i == 0 || i as usize >= strands {
            return Err(Error::GeneratorOutOfRange { index: i as usize, strands });
        }
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self> {
        let (head, inverse) = match tok.strip_suffix("^-1") {
            Some(h) => (h, true),
            None => (tok, false),
        };
        if head == "I" {
            return Ok(Letter::central(inverse));
        }
        let idx = head
            .strip_prefix('x')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|d| d.parse::<u16>().ok())
            .ok_or_else(|| Error::BadToken(tok.to_string()))?;
        Ok(Letter { generator: Generator::X(idx), inverse })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, idx: &[i32]) -> BraidWord {
        BraidWord::from_indices(n, idx).unwrap()
    }

    #[test]
    fn cancels_inverse_pair() {
        assert!(w(4, &[1, -1]).reduce_free().is_empty());
        assert_eq!(w(4, &[1, 2, -2, 3]).reduce_free(), w(4, &[1, 3]));
        assert_eq!(w(4, &[1, 2, -2, -1, 3]).reduce_free(), w(4, &[3]));
    }

    #[test]
    fn central_letters_cancel_only_with_inverse() {
        let word = BraidWord::parse(6, "I I^-1 I I").unwrap().reduce_free();
        assert_eq!(word.to_string(), "I I");
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(BraidWord::cycle(6).unwrap().pow(6).exponent_sum(), 30);
        assert_eq!(BraidWord::sphere_relator(6).unwrap().exponent_sum(), 10);
        let ii = BraidWord::parse(6, "I I").unwrap();
        assert_eq!(ii.exponent_sum(), 20);
        assert_eq!(ii.exponent_sum() % 4, 0);
    }

    #[test]
    fn parse_and_display() {
        let word = BraidWord::parse(6, "x1 x2^-1  x5 I^-1").unwrap();
        assert_eq!(word.to_string(), "x1 x2^-1 x5 I^-1");
        assert!(matches!(BraidWord::parse(6, "x6"), Err(Error::GeneratorOutOfRange { .. })));
        assert!(matches!(BraidWord::parse(6, "x0"), Err(Error::GeneratorOutOfRange { .. })));
        assert!(matches!(BraidWord::parse(6, "y1"), Err(Error::BadToken(_))));
        assert!(matches!(BraidWord::parse(6, "x-1"), Err(Error::BadToken(_))));
        assert!(matches!(BraidWord::parse(6, "x1^2"), Err(Error::BadToken(_))));
    }

    #[test]
    fn rejects_tiny_strand_counts() {
        assert!(matches!(BraidWord::identity(2), Err(Error::TooFewStrands(2))));
    }
}
