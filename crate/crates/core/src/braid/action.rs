//! Braid actions on fundamental groups of the punctured plane and sphere.
//!
//! Words act on the right: for `v · w` the action of `v` is applied first.
//! Images are stored as substitution tables, so composing `v` then `w`
//! replaces every letter of `v`'s image words by `w`'s images.
//!
//! The punctured-sphere group is `<a_1 .. a_n | a_1 ... a_n>`, which is free
//! on `a_1 .. a_{n-1}` once `a_n = (a_1 ... a_{n-1})^-1` is eliminated. The
//! mapping class group of the marked sphere embeds in its outer
//! automorphism group, so [`MappingClass`] (a canonical representative of
//! the outer class) decides equality in `MC(S², n)` exactly.

use serde::{Deserialize, Serialize};

use super::free::{self, FreeWord};
use super::word::{BraidWord, Generator, Letter};
use crate::error::{Error, Result};

/// Artin action of a braid word on the free group `F_n = <a_1 .. a_n>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeripheralAutomorphism {
    images: Vec<FreeWord>,
}

impl PeripheralAutomorphism {
    pub fn identity(n: usize) -> Self {
        PeripheralAutomorphism { images: (1..=n as i32).map(|j| vec![j]).collect() }
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, w: &[i32]) -> FreeWord {
        free::substitute(w, &self.images)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &PeripheralAutomorphism) -> PeripheralAutomorphism {
        PeripheralAutomorphism { images: self.images.iter().map(|w| other.apply(w)).collect() }
    }

    fn apply_letter(&mut self, i: usize, inverse: bool) {
        // letters are 1-based; i is the generator index
        let a = i as i32;
        let b = a + 1;
        let (img_a, img_b): (FreeWord, FreeWord) =
            if inverse { (vec![b], vec![-b, a, b]) } else { (vec![a, b, -a], vec![a]) };
        for w in &mut self.images {
            let mut out = Vec::with_capacity(w.len() + 2);
            for &l in w.iter() {
                let img = match l.abs() {
                    x if x == a => &img_a,
                    x if x == b => &img_b,
                    _ => {
                        free::push_reduced(&mut out, l);
                        continue;
                    }
                };
                if l > 0 {
                    img.iter().for_each(|&m| free::push_reduced(&mut out, m));
                } else {
                    img.iter().rev().for_each(|&m| free::push_reduced(&mut out, -m));
                }
            }
            *w = out;
        }
    }

    /// Inner automorphism `x ↦ c x c^-1`, if `self` is one.
    pub fn inner_conjugator(&self) -> Option<FreeWord> {
        let (u, r) = free::cyclic_split(self.images.first()?);
        if r != [1] {
            return None;
        }
        // c = u · a_1^k; read k off the image of a_2 after stripping u
        let k = match self.images.get(1) {
            Some(w2) => {
                let s = free::mul(&[&free::inverse(&u), w2, &u]);
                s.iter().take_while(|&&l| l.abs() == 1).map(|&l| l as i64).sum()
            }
            None => 0,
        };
        let c = free::mul(&[&u, &free::power(&[1], k)]);
        let c_inv = free::inverse(&c);
        let inner = self.images.iter().enumerate().all(|(j, w)| *w == free::mul(&[&c, &[j as i32 + 1], &c_inv]));
        inner.then_some(c)
    }
}

/// The plane Artin action of `w` (the central letter acts trivially).
pub fn artin_action(w: &BraidWord) -> PeripheralAutomorphism {
    let mut phi = PeripheralAutomorphism::identity(w.strands());
    for l in w.letters() {
        if let Generator::X(i) = l.generator {
            phi.apply_letter(i as usize, l.inverse);
        }
    }
    phi
}

/// Canonical representative of an outer automorphism class of the free
/// group `F_m`, given by the images of `a_1 .. a_m`.
///
/// Normalization: conjugate so that the image of `a_1` is the least
/// rotation of its cyclic reduction, then conjugate by the power `p^k` of
/// its primitive root that minimizes the total image length, taking the
/// least such `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MappingClass {
    images: Vec<FreeWord>,
}

impl MappingClass {
    pub fn identity(strands: usize) -> Self {
        MappingClass { images: (1..strands as i32).map(|j| vec![j]).collect() }
    }

    /// Normalizes arbitrary images of `a_1 .. a_m` (m ≥ 2).
    pub fn from_images(images: Vec<FreeWord>) -> Self {
        let mut mc = MappingClass { images };
        mc.normalize();
        mc
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn strands(&self) -> usize {
        self.images.len() + 1
    }

    pub fn total_len(&self) -> usize {
        self.images.iter().map(|w| w.len()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, w)| w.len() == 1 && w[0] == k as i32 + 1)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &MappingClass) -> MappingClass {
        let images = self.images.iter().map(|w| free::substitute(w, &other.images)).collect();
        MappingClass::from_images(images)
    }

    fn normalize(&mut self) {
        if self.images.is_empty() || self.images[0].is_empty() {
            return;
        }
        let (u, r) = free::cyclic_split(&self.images[0]);
        let s = free::least_rotation(&r);
        // conjugator c with c^-1 · image(a_1) · c = rotated r
        let mut c = u;
        c.extend_from_slice(&r[..s]);
        let c = free::reduce(&c);
        let c_inv = free::inverse(&c);
        let images: Vec<FreeWord> = self.images.iter().map(|w| free::mul(&[&c_inv, w, &c])).collect();
        let root = free::primitive_root(&images[0]);
        let root_inv = free::inverse(&root);

        let total: usize = images.iter().map(|w| w.len()).sum();
        let span = (total / root.len().max(1) + 2) as i64;
        // images[0] is a power of the root, so only the others move
        let stats: Vec<[(usize, usize); 2]> =
            images[1..].iter().map(|w| [periodic_matches(w, &root), periodic_matches(w, &root_inv)]).collect();
        let cost = |k: i64| -> usize {
            let (p, side) = if k >= 0 { (&root, 0) } else { (&root_inv, 1) };
            images[1..]
                .iter()
                .zip(&stats)
                .map(|(w, st)| conjugated_len(w, p, k.unsigned_abs() as usize, st[side]))
                .sum()
        };
        let mut best = (usize::MAX, 0i64);
        for k in -span..=span {
            let c = cost(k);
            if c < best.0 {
                best = (c, k);
            }
        }
        let k = best.1;
        let p = free::power(&root, k);
        let p_inv = free::inverse(&p);
        self.images = images.iter().map(|w| free::mul(&[&p_inv, w, &p])).collect();
    }
}

/// Longest prefix of `w` agreeing with `p p p ...` and longest suffix
/// agreeing with `... p^-1 p^-1`.
fn periodic_matches(w: &[i32], p: &[i32]) -> (usize, usize) {
    let m = p.len();
    let prefix = w.iter().enumerate().take_while(|(i, &l)| l == p[i % m]).count();
    let suffix = w.iter().rev().enumerate().take_while(|(i, &l)| l == -p[i % m]).count();
    (prefix, suffix)
}

/// Reduced length of `p^-k w p^k`.
fn conjugated_len(w: &[i32], p: &[i32], k: usize, (prefix, suffix): (usize, usize)) -> usize {
    if k == 0 {
        return w.len();
    }
    let kl = k * p.len();
    let (cl, cr) = (prefix.min(kl), suffix.min(kl));
    if cl + cr < w.len() {
        w.len() + 2 * kl - 2 * cl - 2 * cr
    } else {
        let pk = free::power(p, k as i64);
        free::mul(&[&free::inverse(&pk), w, &pk]).len()
    }
}

/// Substitution table of a single letter on the free group `F_{n-1}`.
fn sphere_letter_images(strands: usize, i: usize, inverse: bool) -> Vec<FreeWord> {
    let m = strands - 1;
    let mut images: Vec<FreeWord> = (1..=m as i32).map(|j| vec![j]).collect();
    let a = i as i32;
    // a_n eliminated as (a_1 ... a_m)^-1
    let a_n: FreeWord = (1..=m as i32).rev().map(|j| -j).collect();
    if i < m {
        let b = a + 1;
        if inverse {
            images[i - 1] = vec![b];
            images[i] = vec![-b, a, b];
        } else {
            images[i - 1] = vec![a, b, -a];
            images[i] = vec![a];
        }
    } else if inverse {
        images[m - 1] = a_n;
    } else {
        images[m - 1] = free::mul(&[&[a], &a_n, &[-a]]);
    }
    images
}

/// Incremental evaluator for mapping classes of long words.
#[derive(Clone, Debug)]
pub struct SphereActionBuilder {
    strands: usize,
    images: Vec<FreeWord>,
    tables: Vec<[Vec<FreeWord>; 2]>,
}

impl SphereActionBuilder {
    pub fn new(strands: usize) -> Self {
        let tables = (1..strands)
            .map(|i| [sphere_letter_images(strands, i, false), sphere_letter_images(strands, i, true)])
            .collect();
        SphereActionBuilder { strands, images: MappingClass::identity(strands).images, tables }
    }

    pub fn push(&mut self, l: Letter) {
        if let Generator::X(i) = l.generator {
            let table = &self.tables[i as usize - 1][l.inverse as usize];
            for w in &mut self.images {
                *w = free::substitute(w, table);
            }
            // keep intermediate images from drifting far from the outer class
            let total: usize = self.images.iter().map(|w| w.len()).sum();
            if total > 64 * self.strands {
                let mc = MappingClass::from_images(std::mem::take(&mut self.images));
                self.images = mc.images;
            }
        }
    }

    pub fn finish(self) -> MappingClass {
        MappingClass::from_images(self.images)
    }
}

/// Image of `w` in `MC(S², n)`.
pub fn mapping_class(w: &BraidWord) -> MappingClass {
    let mut b = SphereActionBuilder::new(w.strands());
    for &l in w.letters() {
        b.push(l);
    }
    b.finish()
}

/// Whether `w` is trivial in the mapping class group of the marked sphere.
pub fn is_identity_in_mcg(w: &BraidWord) -> bool {
    super::perm::permutation_image(w).is_identity() && mapping_class(w).is_identity()
}

pub fn equal_in_mcg(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch(w1.strands(), w2.strands()));
    }
    Ok(is_identity_in_mcg(&w1.concat(&w2.inverse())?))
}
