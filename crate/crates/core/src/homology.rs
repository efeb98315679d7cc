//! Intersection arithmetic on the Hirzebruch surfaces `P(O ⊕ O(n))` and
//! their blow-ups, and the branch-class bookkeeping of a factorization.
//!
//! Classes are written in the basis `H` (positive section, `H² = n`) and
//! `F` (fibre); the negative section is `S_∞ = H - nF`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lifts::{Factorization, TwistKind};

/// The class `a·H + b·F` on `P(O ⊕ O(n))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuledClass {
    pub n: i64,
    pub a: i64,
    pub b: i64,
}

impl RuledClass {
    pub const fn new(n: i64, a: i64, b: i64) -> Self {
        RuledClass { n, a, b }
    }

    pub const fn h(n: i64) -> Self {
        RuledClass { n, a: 1, b: 0 }
    }

    pub const fn f(n: i64) -> Self {
        RuledClass { n, a: 0, b: 1 }
    }

    pub const fn s_infinity(n: i64) -> Self {
        RuledClass { n, a: 1, b: -n }
    }

    pub const fn zero(n: i64) -> Self {
        RuledClass { n, a: 0, b: 0 }
    }

    pub fn square(self) -> i64 {
        self.n * self.a * self.a + 2 * self.a * self.b
    }

    pub fn is_two_divisible(self) -> bool {
        self.a % 2 == 0 && self.b % 2 == 0
    }
}

impl fmt::Display for RuledClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b < 0 { '-' } else { '+' };
        write!(f, "{}H {} {}F (n={})", self.a, sign, self.b.abs(), self.n)
    }
}

impl Add for RuledClass {
    type Output = RuledClass;
    fn add(self, o: RuledClass) -> RuledClass {
        debug_assert_eq!(self.n, o.n);
        RuledClass { n: self.n, a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for RuledClass {
    type Output = RuledClass;
    fn sub(self, o: RuledClass) -> RuledClass {
        self + (-o)
    }
}

impl Neg for RuledClass {
    type Output = RuledClass;
    fn neg(self) -> RuledClass {
        RuledClass { n: self.n, a: -self.a, b: -self.b }
    }
}

impl Mul<RuledClass> for i64 {
    type Output = RuledClass;
    fn mul(self, c: RuledClass) -> RuledClass {
        RuledClass { n: c.n, a: self * c.a, b: self * c.b }
    }
}

/// `H·H = n`, `H·F = 1`, `F·F = 0`.
pub fn intersect(c1: RuledClass, c2: RuledClass) -> Result<i64> {
    if c1.n != c2.n {
        return Err(Error::BundleMismatch(c1.n, c2.n));
    }
    Ok(c1.n * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b)
}

/// `K = -2H + (n-2)F`.
pub fn canonical_class(n: i64) -> RuledClass {
    RuledClass { n, a: -2, b: n - 2 }
}

/// Genus `g` of an embedded connected surface in class `c`, from
/// `2g - 2 = (K + c)·c`.
pub fn adjunction_genus(c: RuledClass) -> Result<i64> {
    if c.a < 0 {
        return Err(Error::NotACurveClass(format!("{c} has negative H-coefficient")));
    }
    let twice = intersect(canonical_class(c.n) + c, c)? + 2;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::NotACurveClass(format!("{c} gives 2g = {twice}")));
    }
    Ok(twice / 2)
}

/// Virtual number of critical values of a degree-`d` curve in class `dH + lF`.
pub fn mu_virt_from_class(d: i64, l: i64, n: i64) -> i64 {
    2 * (d - 1) * l + n * d * (d - 1)
}

/// The branch class `(2g+2)H + 2kF` on `P(O ⊕ O(n))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BranchSolution {
    pub n: i64,
    pub k: i64,
    pub mu_virt: i64,
}

impl BranchSolution {
    /// Solution for an explicit `(n, k)`, with `μ_virt` recomputed.
    pub fn from_class(genus: u32, n: i64, k: i64) -> Self {
        let d = 2 * genus as i64 + 2;
        BranchSolution { n, k, mu_virt: mu_virt_from_class(d, 2 * k, n) }
    }

    pub fn class(&self, genus: u32) -> RuledClass {
        RuledClass { n: self.n, a: 2 * genus as i64 + 2, b: 2 * self.k }
    }
}

/// `μ_virt = (μ - t) + Σ 4h_i(2h_i + 1)`.
pub fn mu_virt_of(mu_minus_t: i64, h_list: &[u32]) -> i64 {
    mu_minus_t + h_list.iter().map(|&h| TwistKind::Reducible(h).mu_virt_contribution()).sum::<i64>()
}

/// Solves `2(d-1)·l = μ_virt - n·d(d-1)` with `l` even, over `n ∈ {0, 1}`.
pub fn solve_branch_class(genus: u32, mu_minus_t: i64, h_list: &[u32], n_hint: Option<u8>) -> Result<BranchSolution> {
    if mu_minus_t < 0 {
        return Err(Error::InconsistentInput(format!("mu - t = {mu_minus_t} is negative")));
    }
    let mu_virt = mu_virt_of(mu_minus_t, h_list);
    let d = 2 * genus as i64 + 2;
    let solve = |n: i64| -> Option<BranchSolution> {
        let rem = mu_virt - n * d * (d - 1);
        let step = 2 * (d - 1);
        (rem % step == 0 && (rem / step) % 2 == 0).then(|| BranchSolution { n, k: rem / step / 2, mu_virt })
    };
    match n_hint {
        Some(n) if n > 1 => Err(Error::ParameterOutOfRange(format!("bundle hint must be 0 or 1, got {n}"))),
        Some(n) => solve(n as i64).ok_or(Error::NoSolution { genus, mu_virt }),
        None => match (solve(0), solve(1)) {
            (Some(s), None) | (None, Some(s)) => Ok(s),
            (None, None) => Err(Error::NoSolution { genus, mu_virt }),
            (Some(_), Some(_)) => Err(Error::Ambiguous { genus, mu_virt }),
        },
    }
}

/// Whether the total exponent sum of the lifts minus `n·d(d-1)` is divisible by 4.
pub fn mod4_check(f: &Factorization, n: i64) -> bool {
    let d = f.strands() as i64;
    (f.exponent_sum() - n * d * (d - 1)).rem_euclid(4) == 0
}

/// A class on the blow-up of `P(O ⊕ O(n))` at `t` points, each blown up
/// twice: per point the `(-2)`-sphere `Γ_i` and the `(-1)`-sphere `Γ'_i`.
/// The base part is a pulled-back class and is orthogonal to all `Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlownUpClass {
    pub base: RuledClass,
    /// `(coefficient of Γ_i, coefficient of Γ'_i)` per blown-up point.
    pub points: Vec<(i64, i64)>,
}

impl BlownUpClass {
    pub fn pullback(base: RuledClass, t: usize) -> Self {
        BlownUpClass { base, points: vec![(0, 0); t] }
    }

    pub fn intersect(&self, other: &BlownUpClass) -> Result<i64> {
        if self.points.len() != other.points.len() {
            return Err(Error::InconsistentInput(format!(
                "blow-ups at {} and {} points",
                self.points.len(),
                other.points.len()
            )));
        }
        let exceptional: i64 = self
            .points
            .iter()
            .zip(&other.points)
            .map(|(&(g, gp), &(e, ep))| -2 * g * e + g * ep + gp * e - gp * ep)
            .sum();
        Ok(intersect(self.base, other.base)? + exceptional)
    }

    pub fn square(&self) -> i64 {
        self.intersect(self).expect("same shape")
    }

    pub fn is_two_divisible(&self) -> bool {
        self.base.is_two_divisible() && self.points.iter().all(|&(g, gp)| g % 2 == 0 && gp % 2 == 0)
    }

    fn combine(&self, other: &BlownUpClass, s: i64) -> BlownUpClass {
        BlownUpClass {
            base: self.base + s * other.base,
            points: self.points.iter().zip(&other.points).map(|(&(a, b), &(c, d))| (a + s * c, b + s * d)).collect(),
        }
    }

    pub fn plus(&self, other: &BlownUpClass) -> BlownUpClass {
        self.combine(other, 1)
    }

    pub fn minus(&self, other: &BlownUpClass) -> BlownUpClass {
        self.combine(other, -1)
    }

    pub fn scaled(&self, s: i64) -> BlownUpClass {
        BlownUpClass { base: s * self.base, points: self.points.iter().map(|&(a, b)| (s * a, s * b)).collect() }
    }
}

/// Total and strict transform of a branch class under the two-step
/// resolution of its infinitely close singular points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchPullback {
    /// `ρ^* B̄`.
    pub total: BlownUpClass,
    /// `B = ρ^* B̄ - Σ (2h_i+1)(Γ_i + 2Γ'_i)`.
    pub strict: BlownUpClass,
    /// `B_E = Σ Γ_i`.
    pub b_e: BlownUpClass,
}

impl BranchPullback {
    /// `Σ (2h_i+1)(Γ_i + 2Γ'_i)`; per point `(2h+1, 2(2h+1))`.
    pub fn exceptional_part(&self) -> BlownUpClass {
        self.total.minus(&self.strict)
    }

    /// `B + B_E`, the branch locus of the double cover of the blow-up.
    pub fn branch_locus(&self) -> BlownUpClass {
        self.strict.plus(&self.b_e)
    }
}

pub fn blowup_pullback(c: RuledClass, h_list: &[u32]) -> BranchPullback {
    let t = h_list.len();
    let total = BlownUpClass::pullback(c, t);
    let strict = BlownUpClass {
        base: c,
        points: h_list
            .iter()
            .map(|&h| {
                let m = 2 * h as i64 + 1;
                (-m, -2 * m)
            })
            .collect(),
    };
    let b_e = BlownUpClass { base: RuledClass::zero(c.n), points: vec![(1, 0); t] };
    BranchPullback { total, strict, b_e }
}

/// `K_N = ρ^* K + Σ (Γ_i + 2Γ'_i)`.
pub fn blown_up_canonical_class(n: i64, t: usize) -> BlownUpClass {
    BlownUpClass { base: canonical_class(n), points: vec![(1, 2); t] }
}

/// `c_1²` of the fibration's total space computed on the resolved double
/// cover: `K_M² = 2(K_N + ½B_N)² + t` with `B_N = B + B_E`.
pub fn c1_sq_via_blowup(genus: u32, n: i64, k: i64, h_list: &[u32]) -> i64 {
    let branch = BranchSolution::from_class(genus, n, k).class(genus);
    let pb = blowup_pullback(branch, h_list);
    let doubled = blown_up_canonical_class(n, h_list.len()).scaled(2).plus(&pb.branch_locus());
    doubled.square() / 2 + h_list.len() as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvalidReason {
    MixedBundles,
    Empty,
    OddDegree,
    NonPositive,
    Intersecting,
    NotACurve,
    NotTwoDivisible,
    UnrecognisedShape,
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvalidReason::MixedBundles => "components live on different bundles",
            InvalidReason::Empty => "no components",
            InvalidReason::OddDegree => "total degree over the base is not even",
            InvalidReason::NonPositive => "a component has non-positive degree over the base",
            InvalidReason::Intersecting => "components intersect",
            InvalidReason::NotACurve => "a component violates the adjunction formula",
            InvalidReason::NotTwoDivisible => "not a 2-divisible class",
            InvalidReason::UnrecognisedShape => "disconnected, but neither S_inf + (2g+1)H nor 2g+2 sections",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentShape {
    Connected,
    /// A negative section `S_∞` (even twist) plus a connected `(2g+1)H`.
    NegativeSectionPlusConnected,
    /// `2g+2` disjoint sections of `P¹ × P¹`.
    AllSections,
    Invalid(InvalidReason),
}

/// Classifies the component classes of a branch curve by intersection and
/// adjunction arithmetic.
pub fn classify_components(classes: &[RuledClass]) -> ComponentShape {
    use ComponentShape::*;
    let Some(first) = classes.first() else {
        return Invalid(InvalidReason::Empty);
    };
    let n = first.n;
    if classes.iter().any(|c| c.n != n) {
        return Invalid(InvalidReason::MixedBundles);
    }
    if classes.len() == 1 {
        return Connected;
    }
    let degree: i64 = classes.iter().map(|c| c.a).sum();
    if degree % 2 != 0 {
        return Invalid(InvalidReason::OddDegree);
    }
    if classes.iter().any(|c| c.a <= 0) {
        return Invalid(InvalidReason::NonPositive);
    }
    for (i, c) in classes.iter().enumerate() {
        for d in &classes[i + 1..] {
            if intersect(*c, *d).expect("same bundle") != 0 {
                return Invalid(InvalidReason::Intersecting);
            }
        }
    }
    if classes.iter().any(|&c| adjunction_genus(c).is_err()) {
        return Invalid(InvalidReason::NotACurve);
    }
    let total = classes.iter().fold(RuledClass::zero(n), |acc, &c| acc + c);
    if !total.is_two_divisible() {
        return Invalid(InvalidReason::NotTwoDivisible);
    }
    if classes.len() == 2 {
        let (s, b) = if classes[0].square() <= classes[1].square() {
            (classes[0], classes[1])
        } else {
            (classes[1], classes[0])
        };
        let m = -s.square();
        if s.a == 1 && m > 0 && b.a == degree - 1 && adjunction_genus(s) == Ok(0) {
            return NegativeSectionPlusConnected;
        }
    }
    if n == 0 && classes.len() as i64 == degree && classes.iter().all(|&c| c == RuledClass::h(0)) {
        return AllSections;
    }
    Invalid(InvalidReason::UnrecognisedShape)
}

/// Isomorphism classes of double covers with a given branch locus, which
/// are in bijection with `H¹(N; Z/2)` once one exists.
pub fn count_double_covers(h1_z2_order: u64) -> u64 {
    debug_assert!(h1_z2_order >= 1);
    h1_z2_order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing() {
        assert_eq!(intersect(RuledClass::h(1), RuledClass::h(1)), Ok(1));
        let s = RuledClass::s_infinity(2);
        assert_eq!(intersect(s, s), Ok(-2));
        assert_eq!(intersect(s, 5 * RuledClass::h(2)), Ok(0));
        assert_eq!(intersect(RuledClass::h(1), RuledClass::h(2)), Err(Error::BundleMismatch(1, 2)));
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(canonical_class(0), RuledClass::new(0, -2, -2));
        // -2S_∞ - 3F on n = 1
        assert_eq!(canonical_class(1), -2 * RuledClass::s_infinity(1) - 3 * RuledClass::f(1));
        assert_eq!(canonical_class(2), RuledClass::new(2, -2, 0));
    }

    #[test]
    fn adjunction() {
        assert_eq!(adjunction_genus(RuledClass::new(0, 6, 2)), Ok(5));
        for n in 0..6 {
            assert_eq!(adjunction_genus(RuledClass::s_infinity(n)), Ok(0));
        }
        assert_eq!(adjunction_genus(RuledClass::f(0)), Ok(0));
        assert_eq!(adjunction_genus(RuledClass::new(1, 6, 0)), Ok(10));
        assert!(matches!(adjunction_genus(RuledClass::new(0, -1, 0)), Err(Error::NotACurveClass(_))));
        // 2F on P¹×P¹ would need genus -1
        assert!(matches!(adjunction_genus(RuledClass::new(0, 0, 2)), Err(Error::NotACurveClass(_))));
    }

    #[test]
    fn mu_virt_values() {
        assert_eq!(mu_virt_from_class(6, 2, 0), 20);
        assert_eq!(mu_virt_from_class(6, 0, 1), 30);
        assert_eq!(mu_virt_from_class(6, -4, 4), 80);
    }

    #[test]
    fn solving() {
        assert_eq!(solve_branch_class(2, 20, &[], None), Ok(BranchSolution { n: 0, k: 1, mu_virt: 20 }));
        assert_eq!(solve_branch_class(2, 30, &[], None), Ok(BranchSolution { n: 1, k: 0, mu_virt: 30 }));
        assert_eq!(solve_branch_class(1, 12, &[], None), Err(Error::Ambiguous { genus: 1, mu_virt: 12 }));
        assert_eq!(solve_branch_class(1, 12, &[], Some(0)), Ok(BranchSolution { n: 0, k: 1, mu_virt: 12 }));
        assert_eq!(solve_branch_class(1, 12, &[], Some(1)), Ok(BranchSolution { n: 1, k: 0, mu_virt: 12 }));
        assert_eq!(solve_branch_class(2, 21, &[], None), Err(Error::NoSolution { genus: 2, mu_virt: 21 }));
        // one h=1 reducible fibre contributes 12
        assert_eq!(solve_branch_class(2, 8, &[1], None), Ok(BranchSolution { n: 0, k: 1, mu_virt: 20 }));
        assert!(solve_branch_class(2, -1, &[], None).is_err());
    }

    #[test]
    fn pullback() {
        let c = RuledClass::new(0, 6, 2);
        let plain = blowup_pullback(c, &[]);
        assert_eq!(plain.total, BlownUpClass::pullback(c, 0));
        assert_eq!(plain.strict, plain.total);

        let pb = blowup_pullback(c, &[1]);
        assert_eq!(pb.exceptional_part().points, vec![(3, 6)]);
        let rest = pb.exceptional_part().minus(&pb.b_e);
        assert_eq!(rest.points, vec![(2, 6)]);
        assert!(rest.is_two_divisible());
        // the strict transform misses the (-2)-sphere
        let gamma = BlownUpClass { base: RuledClass::zero(0), points: vec![(1, 0)] };
        assert_eq!(pb.strict.intersect(&gamma), Ok(0));
        assert_eq!(gamma.square(), -2);
    }

    #[test]
    fn c1_squared_on_the_blow_up() {
        assert_eq!(c1_sq_via_blowup(2, 0, 1, &[]), -4);
        assert_eq!(c1_sq_via_blowup(2, 1, 0, &[]), -2);
        assert_eq!(c1_sq_via_blowup(2, 0, 1, &[1]), -5);
    }

    #[test]
    fn component_shapes() {
        let n2 = [RuledClass::s_infinity(2), 5 * RuledClass::h(2)];
        assert_eq!(classify_components(&n2), ComponentShape::NegativeSectionPlusConnected);
        assert_eq!(classify_components(&[RuledClass::h(0); 6]), ComponentShape::AllSections);
        let n1 = [RuledClass::s_infinity(1), 5 * RuledClass::h(1)];
        assert_eq!(classify_components(&n1), ComponentShape::Invalid(InvalidReason::NotTwoDivisible));
        assert_eq!(classify_components(&[RuledClass::new(0, 6, 2)]), ComponentShape::Connected);
        assert_eq!(
            classify_components(&[RuledClass::h(0), RuledClass::h(1)]),
            ComponentShape::Invalid(InvalidReason::MixedBundles)
        );
        assert_eq!(
            classify_components(&[RuledClass::new(0, 3, 1), RuledClass::new(0, 3, 1)]),
            ComponentShape::Invalid(InvalidReason::Intersecting)
        );
        assert_eq!(
            classify_components(&[RuledClass::new(0, 2, 0), RuledClass::new(0, 4, 0)]),
            ComponentShape::Invalid(InvalidReason::NotACurve)
        );
        // on P¹×P¹ a (-2)-section plus a disjoint 5-section is the n = 2 case in disguise
        assert_eq!(
            classify_components(&[RuledClass::new(0, 1, -1), RuledClass::new(0, 5, 5)]),
            ComponentShape::NegativeSectionPlusConnected
        );
    }

    #[test]
    fn double_covers() {
        assert_eq!(count_double_covers(1), 1);
        assert_eq!(count_double_covers(2), 2);
        assert_eq!(count_double_covers(4), 4);
    }
}
