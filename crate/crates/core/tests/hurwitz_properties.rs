mod common;

use common::{dir, random_moves};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use slf_core::braid::{equal_in_mcg, permutation_image};
use slf_core::homology::mod4_check;
use slf_core::hurwitz::{
    apply_moves, canonical_rep, equivalent, fiber_sum, fingerprints, from_generators, hurwitz_move, kind_multiset,
    normal_form_family, Equivalence, Family, MoveSequence,
};
use slf_core::lifts::{Factorization, TwistDescriptor, TwistKind};

/// Conjugation-invariant data of each entry, as a sorted multiset.
fn conjugacy_multiset(f: &Factorization) -> Vec<(TwistKind, i64, Vec<usize>)> {
    let mut out: Vec<_> = f
        .twists()
        .iter()
        .zip(f.standard_words().unwrap())
        .map(|(d, w)| (d.kind, w.exponent_sum(), permutation_image(&w).cycle_type()))
        .collect();
    out.sort();
    out
}

fn with_reducible() -> Factorization {
    let mut twists = normal_form_family(Family::I, 1).unwrap().into_twists();
    twists.truncate(6);
    let c = slf_core::braid::BraidWord::from_indices(6, &[2, 3]).unwrap();
    twists.insert(2, TwistDescriptor::new(TwistKind::Reducible(1), c).unwrap());
    Factorization::new(2, twists).unwrap()
}

#[test]
fn moves_preserve_invariants() {
    let mut rng = StdRng::seed_from_u64(5);
    let samples = [
        normal_form_family(Family::I, 1).unwrap(),
        normal_form_family(Family::Elliptic, 12).unwrap(),
        with_reducible(),
        from_generators(3, &[1, 4, 2, 6, 3]).unwrap(),
    ];
    for f in &samples {
        let product = f.product_word().unwrap();
        for _ in 0..20 {
            let count = rng.gen_range(1..8);
            let (g, _) = random_moves(&mut rng, f, count);
            assert_eq!(g.mu(), f.mu());
            assert_eq!(kind_multiset(&g), kind_multiset(f));
            assert_eq!(g.exponent_sum(), f.exponent_sum());
            assert_eq!(g.product_word().unwrap().exponent_sum(), product.exponent_sum());
            assert!(equal_in_mcg(&g.product_word().unwrap(), &product).unwrap());
            assert_eq!(conjugacy_multiset(&g), conjugacy_multiset(f));
            for n in 0..=1 {
                assert_eq!(mod4_check(&g, n), mod4_check(f, n));
            }
        }
    }
}

#[test]
fn right_then_left_round_trip() {
    let mut rng = StdRng::seed_from_u64(6);
    let f = normal_form_family(Family::II, 0).unwrap();
    let mut cur = f.clone();
    for _ in 0..1000 {
        let r = rng.gen_range(1..cur.mu());
        let first = rng.gen_bool(0.5);
        let there = hurwitz_move(&cur, r, dir(first)).unwrap();
        let back = hurwitz_move(&there, r, dir(!first)).unwrap();
        assert_eq!(fingerprints(&back).unwrap(), fingerprints(&cur).unwrap());
        if rng.gen_bool(0.05) {
            cur = f.clone();
        } else if rng.gen_bool(0.3) {
            cur = there;
        }
    }
}

#[test]
fn fibre_sum_is_associative() {
    let a = normal_form_family(Family::I, 1).unwrap();
    let b = normal_form_family(Family::II, 0).unwrap();
    let c = with_reducible();
    let left = fiber_sum(&fiber_sum(&a, &b).unwrap(), &c).unwrap();
    let right = fiber_sum(&a, &fiber_sum(&b, &c).unwrap()).unwrap();
    assert_eq!(fingerprints(&left).unwrap(), fingerprints(&right).unwrap());
    assert_eq!(left.mu(), a.mu() + b.mu() + c.mu());
    assert_eq!(left.t(), 1);
}

#[test]
fn canonical_rep_stable_under_moves() {
    let mut rng = StdRng::seed_from_u64(8);
    let tuples: [&[u16]; 4] = [&[1, 2, 1], &[1, 2, 3], &[1, 3, 2, 1], &[2, 1, 2, 3]];
    for gens in tuples {
        let f = from_generators(1, gens).unwrap();
        let base = canonical_rep(&f, 200_000).unwrap();
        assert!(base.complete, "{gens:?}");
        let again = canonical_rep(&base.factorization, 200_000).unwrap();
        assert_eq!(again.fingerprints, base.fingerprints);
        assert_eq!(fingerprints(&base.factorization).unwrap(), base.fingerprints);
        for _ in 0..5 {
            let count = rng.gen_range(1..4);
            let (g, _) = random_moves(&mut rng, &f, count);
            let c = canonical_rep(&g, 200_000).unwrap();
            assert_eq!(c.fingerprints, base.fingerprints, "{gens:?}");
            assert_eq!(c.explored, base.explored);
        }
    }
}

#[test]
fn random_moves_are_found_again() {
    let mut rng = StdRng::seed_from_u64(9);
    for f in [normal_form_family(Family::Elliptic, 12).unwrap(), normal_form_family(Family::I, 1).unwrap()] {
        for _ in 0..2 {
            let (g, _) = random_moves(&mut rng, &f, 5);
            match equivalent(&f, &g, 1_000_000).unwrap() {
                Equivalence::Equivalent(m) => {
                    assert!(m.len() <= 5);
                    assert_eq!(fingerprints(&apply_moves(&f, &m).unwrap()).unwrap(), fingerprints(&g).unwrap());
                }
                other => panic!("{other:?}"),
            }
        }
    }
}

#[test]
fn different_orbits_are_told_apart() {
    // same length, kinds and exponent data, but different generated groups
    let a = from_generators(1, &[1, 1, 1]).unwrap();
    let b = from_generators(1, &[1, 2, 1]).unwrap();
    assert!(matches!(equivalent(&a, &b, 10_000).unwrap(), Equivalence::NotEquivalent(_)));
    assert_eq!(equivalent(&a, &a, 10).unwrap(), Equivalence::Equivalent(MoveSequence::default()));
}
