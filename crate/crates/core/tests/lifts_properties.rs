mod common;

use common::{random_letters, word};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use slf_core::braid::{permutation_image, BraidWord, Letter};
use slf_core::homology::{mod4_check, solve_branch_class};
use slf_core::hurwitz::{normal_form_family, Family};
use slf_core::lifts::{standard_word, validate, CentralElement, Factorization, TwistDescriptor, TwistKind};

fn kind_strategy(genus: u32) -> impl Strategy<Value = TwistKind> {
    let max_h = genus / 2;
    prop_oneof![Just(TwistKind::Irreducible), (1..=max_h.max(1)).prop_map(TwistKind::Reducible),]
        .prop_filter("h in range", move |k| k.check_genus(genus).is_ok())
}

fn conj_strategy(strands: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..strands as u16, any::<bool>()), 0..10).prop_map(move |v| {
        let letters = v.into_iter().map(|(i, inv)| if inv { Letter::x_inv(i) } else { Letter::x(i) }).collect();
        BraidWord::new(strands, letters).unwrap()
    })
}

proptest! {
    #[test]
    fn standard_word_data((genus, kind, conj) in (2u32..=5).prop_flat_map(|g| (Just(g), kind_strategy(g), conj_strategy(2 * g as usize + 2)))) {
        let d = TwistDescriptor::new(kind, conj).unwrap();
        let w = standard_word(&d, genus).unwrap();
        prop_assert_eq!(w.exponent_sum(), d.mu_virt_contribution());
        let p = permutation_image(&w);
        match kind {
            TwistKind::Irreducible => {
                let mut expect = vec![1; 2 * genus as usize];
                expect.push(2);
                prop_assert_eq!(p.cycle_type(), expect);
            }
            TwistKind::Reducible(_) => prop_assert!(p.is_identity()),
        }
    }
}

fn relator_words(strands: usize) -> Vec<BraidWord> {
    let m = strands as i32 - 1;
    let mut out = vec![BraidWord::sphere_relator(strands).unwrap()];
    for i in 1..m {
        out.push(word(strands, &[i, i + 1, i, -(i + 1), -i, -(i + 1)]));
    }
    for i in 1..m - 1 {
        out.push(word(strands, &[i, i + 2, -i, -(i + 2)]));
    }
    out
}

#[test]
fn validation_ignores_relators_in_conjugators() {
    let mut rng = StdRng::seed_from_u64(11);
    for (family, k) in [(Family::I, 1), (Family::II, 0), (Family::Elliptic, 12)] {
        let f = normal_form_family(family, k).unwrap();
        let strands = f.strands();
        let rels = relator_words(strands);
        let before = validate(&f).unwrap();
        for _ in 0..5 {
            let twists: Vec<TwistDescriptor> = f
                .twists()
                .iter()
                .map(|d| {
                    let r = &rels[rng.gen_range(0..rels.len())];
                    let r = if rng.gen_bool(0.5) { r.clone() } else { r.inverse() };
                    let pad = BraidWord::new(strands, random_letters(&mut rng, strands, 3)).unwrap();
                    let pad_r = pad.concat(&r).unwrap().concat(&pad.inverse()).unwrap();
                    TwistDescriptor::new(d.kind, d.conjugator.concat(&pad_r).unwrap()).unwrap()
                })
                .collect();
            let g = Factorization::new(f.genus(), twists).unwrap();
            assert_eq!(validate(&g).unwrap(), before);
        }
    }
}

#[test]
fn family_validation_reports() {
    for k in 1..=3 {
        let r = validate(&normal_form_family(Family::I, k).unwrap()).unwrap();
        assert_eq!((r.mu, r.t, r.exponent_sum), (20 * k as usize, 0, 20 * k as i64));
        assert_eq!(r.central_element, CentralElement::Trivial);
        let r = validate(&normal_form_family(Family::II, k).unwrap()).unwrap();
        assert_eq!(r.central_element, CentralElement::FullTwist);
        let r = validate(&normal_form_family(Family::III, k).unwrap()).unwrap();
        assert_eq!(r.central_element, CentralElement::Trivial);
    }
    let r = validate(&normal_form_family(Family::Elliptic, 12).unwrap()).unwrap();
    assert_eq!(r.central_element, CentralElement::Undetermined);
}

#[test]
fn reducible_twist_factorizations() {
    let f = Factorization::new(
        2,
        vec![TwistDescriptor::new(TwistKind::Reducible(1), BraidWord::identity(6).unwrap()).unwrap()],
    )
    .unwrap();
    assert!(validate(&f).is_err(), "a single separating twist is not a relation");
    assert_eq!(f.exponent_sum(), 12);
    assert!(matches!(
        solve_branch_class(2, 0, &f.h_list(), None),
        Err(slf_core::Error::NoSolution { genus: 2, mu_virt: 12 })
    ));
    assert!(mod4_check(&f, 0));
}
