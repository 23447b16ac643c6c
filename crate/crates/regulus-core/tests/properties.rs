//! Property tests for the algebraic primitives.

use proptest::prelude::*;

use regulus_core::pbij::PartialBijection;
use regulus_core::ring::CoeffRing;

/// Strategy: a random partial bijection on `degree` points.
fn partial_bijection(degree: usize) -> impl Strategy<Value = PartialBijection> {
    // a permutation plus a keep-mask gives an arbitrary partial bijection
    (
        Just(degree),
        proptest::collection::vec(0..degree, degree),
        proptest::collection::vec(any::<bool>(), degree),
    )
        .prop_map(|(degree, mut perm, keep)| {
            // Fisher-Yates from the raw picks
            let picks = perm.clone();
            let mut ids: Vec<usize> = (0..degree).collect();
            for i in (1..degree).rev() {
                ids.swap(i, picks[i] % (i + 1));
            }
            perm = ids;
            let images = (0..degree)
                .map(|x| if keep[x] { Some(perm[x]) } else { None })
                .collect();
            PartialBijection::new(images).expect("masked permutation is injective")
        })
}

fn curated_ring() -> impl Strategy<Value = CoeffRing> {
    prop_oneof![
        Just(CoeffRing::Rationals),
        Just(CoeffRing::prime_field(2).unwrap()),
        Just(CoeffRing::prime_field(5).unwrap()),
        Just(CoeffRing::integers_mod(6).unwrap()),
        Just(CoeffRing::integers_mod(12).unwrap()),
        Just(CoeffRing::product(vec![
            CoeffRing::prime_field(3).unwrap(),
            CoeffRing::integers_mod(6).unwrap(),
        ])
        .unwrap()),
    ]
}

proptest! {
    #[test]
    fn pbij_inverse_laws(s in partial_bijection(5)) {
        let st = s.inverse();
        prop_assert_eq!(s.compose(&st).unwrap().compose(&s).unwrap(), s.clone());
        prop_assert_eq!(st.compose(&s).unwrap().compose(&st).unwrap(), st.clone());
        prop_assert!(s.compose(&st).unwrap().is_idempotent());
    }

    #[test]
    fn pbij_involution_antihomomorphism(
        s in partial_bijection(5),
        t in partial_bijection(5),
    ) {
        let lhs = s.compose(&t).unwrap().inverse();
        let rhs = t.inverse().compose(&s.inverse()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pbij_composition_associative(
        s in partial_bijection(4),
        t in partial_bijection(4),
        u in partial_bijection(4),
    ) {
        let left = s.compose(&t).unwrap().compose(&u).unwrap();
        let right = s.compose(&t.compose(&u).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn scalar_ring_axioms(ring in curated_ring(), xs in proptest::collection::vec(-20i64..20, 3)) {
        let a = ring.from_int(xs[0]);
        let b = ring.from_int(xs[1]);
        let c = ring.from_int(xs[2]);
        // commutativity, associativity, distributivity, neutral elements
        prop_assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(
            ring.add(&ring.add(&a, &b), &c),
            ring.add(&a, &ring.add(&b, &c))
        );
        prop_assert_eq!(
            ring.mul(&ring.mul(&a, &b), &c),
            ring.mul(&a, &ring.mul(&b, &c))
        );
        prop_assert_eq!(
            ring.mul(&a, &ring.add(&b, &c)),
            ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
        );
        prop_assert_eq!(ring.add(&a, &ring.zero()), a.clone());
        prop_assert_eq!(ring.mul(&a, &ring.one()), a.clone());
        prop_assert_eq!(ring.add(&a, &ring.neg(&a)), ring.zero());
    }

    #[test]
    fn scalar_inverse_contract(ring in curated_ring(), x in -20i64..20) {
        let a = ring.from_int(x);
        match ring.try_invert(&a) {
            Ok(inv) => prop_assert_eq!(ring.mul(&a, &inv), ring.one()),
            Err(_) => {
                // a non-unit must fail the unit equation for every element of
                // a finite ring
                if let Some(size) = ring.size() {
                    for i in 0..size {
                        let b = ring.element_from_index(i);
                        prop_assert_ne!(ring.mul(&a, &b), ring.one());
                    }
                }
            }
        }
    }

    #[test]
    fn closure_of_partial_bijections_is_inverse_semigroup(
        gens in proptest::collection::vec(partial_bijection(3), 1..3),
    ) {
        // every closure must satisfy the inverse semigroup axioms, checked
        // by the constructor itself
        if let Ok(s) = regulus_core::invsgp::FiniteInverseSemigroup::generate(&gens, 500) {
            prop_assert!(s.verify_inverse_axioms().is_ok());
            // natural partial order: 0-ary sanity, s <= s
            for i in 0..s.len() {
                prop_assert!(s.natural_leq(i, i));
            }
        }
    }
}
