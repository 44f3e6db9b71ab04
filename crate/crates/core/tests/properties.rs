//! Property tests over randomly parameterized groups: structural invariants
//! that should survive any choice of family, size, and element pair.

use group_ds::subgroup::{closure, transversal, Side, Subgroup};
use group_ds::{build_auto, gen, wire, CayleyGroup};
use proptest::prelude::*;

/// A pool of small groups spanning the shapes the builder distinguishes.
fn group_strategy() -> impl Strategy<Value = CayleyGroup> {
    prop_oneof![
        (1usize..=48).prop_map(|m| gen::cyclic(m).unwrap()),
        (3usize..=24).prop_map(|m| gen::dihedral(m).unwrap()),
        (2usize..=4).prop_map(|m| gen::symmetric(m).unwrap()),
        (4usize..=5).prop_map(|m| gen::alternating(m).unwrap()),
        ((2usize..=6), (2usize..=6)).prop_map(|(a, b)| {
            gen::direct_product(&gen::cyclic(a).unwrap(), &gen::cyclic(b).unwrap()).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn built_structure_agrees_with_table(g in group_strategy(), a_raw in 0usize..4096, b_raw in 0usize..4096) {
        let (ds, _) = build_auto(&g).unwrap();
        let (a, b) = (a_raw % g.order(), b_raw % g.order());
        prop_assert_eq!(ds.multiply_dense(a, b), g.mul(a, b));
        prop_assert_eq!(ds.word_count(), ds.census());
        let mut lookups = 0;
        ds.multiply_counted(a, b, &mut lookups);
        prop_assert_eq!(lookups, ds.lookup_count());
    }

    #[test]
    fn generated_tables_are_associative_on_resampled_triples(
        g in group_strategy(),
        triples in prop::collection::vec((0usize..4096, 0usize..4096, 0usize..4096), 32),
    ) {
        let n = g.order();
        for (a, b, c) in triples {
            let (a, b, c) = (a % n, b % n, c % n);
            prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
    }

    #[test]
    fn serialization_round_trips(g in group_strategy()) {
        let (ds, _) = build_auto(&g).unwrap();
        let bytes = wire::serialize(&ds);
        let back = wire::deserialize(&bytes).unwrap();
        prop_assert_eq!(wire::serialize(&back), bytes);
        // spot products
        let n = g.order();
        for (a, b) in [(0, 0), (n - 1, n - 1), (n / 2, n / 3)] {
            prop_assert_eq!(back.multiply_dense(a, b), g.mul(a, b));
        }
    }

    #[test]
    fn transversal_product_map_is_bijective(g in group_strategy(), x_raw in 0usize..4096) {
        let x = x_raw % g.order();
        let h = closure(&g, &[x]);
        let t = transversal(&g, &h, Side::Right);
        let mut hit = vec![false; g.order()];
        for &a in h.elements() {
            for &r in &t.reps {
                let p = g.mul(a, r);
                prop_assert!(!hit[p], "product map collides");
                hit[p] = true;
            }
        }
        prop_assert!(hit.iter().all(|&b| b));
    }

    #[test]
    fn normalizer_contains_subgroup_and_normalizes(g in group_strategy(), x_raw in 0usize..4096) {
        let x = x_raw % g.order();
        let h = closure(&g, &[x]);
        let n = group_ds::normalizer(&g, &h);
        prop_assert!(h.is_subset_of(&n));
        // h is normal inside its normalizer: conjugation by members stays in h
        for &c in n.elements() {
            for &e in h.elements() {
                prop_assert!(h.contains(g.conjugate(c, e)));
            }
        }
    }

    #[test]
    fn subgroup_certificates_accept_closures(g in group_strategy(), xs in prop::collection::vec(0usize..4096, 0..3)) {
        let gens: Vec<usize> = xs.iter().map(|&x| x % g.order()).collect();
        let h = closure(&g, &gens);
        // re-certifying the closed element list must succeed
        prop_assert!(Subgroup::certified(&g, h.elements().to_vec()).is_ok());
        prop_assert_eq!(g.order() % h.order(), 0);
    }
}
