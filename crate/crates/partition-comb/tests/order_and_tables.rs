//! Property tests for the dominance order and cross-checks tying the Kostka
//! enumerator to the permutation scan.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use partition_comb::{
    catalan, check_schensted, dominance_leq, kostka, kostka_with_composition, lis_count,
    spaltenstein_dim, Partition,
};

fn arb_partition(total: u64) -> impl Strategy<Value = Partition> {
    // Random cut points of [0, total] give a random composition; the
    // constructor canonicalizes it into a partition.
    proptest::collection::vec(1..=total.max(1), 0..=total as usize)
        .prop_map(move |cuts| {
            let mut parts = Vec::new();
            let mut last = 0;
            let mut cuts: Vec<u64> = cuts.into_iter().filter(|&c| c < total).collect();
            cuts.sort_unstable();
            cuts.dedup();
            for c in cuts {
                parts.push(c - last);
                last = c;
            }
            parts.push(total - last);
            Partition::new(parts)
        })
}

proptest! {
    #[test]
    fn dominance_is_reflexive(pi in arb_partition(12)) {
        prop_assert!(dominance_leq(&pi, &pi).unwrap());
    }

    #[test]
    fn dominance_is_antisymmetric(a in arb_partition(12), b in arb_partition(12)) {
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &a).unwrap() {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn dominance_is_transitive(
        a in arb_partition(10),
        b in arb_partition(10),
        c in arb_partition(10),
    ) {
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &c).unwrap() {
            prop_assert!(dominance_leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn dual_reverses_dominance(a in arb_partition(10), b in arb_partition(10)) {
        prop_assert_eq!(
            dominance_leq(&a, &b).unwrap(),
            dominance_leq(&b.dual(), &a.dual()).unwrap()
        );
    }
}

#[test]
fn kostka_is_symmetric_in_shuffled_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let cases: &[(&[u64], &[u64])] = &[
        (&[3, 2, 1], &[2, 2, 1, 1]),
        (&[4, 2], &[2, 2, 1, 1]),
        (&[2, 2, 2], &[1, 1, 1, 1, 1, 1]),
        (&[3, 3], &[2, 1, 1, 1, 1]),
        (&[4, 3, 1], &[3, 2, 2, 1]),
    ];
    for &(shape, weight) in cases {
        let rho = Partition::new(shape.iter().copied());
        let reference = kostka_with_composition(&rho, weight).unwrap();
        for _ in 0..10 {
            let mut shuffled = weight.to_vec();
            shuffled.shuffle(&mut rng);
            let value = kostka_with_composition(&rho, &shuffled).unwrap();
            assert_eq!(value, reference, "shape {shape:?}, weight {shuffled:?}");
        }
    }
}

#[test]
fn schensted_identity_over_the_full_verification_window() {
    for m in 1..=6 {
        for n in 1..=4 {
            assert!(check_schensted(m, n).unwrap(), "m={m} n={n}");
        }
    }
}

#[test]
fn catalan_column_matches_both_sides() {
    for m in 1..=6u64 {
        let shape = Partition::rectangle(m as usize, 2);
        let weight = Partition::rectangle(2 * m as usize, 1);
        assert_eq!(kostka(&shape, &weight).unwrap(), catalan(m));
        assert_eq!(lis_count(m as usize, 2).unwrap(), catalan(m));
    }
}

#[test]
fn largest_supported_rectangle() {
    // 24 cells: the widest case the verification sweep needs.
    let shape = Partition::rectangle(6, 4);
    let weight = Partition::new(std::iter::repeat(1).take(6).chain(std::iter::repeat(3).take(6)));
    assert_eq!(kostka(&shape, &weight).unwrap(), 694);
}

#[test]
fn spaltenstein_consistency_with_dominance_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFEED);
    for _ in 0..200 {
        let total = 1 + (rand::Rng::gen_range(&mut rng, 0..10u64));
        let random_partition = |rng: &mut ChaCha8Rng| {
            let mut remaining = total;
            let mut parts = Vec::new();
            while remaining > 0 {
                let p = rand::Rng::gen_range(&mut *rng, 1..=remaining);
                parts.push(p);
                remaining -= p;
            }
            Partition::new(parts)
        };
        let rho = random_partition(&mut rng);
        let pi = random_partition(&mut rng);
        if dominance_leq(&pi, &rho).unwrap() {
            assert!(spaltenstein_dim(&rho, &pi).unwrap() >= 0);
        }
    }
}
