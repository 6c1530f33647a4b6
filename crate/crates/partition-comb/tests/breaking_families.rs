//! Pinned counts for the five named breaking families that drive the
//! fiber-decomposition bookkeeping, swept over small (m, n).

use partition_comb::{breakings, Partition};

fn repeat_parts(groups: &[(u64, usize)]) -> Partition {
    Partition::new(
        groups
            .iter()
            .flat_map(|&(value, count)| std::iter::repeat(value).take(count)),
    )
}

fn count(pi: &Partition, sigma: &Partition) -> usize {
    let list = breakings(pi, sigma).unwrap();
    for b in &list {
        assert_eq!(&b.concatenation(), pi);
        assert_eq!(b.slot_sums(), sigma.parts());
    }
    list.len()
}

/// π = (2,1,1), σ = (2,2): the two assignments of {2} and {1,1} to the slots.
#[test]
fn family_one_has_exactly_two() {
    assert_eq!(count(&repeat_parts(&[(2, 1), (1, 2)]), &Partition::rectangle(2, 2)), 2);
}

/// π = (1^m (n−1)^m), σ = (1^{m−1} (n−1)^{m−1} n): the n-slot must take
/// {n−1, 1} and everything else is forced.
#[test]
fn family_two_is_unique() {
    for m in 2..=4 {
        for n in 3..=5 {
            let pi = repeat_parts(&[(1, m), (n - 1, m)]);
            let sigma = repeat_parts(&[(1, m - 1), (n - 1, m - 1), (n, 1)]);
            assert_eq!(count(&pi, &sigma), 1, "m={m} n={n}");
        }
    }
}

/// π = (1^{m+n−1} (n−1)^{m−1}), σ = (1^{m−1} (n−1)^{m−1} n): the n-slot takes
/// either all ones, or {n−1, 1} with one of the m−1 subregular slots
/// dissolving into ones — m choices in total.
#[test]
fn family_three_has_exactly_m() {
    for m in 2..=4usize {
        for n in 3..=5 {
            let pi = repeat_parts(&[(1, m + n as usize - 1), (n - 1, m - 1)]);
            let sigma = repeat_parts(&[(1, m - 1), (n - 1, m - 1), (n, 1)]);
            assert_eq!(count(&pi, &sigma), m, "m={m} n={n}");
        }
    }
}

/// π = (1^m (n−1)^m), σ = (1^{m−2} 2 (n−1)^m): the 2-slot takes {1,1};
/// unique once n−1 > 2, i.e. n > 3.
#[test]
fn family_four_is_unique_above_n_three() {
    for m in 2..=4 {
        for n in 4..=5 {
            let pi = repeat_parts(&[(1, m), (n - 1, m)]);
            let sigma = repeat_parts(&[(1, m - 2), (2, 1), (n - 1, m)]);
            assert_eq!(count(&pi, &sigma), 1, "m={m} n={n}");
        }
    }
}

/// π = (1^m (n−1)^m), σ = (1^{m−2} (n−1)^{m−1} (n+1)): the (n+1)-slot takes
/// {n−1, 1, 1}; unique when that is the only sub-multiset of π's parts
/// summing to n+1.
#[test]
fn family_five_is_unique_above_n_three() {
    for m in 2..=4 {
        for n in 4..=5 {
            let pi = repeat_parts(&[(1, m), (n - 1, m)]);
            let sigma = repeat_parts(&[(1, m - 2), (n - 1, m - 1), (n + 1, 1)]);
            assert_eq!(count(&pi, &sigma), 1, "m={m} n={n}");
        }
    }
}

/// At n = 3 the (n+1)-slot sum is 4 = 2 + 2 as well as 2 + 1 + 1, so the
/// fifth family stops being unique: the slot can absorb two subregular
/// parts, after which exactly one of the m−1 remaining 2-slots must dissolve
/// into ones.  That yields (m−1) + 1 = m breakings.
#[test]
fn family_five_degenerates_at_n_three() {
    for m in 2..=5usize {
        let pi = repeat_parts(&[(1, m), (2, m)]);
        let sigma = repeat_parts(&[(1, m - 2), (2, m - 1), (4, 1)]);
        assert_eq!(count(&pi, &sigma), m, "m={m}");
    }
}
