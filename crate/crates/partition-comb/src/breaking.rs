use std::collections::BTreeMap;

use crate::error::CombinatoricsError;
use crate::partition::Partition;

/// A breaking of a partition `π` along a partition `σ`: one piece per part
/// of `σ` (in σ's nonincreasing order), where piece `i` is itself a
/// partition of `σ_i`, and the concatenation of all pieces uses exactly the
/// parts of `π`.
///
/// Pieces are ordered: assigning `(2)` to the first slot and `(1,1)` to the
/// second is a different breaking from the swap, even when the slots have
/// equal sums.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Breaking {
    pieces: Vec<Partition>,
}

impl Breaking {
    /// The pieces, one per part of σ.
    pub fn pieces(&self) -> &[Partition] {
        &self.pieces
    }

    /// All parts of all pieces merged back into a single partition.
    /// For a valid breaking of π this equals π.
    pub fn concatenation(&self) -> Partition {
        Partition::new(
            self.pieces
                .iter()
                .flat_map(|piece| piece.parts().iter().copied()),
        )
    }

    /// The sums of the individual pieces, i.e. the σ this breaks along.
    pub fn slot_sums(&self) -> Vec<u64> {
        self.pieces.iter().map(Partition::total).collect()
    }
}

/// Enumerates every breaking of `π` along `σ`, i.e. every way to distribute
/// the multiset of π's parts into slots indexed by σ's parts so that slot
/// `i` sums to `σ_i`.
///
/// The search assigns, slot by slot, a count of how many copies of each
/// distinct part value the slot receives; each count assignment corresponds
/// to exactly one breaking, so the output is duplicate-free by construction.
/// The list is returned in a canonical deterministic order.
pub fn breakings(pi: &Partition, sigma: &Partition) -> Result<Vec<Breaking>, CombinatoricsError> {
    if pi.total() != sigma.total() {
        return Err(CombinatoricsError::UnequalTotals {
            left: pi.total(),
            right: sigma.total(),
        });
    }

    // Distinct part values of π, descending, with multiplicities.
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &part in pi.parts() {
        *counts.entry(part).or_insert(0) += 1;
    }
    let values: Vec<u64> = counts.keys().rev().copied().collect();
    let mut remaining: Vec<usize> = values.iter().map(|v| counts[v]).collect();

    let slots = sigma.parts().to_vec();
    let mut pieces: Vec<Partition> = Vec::with_capacity(slots.len());
    let mut out = Vec::new();
    fill_slots(&slots, 0, &values, &mut remaining, &mut pieces, &mut out);
    Ok(out)
}

/// Recursively fills slot `slot` and beyond, consuming parts from
/// `remaining` (indexed parallel to `values`).
fn fill_slots(
    slots: &[u64],
    slot: usize,
    values: &[u64],
    remaining: &mut Vec<usize>,
    pieces: &mut Vec<Partition>,
    out: &mut Vec<Breaking>,
) {
    if slot == slots.len() {
        if remaining.iter().all(|&r| r == 0) {
            out.push(Breaking {
                pieces: pieces.clone(),
            });
        }
        return;
    }
    let mut chosen: Vec<(u64, usize)> = Vec::new();
    choose_for_slot(
        slots, slot, values, remaining, 0, slots[slot], &mut chosen, pieces, out,
    );
}

/// Chooses how many copies of each value (from index `value_idx` on) go into
/// the current slot, so that the chosen copies sum to `needed`.
#[allow(clippy::too_many_arguments)]
fn choose_for_slot(
    slots: &[u64],
    slot: usize,
    values: &[u64],
    remaining: &mut Vec<usize>,
    value_idx: usize,
    needed: u64,
    chosen: &mut Vec<(u64, usize)>,
    pieces: &mut Vec<Partition>,
    out: &mut Vec<Breaking>,
) {
    if needed == 0 {
        let piece = Partition::new(
            chosen
                .iter()
                .flat_map(|&(value, count)| std::iter::repeat(value).take(count)),
        );
        pieces.push(piece);
        fill_slots(slots, slot + 1, values, remaining, pieces, out);
        pieces.pop();
        return;
    }
    if value_idx == values.len() {
        return;
    }
    let value = values[value_idx];
    let max_copies = (remaining[value_idx] as u64).min(needed / value) as usize;
    for copies in (0..=max_copies).rev() {
        remaining[value_idx] -= copies;
        chosen.push((value, copies));
        choose_for_slot(
            slots,
            slot,
            values,
            remaining,
            value_idx + 1,
            needed - value * copies as u64,
            chosen,
            pieces,
            out,
        );
        chosen.pop();
        remaining[value_idx] += copies;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    #[test]
    fn two_breakings_of_two_one_one_along_two_two() {
        let list = breakings(&p(&[2, 1, 1]), &p(&[2, 2])).unwrap();
        assert_eq!(list.len(), 2);
        let as_sets: HashSet<Vec<Vec<u64>>> = list
            .iter()
            .map(|b| b.pieces().iter().map(|q| q.parts().to_vec()).collect())
            .collect();
        assert!(as_sets.contains(&vec![vec![2], vec![1, 1]]));
        assert!(as_sets.contains(&vec![vec![1, 1], vec![2]]));
    }

    #[test]
    fn trivial_breaking_of_a_partition_along_itself() {
        let q = p(&[3, 2, 2, 1]);
        let list = breakings(&q, &q).unwrap();
        assert_eq!(list.len(), 1);
        assert_eq!(list[0].concatenation(), q);
    }

    #[test]
    fn concatenation_and_slot_sums_hold_for_every_breaking() {
        let pi = p(&[2, 2, 1, 1, 1, 1]);
        let sigma = p(&[4, 3, 1]);
        let list = breakings(&pi, &sigma).unwrap();
        assert!(!list.is_empty());
        for b in &list {
            assert_eq!(b.concatenation(), pi);
            assert_eq!(b.slot_sums(), sigma.parts());
        }
        let distinct: HashSet<&Breaking> = list.iter().collect();
        assert_eq!(distinct.len(), list.len(), "duplicate breakings returned");
    }

    #[test]
    fn impossible_breaking_gives_empty_list() {
        // A slot of sum 1 can only take a part equal to 1, and π has none.
        assert!(breakings(&p(&[2, 2]), &p(&[3, 1])).unwrap().is_empty());
    }

    #[test]
    fn unequal_totals_rejected() {
        let err = breakings(&p(&[2, 1]), &p(&[2, 2])).unwrap_err();
        assert_eq!(err, CombinatoricsError::UnequalTotals { left: 3, right: 4 });
    }
}
