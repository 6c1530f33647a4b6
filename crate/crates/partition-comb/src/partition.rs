use std::fmt;

use crate::error::CombinatoricsError;

/// An integer partition: a nonincreasing list of positive parts.
///
/// The constructor canonicalizes its input (sorts descending, drops zeros),
/// so two `Partition`s compare equal exactly when they are the same
/// partition.  The derived `Ord` is lexicographic on the part lists, which
/// refines dominance: if `a` is dominated by `b` then `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from any list of nonnegative integers.
    /// Zeros are dropped and the rest is sorted into nonincreasing order.
    pub fn new(parts: impl IntoIterator<Item = u64>) -> Self {
        let mut parts: Vec<u64> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangular partition with `count` parts equal to `part`
    /// (empty if `part` is 0).
    pub fn rectangle(count: usize, part: u64) -> Self {
        if part == 0 {
            Partition::empty()
        } else {
            Partition {
                parts: vec![part; count],
            }
        }
    }

    /// The parts, in nonincreasing order.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The total being partitioned.
    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of the value `k` among the parts.
    pub fn multiplicity(&self, k: u64) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// The dual (conjugate) partition: its j-th part counts the parts of
    /// `self` that are at least j.
    pub fn dual(&self) -> Partition {
        let columns = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=columns)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u64)
            .collect();
        Partition { parts }
    }

    /// Prefix sums `π_1, π_1+π_2, …`, padded with the total out to `len`
    /// entries.
    fn prefix_sums(&self, len: usize) -> Vec<u64> {
        let mut sums = Vec::with_capacity(len);
        let mut acc = 0;
        for i in 0..len {
            acc += self.parts.get(i).copied().unwrap_or(0);
            sums.push(acc);
        }
        sums
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Dominance comparison: `π ≼ ρ` iff every prefix sum of `π` is at most the
/// corresponding prefix sum of `ρ`.  Only defined for partitions of the same
/// total.
pub fn dominance_leq(pi: &Partition, rho: &Partition) -> Result<bool, CombinatoricsError> {
    if pi.total() != rho.total() {
        return Err(CombinatoricsError::UnequalTotals {
            left: pi.total(),
            right: rho.total(),
        });
    }
    let len = pi.num_parts().max(rho.num_parts());
    let left = pi.prefix_sums(len);
    let right = rho.prefix_sums(len);
    Ok(left.iter().zip(&right).all(|(l, r)| l <= r))
}

/// All partitions of `total`, in ascending lexicographic order (which is
/// compatible with dominance: dominated partitions come first).
pub fn all_partitions(total: u64) -> Vec<Partition> {
    fn gen(remaining: u64, max_part: u64, stack: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            stack.push(part);
            gen(remaining - part, part, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    gen(total, total.max(1), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The partitions `ρ ⊢ total` with `π ≼ ρ`, in ascending lexicographic order
/// (so `π` itself comes first and `(total)` last).  Dominance only relates
/// partitions of equal totals, so if `total` differs from `π`'s total the
/// result is empty.
pub fn orbits_in_closure(pi: &Partition, total: u64) -> Vec<Partition> {
    if pi.total() != total {
        return Vec::new();
    }
    all_partitions(total)
        .into_iter()
        .filter(|rho| dominance_leq(pi, rho).expect("equal totals by construction"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    #[test]
    fn constructor_canonicalizes() {
        assert_eq!(p(&[1, 3, 0, 2]).parts(), &[3, 2, 1]);
        assert_eq!(p(&[0, 0]).parts(), &[] as &[u64]);
        assert_eq!(Partition::rectangle(3, 2).parts(), &[2, 2, 2]);
        assert_eq!(Partition::rectangle(3, 0), Partition::empty());
    }

    #[test]
    fn totals_and_multiplicities() {
        let q = p(&[3, 2, 2, 1]);
        assert_eq!(q.total(), 8);
        assert_eq!(q.num_parts(), 4);
        assert_eq!(q.multiplicity(2), 2);
        assert_eq!(q.multiplicity(5), 0);
    }

    #[test]
    fn dual_column_counts() {
        assert_eq!(p(&[2, 1, 1]).dual(), p(&[3, 1]));
        assert_eq!(p(&[6]).dual(), Partition::rectangle(6, 1));
        assert_eq!(Partition::empty().dual(), Partition::empty());
    }

    #[test]
    fn dual_is_an_involution() {
        for total in 0..=9 {
            for q in all_partitions(total) {
                assert_eq!(q.dual().dual(), q);
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 1, 1]), &p(&[2, 2])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        for rho in all_partitions(6) {
            assert!(dominance_leq(&Partition::rectangle(6, 1), &rho).unwrap());
        }
    }

    #[test]
    fn dominance_rejects_unequal_totals() {
        let err = dominance_leq(&p(&[2, 1]), &p(&[2, 2])).unwrap_err();
        assert_eq!(err, CombinatoricsError::UnequalTotals { left: 3, right: 4 });
    }

    #[test]
    fn lexicographic_order_refines_dominance() {
        for total in 0..=10 {
            let all = all_partitions(total);
            for a in &all {
                for b in &all {
                    if dominance_leq(a, b).unwrap() {
                        assert!(a <= b, "{a} dominated by {b} but not lex-below it");
                    }
                }
            }
        }
    }

    #[test]
    fn partition_counts_match_euler() {
        let counts: Vec<usize> = (0..=10).map(|n| all_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn closure_of_regular_orbit_is_itself() {
        assert_eq!(orbits_in_closure(&p(&[5]), 5), vec![p(&[5])]);
    }

    #[test]
    fn closure_of_zero_orbit_is_everything() {
        assert_eq!(
            orbits_in_closure(&Partition::rectangle(4, 1), 4),
            all_partitions(4)
        );
    }

    #[test]
    fn closure_of_two_two() {
        assert_eq!(
            orbits_in_closure(&p(&[2, 2]), 4),
            vec![p(&[2, 2]), p(&[3, 1]), p(&[4])]
        );
    }

    #[test]
    fn closure_with_mismatched_total_is_empty() {
        assert!(orbits_in_closure(&p(&[2, 2]), 5).is_empty());
    }
}
