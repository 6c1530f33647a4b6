use crate::error::CombinatoricsError;
use crate::kostka::kostka;
use crate::partition::Partition;

/// Hard ceiling on the permutation length scanned by [`lis_count`]; the scan
/// is factorial in the length (9! = 362880 permutations).
pub const MAX_LIS_LENGTH: usize = 9;

/// The m-th Catalan number `C(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> u64 {
    let mut value: u128 = 1;
    for k in 0..m as u128 {
        // value stays exactly divisible at every step:
        // C_{k+1} = C_k · 2(2k+1)/(k+2).
        value = value * 2 * (2 * k + 1) / (k + 2);
    }
    value as u64
}

/// Length of the longest increasing subsequence, by patience sorting.
fn longest_increasing_subsequence(perm: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &x in perm {
        let pos = tails.partition_point(|&t| t < x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

/// `d(m, n)`: the number of permutations of `m` elements whose longest
/// increasing subsequence has length at most `n`, by brute-force scan of all
/// `m!` permutations.
pub fn lis_count(m: usize, n: usize) -> Result<u64, CombinatoricsError> {
    if m > MAX_LIS_LENGTH {
        return Err(CombinatoricsError::PermutationTooLong {
            length: m,
            limit: MAX_LIS_LENGTH,
        });
    }
    let mut perm: Vec<usize> = (0..m).collect();
    let mut count = 0;
    // Heap's algorithm visits every permutation exactly once.
    let mut stack = vec![0usize; m];
    if longest_increasing_subsequence(&perm) <= n {
        count += 1;
    }
    let mut i = 1;
    while i < m {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            if longest_increasing_subsequence(&perm) <= n {
                count += 1;
            }
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    Ok(count)
}

/// Checks the Schensted identity relating the permutation count to a Kostka
/// number: `d(m, n) = K_{(n^m), (1^m (n−1)^m)}`.
pub fn check_schensted(m: usize, n: u64) -> Result<bool, CombinatoricsError> {
    let left = lis_count(m, n as usize)?;
    let shape = Partition::rectangle(m, n);
    let weight = Partition::new(
        std::iter::repeat(1)
            .take(m)
            .chain(std::iter::repeat(n.saturating_sub(1)).take(m)),
    );
    let right = kostka(&shape, &weight)?;
    Ok(left == right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let values: Vec<u64> = (0..=6).map(catalan).collect();
        assert_eq!(values, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn lis_at_most_two_is_catalan() {
        for m in 1..=6 {
            assert_eq!(lis_count(m, 2).unwrap(), catalan(m as u64), "m = {m}");
        }
    }

    #[test]
    fn lis_bound_at_least_length_counts_everything() {
        let factorials = [1u64, 1, 2, 6, 24, 120, 720];
        for m in 0..=6 {
            assert_eq!(lis_count(m, m).unwrap(), factorials[m]);
            assert_eq!(lis_count(m, m + 3).unwrap(), factorials[m]);
        }
    }

    #[test]
    fn lis_bound_one_leaves_only_the_decreasing_permutation() {
        for m in 1..=6 {
            assert_eq!(lis_count(m, 1).unwrap(), 1);
        }
    }

    #[test]
    fn three_letter_table() {
        let d3: Vec<u64> = (1..=6).map(|m| lis_count(m, 3).unwrap()).collect();
        assert_eq!(d3, vec![1, 2, 6, 23, 103, 513]);
    }

    #[test]
    fn four_letter_table() {
        let d4: Vec<u64> = (1..=6).map(|m| lis_count(m, 4).unwrap()).collect();
        assert_eq!(d4, vec![1, 2, 6, 24, 119, 694]);
    }

    #[test]
    fn length_guard() {
        let err = lis_count(10, 3).unwrap_err();
        assert_eq!(
            err,
            CombinatoricsError::PermutationTooLong {
                length: 10,
                limit: MAX_LIS_LENGTH
            }
        );
    }

    #[test]
    fn schensted_small_cases() {
        assert!(check_schensted(3, 2).unwrap());
        assert!(check_schensted(2, 3).unwrap());
        assert!(check_schensted(4, 3).unwrap());
    }

    #[test]
    fn schensted_degenerate_n_one() {
        // Shape (1^m), weight (1^m, 0^m): only the single-column tableau.
        for m in 1..=5 {
            assert!(check_schensted(m, 1).unwrap());
        }
    }
}
