use crate::error::CombinatoricsError;
use crate::partition::Partition;

/// Hard ceiling on the number of cells the tableau backtracker will accept.
/// Large enough for the rectangular shapes exercised by the workbench
/// (up to 4 rows × 6 columns plus headroom), small enough that the
/// exhaustive search always finishes in well under a second.
pub const MAX_TABLEAU_CELLS: u64 = 28;

/// The Kostka number `K_{ρπ}`: the number of semistandard Young tableaux of
/// shape `ρ` and content `π` (rows weakly increasing, columns strictly
/// increasing, value `i` used `π_i` times).
///
/// Kostka numbers are symmetric in the content, so the weight is taken as a
/// partition; [`kostka_with_composition`] accepts an arbitrarily ordered
/// composition and is used to test that symmetry.
pub fn kostka(rho: &Partition, weight: &Partition) -> Result<u64, CombinatoricsError> {
    kostka_with_composition(rho, weight.parts())
}

/// Counts semistandard tableaux of shape `ρ` whose content is the given
/// composition: value `i+1` must appear exactly `weight[i]` times.  Zero
/// entries in the composition are allowed (the corresponding value is
/// simply unused).
pub fn kostka_with_composition(
    rho: &Partition,
    weight: &[u64],
) -> Result<u64, CombinatoricsError> {
    let cells = rho.total();
    let weight_total: u64 = weight.iter().sum();
    if cells != weight_total {
        return Err(CombinatoricsError::UnequalTotals {
            left: cells,
            right: weight_total,
        });
    }
    if cells > MAX_TABLEAU_CELLS {
        return Err(CombinatoricsError::TableauTooLarge {
            cells,
            limit: MAX_TABLEAU_CELLS,
        });
    }
    if cells == 0 {
        return Ok(1);
    }

    let rows: Vec<usize> = rho.parts().iter().map(|&p| p as usize).collect();
    let column_heights: Vec<usize> = rho
        .dual()
        .parts()
        .iter()
        .map(|&p| p as usize)
        .collect();
    let mut remaining: Vec<u64> = weight.to_vec();
    let num_values = remaining.len();
    // tableau[r][c] holds the 1-based value placed in that cell.
    let mut tableau: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();

    fn fill(
        rows: &[usize],
        column_heights: &[usize],
        num_values: usize,
        tableau: &mut [Vec<usize>],
        remaining: &mut [u64],
        r: usize,
        c: usize,
    ) -> u64 {
        if r == rows.len() {
            return 1;
        }
        let (next_r, next_c) = if c + 1 < rows[r] { (r, c + 1) } else { (r + 1, 0) };
        // Row weakly increasing, column strictly increasing.
        let min_value = {
            let left = if c > 0 { tableau[r][c - 1] } else { 1 };
            let above = if r > 0 { tableau[r - 1][c] + 1 } else { 1 };
            left.max(above)
        };
        // The cells below this one in the same column need strictly larger
        // values, so leave room for them.
        let below = column_heights[c] - 1 - r;
        let max_value = num_values.saturating_sub(below);
        let mut count = 0;
        for value in min_value..=max_value {
            if remaining[value - 1] == 0 {
                continue;
            }
            remaining[value - 1] -= 1;
            tableau[r][c] = value;
            count += fill(
                rows,
                column_heights,
                num_values,
                tableau,
                remaining,
                next_r,
                next_c,
            );
            remaining[value - 1] += 1;
        }
        count
    }

    Ok(fill(
        &rows,
        &column_heights,
        num_values,
        &mut tableau,
        &mut remaining,
        0,
        0,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    #[test]
    fn square_shape_standard_content() {
        assert_eq!(kostka(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap(), 2);
    }

    #[test]
    fn shape_equals_weight_gives_one() {
        for parts in [&[3u64, 2, 2, 1][..], &[5], &[1, 1, 1], &[4, 4]] {
            let q = p(parts);
            assert_eq!(kostka(&q, &q).unwrap(), 1);
        }
    }

    #[test]
    fn two_row_shape_with_a_repeated_value() {
        assert_eq!(kostka(&p(&[3, 3]), &p(&[2, 1, 1, 1, 1])).unwrap(), 3);
    }

    #[test]
    fn content_dominated_by_shape_or_zero() {
        // Weight (3,1) cannot fill shape (2,2): three 1s don't fit two columns.
        assert_eq!(kostka(&p(&[2, 2]), &p(&[3, 1])).unwrap(), 0);
        // Single-column shapes force all-distinct values.
        assert_eq!(kostka(&p(&[1, 1, 1]), &p(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), 0);
    }

    #[test]
    fn composition_order_does_not_matter() {
        let rho = p(&[3, 2, 1]);
        let a = kostka_with_composition(&rho, &[3, 2, 1]).unwrap();
        let b = kostka_with_composition(&rho, &[1, 3, 2]).unwrap();
        let c = kostka_with_composition(&rho, &[2, 1, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        // And zeros interleaved in the composition change nothing.
        let d = kostka_with_composition(&rho, &[0, 3, 0, 2, 1, 0]).unwrap();
        assert_eq!(a, d);
    }

    #[test]
    fn empty_shape_has_one_filling() {
        assert_eq!(kostka(&Partition::empty(), &Partition::empty()).unwrap(), 1);
    }

    #[test]
    fn guard_rails() {
        let err = kostka(&p(&[2, 2]), &p(&[2, 1])).unwrap_err();
        assert_eq!(err, CombinatoricsError::UnequalTotals { left: 4, right: 3 });
        let big = Partition::rectangle(6, 5);
        let err = kostka(&big, &big).unwrap_err();
        assert_eq!(
            err,
            CombinatoricsError::TableauTooLarge {
                cells: 30,
                limit: MAX_TABLEAU_CELLS
            }
        );
    }
}
