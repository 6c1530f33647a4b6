//! Cohomology of the two model spaces entering the closed-form
//! invariants: complex projective space and the total space of the
//! unit-sphere bundle in its tangent directions, computed honestly from
//! the Gysin sequence.

use crate::error::AssemblyError;
use crate::graded::GradedGroup;

/// Integral cohomology of ℂP^{n−1}: rank one in degrees 0, 2, …, 2n−2.
pub fn cohomology_cpn(n: usize) -> GradedGroup {
    GradedGroup::from_free_ranks((0..n).map(|k| (2 * k as i64, 1)))
}

/// Cohomology of the total space of a sphere bundle S^{2r−1} → E → B whose
/// base has free rank ≤ 1 in every degree, from the Gysin sequence
/// 0 → coker(∪e: H^{j−2r}(B) → H^j(B)) → H^j(E) → ker(∪e: H^{j−2r+1}(B) → H^{j+1}(B)) → 0.
/// Because every base group is 0 or ℤ, each cup-with-Euler-class map is
/// either zero or multiplication by the Euler number.
fn gysin_total_space(
    base: &GradedGroup,
    sphere_dim: usize,
    euler: i64,
) -> Result<GradedGroup, AssemblyError> {
    if sphere_dim % 2 == 0 {
        return Err(AssemblyError::InvalidInput(
            "only odd-dimensional sphere fibers are handled".into(),
        ));
    }
    for d in base.degrees() {
        let s = base.summand(d);
        if s.free > 1 || !s.torsion.is_empty() {
            return Err(AssemblyError::InvalidInput(
                "the base must have free rank at most one per degree".into(),
            ));
        }
    }
    let class_degree = sphere_dim as i64 + 1;
    let top = base.degrees().max().unwrap_or(0);
    let mut total = GradedGroup::zero();
    for j in 0..=top + class_degree {
        // Cokernel part in degree j.
        if base.summand(j).free == 1 {
            if base.summand(j - class_degree).free == 1 {
                match euler.unsigned_abs() {
                    0 => total.add_free(j, 1),
                    1 => {}
                    order => total.add_torsion(j, order)?,
                }
            } else {
                total.add_free(j, 1);
            }
        }
        // Kernel part in degree j: multiplication by a nonzero Euler
        // number is injective on ℤ, so only a vanishing target (or a zero
        // Euler number) contributes.
        let source = j - class_degree + 1;
        if base.summand(source).free == 1
            && (base.summand(j + 1).free == 0 || euler == 0)
        {
            total.add_free(j, 1);
        }
    }
    Ok(total)
}

/// Integral cohomology of the unit sphere bundle in the tangent
/// directions of ℂP^{n−1} (fiber S^{2n−3}, Euler number n): free rank one
/// in degrees 0, 2, …, 2n−4 and 2n−1, 2n+1, …, 4n−5, and a ℤ/n in degree
/// 2n−2.
pub fn cohomology_ut_cpn(n: usize) -> Result<GradedGroup, AssemblyError> {
    if n < 2 {
        return Err(AssemblyError::InvalidInput(
            "the sphere bundle needs n >= 2".into(),
        ));
    }
    gysin_total_space(&cohomology_cpn(n), 2 * n - 3, n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_space_has_rank_one_in_even_degrees() {
        for n in 1..=6usize {
            let g = cohomology_cpn(n);
            assert_eq!(g.total_free_rank(), n);
            assert_eq!(g.euler_characteristic(), n as i64);
            for k in 0..n {
                assert_eq!(g.summand(2 * k as i64).free, 1);
                assert!(g.summand(2 * k as i64).torsion.is_empty());
            }
            assert!(g.summand(2 * n as i64).is_zero());
            assert!(g.summand(1).is_zero());
        }
    }

    #[test]
    fn the_n_two_bundle_is_real_projective_three_space() {
        let g = cohomology_ut_cpn(2).unwrap();
        assert_eq!(g.summand(0).free, 1);
        assert_eq!(g.summand(1).free, 0);
        assert_eq!(g.summand(2).free, 0);
        assert_eq!(g.summand(2).torsion, vec![2]);
        assert_eq!(g.summand(3).free, 1);
        assert_eq!(g.degrees().count(), 3);
    }

    #[test]
    fn the_n_three_bundle_matches_the_direct_computation() {
        let g = cohomology_ut_cpn(3).unwrap();
        for d in [0i64, 2, 5, 7] {
            assert_eq!(g.summand(d).free, 1, "degree {d}");
            assert!(g.summand(d).torsion.is_empty());
        }
        assert_eq!(g.summand(4).free, 0);
        assert_eq!(g.summand(4).torsion, vec![3]);
        assert_eq!(g.degrees().count(), 5);
    }

    #[test]
    fn general_pattern_of_the_sphere_bundle_cohomology() {
        for n in 2..=6usize {
            let g = cohomology_ut_cpn(n).unwrap();
            let n_i = n as i64;
            for k in 0..n - 1 {
                assert_eq!(g.summand(2 * k as i64).free, 1);
            }
            assert_eq!(g.summand(2 * n_i - 2).torsion, vec![n as u64]);
            assert_eq!(g.summand(2 * n_i - 2).free, 0);
            for k in 0..n - 1 {
                assert_eq!(g.summand(2 * n_i - 1 + 2 * k as i64).free, 1);
            }
            assert_eq!(g.total_free_rank(), 2 * (n - 1));
            // Odd-dimensional closed manifold: zero Euler characteristic.
            assert_eq!(g.euler_characteristic(), 0);
        }
    }

    #[test]
    fn degenerate_bases_are_rejected() {
        assert!(cohomology_ut_cpn(1).is_err());
        let fat = GradedGroup::from_free_ranks([(0, 2)]);
        assert!(gysin_total_space(&fat, 1, 2).is_err());
        assert!(gysin_total_space(&cohomology_cpn(2), 2, 2).is_err());
    }
}
