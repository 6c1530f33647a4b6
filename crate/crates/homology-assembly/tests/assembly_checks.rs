//! Cross-crate checks: the graded invariants against the polynomial
//! invariant computed from actual braid words.

use braid_core::BraidWord;
use homology_assembly::{check_conjecture_euler, kr_unknot, kr_unlink, LinkExample};
use num_bigint::BigInt;
use skein_poly::sl_n_polynomial;

#[test]
fn euler_characteristics_match_the_polynomial_at_minus_one() {
    let examples = [
        LinkExample::Unknot,
        LinkExample::Unlink(2),
        LinkExample::Unlink(3),
        LinkExample::Trefoil,
    ];
    for n in 1..=4usize {
        for example in examples {
            assert!(
                check_conjecture_euler(example, n).unwrap(),
                "{example:?} at n = {n}"
            );
        }
    }
}

#[test]
fn the_bridge_value_is_mirror_invariant() {
    for n in 2..=4usize {
        let left = sl_n_polynomial(&BraidWord::new(2, vec![-1, -1, -1]).unwrap(), n);
        let right = sl_n_polynomial(&BraidWord::new(2, vec![1, 1, 1]).unwrap(), n);
        assert_ne!(left, right, "the two trefoils have distinct polynomials");
        assert_eq!(left.eval_at_minus_one(), right.eval_at_minus_one());
    }
}

#[test]
fn unlink_poincare_polynomial_is_a_power() {
    for n in 2..=4usize {
        let single = kr_unknot(n).poincare_polynomial();
        let double = kr_unlink(n, 2).unwrap().poincare_polynomial();
        assert_eq!(double, single.pow(2));
        let chi = kr_unlink(n, 3).unwrap().euler_characteristic();
        assert_eq!(BigInt::from(chi), single.eval_at_minus_one().pow(3));
    }
}
