//! Independent n = 2 oracle: Kauffman bracket state sum of a braid closure.
//!
//! Every crossing is resolved both ways (`2^c` states); loops of each full
//! resolution are counted with union–find, each state contributes
//! `A^{a-b} δ^{loops}` with `δ = -A^2 - A^{-2}` (all loops counted, so the
//! unknot's single loop already yields `δ`).  The writhe normalization
//! `(-A^3)^{-w}` and the substitution `A^2 ↦ -q` turn the bracket into the
//! same invariant as the R-matrix engine at n = 2 — the two share no code,
//! which is what makes the agreement test meaningful.

use crate::LaurentPoly;
use braid_core::BraidWord;

/// Largest crossing count the exponential state sum will attempt.
pub const MAX_ORACLE_CROSSINGS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KauffmanError {
    #[error("state sum over {crossings} crossings exceeds the budget of {max}")]
    CrossingBudgetExceeded { crossings: usize, max: usize },
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new() -> Self {
        Self { parent: Vec::new() }
    }

    fn fresh(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        self.parent[ra] = rb;
    }
}

/// `P_(2)` of the closure of `b`, via the bracket state sum.
pub fn kauffman_oracle(b: &BraidWord) -> Result<LaurentPoly, KauffmanError> {
    let c = b.len();
    if c > MAX_ORACLE_CROSSINGS {
        return Err(KauffmanError::CrossingBudgetExceeded {
            crossings: c,
            max: MAX_ORACLE_CROSSINGS,
        });
    }
    let m = b.strands();
    let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]); // in variable A
    let mut bracket = LaurentPoly::zero();
    for state in 0u64..(1 << c) {
        let mut a_power: i64 = 0;
        let mut uf = UnionFind::new();
        let start: Vec<usize> = (0..m).map(|_| uf.fresh()).collect();
        let mut current = start.clone();
        for (idx, &letter) in b.letters().iter().enumerate() {
            let cap_cup = state & (1 << idx) != 0;
            a_power += match (letter > 0, cap_cup) {
                (true, false) => 1,   // A-smoothing of a positive crossing
                (true, true) => -1,
                (false, false) => -1, // A-smoothing of a negative crossing
                (false, true) => 1,
            };
            if cap_cup {
                let k = letter.unsigned_abs() as usize - 1;
                uf.union(current[k], current[k + 1]);
                // the cup is a single arc, so both positions continue as the
                // same segment
                let arc = uf.fresh();
                current[k] = arc;
                current[k + 1] = arc;
            }
            // the identity-like smoothing leaves both strands running through
        }
        for i in 0..m {
            uf.union(current[i], start[i]);
        }
        let total_segments = uf.parent.len();
        let mut roots: Vec<usize> = (0..total_segments).map(|x| uf.find(x)).collect();
        roots.sort_unstable();
        roots.dedup();
        let loops = roots.len() as u32;
        bracket += LaurentPoly::q_power(a_power) * delta.pow(loops);
    }
    // (-A^3)^{-w} · bracket, then A^2 ↦ -q
    let w = b.writhe();
    let writhe_factor = LaurentPoly::monomial(-3 * w, if w.rem_euclid(2) == 0 { 1 } else { -1 });
    let normalized = writhe_factor * bracket;
    Ok(substitute_a_squared_minus_q(&normalized))
}

/// Substitute `A^2 = -q` into a polynomial with only even exponents.
fn substitute_a_squared_minus_q(p: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (e, c) in p.terms() {
        debug_assert!(e.rem_euclid(2) == 0, "closed diagrams have even A-exponents");
        let k = e / 2;
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        out += LaurentPoly::monomial(k, c * sign);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::{sl_n_polynomial, unknot_value};
    use braid_core::TrefoilConvention;

    #[test]
    fn unknot_and_unlink() {
        let unknot = BraidWord::identity(1).unwrap();
        assert_eq!(kauffman_oracle(&unknot).unwrap(), unknot_value(2));
        let unlink2 = BraidWord::identity(2).unwrap();
        assert_eq!(kauffman_oracle(&unlink2).unwrap(), unknot_value(2).pow(2));
    }

    #[test]
    fn trefoil_pinned() {
        let b = BraidWord::left_trefoil(TrefoilConvention::default());
        assert_eq!(
            kauffman_oracle(&b).unwrap(),
            LaurentPoly::from_terms([(1, 1), (3, 1), (5, 1), (9, -1)])
        );
    }

    #[test]
    fn agrees_with_r_matrix_engine() {
        for (m, letters) in [
            (2, vec![1]),
            (2, vec![-1, -1]),
            (3, vec![1, 2]),
            (3, vec![1, -2, 1, -2]),
            (4, vec![1, 2, 3, -1, 2]),
        ] {
            let b = BraidWord::new(m, letters).unwrap();
            assert_eq!(
                kauffman_oracle(&b).unwrap(),
                sl_n_polynomial(&b, 2),
                "braid {b:?}"
            );
        }
    }

    #[test]
    fn budget_enforced() {
        let b = BraidWord::new(2, vec![1; 13]).unwrap();
        assert!(matches!(
            kauffman_oracle(&b),
            Err(KauffmanError::CrossingBudgetExceeded { crossings: 13, .. })
        ));
    }
}
