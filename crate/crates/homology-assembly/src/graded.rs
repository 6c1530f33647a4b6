//! Finitely generated graded abelian groups: a free rank and a multiset of
//! cyclic torsion orders per degree, with direct sum, degree shift, graded
//! tensor product, Euler characteristic, and Poincaré polynomial.

use std::collections::BTreeMap;
use std::fmt;

use skein_poly::LaurentPoly;

use crate::error::AssemblyError;

/// One degree's worth of group: ℤ^free ⊕ ⊕_i ℤ/torsion[i].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Summand {
    pub free: usize,
    /// Cyclic torsion orders, each ≥ 2, kept sorted.
    pub torsion: Vec<u64>,
}

impl Summand {
    pub fn is_zero(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }
}

/// A finitely generated graded abelian group, indexed by integer degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedGroup {
    summands: BTreeMap<i64, Summand>,
}

impl GradedGroup {
    pub fn zero() -> GradedGroup {
        GradedGroup::default()
    }

    /// Builds a torsion-free group from (degree, rank) pairs; ranks add.
    pub fn from_free_ranks(pairs: impl IntoIterator<Item = (i64, usize)>) -> GradedGroup {
        let mut g = GradedGroup::zero();
        for (degree, rank) in pairs {
            g.add_free(degree, rank);
        }
        g
    }

    /// Adds `rank` free generators in the given degree.
    pub fn add_free(&mut self, degree: i64, rank: usize) {
        if rank == 0 {
            return;
        }
        self.summands.entry(degree).or_default().free += rank;
    }

    /// Adds one cyclic summand of the given order (≥ 2) in the given degree.
    pub fn add_torsion(&mut self, degree: i64, order: u64) -> Result<(), AssemblyError> {
        if order < 2 {
            return Err(AssemblyError::InvalidInput(format!(
                "torsion orders must be at least 2, got {order}"
            )));
        }
        let summand = self.summands.entry(degree).or_default();
        summand.torsion.push(order);
        summand.torsion.sort_unstable();
        Ok(())
    }

    /// The group in one degree (zero summand if absent).
    pub fn summand(&self, degree: i64) -> Summand {
        self.summands.get(&degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Degrees carrying a nonzero group, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.summands.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Summand)> {
        self.summands.iter().map(|(&d, s)| (d, s))
    }

    pub fn total_free_rank(&self) -> usize {
        self.summands.values().map(|s| s.free).sum()
    }

    pub fn direct_sum(&self, other: &GradedGroup) -> GradedGroup {
        let mut out = self.clone();
        for (&degree, summand) in &other.summands {
            let entry = out.summands.entry(degree).or_default();
            entry.free += summand.free;
            entry.torsion.extend_from_slice(&summand.torsion);
            entry.torsion.sort_unstable();
        }
        out
    }

    /// Degree shift: the result in degree d is this group in degree d + k.
    pub fn shift(&self, k: i64) -> GradedGroup {
        GradedGroup {
            summands: self
                .summands
                .iter()
                .map(|(&d, s)| (d - k, s.clone()))
                .collect(),
        }
    }

    /// Graded tensor product over the integers.  Whenever two summands in
    /// contributing degrees both carry torsion the Tor/extension data is
    /// not representable here and the product is refused.
    pub fn tensor(&self, other: &GradedGroup) -> Result<GradedGroup, AssemblyError> {
        let mut out = GradedGroup::zero();
        for (&da, sa) in &self.summands {
            for (&db, sb) in &other.summands {
                if !sa.torsion.is_empty() && !sb.torsion.is_empty() {
                    return Err(AssemblyError::TorsionTorsionUnsupported {
                        left_degree: da,
                        right_degree: db,
                    });
                }
                let degree = da + db;
                out.add_free(degree, sa.free * sb.free);
                for &order in &sa.torsion {
                    for _ in 0..sb.free {
                        out.add_torsion(degree, order)?;
                    }
                }
                for &order in &sb.torsion {
                    for _ in 0..sa.free {
                        out.add_torsion(degree, order)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Alternating sum of free ranks; torsion is invisible rationally.
    pub fn euler_characteristic(&self) -> i64 {
        self.summands
            .iter()
            .map(|(&d, s)| {
                let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
                sign * s.free as i64
            })
            .sum()
    }

    /// Free ranks as a polynomial in one variable (degree ↦ exponent).
    pub fn poincare_polynomial(&self) -> LaurentPoly {
        let mut poly = LaurentPoly::zero();
        for (&d, s) in &self.summands {
            if s.free > 0 {
                poly += LaurentPoly::monomial(d, s.free as i64);
            }
        }
        poly
    }

    /// `{degree: {free: r, torsion: [orders]}}` with degrees as JSON keys.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (&d, s) in &self.summands {
            map.insert(
                d.to_string(),
                serde_json::json!({ "free": s.free, "torsion": s.torsion }),
            );
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for GradedGroup {
    /// Human form like `Z@-1 + Z^2@1 + Z/2@3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, s) in &self.summands {
            let mut parts: Vec<String> = Vec::new();
            if s.free == 1 {
                parts.push("Z".to_string());
            } else if s.free > 1 {
                parts.push(format!("Z^{}", s.free));
            }
            for &order in &s.torsion {
                parts.push(format!("Z/{order}"));
            }
            for part in parts {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{part}@{d}")?;
            }
        }
        Ok(())
    }
}

/// Free-function form of [`GradedGroup::shift`].
pub fn shift(group: &GradedGroup, k: i64) -> GradedGroup {
    group.shift(k)
}

/// Free-function form of [`GradedGroup::tensor`].
pub fn tensor(left: &GradedGroup, right: &GradedGroup) -> Result<GradedGroup, AssemblyError> {
    left.tensor(right)
}

/// Free-function form of [`GradedGroup::euler_characteristic`].
pub fn euler_characteristic(group: &GradedGroup) -> i64 {
    group.euler_characteristic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> GradedGroup {
        let mut g = GradedGroup::from_free_ranks([(0, 1), (2, 2)]);
        g.add_torsion(3, 4).unwrap();
        g
    }

    #[test]
    fn summands_report_free_and_torsion_parts() {
        let g = sample();
        assert_eq!(g.summand(0).free, 1);
        assert_eq!(g.summand(2).free, 2);
        assert_eq!(g.summand(3).torsion, vec![4]);
        assert!(g.summand(5).is_zero());
        assert_eq!(g.total_free_rank(), 3);
        assert_eq!(g.to_string(), "Z@0 + Z^2@2 + Z/4@3");
    }

    #[test]
    fn torsion_orders_below_two_are_rejected() {
        let mut g = GradedGroup::zero();
        assert!(g.add_torsion(0, 1).is_err());
        assert!(g.add_torsion(0, 2).is_ok());
    }

    #[test]
    fn shift_moves_every_degree_by_the_same_amount() {
        let g = sample();
        let shifted = g.shift(2);
        assert_eq!(shifted.summand(-2).free, 1);
        assert_eq!(shifted.summand(0).free, 2);
        assert_eq!(shifted.summand(1).torsion, vec![4]);
        assert_eq!(shifted.shift(-2), g);
    }

    #[test]
    fn direct_sum_merges_degreewise() {
        let g = sample();
        let sum = g.direct_sum(&g);
        assert_eq!(sum.summand(0).free, 2);
        assert_eq!(sum.summand(2).free, 4);
        assert_eq!(sum.summand(3).torsion, vec![4, 4]);
    }

    #[test]
    fn tensor_convolves_ranks_and_multiplies_poincare_polynomials() {
        let a = GradedGroup::from_free_ranks([(0, 1), (2, 1)]);
        let b = GradedGroup::from_free_ranks([(-1, 2), (1, 1)]);
        let t = a.tensor(&b).unwrap();
        assert_eq!(t.summand(-1).free, 2);
        assert_eq!(t.summand(1).free, 3);
        assert_eq!(t.summand(3).free, 1);
        let product = &a.poincare_polynomial() * &b.poincare_polynomial();
        assert_eq!(t.poincare_polynomial(), product);
        assert_eq!(
            t.euler_characteristic(),
            a.euler_characteristic() * b.euler_characteristic()
        );
    }

    #[test]
    fn tensor_spreads_torsion_across_free_ranks() {
        let a = sample();
        let free = GradedGroup::from_free_ranks([(1, 2)]);
        let t = a.tensor(&free).unwrap();
        assert_eq!(t.summand(4).torsion, vec![4, 4]);
        assert_eq!(t.summand(1).free, 2);
        assert_eq!(t.summand(3).free, 4);
    }

    #[test]
    fn tensor_of_two_torsion_groups_is_refused() {
        let a = sample();
        let err = a.tensor(&a).unwrap_err();
        assert!(matches!(
            err,
            AssemblyError::TorsionTorsionUnsupported { .. }
        ));
    }

    #[test]
    fn euler_characteristic_ignores_torsion_and_alternates_signs() {
        let mut g = GradedGroup::from_free_ranks([(-1, 1), (0, 2), (3, 1)]);
        g.add_torsion(0, 5).unwrap();
        assert_eq!(g.euler_characteristic(), -1 + 2 - 1);
    }

    #[test]
    fn json_lists_free_and_torsion_per_degree() {
        let g = sample();
        let json = g.to_json();
        assert_eq!(json["0"]["free"], 1);
        assert_eq!(json["3"]["torsion"][0], 4);
        let rendered = g.poincare_polynomial().render("t");
        assert_eq!(rendered, "2*t^2 + 1");
    }
}
