//! Exact Laurent polynomials in one variable with integer coefficients.
//!
//! Coefficients are arbitrary-precision integers (trace sums grow with braid
//! length); exponents are `i64`.  Zero coefficients are never stored, so
//! structural equality is polynomial equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A Laurent polynomial `Σ c_k q^k` over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff · q^exponent`.
    pub fn monomial(exponent: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { terms }
    }

    /// `q^exponent`.
    pub fn q_power(exponent: i64) -> Self {
        Self::monomial(exponent, 1)
    }

    /// `q - q^{-1}`, the skein multiplier.
    pub fn q_minus_q_inv() -> Self {
        Self::monomial(1, 1) + Self::monomial(-1, -1)
    }

    /// `q^{n-1} + q^{n-3} + ... + q^{1-n}`, the unknot value (quantum integer `[n]`).
    pub fn quantum_integer(n: i64) -> Self {
        let mut p = Self::zero();
        let mut k = n - 1;
        while k >= 1 - n {
            p += Self::q_power(k);
            k -= 2;
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// Build from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p += Self::monomial(e, c);
        }
        p
    }

    /// Value at `q = -1` (the Euler-characteristic specialization).
    pub fn eval_at_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// The bar involution `q ↦ q^{-1}` (mirror symmetry of the polynomial).
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Raise to a non-negative integer power.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// JSON form: sorted array of `[exponent, coefficient]` pairs.
    /// Coefficients that fit in an `i64` are emitted as numbers, larger ones
    /// as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::{json, Value};
        let pairs: Vec<Value> = self
            .terms
            .iter()
            .map(|(&e, c)| {
                let coeff: Value = match i64::try_from(c.clone()) {
                    Ok(small) => json!(small),
                    Err(_) => json!(c.to_string()),
                };
                json!([e, coeff])
            })
            .collect();
        Value::Array(pairs)
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            let entry = self.terms.entry(e).or_default();
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(&e);
            }
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = BTreeMap::<i64, BigInt>::new();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                let entry = out.entry(ea + eb).or_default();
                *entry += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: out }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl LaurentPoly {
    /// Human form in descending exponents with a chosen variable name,
    /// e.g. `t^2 + 1 + t^-2`.
    pub fn render(&self, variable: &str) -> String {
        use std::fmt::Write as _;
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                let _ = write!(out, "{mag}");
            }
            if e != 0 {
                if show_coeff {
                    out.push('*');
                }
                if e == 1 {
                    out.push_str(variable);
                } else {
                    let _ = write!(out, "{variable}^{e}");
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Human form in descending exponents, e.g. `q^2 + 1 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_at_minus_one() {
        let p = LaurentPoly::quantum_integer(2); // q + q^-1
        assert_eq!(p.eval_at_minus_one(), BigInt::from(-2));
        let p = LaurentPoly::quantum_integer(3); // q^2 + 1 + q^-2
        assert_eq!(p.eval_at_minus_one(), BigInt::from(3));
        assert_eq!(LaurentPoly::zero().eval_at_minus_one(), BigInt::from(0));
    }

    #[test]
    fn bar_involution() {
        let p = LaurentPoly::from_terms([(3, 1), (-3, -1)]); // q^3 - q^-3
        assert_eq!(p.bar(), LaurentPoly::from_terms([(-3, 1), (3, -1)]));
        assert_eq!(p.bar().bar(), p);
        assert_eq!(LaurentPoly::one().bar(), LaurentPoly::one());
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let a = LaurentPoly::q_minus_q_inv();
        let b = a.clone() * LaurentPoly::quantum_integer(2);
        // (q - q^-1)(q + q^-1) = q^2 - q^-2
        assert_eq!(b, LaurentPoly::from_terms([(2, 1), (-2, -1)]));
        let zero = a.clone() - a;
        assert!(zero.is_zero());
    }

    #[test]
    fn unknot_values() {
        assert_eq!(LaurentPoly::quantum_integer(1), LaurentPoly::one());
        assert_eq!(
            LaurentPoly::quantum_integer(4),
            LaurentPoly::from_terms([(3, 1), (1, 1), (-1, 1), (-3, 1)])
        );
    }

    #[test]
    fn display_form() {
        assert_eq!(LaurentPoly::quantum_integer(3).to_string(), "q^2 + 1 + q^-2");
        let tref = LaurentPoly::from_terms([(1, 1), (3, 1), (5, 1), (9, -1)]);
        assert_eq!(tref.to_string(), "-q^9 + q^5 + q^3 + q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::monomial(1, -2).to_string(), "-2*q");
    }

    #[test]
    fn json_pairs_sorted() {
        let p = LaurentPoly::from_terms([(2, 1), (-2, 1), (0, 1)]);
        assert_eq!(p.to_json().to_string(), "[[-2,1],[0,1],[2,1]]");
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let p = LaurentPoly::quantum_integer(2);
        assert_eq!(p.pow(0), LaurentPoly::one());
        assert_eq!(p.pow(3), &(&p * &p) * &p);
    }
}
