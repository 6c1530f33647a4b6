//! Sparse operators on `V^{⊗m}` with Laurent-polynomial entries, where `V`
//! has basis `e_1, ..., e_n`.
//!
//! Basis vectors of the tensor power are words over `{1..n}`; an operator is
//! a sparse map `(row word, column word) → coefficient`.  The braiding `R`
//! and its inverse act locally on two adjacent factors, so braid images are
//! built by pushing basis words through the letter sequence instead of
//! multiplying dense matrices.

use crate::LaurentPoly;
use std::collections::{BTreeMap, HashMap};

/// A basis word of `V^{⊗m}`: letters in `1..=n`, length `m`.
pub type BasisWord = Vec<u8>;

/// Sparse linear operator on `V^{⊗m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumOperator {
    n: usize,
    m: usize,
    /// `entries[(row, col)]` = coefficient of `e_row` in the image of `e_col`.
    entries: BTreeMap<(BasisWord, BasisWord), LaurentPoly>,
}

/// Action of the braiding on an ordered pair of letters `(a, b)`:
/// up to two `(output pair, coefficient)` terms.
fn r_local(a: u8, b: u8, inverse: bool) -> Vec<((u8, u8), LaurentPoly)> {
    if a == b {
        let c = LaurentPoly::q_power(if inverse { -1 } else { 1 });
        return vec![((a, b), c)];
    }
    let mut terms = vec![((b, a), LaurentPoly::one())];
    if !inverse && a > b {
        terms.push(((a, b), LaurentPoly::q_minus_q_inv()));
    }
    if inverse && a < b {
        terms.push(((a, b), -LaurentPoly::q_minus_q_inv()));
    }
    terms
}

/// Apply `R^{±1}` at tensor positions `(k, k+1)` (0-based) to a single basis
/// word, producing the image as a sparse combination.
pub(crate) fn apply_r_at(
    word: &BasisWord,
    k: usize,
    inverse: bool,
) -> Vec<(BasisWord, LaurentPoly)> {
    r_local(word[k], word[k + 1], inverse)
        .into_iter()
        .map(|((a, b), c)| {
            let mut out = word.clone();
            out[k] = a;
            out[k + 1] = b;
            (out, c)
        })
        .collect()
}

/// Push a sparse combination of basis words through `R^{±1}` at position `k`.
pub(crate) fn push_combination(
    state: HashMap<BasisWord, LaurentPoly>,
    k: usize,
    inverse: bool,
    scalar: &LaurentPoly,
) -> HashMap<BasisWord, LaurentPoly> {
    let mut next: HashMap<BasisWord, LaurentPoly> = HashMap::with_capacity(state.len() * 2);
    for (word, coeff) in state {
        let scaled = &coeff * scalar;
        for (out, local) in apply_r_at(&word, k, inverse) {
            let add = &scaled * &local;
            let entry = next.entry(out).or_insert_with(LaurentPoly::zero);
            *entry += add;
        }
    }
    next.retain(|_, c| !c.is_zero());
    next
}

impl QuantumOperator {
    pub fn new(n: usize, m: usize) -> Self {
        Self {
            n,
            m,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize, m: usize) -> Self {
        let mut op = Self::new(n, m);
        for w in basis_words(n, m) {
            op.add_entry(w.clone(), w, LaurentPoly::one());
        }
        op
    }

    /// Diagonal operator `μ^{⊗m}` with `μ = diag(q^{n-1}, q^{n-3}, ..., q^{1-n})`.
    pub fn mu_diagonal(n: usize, m: usize) -> Self {
        let mut op = Self::new(n, m);
        for w in basis_words(n, m) {
            let weight = mu_weight(n, &w);
            op.add_entry(w.clone(), w, weight);
        }
        op
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_entry(&mut self, row: BasisWord, col: BasisWord, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self
            .entries
            .entry((row, col))
            .or_insert_with(LaurentPoly::zero);
        *slot += coeff;
        if slot.is_zero() {
            // re-fetch key is awkward; rebuild lazily
            self.entries.retain(|_, c| !c.is_zero());
        }
    }

    pub fn entry(&self, row: &BasisWord, col: &BasisWord) -> LaurentPoly {
        self.entries
            .get(&(row.clone(), col.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(BasisWord, BasisWord), &LaurentPoly)> {
        self.entries.iter()
    }

    /// Operator composition `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        assert_eq!(self.m, rhs.m);
        // index self's entries by column for the contraction
        let mut by_col: HashMap<&BasisWord, Vec<(&BasisWord, &LaurentPoly)>> = HashMap::new();
        for ((row, col), coeff) in &self.entries {
            by_col.entry(col).or_default().push((row, coeff));
        }
        let mut out = Self::new(self.n, self.m);
        for ((mid, col), c1) in &rhs.entries {
            if let Some(rows) = by_col.get(mid) {
                for (row, c2) in rows {
                    out.add_entry((*row).clone(), col.clone(), c1 * c2);
                }
            }
        }
        out
    }

    /// Trace `Σ_w ⟨w|self|w⟩`.
    pub fn trace(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for ((row, col), coeff) in &self.entries {
            if row == col {
                acc += coeff.clone();
            }
        }
        acc
    }

    /// Contract the last tensor factor: the `(m-1)`-strand operator with
    /// entries `T[r, c] = Σ_d self[r·d, c·d]`.
    pub fn partial_trace_last(&self) -> Self {
        assert!(self.m >= 1);
        let mut out = Self::new(self.n, self.m - 1);
        for ((row, col), coeff) in &self.entries {
            let (r_head, r_last) = row.split_at(self.m - 1);
            let (c_head, c_last) = col.split_at(self.m - 1);
            if r_last == c_last {
                out.add_entry(r_head.to_vec(), c_head.to_vec(), coeff.clone());
            }
        }
        out
    }

    /// Is this `scalar · Identity`?  Returns the scalar if so.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<LaurentPoly> {
        let words = basis_words(self.n, self.m);
        let scalar = self.entry(&words[0], &words[0]);
        for ((row, col), coeff) in &self.entries {
            if row == col {
                if *coeff != scalar {
                    return None;
                }
            } else if !coeff.is_zero() {
                return None;
            }
        }
        // ensure no diagonal entry is missing (zero ≠ scalar unless scalar=0)
        if !scalar.is_zero() {
            let diag_count = self
                .entries
                .iter()
                .filter(|((r, c), _)| r == c)
                .count();
            if diag_count != words.len() {
                return None;
            }
        }
        Some(scalar)
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        let mut out = Self::new(self.n, self.m);
        for ((row, col), coeff) in &self.entries {
            out.add_entry(row.clone(), col.clone(), coeff * s);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((row, col), coeff) in &rhs.entries {
            out.add_entry(row.clone(), col.clone(), -coeff.clone());
        }
        out.entries.retain(|_, c| !c.is_zero());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|c| c.is_zero())
    }
}

/// All basis words of `V^{⊗m}` in lexicographic order.
pub fn basis_words(n: usize, m: usize) -> Vec<BasisWord> {
    let mut words = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(words.len() * n);
        for w in &words {
            for letter in 1..=n as u8 {
                let mut w2 = w.clone();
                w2.push(letter);
                next.push(w2);
            }
        }
        words = next;
    }
    words
}

/// `μ`-weight of a basis word: `Π_i q^{n+1-2·w_i}`.
pub fn mu_weight(n: usize, word: &BasisWord) -> LaurentPoly {
    let exp: i64 = word
        .iter()
        .map(|&letter| (n as i64) + 1 - 2 * (letter as i64))
        .sum();
    LaurentPoly::q_power(exp)
}

/// The braiding on two tensor factors (`m = 2`).
pub fn r_matrix(n: usize) -> QuantumOperator {
    r_matrix_operator(n, false)
}

/// Inverse braiding on two tensor factors.
pub fn r_matrix_inverse(n: usize) -> QuantumOperator {
    r_matrix_operator(n, true)
}

fn r_matrix_operator(n: usize, inverse: bool) -> QuantumOperator {
    let mut op = QuantumOperator::new(n, 2);
    for w in basis_words(n, 2) {
        for (out, coeff) in apply_r_at(&w, 0, inverse) {
            op.add_entry(out, w.clone(), coeff);
        }
    }
    op
}
