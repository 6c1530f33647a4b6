//! Braid words, their closures, and Markov moves.
//!
//! A braid on `m` strands is a word in the generators `s_1, ..., s_{m-1}`;
//! we store each letter as a signed integer whose magnitude is the generator
//! index and whose sign is the crossing sign.  Everything downstream (link
//! polynomials, homology cross-checks) consumes links as braid closures, so
//! this crate is the combinatorial input layer: writhe and component
//! bookkeeping, the two Markov moves, mirrors, a deterministic fuzzing
//! generator, and the `Bm:...` text format used by the command-line tools.

mod text;

pub use text::{format_braid, parse_braid, ParseBraidError};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A braid group element given as a word in the standard generators.
///
/// `letters[i] = k > 0` means `s_k` (strand `k` crosses over strand `k+1`);
/// `letters[i] = -k` means `s_k^{-1}`.  The empty word is the identity braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// Writhe and closure component count of a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureSummary {
    /// Number of link components of the closure (cycles of the underlying
    /// permutation).
    pub components: usize,
    /// Algebraic crossing count (sum of letter signs).
    pub writhe: i64,
}

/// Errors from building a braid word out of raw letters.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} is out of range for {strands} strands (|letter| must be in 1..={max})", max = strands - 1)]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("generator index {index} is out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
}

/// Which braid word is used as the canonical left-handed trefoil.
///
/// The homological grading shift for the trefoil closure comes out as
/// `-(n-1)` only for writhe `-3`, so [`TrefoilConvention::NegativeCrossings`]
/// is the default; the all-positive word is kept available because both
/// appear in informal usage and the polynomial of one is the bar-involution
/// of the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TrefoilConvention {
    /// `(-1,-1,-1)` in `Br_2`: writhe −3, grading shift `-(n-1)`.
    #[default]
    NegativeCrossings,
    /// `(+1,+1,+1)` in `Br_2`: the mirror word.
    PositiveCrossings,
}

impl BraidWord {
    /// Build a braid word, validating every letter against the strand count.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &letter in &letters {
            let mag = letter.unsigned_abs() as usize;
            if letter == 0 || mag >= strands {
                return Err(BraidError::LetterOutOfRange { letter, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// The identity braid on `m` strands (closes to the `m`-component unlink).
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Canonical left-handed trefoil as a 2-strand closure.
    pub fn left_trefoil(convention: TrefoilConvention) -> Self {
        let letters = match convention {
            TrefoilConvention::NegativeCrossings => vec![-1, -1, -1],
            TrefoilConvention::PositiveCrossings => vec![1, 1, 1],
        };
        Self { strands: 2, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The permutation of strand endpoints: position `i` at the bottom is
    /// connected to `permutation()[i]` at the top.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &letter in &self.letters {
            let k = letter.unsigned_abs() as usize - 1;
            perm.swap(k, k + 1);
        }
        perm
    }

    /// Writhe plus the closure's component count (cycles of the permutation).
    pub fn closure_summary(&self) -> ClosureSummary {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut components = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        ClosureSummary {
            components,
            writhe: self.writhe(),
        }
    }

    /// Markov move I: replace `b` by `s_k^{-1} b s_k`.
    pub fn markov_conjugate(&self, k: usize) -> Result<Self, BraidError> {
        if k == 0 || k >= self.strands {
            return Err(BraidError::GeneratorOutOfRange {
                index: k,
                strands: self.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(-(k as i32));
        letters.extend_from_slice(&self.letters);
        letters.push(k as i32);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    /// Markov move II: add a strand and a half-twist `s_m^{±1}` with it.
    pub fn markov_stabilize(&self, sign: i32) -> Self {
        let m = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(sign.signum() * m);
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Flip every crossing; the closure becomes the mirror link.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| -l).collect(),
        }
    }

    /// Concatenate two words on the same strand count (`self` then `rhs`).
    pub fn concat(&self, rhs: &Self) -> Result<Self, BraidError> {
        if self.strands != rhs.strands {
            return Err(BraidError::GeneratorOutOfRange {
                index: rhs.strands,
                strands: self.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Self::new(self.strands, letters)
    }

    /// Copy of the word with the letter at `site` replaced.
    pub fn with_letter(&self, site: usize, letter: i32) -> Result<Self, BraidError> {
        let mut letters = self.letters.clone();
        letters[site] = letter;
        Self::new(self.strands, letters)
    }

    /// Copy of the word with the letter at `site` removed.
    pub fn without_letter(&self, site: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.remove(site);
        Self {
            strands: self.strands,
            letters,
        }
    }
}

/// Deterministic random braid with letters uniform over `{±1, ..., ±(m-1)}`.
pub fn random_braid(m: usize, length: usize, seed: u64) -> Result<BraidWord, BraidError> {
    if m < 2 {
        return Err(BraidError::NoStrands);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_braid_with(&mut rng, m, length)
}

/// Same as [`random_braid`] but drawing from a caller-owned generator, so a
/// fuzzing loop can derive many braids from one seed.
pub fn random_braid_with<R: Rng>(rng: &mut R, m: usize, length: usize) -> Result<BraidWord, BraidError> {
    if m < 2 {
        return Err(BraidError::NoStrands);
    }
    let letters = (0..length)
        .map(|_| {
            let k = rng.gen_range(1..m) as i32;
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    BraidWord::new(m, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn writhe_counts_signs() {
        let b = BraidWord::new(2, vec![]).unwrap();
        assert_eq!(b.writhe(), 0);
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(b.writhe(), 3);
        let b = BraidWord::left_trefoil(TrefoilConvention::default());
        assert_eq!(b.writhe(), -3);
    }

    #[test]
    fn closure_components() {
        let one = BraidWord::new(2, vec![1]).unwrap();
        assert_eq!(one.closure_summary().components, 1);
        let id3 = BraidWord::identity(3).unwrap();
        assert_eq!(id3.closure_summary().components, 3);
        let trefoil = BraidWord::left_trefoil(TrefoilConvention::default());
        assert_eq!(trefoil.closure_summary().components, 1);
        let hopf = BraidWord::new(2, vec![-1, -1]).unwrap();
        assert_eq!(hopf.closure_summary().components, 2);
    }

    #[test]
    fn conjugation_wraps_word() {
        let b = BraidWord::new(2, vec![1]).unwrap();
        let c = b.markov_conjugate(1).unwrap();
        assert_eq!(c.letters(), &[-1, 1, 1]);
        let empty = BraidWord::identity(3).unwrap();
        assert_eq!(empty.markov_conjugate(2).unwrap().letters(), &[-2, 2]);
        assert!(b.markov_conjugate(5).is_err());
    }

    #[test]
    fn stabilization_adds_strand_and_twist() {
        let unknot = BraidWord::identity(1).unwrap();
        let s = unknot.markov_stabilize(1);
        assert_eq!(s.strands(), 2);
        assert_eq!(s.letters(), &[1]);
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let s = b.markov_stabilize(-1);
        assert_eq!(s.strands(), 3);
        assert_eq!(s.letters(), &[1, 1, 1, -2]);
    }

    #[test]
    fn mirror_flips_signs() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(b.mirror().letters(), &[-1, -1, -1]);
        assert_eq!(b.mirror().mirror(), b);
        assert_eq!(b.mirror().writhe(), -b.writhe());
    }

    #[test]
    fn letter_validation() {
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(2, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
        assert!(BraidWord::new(3, vec![-2, 1]).is_ok());
    }

    #[test]
    fn random_braid_is_reproducible() {
        let a = random_braid(3, 5, 7).unwrap();
        let b = random_braid(3, 5, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        assert!(a.letters().iter().all(|&l| l.unsigned_abs() <= 2));
        assert!(random_braid(1, 5, 7).is_err());
        assert_eq!(random_braid(2, 0, 3).unwrap().len(), 0);
    }

    proptest! {
        #[test]
        fn markov_moves_preserve_components(seed in 0u64..500, m in 2usize..5, len in 0usize..8) {
            let b = random_braid(m, len, seed).unwrap();
            let before = b.closure_summary();
            let conj = b.markov_conjugate(1 + (seed as usize) % (m - 1)).unwrap();
            prop_assert_eq!(conj.closure_summary(), before);
            let stab = b.markov_stabilize(if seed % 2 == 0 { 1 } else { -1 });
            prop_assert_eq!(stab.closure_summary().components, before.components);
            prop_assert_eq!(
                stab.closure_summary().writhe,
                before.writhe + if seed % 2 == 0 { 1 } else { -1 }
            );
        }

        #[test]
        fn permutation_is_a_bijection(seed in 0u64..200, m in 2usize..6, len in 0usize..10) {
            let b = random_braid(m, len, seed).unwrap();
            let mut perm = b.permutation();
            perm.sort_unstable();
            prop_assert_eq!(perm, (0..m).collect::<Vec<_>>());
        }
    }
}
