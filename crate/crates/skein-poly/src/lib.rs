//! Exact quantum sl(n) polynomial of braid closures.
//!
//! The invariant `P_(n)` is characterized by the skein relation
//! `q^n P(L+) - q^{-n} P(L-) = (q - q^{-1}) P(L0)` and the unknot value
//! `q^{n-1} + q^{n-3} + ... + q^{1-n}`.  This crate computes it as an
//! enhanced trace of an R-matrix braid representation
//! ([`sl_n_polynomial`]), provides the operator layer for inspecting the
//! representation itself ([`braid_operator`], [`r_matrix`]), property checks
//! for the skein relation and Markov-move invariance, and an independent
//! Kauffman-bracket oracle for the n = 2 specialization.

mod kauffman;
mod laurent;
mod operator;
mod polynomial;

pub use kauffman::{kauffman_oracle, KauffmanError, MAX_ORACLE_CROSSINGS};
pub use laurent::LaurentPoly;
pub use operator::{basis_words, mu_weight, r_matrix, r_matrix_inverse, BasisWord, QuantumOperator};
pub use polynomial::{braid_operator, check_markov, check_skein, sl_n_polynomial, unknot_value};
