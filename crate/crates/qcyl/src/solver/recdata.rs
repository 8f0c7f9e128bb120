//! Coefficient data for the order-4 recurrence satisfied by the z^k
//! coefficients of G_{(4,1,0)}(z,q), transcribed once and kept as data.
//!
//! Each coefficient is a prefactor monomial (or binomial) in q^k times a
//! polynomial whose monomials are `coeff * q^{k_mul*k + offset}`. Term
//! counts per polynomial were tallied at transcription and are asserted
//! as a digest: a=19, b=72, c=74, d=42, e=19.

use num_bigint::BigInt;

use crate::qalg::QLaurent;

/// One monomial `coeff * q^{k_mul*k + offset}`.
#[derive(Clone, Copy, Debug)]
pub struct KMonomial {
    pub coeff: i64,
    pub k_mul: i64,
    pub offset: i64,
}

const fn m(coeff: i64, k_mul: i64, offset: i64) -> KMonomial {
    KMonomial { coeff, k_mul, offset }
}

/// Expected monomial counts (a, b, c, d, e), recorded at transcription.
pub const TERM_COUNT_DIGEST: [usize; 5] = [19, 72, 74, 42, 19];

// a_k(q) = (1 - q^k) * A_INNER
pub const A_PREFIX: &[KMonomial] = &[m(1, 0, 0), m(-1, 1, 0)];
pub const A_INNER: &[KMonomial] = &[
    m(1, 0, 0),
    m(-1, 1, -2),
    m(-2, 1, -1),
    m(-1, 1, 0),
    m(1, 2, -3),
    m(1, 2, -2),
    m(1, 2, -1),
    m(-1, 3, -5),
    m(-1, 3, -4),
    m(-1, 3, -3),
    m(-1, 4, -5),
    m(-1, 4, -4),
    m(-1, 4, -3),
    m(1, 5, -7),
    m(1, 5, -6),
    m(1, 5, -5),
    m(-1, 6, -8),
    m(-1, 6, -7),
    m(-1, 6, -6),
];

// b_k(q) = q^{2k+1} * B_INNER
pub const B_PREFIX: &[KMonomial] = &[m(1, 2, 1)];
pub const B_INNER: &[KMonomial] = &[
    m(1, 0, 0),
    m(1, 1, -2),
    m(-1, 2, -6),
    m(-2, 2, -5),
    m(-4, 2, -4),
    m(-5, 2, -3),
    m(-5, 2, -2),
    m(-2, 2, -1),
    m(-1, 2, 0),
    m(1, 3, -7),
    m(2, 3, -6),
    m(4, 3, -5),
    m(5, 3, -4),
    m(6, 3, -3),
    m(5, 3, -2),
    m(3, 3, -1),
    m(1, 3, 0),
    m(-1, 4, -8),
    m(-4, 4, -7),
    m(-6, 4, -6),
    m(-8, 4, -5),
    m(-7, 4, -4),
    m(-7, 4, -3),
    m(-4, 4, -2),
    m(-2, 4, -1),
    m(1, 5, -8),
    m(2, 5, -7),
    m(2, 5, -6),
    m(1, 5, -5),
    m(-1, 5, -2),
    m(1, 6, -9),
    m(1, 6, -8),
    m(2, 6, -7),
    m(2, 6, -6),
    m(3, 6, -5),
    m(3, 6, -4),
    m(3, 6, -3),
    m(2, 6, -2),
    m(-1, 7, -10),
    m(-3, 7, -9),
    m(-5, 7, -8),
    m(-7, 7, -7),
    m(-7, 7, -6),
    m(-7, 7, -5),
    m(-5, 7, -4),
    m(-4, 7, -3),
    m(-1, 7, -2),
    m(1, 8, -10),
    m(3, 8, -9),
    m(5, 8, -8),
    m(6, 8, -7),
    m(4, 8, -6),
    m(3, 8, -5),
    m(1, 8, -4),
    m(1, 8, -3),
    m(-1, 9, -10),
    m(-2, 9, -9),
    m(-3, 9, -8),
    m(-2, 9, -7),
    m(-1, 9, -6),
    m(-1, 10, -9),
    m(-1, 10, -8),
    m(-2, 10, -7),
    m(-1, 10, -6),
    m(-1, 10, -5),
    m(1, 11, -10),
    m(2, 11, -9),
    m(2, 11, -8),
    m(1, 11, -7),
    m(-1, 12, -10),
    m(-1, 12, -9),
    m(-1, 12, -8),
];

// c_k(q) = q^{3k-2} * C_INNER
pub const C_PREFIX: &[KMonomial] = &[m(1, 3, -2)];
pub const C_INNER: &[KMonomial] = &[
    m(1, 0, 0),
    m(1, 0, 1),
    m(-2, 1, -1),
    m(-3, 1, 0),
    m(-2, 1, 1),
    m(-1, 1, 2),
    m(1, 2, -2),
    m(2, 2, -1),
    m(2, 2, 0),
    m(1, 2, 1),
    m(1, 2, 2),
    m(-1, 3, -5),
    m(-1, 3, -4),
    m(-3, 3, -3),
    m(-3, 3, -2),
    m(-3, 3, -1),
    m(-1, 3, 0),
    m(-1, 3, 1),
    m(1, 4, -7),
    m(2, 4, -6),
    m(3, 4, -5),
    m(3, 4, -4),
    m(3, 4, -3),
    m(1, 4, -2),
    m(-2, 4, 0),
    m(-1, 4, 1),
    m(-1, 4, 2),
    m(-1, 5, -8),
    m(-2, 5, -7),
    m(-3, 5, -6),
    m(-2, 5, -5),
    m(-3, 5, -4),
    m(-1, 5, -3),
    m(2, 5, -1),
    m(2, 5, 0),
    m(1, 5, 1),
    m(1, 6, -9),
    m(3, 6, -8),
    m(4, 6, -7),
    m(4, 6, -6),
    m(2, 6, -5),
    m(1, 6, -4),
    m(-2, 6, -3),
    m(-2, 6, -2),
    m(-4, 6, -1),
    m(-2, 6, 0),
    m(-1, 6, 1),
    m(-1, 7, -9),
    m(-1, 7, -8),
    m(-1, 7, -7),
    m(1, 7, -6),
    m(2, 7, -5),
    m(3, 7, -4),
    m(3, 7, -3),
    m(2, 7, -2),
    m(1, 7, -1),
    m(1, 8, -9),
    m(-2, 8, -6),
    m(-2, 8, -5),
    m(-3, 8, -4),
    m(-2, 8, -3),
    m(-1, 8, -2),
    m(1, 9, -9),
    m(2, 9, -8),
    m(3, 9, -7),
    m(3, 9, -6),
    m(2, 9, -5),
    m(1, 9, -4),
    m(-1, 10, -9),
    m(-1, 10, -8),
    m(-1, 10, -7),
    m(1, 11, -9),
    m(1, 11, -8),
    m(1, 11, -7),
];

// d_k(q) = q^{5k-4} * D_INNER
pub const D_PREFIX: &[KMonomial] = &[m(1, 5, -4)];
pub const D_INNER: &[KMonomial] = &[
    m(1, 0, 0),
    m(-1, 1, -3),
    m(-1, 1, -2),
    m(-1, 1, -1),
    m(1, 2, -7),
    m(1, 2, -3),
    m(-1, 2, 0),
    m(-1, 3, -8),
    m(-2, 3, -7),
    m(-2, 3, -6),
    m(-2, 3, -5),
    m(-2, 3, -4),
    m(-1, 3, -3),
    m(1, 3, -1),
    m(1, 3, 0),
    m(1, 4, -8),
    m(1, 4, -7),
    m(1, 4, -6),
    m(-1, 4, -3),
    m(-1, 4, -2),
    m(-1, 4, -1),
    m(-1, 5, -9),
    m(-1, 5, -8),
    m(-1, 5, -7),
    m(-1, 5, -6),
    m(-1, 5, -5),
    m(-1, 5, -4),
    m(-1, 6, -8),
    m(-1, 6, -7),
    m(-1, 6, -6),
    m(-1, 6, -5),
    m(-1, 6, -4),
    m(-1, 6, -3),
    m(1, 7, -9),
    m(1, 7, -8),
    m(1, 7, -7),
    m(-1, 8, -9),
    m(-1, 8, -8),
    m(-1, 8, -7),
    m(-1, 8, -6),
    m(-1, 8, -5),
    m(-1, 8, -4),
];

// e_k(q) = q^{6k-9} * E_INNER
pub const E_PREFIX: &[KMonomial] = &[m(1, 6, -9)];
pub const E_INNER: &[KMonomial] = &[
    m(1, 0, 0),
    m(-1, 1, -1),
    m(-2, 1, 0),
    m(-1, 1, 1),
    m(1, 2, -1),
    m(1, 2, 0),
    m(1, 2, 1),
    m(-1, 3, -2),
    m(-1, 3, -1),
    m(-1, 3, 0),
    m(-1, 4, -1),
    m(-1, 4, 0),
    m(-1, 4, 1),
    m(1, 5, -2),
    m(1, 5, -1),
    m(1, 5, 0),
    m(-1, 6, -2),
    m(-1, 6, -1),
    m(-1, 6, 0),
];

/// Instantiate a monomial list at a concrete k.
pub fn eval_monomials(monomials: &[KMonomial], k: i64) -> QLaurent {
    let mut p = QLaurent::zero();
    for mono in monomials {
        p.add_term(mono.k_mul * k + mono.offset, BigInt::from(mono.coeff));
    }
    p
}

/// The five coefficient polynomials (a_k, b_k, c_k, d_k, e_k) at a concrete k.
pub fn coefficients_at(k: i64) -> [QLaurent; 5] {
    let pairs: [(&[KMonomial], &[KMonomial]); 5] = [
        (A_PREFIX, A_INNER),
        (B_PREFIX, B_INNER),
        (C_PREFIX, C_INNER),
        (D_PREFIX, D_INNER),
        (E_PREFIX, E_INNER),
    ];
    pairs.map(|(prefix, inner)| &eval_monomials(prefix, k) * &eval_monomials(inner, k))
}
