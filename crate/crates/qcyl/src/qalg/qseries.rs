use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::QLaurent;

/// A truncated formal power series in q with exact integer coefficients.
///
/// The truncation order N is exclusive: a `QSeries` of order N stores the
/// coefficients of q^0 .. q^{N-1} and nothing else. Arithmetic never reads
/// or writes exponents >= N; operations on operands of different orders
/// produce a result of the minimum order, so pipeline code never has to
/// track orders by hand.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    /// The constant series 1 at the given truncation order.
    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// The single term `coeff * q^exp`, truncated at `order`.
    pub fn monomial(coeff: BigInt, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp < order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        QSeries { coeffs }
    }

    /// Convenience constructor for tests and small tables.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QSeries {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Exclusive truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of q^i. Panics if i >= order.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exponent of the lowest nonzero term, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// First exponent at which two series disagree, up to the shared order.
    pub fn first_diff(&self, other: &QSeries) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    /// Copy truncated to order `min(n, order)`.
    pub fn truncated(&self, n: usize) -> QSeries {
        QSeries {
            coeffs: self.coeffs[..n.min(self.coeffs.len())].to_vec(),
        }
    }

    /// Multiply by q^shift, dropping terms pushed past the order.
    pub fn shifted(&self, shift: usize) -> QSeries {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..n.saturating_sub(shift) {
            out.coeffs[i + shift] = self.coeffs[i].clone();
        }
        out
    }

    /// In-place `self += coeff * q^shift * other`, truncated at self.order().
    pub fn add_scaled_shifted(&mut self, other: &QSeries, coeff: &BigInt, shift: usize) {
        if coeff.is_zero() {
            return;
        }
        let n = self.order();
        for i in 0..other.order().min(n.saturating_sub(shift)) {
            let c = &other.coeffs[i];
            if !c.is_zero() {
                self.coeffs[i + shift] += c * coeff;
            }
        }
    }

    /// In-place multiplication by the unit polynomial (1 - q^e). Exact.
    pub fn mul_assign_one_minus(&mut self, e: usize) {
        assert!(e >= 1, "exponent must be positive, got {e}");
        let n = self.coeffs.len();
        for i in (e..n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - e];
        }
    }

    /// In-place multiplication by 1/(1 - q^e), the stride-e prefix sum. Exact.
    pub fn div_assign_one_minus(&mut self, e: usize) {
        assert!(e >= 1, "exponent must be positive, got {e}");
        let n = self.coeffs.len();
        for i in e..n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - e];
        }
    }

    /// `self * 1/(1 - q^e)` as a new series.
    pub fn div_one_minus(&self, e: usize) -> QSeries {
        let mut out = self.clone();
        out.div_assign_one_minus(e);
        out
    }

    /// Multiply by an exact Laurent polynomial with nonnegative support.
    ///
    /// Panics on negative exponents: a truncated series cannot absorb a
    /// downward shift exactly.
    pub fn mul_laurent(&self, p: &QLaurent) -> QSeries {
        let mut out = Self::zero(self.order());
        for (&exp, coeff) in p.iter() {
            assert!(exp >= 0, "negative exponent {exp} in series-polynomial product");
            out.add_scaled_shifted(self, coeff, exp as usize);
        }
        out
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeffs[i] + &rhs.coeffs[i]);
        }
        QSeries { coeffs }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeffs[i] - &rhs.coeffs[i]);
        }
        QSeries { coeffs }
    }
}

/// Truncated Cauchy product at the minimum of the two orders.
impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        let mut out = QSeries::zero(n);
        for i in 0..n {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in 0..n - i {
                let b = &rhs.coeffs[j];
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

/// Serializes as a JSON array of decimal strings: big integers overflow
/// native JSON numbers almost immediately.
impl serde::Serialize for QSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for QSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QSeries { coeffs })
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{}](", self.order())?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*q^{i}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// Truncated expansion of a product of inverse infinite Pochhammer symbols,
/// `prod 1/(q^s; q^m)_inf` over the given `(start, modulus)` factors.
///
/// Each factor contributes divisions by (1 - q^{s+jm}) for every exponent
/// below the order. Starts must be >= 1; q^0 factors have no convergent
/// formal expansion.
pub fn inv_poch_inf(factors: &[(usize, usize)], order: usize) -> QSeries {
    let mut out = QSeries::one(order);
    for &(start, modulus) in factors {
        assert!(start >= 1, "Pochhammer start must be >= 1, got {start}");
        assert!(modulus >= 1, "Pochhammer modulus must be >= 1, got {modulus}");
        let mut e = start;
        while e < order {
            out.div_assign_one_minus(e);
            e += modulus;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{count_colored_partitions, partition_numbers};

    #[test]
    fn mul_identity_case() {
        let one = QSeries::one(8);
        let p = QSeries::from_i64s(&[1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(&one * &p, p);
    }

    #[test]
    fn mul_hand_expansion() {
        // (1-q)(1-q^2) = 1 - q - q^2 + q^3
        let a = QSeries::from_i64s(&[1, -1, 0, 0, 0, 0, 0, 0]);
        let b = QSeries::from_i64s(&[1, 0, -1, 0, 0, 0, 0, 0]);
        assert_eq!(&a * &b, QSeries::from_i64s(&[1, -1, -1, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn mul_inverse_pair() {
        let geo = QSeries::one(4).div_one_minus(1);
        let mut m = QSeries::one(4);
        m.mul_assign_one_minus(1);
        assert_eq!(&geo * &m, QSeries::one(4));
    }

    #[test]
    fn mul_takes_min_order() {
        let a = QSeries::one(10);
        let b = QSeries::one(6);
        assert_eq!((&a * &b).order(), 6);
    }

    #[test]
    fn div_one_minus_geometric() {
        assert_eq!(
            QSeries::one(5).div_one_minus(1),
            QSeries::from_i64s(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            QSeries::one(7).div_one_minus(3),
            QSeries::from_i64s(&[1, 0, 0, 1, 0, 0, 1])
        );
    }

    #[test]
    fn div_one_minus_inverse_pair() {
        let p = QSeries::from_i64s(&[1, 0, 0, -1, 0, 0, 0]);
        assert_eq!(p.div_one_minus(3), QSeries::one(7));
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn div_one_minus_rejects_zero_exponent() {
        QSeries::one(4).div_assign_one_minus(0);
    }

    #[test]
    fn inv_poch_inf_mod5_matches_partition_count() {
        // Partitions into parts congruent to +-1 mod 5.
        let s = inv_poch_inf(&[(1, 5), (4, 5)], 7);
        assert_eq!(s, QSeries::from_i64s(&[1, 1, 1, 1, 2, 2, 3]));
        let parts: Vec<(usize, usize)> = (1..40)
            .filter(|v| v % 5 == 1 || v % 5 == 4)
            .map(|v| (v, 1))
            .collect();
        for n in 0..7 {
            assert_eq!(
                s.coeff(n),
                &BigInt::from(count_colored_partitions(n, &parts)),
                "mod-5 coefficient {n}"
            );
        }
    }

    #[test]
    fn inv_poch_inf_empty_product() {
        assert_eq!(inv_poch_inf(&[], 9), QSeries::one(9));
    }

    #[test]
    fn inv_poch_inf_partition_numbers() {
        let s = inv_poch_inf(&[(1, 1)], 6);
        assert_eq!(s, QSeries::from_i64s(&[1, 1, 2, 3, 5, 7]));
    }

    #[test]
    fn inv_poch_inf_matches_partition_oracle_to_50() {
        let n = 50;
        let s = inv_poch_inf(&[(1, 1)], n);
        let expect = partition_numbers(n);
        for i in 0..n {
            assert_eq!(s.coeff(i), &BigInt::from(expect[i]), "p({i})");
        }
    }

    #[test]
    fn add_scaled_shifted_truncates() {
        let mut acc = QSeries::zero(5);
        let one = QSeries::one(5).div_one_minus(1);
        acc.add_scaled_shifted(&one, &BigInt::from(2), 3);
        assert_eq!(acc, QSeries::from_i64s(&[0, 0, 0, 2, 2]));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn series(order: usize) -> impl Strategy<Value = QSeries> {
            proptest::collection::vec(-9i64..=9, order)
                .prop_map(|v| QSeries::from_i64s(&v))
        }

        proptest! {
            #[test]
            fn ring_laws_at_fixed_order(
                a in series(12), b in series(12), c in series(12)
            ) {
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }

            #[test]
            fn truncation_commutes_with_multiplication(
                a in series(14), b in series(14), cut in 1usize..14
            ) {
                let truncate_then_mul = &a.truncated(cut) * &b.truncated(cut);
                let mul_then_truncate = (&a * &b).truncated(cut);
                prop_assert_eq!(truncate_then_mul, mul_then_truncate);
            }
        }
    }
}
