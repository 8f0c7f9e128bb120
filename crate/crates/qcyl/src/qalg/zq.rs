use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::{qbinom, QLaurent};
use super::qseries::QSeries;

/// A polynomial in z of bounded degree whose coefficients are truncated
/// q-series, all sharing one truncation order. `zdeg` is exclusive: a value
/// with zdeg M stores the coefficients of z^0 .. z^{M-1}.
///
/// This is the value type of the bivariate generating functions F_c(z,q)
/// and G_c(z,q); the z^k coefficient of G_c is the series written g_c(k).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZQSeries {
    zcoeffs: Vec<QSeries>,
}

impl ZQSeries {
    pub fn zero(zdeg: usize, order: usize) -> Self {
        assert!(zdeg >= 1, "z-degree bound must be at least 1");
        ZQSeries {
            zcoeffs: vec![QSeries::zero(order); zdeg],
        }
    }

    /// The constant 1 (as a bivariate series).
    pub fn one(zdeg: usize, order: usize) -> Self {
        let mut s = Self::zero(zdeg, order);
        s.zcoeffs[0] = QSeries::one(order);
        s
    }

    pub fn from_zcoeffs(zcoeffs: Vec<QSeries>) -> Self {
        assert!(!zcoeffs.is_empty());
        let order = zcoeffs[0].order();
        assert!(
            zcoeffs.iter().all(|c| c.order() == order),
            "all z-coefficients must share one truncation order"
        );
        ZQSeries { zcoeffs }
    }

    /// Exclusive z-degree bound M.
    pub fn zdeg(&self) -> usize {
        self.zcoeffs.len()
    }

    /// Shared q-truncation order of every z-coefficient.
    pub fn order(&self) -> usize {
        self.zcoeffs[0].order()
    }

    /// The q-series coefficient of z^k.
    pub fn zcoeff(&self, k: usize) -> &QSeries {
        &self.zcoeffs[k]
    }

    pub fn zcoeff_mut(&mut self, k: usize) -> &mut QSeries {
        &mut self.zcoeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.zcoeffs.iter().all(|c| c.is_zero())
    }

    /// First nonzero coefficient position, ordered by z-degree then q-exponent.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        for (k, c) in self.zcoeffs.iter().enumerate() {
            if let Some(v) = c.valuation() {
                return Some((k, v));
            }
        }
        None
    }

    /// First (z-degree, q-exponent) at which two bivariate series disagree,
    /// up to the shared bounds.
    pub fn first_diff(&self, other: &ZQSeries) -> Option<(usize, usize)> {
        let m = self.zdeg().min(other.zdeg());
        for k in 0..m {
            if let Some(i) = self.zcoeffs[k].first_diff(&other.zcoeffs[k]) {
                return Some((k, i));
            }
        }
        None
    }

    pub fn truncated(&self, zdeg: usize, order: usize) -> ZQSeries {
        ZQSeries {
            zcoeffs: self.zcoeffs[..zdeg.min(self.zdeg())]
                .iter()
                .map(|c| c.truncated(order))
                .collect(),
        }
    }

    /// The substitution z -> z q^j: the z^k coefficient picks up a factor q^{jk}.
    pub fn subst_zq(&self, j: usize) -> ZQSeries {
        if j == 0 {
            return self.clone();
        }
        ZQSeries {
            zcoeffs: self
                .zcoeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.shifted(j * k))
                .collect(),
        }
    }

    /// Multiply by the monomial z^a q^b, dropping z-degrees pushed past the bound.
    pub fn mul_z_monomial(&self, a: usize, b: usize) -> ZQSeries {
        let m = self.zdeg();
        let mut out = Self::zero(m, self.order());
        for k in 0..m.saturating_sub(a) {
            out.zcoeffs[k + a] = self.zcoeffs[k].shifted(b);
        }
        out
    }

    /// Multiply by the finite Pochhammer prefix (zq;q)_j, i.e. by
    /// `sum_i (-1)^i q^{i(i+1)/2} [j choose i]_q z^i`, truncated at the z-bound.
    pub fn mul_poch_prefix(&self, j: usize) -> ZQSeries {
        if j == 0 {
            return self.clone();
        }
        let m = self.zdeg();
        let mut out = Self::zero(m, self.order());
        for i in 0..=j.min(m - 1) {
            let mut term = &QLaurent::monomial(BigInt::one(), (i * (i + 1) / 2) as i64)
                * &qbinom(j as i64, i as i64);
            if i % 2 == 1 {
                term = -&term;
            }
            for k in 0..m - i {
                let contrib = self.zcoeffs[k].mul_laurent(&term);
                out.zcoeffs[k + i] = &out.zcoeffs[k + i] + &contrib;
            }
        }
        out
    }

    /// Multiply by 1/(zq;q)_inf via Euler's expansion
    /// `sum_m z^m q^m / (q;q)_m`; this recovers F from G.
    pub fn div_poch_inf(&self) -> ZQSeries {
        let m = self.zdeg();
        let order = self.order();
        let mut euler = Vec::with_capacity(m);
        let mut cur = QSeries::one(order);
        for i in 0..m {
            if i > 0 {
                cur.div_assign_one_minus(i);
            }
            euler.push(cur.shifted(i));
        }
        self.mul_z_kernel(&euler)
    }

    /// Multiply by (zq;q)_inf via `sum_i (-1)^i z^i q^{i(i+1)/2} / (q;q)_i`;
    /// the inverse of [`ZQSeries::div_poch_inf`] up to truncation.
    pub fn mul_poch_inf(&self) -> ZQSeries {
        let m = self.zdeg();
        let order = self.order();
        let mut kernel = Vec::with_capacity(m);
        let mut cur = QSeries::one(order);
        for i in 0..m {
            if i > 0 {
                cur.div_assign_one_minus(i);
            }
            let mut t = cur.shifted(i * (i + 1) / 2);
            if i % 2 == 1 {
                t = &QSeries::zero(order) - &t;
            }
            kernel.push(t);
        }
        self.mul_z_kernel(&kernel)
    }

    /// Multiply by `sum_i kernel[i] z^i`, truncated at the z-bound.
    fn mul_z_kernel(&self, kernel: &[QSeries]) -> ZQSeries {
        let m = self.zdeg();
        let mut out = Self::zero(m, self.order());
        for i in 0..m.min(kernel.len()) {
            if kernel[i].is_zero() {
                continue;
            }
            for k in 0..m - i {
                if self.zcoeffs[k].is_zero() {
                    continue;
                }
                let contrib = &self.zcoeffs[k] * &kernel[i];
                out.zcoeffs[k + i] = &out.zcoeffs[k + i] + &contrib;
            }
        }
        out
    }

    /// Column sums at z = 1. Valid as a truncation of F(1,q) or G(1,q) only
    /// when the dropped z-degrees cannot contribute below the q-order, which
    /// holds for cylindric generating functions whenever zdeg >= order.
    pub fn z1_sum(&self) -> QSeries {
        let mut acc = QSeries::zero(self.order());
        for c in &self.zcoeffs {
            acc = &acc + c;
        }
        acc
    }
}

/// Serializes as an array (over z-degrees) of coefficient-string arrays.
impl serde::Serialize for ZQSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.zcoeffs.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for ZQSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let zcoeffs = Vec::<QSeries>::deserialize(d)?;
        if zcoeffs.is_empty() {
            return Err(serde::de::Error::custom("empty z-coefficient list"));
        }
        let order = zcoeffs[0].order();
        if zcoeffs.iter().any(|c| c.order() != order) {
            return Err(serde::de::Error::custom("mixed truncation orders"));
        }
        Ok(ZQSeries { zcoeffs })
    }
}

impl Add for &ZQSeries {
    type Output = ZQSeries;
    fn add(self, rhs: &ZQSeries) -> ZQSeries {
        let m = self.zdeg().min(rhs.zdeg());
        ZQSeries {
            zcoeffs: (0..m)
                .map(|k| &self.zcoeffs[k] + &rhs.zcoeffs[k])
                .collect(),
        }
    }
}

impl Sub for &ZQSeries {
    type Output = ZQSeries;
    fn sub(self, rhs: &ZQSeries) -> ZQSeries {
        let m = self.zdeg().min(rhs.zdeg());
        ZQSeries {
            zcoeffs: (0..m)
                .map(|k| &self.zcoeffs[k] - &rhs.zcoeffs[k])
                .collect(),
        }
    }
}
