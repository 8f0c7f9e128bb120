use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An exact Laurent polynomial in q: finite support, negative exponents
/// allowed, no zero coefficients stored. Equality is support equality.
///
/// Sparse storage matters here: recurrence coefficient polynomials have
/// exponent spreads like q^{2k+1} .. q^{12k-8}.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(coeff: BigInt, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(exp, coeff) in pairs {
            p.add_term(exp, BigInt::from(coeff));
        }
        p
    }

    /// Add `coeff * q^exp`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// Evaluate at q = 1: the sum of all coefficients.
    pub fn eval_at_q1(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// All coefficients nonnegative?
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&e, c) in rhs.iter() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&e, c) in rhs.iter() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&ea, ca) in self.iter() {
            for (&eb, cb) in rhs.iter() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&e, c) in self.iter() {
            out.add_term(e, -c);
        }
        out
    }
}

/// Serializes as an {exponent: coefficient-string} map.
impl serde::Serialize for QLaurent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> serde::Deserialize<'de> for QLaurent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut p = QLaurent::zero();
        for (e, c) in raw {
            let exp = e.parse::<i64>().map_err(serde::de::Error::custom)?;
            let coeff = c.parse::<BigInt>().map_err(serde::de::Error::custom)?;
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*q^{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// The exact finite Pochhammer polynomial `prod_{j=0}^{n-1} (1 - q^{start + j*modulus})`.
/// n = 0 gives the empty product 1.
pub fn poch_finite(start: i64, modulus: i64, n: usize) -> QLaurent {
    let mut out = QLaurent::one();
    for j in 0..n as i64 {
        let factor = QLaurent::from_pairs(&[(0, 1), (start + j * modulus, -1)]);
        out = &out * &factor;
    }
    out
}

/// Gaussian binomial coefficient [m choose r]_q as an exact polynomial.
///
/// Returns the zero polynomial when r < 0 or r > m, following the usual
/// bracketed convention. Computed as prod_{j=1}^{r} (1-q^{m-r+j})/(1-q^j)
/// with exact polynomial division at each step.
pub fn qbinom(m: i64, r: i64) -> QLaurent {
    if r < 0 || r > m {
        return QLaurent::zero();
    }
    let r = r.min(m - r) as usize;
    let m = m as usize;
    // Dense accumulator; the largest intermediate degree is r*(m-r+1).
    let mut dense: Vec<BigInt> = vec![BigInt::zero(); r * (m - r + 1) + 1];
    dense[0] = BigInt::one();
    let mut deg = 0usize;
    for j in 1..=r {
        // multiply by (1 - q^{m-r+j})
        let e = m - r + j;
        deg += e;
        for i in (e..=deg).rev() {
            let (lo, hi) = dense.split_at_mut(i);
            hi[0] -= &lo[i - e];
        }
        // exact division by (1 - q^j): prefix sums, then the top j slots
        // of the old degree range must cancel.
        for i in j..=deg {
            let (lo, hi) = dense.split_at_mut(i);
            hi[0] += &lo[i - j];
        }
        deg -= j;
        for i in deg + 1..=deg + j {
            assert!(dense[i].is_zero(), "inexact division in qbinom({m},{r})");
        }
    }
    let mut out = QLaurent::zero();
    for (i, c) in dense.into_iter().enumerate().take(deg + 1) {
        out.add_term(i as i64, c);
    }
    out
}
