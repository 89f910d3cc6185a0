//! Finite prefixes of sequences `Z_{≥0} → C` and the operators `Σ`, `Σ^{-1}`,
//! `∇` and `Δ`.
//!
//! * `(Σa)(m) = Σ_{i≤m} a(i)`, `(Σ^{-1}a)(m) = a(m) − a(m−1)`;
//! * `(∇a)(m) = Σ_{i≤m} (−1)^i C(m,i) a(i)` (an involution);
//! * `(Δa)(m) = a(m) − a(m+1)`.
//!
//! `∇` is computed with exact binomials; in floating point it is refused
//! beyond index 40, where the alternating binomial sum loses all digits.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::Q;

use super::SeqScalar;

/// Largest index at which floating-point `∇` is allowed.
pub const FLOAT_NABLA_CAP: usize = 40;

/// A sequence operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Transform {
    /// Partial sums.
    Sigma,
    /// Backward differences.
    SigmaInv,
    /// Binomial inversion.
    Nabla,
    /// Forward difference `a(m) − a(m+1)` (shortens the prefix by one).
    Delta,
}

/// The values `a(0), …, a(len−1)` of a sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct Sequence<T: SeqScalar> {
    values: Vec<T>,
}

/// Row `m` of Pascal's triangle with alternating signs, as rationals.
pub fn signed_binomial_row(m: usize) -> Vec<Q> {
    let mut row = Vec::with_capacity(m + 1);
    let mut c = BigInt::one();
    for i in 0..=m {
        let v = if i % 2 == 0 { c.clone() } else { -c.clone() };
        row.push(Q::from_integer(v));
        c = c * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    row
}

impl<T: SeqScalar> Sequence<T> {
    /// Wrap explicit values.
    pub fn new(values: Vec<T>) -> Self {
        Sequence { values }
    }

    /// `a(m) = f(m)` for `m < len`.
    pub fn from_fn(len: usize, f: impl FnMut(usize) -> T) -> Self {
        Sequence { values: (0..len).map(f).collect() }
    }

    /// Number of known values.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Whether no values are known.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `a(m)`.
    pub fn get(&self, m: usize) -> &T {
        &self.values[m]
    }

    /// All known values.
    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// `Σ a`.
    pub fn sigma(&self) -> Self {
        let mut acc = T::zero();
        Sequence::new(
            self.values
                .iter()
                .map(|v| {
                    acc = acc.clone() + v.clone();
                    acc.clone()
                })
                .collect(),
        )
    }

    /// `Σ^{-1} a`.
    pub fn sigma_inv(&self) -> Self {
        Sequence::from_fn(self.len(), |m| {
            if m == 0 {
                self.values[0].clone()
            } else {
                self.values[m].clone() - self.values[m - 1].clone()
            }
        })
    }

    /// `∇ a` (floating-point prefixes longer than 41 are refused).
    pub fn nabla(&self) -> Result<Self> {
        if !T::EXACT && self.len() > FLOAT_NABLA_CAP + 1 {
            return Err(Error::FloatNabla(self.len() - 1));
        }
        Ok(Sequence::from_fn(self.len(), |m| {
            signed_binomial_row(m)
                .iter()
                .zip(&self.values)
                .fold(T::zero(), |acc, (c, a)| acc + T::from_q(c) * a.clone())
        }))
    }

    /// `Δ a`.
    pub fn delta(&self) -> Self {
        Sequence::from_fn(self.len().saturating_sub(1), |m| self.values[m].clone() - self.values[m + 1].clone())
    }

    /// `Δ^l a`.
    pub fn delta_pow(&self, l: usize) -> Self {
        (0..l).fold(self.clone(), |a, _| a.delta())
    }

    /// Apply an operator.
    pub fn apply(&self, t: Transform) -> Result<Self> {
        Ok(match t {
            Transform::Sigma => self.sigma(),
            Transform::SigmaInv => self.sigma_inv(),
            Transform::Nabla => self.nabla()?,
            Transform::Delta => self.delta(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CRat;
    use crate::scalar::q;
    use num_complex::Complex64;

    fn cr(n: i64, d: i64) -> CRat {
        CRat::new(q(n, d), q(0, 1))
    }

    #[test]
    fn nabla_of_reciprocals() {
        let a = Sequence::from_fn(6, |m| cr(1, m as i64 + 1));
        let b = a.nabla().unwrap();
        assert_eq!(*b.get(2), cr(1, 3));
        assert_eq!(b, a);
    }

    #[test]
    fn operator_identities() {
        let a = Sequence::from_fn(20, |m| cr((m * m) as i64 - 7, (2 * m + 3) as i64));
        assert_eq!(a.sigma().sigma_inv(), a);
        assert_eq!(a.sigma_inv().sigma(), a);
        assert_eq!(a.nabla().unwrap().nabla().unwrap(), a);
        let sn = |s: &Sequence<CRat>| s.nabla().unwrap().sigma();
        assert_eq!(sn(&sn(&a)), a);
    }

    #[test]
    fn float_nabla_is_capped() {
        let a = Sequence::from_fn(50, |_| Complex64::new(1.0, 0.0));
        assert!(matches!(a.nabla(), Err(Error::FloatNabla(49))));
        let ok = Sequence::from_fn(41, |_| Complex64::new(1.0, 0.0));
        assert!(ok.nabla().is_ok());
    }

    #[test]
    fn delta_of_geometric() {
        let a = Sequence::from_fn(10, |m| cr(1, 1 << m));
        let d = a.delta_pow(3);
        assert_eq!(d.len(), 7);
        assert_eq!(*d.get(2), cr(1, 32));
    }
}
