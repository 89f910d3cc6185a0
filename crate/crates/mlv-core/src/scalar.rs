//! Exact coefficient rings.
//!
//! Two rings are used throughout: the rationals [`Q`] and the univariate
//! polynomial ring [`QPoly`] = `Q[c]` in a formal parameter `c`.  Every
//! polynomial and operator in the crate is generic over [`Coeff`], so the
//! same code computes `∂_n` over `Q` and `∂̂_n^(c)` over `Q[c]`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rationals.
pub type Q = BigRational;

/// Shorthand for the rational `n / d`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Serialise a rational as a decimal-free `p/q` string (`p` alone when `q = 1`).
pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse a `p/q` or `p` string into a rational.
pub fn q_parse(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// An exact commutative coefficient ring containing `Q`.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Additive identity.
    fn zero() -> Self;
    /// Multiplicative identity.
    fn one() -> Self;
    /// Embedding of the rationals.
    fn from_q(x: &Q) -> Self;
    /// Exact zero test.
    fn is_zero(&self) -> bool;
    /// `self += other`.
    fn add_assign_ref(&mut self, other: &Self);
    /// `self * other`.
    fn mul_ref(&self, other: &Self) -> Self;
    /// `-self`.
    fn neg_ref(&self) -> Self;
    /// `self * x` for a rational `x`.
    fn mul_q(&self, x: &Q) -> Self;

    /// Embedding of a machine integer.
    fn from_i64(n: i64) -> Self {
        Self::from_q(&qi(n))
    }

    /// Degree in the formal parameter `c` (0 for constants and for `Q`).
    fn param_degree(&self) -> usize {
        0
    }
}

impl Coeff for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_q(x: &Q) -> Self {
        x.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_q(&self, x: &Q) -> Self {
        self * x
    }
}

/// A polynomial in the formal parameter `c` with rational coefficients.
///
/// Coefficients are stored densely from degree 0 upwards with no trailing
/// zeros, so the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<Q>,
}

impl QPoly {
    /// The polynomial with the given coefficients (constant term first).
    pub fn from_coeffs(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// The constant polynomial `x`.
    pub fn constant(x: Q) -> Self {
        Self::from_coeffs(vec![x])
    }

    /// The generator `c`.
    pub fn c() -> Self {
        Self::from_coeffs(vec![Zero::zero(), One::one()])
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `c^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> Q {
        self.coeffs.get(j).cloned().unwrap_or_else(Zero::zero)
    }

    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Evaluate at `c = x` (Horner).
    pub fn eval(&self, x: &Q) -> Q {
        let mut acc: Q = Zero::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Substitute `c ↦ λ c`.
    pub fn scale_var(&self, lambda: &Q) -> Self {
        let mut pow: Q = One::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= lambda;
        }
        Self::from_coeffs(out)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            let sign = if a.is_negative() { "-" } else { "+" };
            let mag = q_to_string(&a.abs());
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*c")?,
                _ => write!(f, "{mag}*c^{j}")?,
            }
        }
        Ok(())
    }
}

impl Coeff for QPoly {
    fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(One::one())
    }
    fn from_q(x: &Q) -> Self {
        Self::constant(x.clone())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Zero::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Coeff::zero();
        }
        let mut out = vec![<Q as Zero>::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }
    fn neg_ref(&self) -> Self {
        QPoly { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
    fn mul_q(&self, x: &Q) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * x).collect())
    }
    fn param_degree(&self) -> usize {
        self.degree().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qpoly_ring_ops_and_trim() {
        let c = QPoly::c();
        let one = <QPoly as Coeff>::one();
        let mut p = c.clone();
        p.add_assign_ref(&one); // 1 + c
        let sq = p.mul_ref(&p); // 1 + 2c + c^2
        assert_eq!(sq.coeffs(), &[qi(1), qi(2), qi(1)]);
        let mut z = sq.clone();
        z.add_assign_ref(&sq.neg_ref());
        assert!(Coeff::is_zero(&z));
        assert_eq!(z.degree(), None);
        assert_eq!(sq.eval(&q(1, 2)), q(9, 4));
        assert_eq!(sq.scale_var(&qi(-1)).coeffs(), &[qi(1), qi(-2), qi(1)]);
    }

    #[test]
    fn interpolation_consistency_at_twenty_points() {
        // Symbolic product evaluated at c must equal product of evaluations.
        let a = QPoly::from_coeffs(vec![q(1, 3), q(-2, 5), q(7, 2)]);
        let b = QPoly::from_coeffs(vec![q(-4, 1), q(0, 1), q(1, 9), q(3, 1)]);
        let ab = a.mul_ref(&b);
        let mut s = a.clone();
        s.add_assign_ref(&b);
        for k in 0..20 {
            let c = q(k - 7, 3);
            assert_eq!(ab.eval(&c), a.eval(&c) * b.eval(&c));
            assert_eq!(s.eval(&c), a.eval(&c) + b.eval(&c));
        }
    }

    #[test]
    fn rational_string_roundtrip() {
        for x in [q(3, 7), q(-5, 2), qi(4), qi(0)] {
            assert_eq!(q_parse(&q_to_string(&x)), Some(x));
        }
        assert_eq!(q_to_string(&q(-6, 4)), "-3/2");
        assert!(q_parse("1/0").is_none());
    }

    #[test]
    fn qpoly_display() {
        let p = QPoly::from_coeffs(vec![qi(1), q(-1, 2), qi(0), qi(3)]);
        assert_eq!(p.to_string(), "1 - 1/2*c + 3*c^3");
    }
}
