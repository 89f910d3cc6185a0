//! Newton series `f_a(z) = Σ_n (−1)^n (∇a)(n) C(z, n)` of truncated
//! harmonic-type MLVs.
//!
//! The coefficients never go through a numerical binomial transform:
//! `∇s^*_w = s^sh_{⋆I(w)}` exactly, and `∇S^*_w = Σ^{-1}∇s^*_w` because
//! `(Σ∇)² = id`.  The constant (empty-word) part of a polynomial is a
//! constant sequence whose Newton series is the constant itself.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{CRat, LabelDomain, NcPoly, Word};
use crate::error::Result;
use crate::linmaps::{i_map, star};
use crate::scalar::{Coeff, Q};

use super::sequence::Sequence;
use super::truncated::{poly_values, TruncKind, TruncVariant};
use super::SeqScalar;

/// Which truncated sequence the series interpolates.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NewtonKind {
    /// `s^*_w(m)` (outer index pinned).
    Pinned,
    /// `S^*_w(m)` (cumulative).
    Cumulative,
}

/// How the partial sums are turned into an estimate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NewtonAccel {
    /// Plain partial sum; proxy = magnitude of the last included term.
    None,
    /// Aitken Δ² on partial sums at `N/4, N/2, N`; proxy = distance to the
    /// same extrapolation one level down, or the last term if larger.
    Aitken,
}

/// A floating-point Newton-series evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct NewtonResult {
    /// Real part of the estimate.
    pub estimate_re: f64,
    /// Imaginary part of the estimate.
    pub estimate_im: f64,
    /// Error proxy (no rigorous remainder bound is available).
    pub error_proxy: f64,
    /// Number of series terms used.
    pub terms: usize,
    /// Magnitude of the last included term.
    pub last_term: f64,
    /// Acceleration mode.
    pub accel: NewtonAccel,
}

impl NewtonResult {
    /// The estimate as a complex number.
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.estimate_re, self.estimate_im)
    }
}

/// Split off the empty-word coefficient.
fn split_constant(p: &NcPoly<Q>) -> (Q, NcPoly<Q>) {
    let c = p.coeff(&Word::empty());
    let mut rest = p.clone();
    rest.add_term(Word::empty(), c.neg_ref());
    (c, rest)
}

/// `(∇a)(n)` for `n < len`, where `a = s^*_p` or `S^*_p` (complex-rational
/// labels).
pub fn newton_coefficients<T: SeqScalar>(p: &NcPoly<Q>, kind: NewtonKind, len: usize) -> Result<Vec<T>> {
    if len == 0 {
        return Ok(Vec::new());
    }
    let (c0, rest) = split_constant(p);
    let inv = star(&i_map(&rest, LabelDomain::Complex)?)?;
    let mut vals = poly_values::<T>(TruncKind::Sh, TruncVariant::Equal, &inv, len - 1)?;
    if kind == NewtonKind::Cumulative {
        vals = Sequence::new(vals).sigma_inv().values().to_vec();
    }
    vals[0] = vals[0].clone() + T::from_q(&c0);
    Ok(vals)
}

fn aitken(x0: Complex64, x1: Complex64, x2: Complex64) -> Complex64 {
    let d1 = x2 - x1;
    let d0 = x1 - x0;
    let den = d1 - d0;
    if den.norm() <= f64::EPSILON * x2.norm().max(1.0) {
        x2
    } else {
        x2 - d1 * d1 / den
    }
}

/// Floating-point Newton series at `z` with `terms` terms.
pub fn newton_eval(
    p: &NcPoly<Q>,
    kind: NewtonKind,
    z: Complex64,
    terms: usize,
    accel: NewtonAccel,
) -> Result<NewtonResult> {
    let terms = terms.max(1);
    let coeffs = newton_coefficients::<Complex64>(p, kind, terms)?;
    let mut binom = Complex64::new(1.0, 0.0);
    let mut partial = Vec::with_capacity(terms);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut last = 0.0;
    for (n, a) in coeffs.iter().enumerate() {
        if n > 0 {
            binom = binom * (z - (n - 1) as f64) / n as f64;
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let t = a * binom * sign;
        last = t.norm();
        acc += t;
        partial.push(acc);
    }
    let at = |n: usize| partial[n.max(1) - 1];
    let (value, proxy) = match accel {
        NewtonAccel::None => (acc, last),
        NewtonAccel::Aitken if terms >= 8 => {
            let hi = aitken(at(terms / 4), at(terms / 2), at(terms));
            let lo = aitken(at(terms / 8), at(terms / 4), at(terms / 2));
            (hi, (hi - lo).norm().max(f64::EPSILON * hi.norm()))
        }
        NewtonAccel::Aitken => (acc, last),
    };
    Ok(NewtonResult {
        estimate_re: value.re,
        estimate_im: value.im,
        error_proxy: proxy,
        terms,
        last_term: last,
        accel,
    })
}

/// Exact partial sum of the Newton series at a rational `z` with `terms`
/// terms.  At `z = m ∈ Z_{≥0}` with `terms > m` this is exactly `a(m)`.
pub fn newton_eval_exact(p: &NcPoly<Q>, kind: NewtonKind, z: &Q, terms: usize) -> Result<CRat> {
    let coeffs = newton_coefficients::<CRat>(p, kind, terms)?;
    let mut binom = Q::from_integer(1.into());
    let mut acc = CRat::new(Q::from_integer(0.into()), Q::from_integer(0.into()));
    for (n, a) in coeffs.iter().enumerate() {
        if n > 0 {
            binom = binom * (z - Q::from_integer((n as i64 - 1).into())) / Q::from_integer((n as i64).into());
        }
        let signed = if n % 2 == 0 { binom.clone() } else { -binom.clone() };
        acc += a * CRat::from_q(&signed);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Label, Letter};
    use crate::scalar::q;
    use crate::seqnum::truncated::word_values;

    fn y(n: i64, d: i64) -> Letter {
        Letter::Y(Label::rational(q(n, d)))
    }

    #[test]
    fn interpolates_at_integers() {
        let w = Word(vec![y(1, 2)]);
        let p = NcPoly::from_word(w.clone());
        let s = word_values::<CRat>(TruncKind::Ast, TruncVariant::Equal, &w, 6).unwrap();
        let big = word_values::<CRat>(TruncKind::Ast, TruncVariant::Leq, &w, 6).unwrap();
        for m in 0..=6 {
            let zq = q(m as i64, 1);
            assert_eq!(newton_eval_exact(&p, NewtonKind::Pinned, &zq, 10).unwrap(), s[m]);
            assert_eq!(newton_eval_exact(&p, NewtonKind::Cumulative, &zq, 10).unwrap(), big[m]);
        }
    }

    #[test]
    fn coefficients_match_exact_nabla() {
        let w = Word(vec![Letter::X, y(1, 3), y(3, 4)]);
        let p = &NcPoly::from_word(w.clone()) + &NcPoly::one();
        for kind in [NewtonKind::Pinned, NewtonKind::Cumulative] {
            let tk = if kind == NewtonKind::Pinned { TruncVariant::Equal } else { TruncVariant::Leq };
            let mut vals = word_values::<CRat>(TruncKind::Ast, tk, &w, 12).unwrap();
            for v in vals.iter_mut() {
                *v = v.clone() + CRat::from_q(&q(1, 1));
            }
            let direct = Sequence::new(vals).nabla().unwrap();
            let via = newton_coefficients::<CRat>(&p, kind, 13).unwrap();
            assert_eq!(direct.values(), via.as_slice());
        }
    }

    #[test]
    fn float_matches_exact_at_integer() {
        let p = NcPoly::from_word(Word(vec![y(1, 2), y(1, 1)]));
        let exact = newton_eval_exact(&p, NewtonKind::Pinned, &q(3, 1), 8).unwrap();
        let fl = newton_eval(&p, NewtonKind::Pinned, Complex64::new(3.0, 0.0), 8, NewtonAccel::None).unwrap();
        assert!((fl.value() - exact.to_c64()).norm() < 1e-12);
    }
}
