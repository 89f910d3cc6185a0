//! Truncated power series of multiple polylogarithms with exact
//! complex-rational coefficients, and the Landen-type identities they obey.
//!
//! * `Li^sh_w(z)`: strict sums, coefficient of `z^j` from
//!   [`strict_coefficients`](super::truncated::strict_coefficients);
//! * `L̄i^sh_w(z) = Σ_{m≥1} s^sh_w(m−1) z^m` (non-strict).
//!
//! Composition with `u(z) = z/(z−1) = −Σ_{j≥1} z^j` is exact through the
//! truncation order.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{CRat, LabelDomain, NcPoly, Word};
use crate::error::{Error, Result};
use crate::linmaps::{d_sh, iota, phi, star};
use crate::scalar::Q;

use super::truncated::{strict_poly_coefficients, word_values, TruncKind, TruncVariant};
use super::SeqScalar;

/// A power series truncated after `z^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct MplSeries {
    coeffs: Vec<CRat>,
}

impl MplSeries {
    /// From explicit coefficients `a_0..=a_order`.
    pub fn new(coeffs: Vec<CRat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        MplSeries { coeffs }
    }

    /// Zero series of the given order.
    pub fn zero(order: usize) -> Self {
        MplSeries { coeffs: vec![CRat::zero(); order + 1] }
    }

    /// Constant series.
    pub fn constant(c: CRat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `Σ_j a^j z^j` (the expansion of `1/(1 − a z)`).
    pub fn geometric(a: &CRat, order: usize) -> Self {
        let mut c = Vec::with_capacity(order + 1);
        let mut p = CRat::one();
        for _ in 0..=order {
            c.push(p.clone());
            p = &p * a;
        }
        MplSeries { coeffs: c }
    }

    /// `z/(z−1) = −Σ_{j≥1} z^j`.
    pub fn landen_variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        for c in s.coeffs.iter_mut().skip(1) {
            *c = -CRat::one();
        }
        s
    }

    /// Truncation order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients.
    pub fn coeffs(&self) -> &[CRat] {
        &self.coeffs
    }

    /// Sum (orders must agree).
    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.order(), o.order());
        MplSeries { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    /// Difference.
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-CRat::one()))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &CRat) -> Self {
        MplSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Truncated product.
    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut out = vec![CRat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        MplSeries { coeffs: out }
    }

    /// `f(g(z))` for `g(0) = 0`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument {
                op: "series composition",
                reason: "inner series must vanish at 0".into(),
            });
        }
        let n = self.order().min(g.order());
        let mut out = Self::zero(n);
        let mut power = Self::constant(CRat::one(), n);
        for a in self.coeffs.iter().take(n + 1) {
            out = out.add(&power.scale(a));
            power = power.mul(&MplSeries { coeffs: g.coeffs[..=n].to_vec() });
        }
        Ok(out)
    }

    /// Formal derivative (order drops by one).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        MplSeries {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(j, a)| a * CRat::from_i64(j as i64 + 1))
                .collect(),
        }
    }

    /// `f(z)/z` for `f(0) = 0` (order drops by one).
    pub fn div_z(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument { op: "series division by z", reason: "constant term is non-zero".into() });
        }
        Ok(MplSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// Truncate to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        MplSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }
}

/// Series of `Li^sh_p` (`strict = true`) or `L̄i^sh_p` (`strict = false`)
/// through `z^order`; labels must be complex-rational.
pub fn mpl_series(p: &NcPoly<Q>, strict: bool, order: usize) -> Result<MplSeries> {
    if strict {
        return Ok(MplSeries::new(strict_poly_coefficients::<CRat>(p, order)?));
    }
    let mut out = MplSeries::zero(order);
    for (w, c) in p.iter() {
        let c = CRat::from_q(c);
        if w.is_empty() {
            out.coeffs[0] = &out.coeffs[0] + c;
            continue;
        }
        if order == 0 {
            continue;
        }
        let vals = word_values::<CRat>(TruncKind::Sh, TruncVariant::Equal, w, order - 1)?;
        for (m, v) in vals.into_iter().enumerate() {
            out.coeffs[m + 1] = &out.coeffs[m + 1] + &c * v;
        }
    }
    Ok(out)
}

/// Outcome of the Landen-type checks for one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LandenReport {
    /// `Li_w(z) = Li_{φι(w)}(z/(z−1))`.
    pub strict_landen: bool,
    /// `L̄i_w(z) = −L̄i_{⋆(w)}(z/(z−1))`.
    pub nonstrict_landen: bool,
    /// `L̄i_w(z) = Li_{d_sh(w)}(z)`.
    pub nonstrict_via_d_sh: bool,
}

impl LandenReport {
    /// All three identities hold.
    pub fn all(&self) -> bool {
        self.strict_landen && self.nonstrict_landen && self.nonstrict_via_d_sh
    }
}

/// Check the Landen connection formulas through `z^order`.
pub fn landen_check(p: &NcPoly<Q>, order: usize) -> Result<LandenReport> {
    let dom = LabelDomain::Complex;
    let u = MplSeries::landen_variable(order);
    let li = mpl_series(p, true, order)?;
    let pi = phi(&iota(p)?, dom)?;
    let strict_landen = li == mpl_series(&pi, true, order)?.compose(&u)?;
    let lib = mpl_series(p, false, order)?;
    let st = star(p)?;
    let nonstrict_landen = lib == mpl_series(&st, false, order)?.compose(&u)?.scale(&-CRat::one());
    let nonstrict_via_d_sh = lib == mpl_series(&d_sh(p, dom)?, true, order)?;
    Ok(LandenReport { strict_landen, nonstrict_landen, nonstrict_via_d_sh })
}

/// Both partial-sum identities relating `L̄i_w` to `Σ s^sh_w` and
/// `∇Σ^{-1} s^sh_w`, as exact coefficient identities through `z^order`.
pub fn partial_sum_identities_hold(w: &Word, order: usize) -> Result<bool> {
    use super::sequence::Sequence;
    if w.is_empty() || order == 0 {
        return Err(Error::InvalidArgument { op: "partial-sum identities", reason: "needs a non-empty word".into() });
    }
    let p = NcPoly::<Q>::from_word(w.clone());
    let geo = MplSeries::geometric(&CRat::one(), order);
    let s = Sequence::new(word_values::<CRat>(TruncKind::Sh, TruncVariant::Equal, w, order - 1)?);
    let shift = |a: &Sequence<CRat>| {
        let mut c = vec![CRat::zero()];
        c.extend(a.values().iter().cloned());
        MplSeries::new(c)
    };
    let lhs1 = geo.mul(&mpl_series(&p, false, order)?);
    let first = lhs1 == shift(&s.sigma());
    let lhs2 = geo.mul(&mpl_series(&p, false, order)?.compose(&MplSeries::landen_variable(order))?);
    let second = lhs2 == shift(&s.sigma_inv().nabla()?).scale(&-CRat::one());
    Ok(first && second)
}

/// Both differential formulas for the strict series of one word: the
/// derivative of `Li_w(z)` and of `Li_w(z/(z−1))`.
pub fn differential_formulas_hold(w: &Word, order: usize) -> Result<bool> {
    let (blocks, trailing) = w.factors();
    if blocks.is_empty() || trailing > 0 || order < 2 {
        return Err(Error::InvalidArgument { op: "differential formula", reason: "needs a non-empty word in A^1".into() });
    }
    let p = NcPoly::<Q>::from_word(w.clone());
    let u = MplSeries::landen_variable(order);
    let s1 = CRat::label_value(&blocks[0].label, "differential formula")?;
    let one = CRat::one();
    let lower = order - 1;
    let tail = Word(w.letters()[1..].to_vec());
    let tail_p = NcPoly::<Q>::from_word(tail.clone());
    let d1 = mpl_series(&p, true, order)?.derivative();
    let d2 = mpl_series(&p, true, order)?.compose(&u)?.derivative();
    let (e1, e2) = if blocks[0].k > 1 {
        let rest = mpl_series(&tail_p, true, order)?;
        let via_u = rest.compose(&u)?;
        // 1/z + 1/(1−z) applied to a series vanishing at 0.
        let e2 = via_u.div_z()?.add(&MplSeries::geometric(&one, order).mul(&via_u).truncate(lower));
        (rest.div_z()?, e2)
    } else {
        let kern1 = MplSeries::geometric(&s1, lower).scale(&s1);
        let t = &one - &s1;
        let kern2 = MplSeries::geometric(&t, lower).scale(&t).sub(&MplSeries::geometric(&one, lower));
        if tail.is_empty() {
            (kern1, kern2)
        } else {
            let rest = mpl_series(&tail_p, true, lower)?;
            (kern1.mul(&rest), kern2.mul(&rest.compose(&u.truncate(lower))?))
        }
    };
    Ok(d1 == e1 && d2 == e2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Label, Letter};
    use crate::scalar::q;

    fn y(n: i64, d: i64) -> Letter {
        Letter::Y(Label::rational(q(n, d)))
    }

    fn cr(n: i64, d: i64) -> CRat {
        CRat::new(q(n, d), q(0, 1))
    }

    #[test]
    fn depth_one_is_minus_log() {
        let s = cr(2, 5);
        let li = mpl_series(&NcPoly::from_word(Word(vec![y(2, 5)])), true, 12).unwrap();
        for j in 1..=12 {
            let mut p = CRat::one();
            for _ in 0..j {
                p = &p * &s;
            }
            assert_eq!(li.coeffs()[j], p * cr(1, j as i64));
        }
    }

    #[test]
    fn logarithm_connection() {
        // Li_{y_s}(z/(z−1)) = Li_{y_{1−s}}(z) − Li_{y_1}(z).
        let n = 15;
        let u = MplSeries::landen_variable(n);
        let lhs = mpl_series(&NcPoly::from_word(Word(vec![y(1, 3)])), true, n).unwrap().compose(&u).unwrap();
        let rhs = mpl_series(&NcPoly::from_word(Word(vec![y(2, 3)])), true, n)
            .unwrap()
            .sub(&mpl_series(&NcPoly::from_word(Word(vec![y(1, 1)])), true, n).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn landen_for_small_words() {
        for w in [
            Word(vec![Letter::X, y(1, 2)]),
            Word(vec![y(1, 1)]),
            Word(vec![y(1, 3), y(3, 4)]),
            Word(vec![Letter::X, y(1, 1), y(2, 7)]),
        ] {
            let r = landen_check(&NcPoly::from_word(w.clone()), 14).unwrap();
            assert!(r.all(), "{w}: {r:?}");
        }
    }

    #[test]
    fn partial_sums_and_derivatives() {
        for w in [Word(vec![y(1, 2)]), Word(vec![Letter::X, y(1, 3), y(1, 1)]), Word(vec![y(1, 1), Letter::X, y(2, 3)])] {
            assert!(partial_sum_identities_hold(&w, 12).unwrap(), "{w}");
            assert!(differential_formulas_hold(&w, 12).unwrap(), "{w}");
        }
    }
}
