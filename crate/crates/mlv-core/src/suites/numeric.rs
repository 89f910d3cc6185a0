//! Floating-point sanity checks: classical values, numeric residuals of
//! generated relations, the quadratic relations among MLVs, and the decay
//! of iterated differences of the all-ones truncated sums.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::algebra::{CRat, Label, LabelDomain, Letter, NcPoly, Word};
use crate::derivations::left_divide;
use crate::error::{Error, Result};
use crate::hproducts::{hprod, HarmonicKind};
use crate::linmaps::{i_inv, i_map, m_s, phi, x_plus_delta_y};
use crate::relations::gen_lin;
use crate::scalar::Q;
use crate::seqnum::{c_array, mlv_numeric, Accel, MlvKind, Sequence};

fn y_one_power(dom: LabelDomain, n: usize) -> NcPoly<Q> {
    NcPoly::from_word(Word(vec![Letter::Y(dom.one()); n]))
}

fn strip_x(p: &NcPoly<Q>, op: &'static str) -> Result<NcPoly<Q>> {
    left_divide(p, &NcPoly::x())
        .ok_or_else(|| Error::InvalidArgument { op, reason: "expected every term to start with x".into() })
}

/// `L_x^{-1} I(I^{-1} L_{x+δ(s)y_s} φ I M_s(w) ∗̇ y_1^j)`.
pub fn quadratic_left_factor(s: &Label, w: &NcPoly<Q>, j: usize, dom: LabelDomain) -> Result<NcPoly<Q>> {
    let lifted = x_plus_delta_y::<Q>(s).concat(&phi(&i_map(&m_s(s, w, dom)?, dom)?, dom)?);
    let prod = hprod(HarmonicKind::DotStar, &i_inv(&lifted, dom)?, &y_one_power(dom, j))?;
    strip_x(&i_map(&prod, dom)?, "quadratic_left_factor")
}

/// `L_x^{-1}(L_x φ(w') ∗̇ y_1^l)`.
pub fn quadratic_right_factor(w2: &NcPoly<Q>, l: usize, dom: LabelDomain) -> Result<NcPoly<Q>> {
    let lifted = NcPoly::x().concat(&phi(w2, dom)?);
    strip_x(&hprod(HarmonicKind::DotStar, &lifted, &y_one_power(dom, l))?, "quadratic_right_factor")
}

/// Both sides of the quadratic relation of order `m` as admissible
/// polynomials: the list of factor pairs `(k, l)` with `k + l = m`, `l > 0`
/// on the left, and the single polynomial on the right.
#[allow(clippy::type_complexity)]
pub fn quadratic_relation_sides(
    s: &Label,
    w: &NcPoly<Q>,
    w2: &NcPoly<Q>,
    m: usize,
    dom: LabelDomain,
) -> Result<(Vec<(NcPoly<Q>, NcPoly<Q>)>, NcPoly<Q>)> {
    let mut pairs = Vec::new();
    for l in 1..=m {
        let k = m - l;
        pairs.push((quadratic_left_factor(s, w, k + 1, dom)?, quadratic_right_factor(w2, l, dom)?));
    }
    let rhs = quadratic_left_factor(s, &hprod(HarmonicKind::Star, w, w2)?, m + 1, dom)?;
    Ok((pairs, rhs))
}

/// Numeric value of `L^sh(p)` with Aitken acceleration; the empty
/// polynomial evaluates to 0.
fn l_sh(p: &NcPoly<Q>, m_max: usize) -> Result<(Complex64, f64)> {
    if p.is_zero() {
        return Ok((Complex64::new(0.0, 0.0), 0.0));
    }
    let r = mlv_numeric(p, MlvKind::Sh, m_max, Accel::Aitken)?;
    Ok((r.value(), r.error_proxy))
}

/// Evaluate both sides of a quadratic relation: `(lhs, rhs, error proxy)`.
pub fn quadratic_relation_values(
    s: &Label,
    w: &NcPoly<Q>,
    w2: &NcPoly<Q>,
    m: usize,
    dom: LabelDomain,
    m_max: usize,
) -> Result<(Complex64, Complex64, f64)> {
    let (pairs, rhs) = quadratic_relation_sides(s, w, w2, m, dom)?;
    let mut lhs = Complex64::new(0.0, 0.0);
    let mut proxy = 0.0;
    for (a, b) in &pairs {
        let (va, ea) = l_sh(a, m_max)?;
        let (vb, eb) = l_sh(b, m_max)?;
        lhs += va * vb;
        proxy += ea * vb.norm() + eb * va.norm() + ea * eb;
    }
    let (vr, er) = l_sh(&rhs, m_max)?;
    Ok((lhs, vr, proxy + er))
}

/// The largest `|L^sh(row)|` over the linear-family rows of weight `n` for
/// `μ_r`, evaluated numerically at truncation `m_max`.
pub fn lin_row_residual(r: u32, n: usize, m_max: usize) -> Result<f64> {
    let m = gen_lin(r, n)?;
    let mut worst: f64 = 0.0;
    for i in 0..m.rows.len() {
        let (v, _) = l_sh(&m.row_poly(i), m_max)?;
        worst = worst.max(v.norm());
    }
    Ok(worst)
}

/// Growth ratios for `(Δ^l s^sh_{(1,…,1; s1,…,sp)})(m) · m^{l+1/2}`,
/// `l = 0..=l_max`: the supremum of the scaled differences over
/// `[m_max/2, m_max]` divided by the supremum over `[m_max/10, m_max/2]`.
/// Labels must satisfy `|s| < 1` or `s = 1`; a bounded sequence gives
/// ratios near or below 1.
///
/// The sums are computed exactly and converted to floating point only
/// after differencing, since `Δ^l` of values of size `1/m` cancels
/// catastrophically in floating point.
pub fn difference_decay_ratios(labels: &[Q], l_max: usize, m_max: usize) -> Vec<f64> {
    let zero = || Q::from_integer(0.into());
    let mut c_labels: Vec<CRat> = labels.iter().map(|s| CRat::new(s.clone(), zero())).collect();
    c_labels.push(CRat::new(zero(), zero()));
    let sp = labels.last().cloned().unwrap_or_else(|| Q::from_integer(1.into()));
    let seq = Sequence::new(c_array(&c_labels, m_max + l_max));
    (0..=l_max)
        .map(|l| {
            let d = seq.delta_pow(l);
            let scaled = |m: usize| {
                let v = (d.get(m).re.clone() * sp.clone()).to_f64().unwrap_or(f64::NAN).abs();
                v * (m as f64).powf(l as f64 + 0.5)
            };
            let sup = |a: usize, b: usize| (a..=b).map(scaled).fold(0.0_f64, f64::max);
            let (early, late) = (sup(m_max / 10, m_max / 2), sup(m_max / 2, m_max));
            match (early == 0.0, late == 0.0) {
                (true, true) => 0.0,
                (true, false) => f64::INFINITY,
                _ => late / early,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn y1() -> Letter {
        Letter::Y(Label::cyc(0, 1))
    }

    #[test]
    fn quadratic_smoke_factors_are_admissible() {
        let dom = LabelDomain::Cyclic(1);
        let w = NcPoly::from_word(Word(vec![y1()]));
        let (pairs, rhs) = quadratic_relation_sides(&dom.one(), &w, &w, 1, dom).unwrap();
        assert_eq!(pairs.len(), 1);
        assert!(pairs[0].0.in_a0() && pairs[0].1.in_a0() && rhs.in_a0());
    }

    #[test]
    fn decay_ratio_of_single_label_is_small() {
        // With a single label 1/2 the sums decay geometrically.
        assert!(difference_decay_ratios(&[q(1, 2)], 2, 200).iter().all(|r| *r < 1.0));
    }
}
