//! Properties of truncated sums, sequence operators, difference arrays,
//! evaluation homomorphisms and Newton series.

use num_complex::Complex64;
use rand::Rng;

use crate::algebra::{CRat, Label, LabelDomain, Letter, NcPoly, Word};
use crate::derivations::left_divide;
use crate::error::Result;
use crate::hproducts::{hprod, HarmonicKind};
use crate::linmaps::{d_sh, d_star_inv, i_inv, i_map, iota, phi, star, x_plus_delta_y};
use crate::scalar::{q, Q};
use crate::seqnum::series::{differential_formulas_hold, partial_sum_identities_hold};
use crate::seqnum::{
    bivariate_c, c_array, delta_identity_holds, newton_eval, newton_eval_exact, poly_values, word_values, NewtonAccel,
    NewtonKind, SeqScalar, Sequence, TruncKind, TruncVariant,
};

use super::random::{closed_unit_rational, nonzero_label, nonzero_rational, unit_label, word, Shape};
use super::{Runner, SuiteRng};

const CX: LabelDomain = LabelDomain::Complex;

fn values(kind: TruncKind, variant: TruncVariant, p: &NcPoly<Q>, m: usize) -> Result<Vec<CRat>> {
    poly_values::<CRat>(kind, variant, p, m)
}

fn crat(x: Q) -> CRat {
    CRat::from_q(&x)
}

/// Binomial inversion, operator identities, difference arrays, the
/// all-ones depth identity and the series identities of non-strict sums.
pub(crate) fn inversion(r: &mut Runner) {
    r.check("nabla-of-truncated-sum-is-star", |rng, _| {
        let n = rng.gen_range(1..=5);
        let w = NcPoly::from_word(word(rng, n, Shape::A1, &mut unit_label));
        let m = 15;
        let lhs = Sequence::new(values(TruncKind::Sh, TruncVariant::Equal, &w, m)?).nabla()?;
        let rhs = values(TruncKind::Sh, TruncVariant::Equal, &star(&w)?, m)?;
        Ok(lhs.values() == rhs.as_slice())
    });

    r.check("sequence-operator-identities", |rng, _| {
        let a = Sequence::from_fn(26, |_| crat(nonzero_rational(rng)) + crat(q(rng.gen_range(-3..=3), 7)));
        let sn = |s: &Sequence<CRat>| s.nabla().map(|x| x.sigma());
        Ok(a.sigma().sigma_inv() == a
            && a.sigma_inv().sigma() == a
            && a.nabla()?.nabla()? == a
            && sn(&sn(&a)?)? == a)
    });

    r.check("cumulative-sums-and-harmonic-translation", |rng, _| {
        let n = rng.gen_range(1..=4);
        let w = NcPoly::from_word(word(rng, n, Shape::A1, &mut nonzero_label));
        let m = 40;
        let mut ok = true;
        for kind in [TruncKind::Sh, TruncKind::Ast] {
            let pinned = Sequence::new(values(kind, TruncVariant::Equal, &w, m)?);
            let cumulative = values(kind, TruncVariant::Leq, &w, m)?;
            ok &= pinned.sigma().values() == cumulative.as_slice();
        }
        let via_i = values(TruncKind::Sh, TruncVariant::Equal, &i_map(&w, CX)?, m)?;
        Ok(ok && values(TruncKind::Ast, TruncVariant::Equal, &w, m)? == via_i)
    });

    r.check("difference-array-identity-and-sign", |rng, _| {
        let p = rng.gen_range(1..=3);
        let labels: Vec<CRat> = (0..p).map(|_| crat(closed_unit_rational(rng))).collect();
        let one = crat(q(1, 1));
        let t: Vec<CRat> = labels.iter().map(|s| &one - s).collect();
        let nonneg = (0..=6).all(|m| (0..=6).all(|l| bivariate_c(&labels, &t, m, l).re >= q(0, 1)));
        Ok(nonneg && delta_identity_holds(&labels, 6, 6))
    });

    r.check("all-ones-depth-equals-c-array", |rng, _| {
        let p = rng.gen_range(1..=4);
        let labels: Vec<Q> = (0..p).map(|_| nonzero_rational(rng)).collect();
        let w = Word(labels.iter().map(|s| Letter::Y(Label::rational(s.clone()))).collect());
        let m = 20;
        let lhs = word_values::<CRat>(TruncKind::Sh, TruncVariant::Equal, &w, m)?;
        let mut c_labels: Vec<CRat> = labels.iter().cloned().map(crat).collect();
        c_labels.push(crat(q(0, 1)));
        let sp = crat(labels[p - 1].clone());
        let rhs: Vec<CRat> = c_array(&c_labels, m).into_iter().map(|v| &sp * v).collect();
        Ok(lhs == rhs)
    });

    r.check("non-strict-series-partial-sums", |rng, _| {
        let n = rng.gen_range(1..=4);
        partial_sum_identities_hold(&word(rng, n, Shape::A1, &mut nonzero_label), 20)
    });

    r.check("strict-series-differential-formula", |rng, _| {
        let n = rng.gen_range(1..=4);
        differential_formulas_hold(&word(rng, n, Shape::A1, &mut nonzero_label), 20)
    });

    r.check("binomial-times-newton-series-at-integers", |rng, _| {
        let len = 24;
        let a: Vec<Q> = (0..len).map(|_| q(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
        let b: Vec<Q> = (0..len).map(|_| q(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
        let l = rng.gen_range(0..=4);
        let m = rng.gen_range(0..16);
        Ok(binomial_multiplication_holds(&a, l, m) && newton_product_holds(&a, &b, m))
    });
}

fn binom_q(n: usize, k: usize) -> Q {
    if k > n {
        return q(0, 1);
    }
    Q::from_integer(num_integer::binomial(num_bigint::BigInt::from(n), num_bigint::BigInt::from(k)))
}

fn sign(n: usize) -> Q {
    q(if n.is_multiple_of(2) { 1 } else { -1 }, 1)
}

/// `Σ_n (−1)^n a(n) C(m, n)`: a Newton series with coefficients `a` at the
/// non-negative integer `m`, where it is a finite sum.
fn newton_at(a: &[Q], m: usize) -> Q {
    (0..=m.min(a.len() - 1)).map(|n| sign(n) * &a[n] * binom_q(m, n)).sum()
}

/// `(Δ^l a)(n)` with `(Δa)(n) = a(n) − a(n+1)`.
fn difference_pow(a: &[Q], l: usize, n: usize) -> Q {
    (0..=l).map(|j| sign(j) * binom_q(l, j) * &a[n + j]).sum()
}

/// `(−1)^l C(z, l) f(z) = Σ_{n≥l} (−1)^n C(n, l) (Δ^l a)(n − l) C(z, n)` at
/// `z = m`, with `f` the Newton series of `a`; `a` must be long enough
/// that no truncation occurs (`len(a) > m + l`).
pub fn binomial_multiplication_holds(a: &[Q], l: usize, m: usize) -> bool {
    if a.len() <= m + l {
        return false;
    }
    let lhs = sign(l) * binom_q(m, l) * newton_at(a, m);
    let rhs: Q = (l..=m).map(|n| sign(n) * binom_q(n, l) * difference_pow(a, l, n - l) * binom_q(m, n)).sum();
    lhs == rhs
}

/// The product of the Newton series of `a` and `b` equals the Newton
/// series with coefficients `Σ_{l≤n} a(l) C(n, l) (Δ^l b)(n − l)`, at
/// `z = m`.
pub fn newton_product_holds(a: &[Q], b: &[Q], m: usize) -> bool {
    if a.len() <= m || b.len() <= m {
        return false;
    }
    let c: Vec<Q> = (0..=m)
        .map(|n| (0..=n).map(|l| &a[l] * binom_q(n, l) * difference_pow(b, l, n - l)).sum())
        .collect();
    newton_at(a, m) * newton_at(b, m) == newton_at(&c, m)
}

/// `S^*` is a `∗̄`-homomorphism and `s^*` a `∗̇̄`-homomorphism.
pub(crate) fn homs(r: &mut Runner) {
    r.check("truncated-harmonic-homomorphisms", |rng, _| {
        let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let w = NcPoly::from_word(word(rng, a, Shape::A1, &mut nonzero_label));
        let w2 = NcPoly::from_word(word(rng, b, Shape::A1, &mut nonzero_label));
        let m = 30;
        let mut ok = true;
        for (variant, kind) in [(TruncVariant::Leq, HarmonicKind::BarStar), (TruncVariant::Equal, HarmonicKind::DotBarStar)] {
            let lhs: Vec<CRat> = values(TruncKind::Ast, variant, &w, m)?
                .into_iter()
                .zip(values(TruncKind::Ast, variant, &w2, m)?)
                .map(|(x, y)| x * y)
                .collect();
            ok &= lhs == values(TruncKind::Ast, variant, &hprod(kind, &w, &w2)?, m)?;
        }
        Ok(ok)
    });
}

/// The polynomial `L_x^{-1} d_*^{-1}(I^{-1} L_{x+δ(s)y_s} φ d_sh(w) ∗̇ y_1)`
/// whose pinned sums are (minus) the binomial transform of
/// `s^*_{I^{-1} ι L_{y_s}(w)}`.
pub fn minus_one_series_word(s: &Label, w: &NcPoly<Q>) -> Result<(NcPoly<Q>, NcPoly<Q>)> {
    let a = i_inv(&iota(&NcPoly::<Q>::y(s.clone()).concat(w))?, CX)?;
    let lifted = i_inv(&x_plus_delta_y::<Q>(s).concat(&phi(&d_sh(w, CX)?, CX)?), CX)?;
    let prod = hprod(HarmonicKind::DotStar, &lifted, &NcPoly::y(CX.one()))?;
    let inner = d_star_inv(&prod, CX)?;
    let b = left_divide(&inner, &NcPoly::x()).ok_or_else(|| crate::error::Error::InvalidArgument {
        op: "minus_one_series_word",
        reason: "image does not start with x".into(),
    })?;
    Ok((a, b))
}

/// Newton-series interpolation, the termwise identity behind the value at
/// `z = −1`, and the functional equation at `z = −1/2`.
pub(crate) fn newton(r: &mut Runner) {
    r.check("newton-interpolates-integers", |rng, _| {
        let n = rng.gen_range(1..=3);
        let w = word(rng, n, Shape::A1, &mut nonzero_label);
        let p = NcPoly::from_word(w.clone());
        let m_max = 8;
        let pinned = word_values::<CRat>(TruncKind::Ast, TruncVariant::Equal, &w, m_max)?;
        let cumulative = word_values::<CRat>(TruncKind::Ast, TruncVariant::Leq, &w, m_max)?;
        for m in 0..=m_max {
            let z = q(m as i64, 1);
            if newton_eval_exact(&p, NewtonKind::Pinned, &z, m_max + 2)? != pinned[m]
                || newton_eval_exact(&p, NewtonKind::Cumulative, &z, m_max + 2)? != cumulative[m]
            {
                return Ok(false);
            }
        }
        Ok(true)
    });

    r.check("minus-one-value-termwise", |rng, _| {
        // w = 1 is excluded: L_{x+δ(s)y_s}(1) has the term `x`, which lies
        // outside A^1 where the dotted product is defined.
        let n = rng.gen_range(1..=3);
        let w = NcPoly::from_word(word(rng, n, Shape::A1, &mut unit_label));
        let s = unit_label(rng);
        let (a, b) = minus_one_series_word(&s, &w)?;
        let m = 12;
        let lhs = Sequence::new(values(TruncKind::Ast, TruncVariant::Equal, &a, m)?).nabla()?;
        let rhs = values(TruncKind::Ast, TruncVariant::Equal, &b, m)?;
        Ok(lhs.values().iter().zip(&rhs).all(|(x, y)| *x == -y.clone()))
    });

    let cases = r.cases().min(12);
    r.check_n("functional-equation-at-minus-half (toleranced)", cases, |rng, _| {
        let res = functional_equation_gap(rng)?;
        Ok(res.0 <= res.1)
    });
}

/// One random instance of `s^*_{L_{y_s}w}(z) S^*_{w'}(z) = s^*_{L_{y_s}(w ∗̄ w')}(z)`
/// at `z = −1/2` with labels in `(0, 1]`: returns `(|gap|, combined proxy)`.
pub(crate) fn functional_equation_gap(rng: &mut SuiteRng) -> Result<(f64, f64)> {
    let a = rng.gen_range(1..=2);
    let b = rng.gen_range(1..=2);
    let w = NcPoly::from_word(word(rng, a, Shape::A1, &mut unit_label));
    let w2 = NcPoly::from_word(word(rng, b, Shape::A1, &mut unit_label));
    let ys = NcPoly::y(unit_label(rng));
    functional_equation_at(&ys, &w, &w2, Complex64::new(-0.5, 0.0), 4096)
}

/// Both sides of the functional equation at `z` with `terms` Newton terms
/// (Aitken-accelerated): returns `(|gap|, combined error proxy)`.
pub fn functional_equation_at(
    ys: &NcPoly<Q>,
    w: &NcPoly<Q>,
    w2: &NcPoly<Q>,
    z: Complex64,
    terms: usize,
) -> Result<(f64, f64)> {
    let acc = NewtonAccel::Aitken;
    let left = newton_eval(&ys.concat(w), NewtonKind::Pinned, z, terms, acc)?;
    let big = newton_eval(w2, NewtonKind::Cumulative, z, terms, acc)?;
    let right = newton_eval(&ys.concat(&hprod(HarmonicKind::BarStar, w, w2)?), NewtonKind::Pinned, z, terms, acc)?;
    let gap = (left.value() * big.value() - right.value()).norm();
    let proxy = left.error_proxy * big.value().norm()
        + big.error_proxy * left.value().norm()
        + left.error_proxy * big.error_proxy
        + right.error_proxy;
    Ok((gap, proxy))
}
