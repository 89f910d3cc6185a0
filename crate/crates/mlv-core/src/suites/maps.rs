//! Properties of the automorphisms, the Landen series identities, the
//! block maps and the harmonic products.

use rand::Rng;

use crate::algebra::{LabelDomain, Letter, NcPoly, Word};
use crate::error::Result;
use crate::hproducts::{HarmonicEngine, HarmonicKind};
use crate::linmaps::{
    alpha, block, d_sh, d_star, d_star_inv, delta, f_s, gamma, i_inv, i_map, iota, m_s, phi, star,
};
use crate::scalar::Q;
use crate::seqnum::landen_check;

use super::random::{cyc_label, generic_label, nonzero_label, poly, word, Shape};
use super::Runner;

const CX: LabelDomain = LabelDomain::Complex;

/// Landen series identities and the algebra of `φ, ι, α, γ, ⋆, d_sh`.
pub(crate) fn landen(r: &mut Runner) {
    r.check("landen-series-identities", |rng, _| {
        let n = rng.gen_range(1..=4);
        let w = NcPoly::from_word(word(rng, n, Shape::A1, &mut nonzero_label));
        Ok(landen_check(&w, 25)?.all())
    });

    r.check("involutions-and-commutations", |rng, _| {
        let n = rng.gen_range(1..=8);
        let any = NcPoly::<Q>::from_word(word(rng, n, Shape::Any, &mut nonzero_label));
        let a1 = NcPoly::<Q>::from_word(word(rng, n, Shape::A1, &mut nonzero_label));
        Ok(phi(&phi(&any, CX)?, CX)? == any
            && iota(&iota(&any)?)? == any
            && alpha(&alpha(&any, CX)?, CX)? == any
            && star(&star(&a1)?)? == a1
            && phi(&iota(&any)?, CX)? == iota(&phi(&any, CX)?)?
            && alpha(&iota(&any)?, CX)? == iota(&alpha(&any, CX)?)?)
    });

    r.check("landen-intertwines-star", |rng, _| {
        let n = rng.gen_range(0..=6);
        let w = NcPoly::<Q>::from_word(word(rng, n, Shape::A1, &mut nonzero_label));
        Ok(phi(&iota(&d_sh(&w, CX)?)?, CX)? == -&d_sh(&star(&w)?, CX)?)
    });

    r.check("phi-iota-gamma-equals-gamma-alpha-iota", |rng, _| {
        let n = rng.gen_range(1..=6);
        let w = NcPoly::<Q>::from_word(word(rng, n, Shape::Any, &mut nonzero_label));
        Ok(phi(&iota(&gamma(&w, CX)?)?, CX)? == gamma(&alpha(&iota(&w)?, CX)?, CX)?)
    });

    r.inform("phi-iota-gamma-equals-gamma-alpha (informational)", |rng, _| {
        let n = rng.gen_range(1..=6);
        let w = NcPoly::<Q>::from_word(word(rng, n, Shape::Any, &mut nonzero_label));
        Ok(phi(&iota(&gamma(&w, CX)?)?, CX)? == gamma(&alpha(&w, CX)?, CX)?)
    });

    r.check("maps-are-linear", |rng, _| {
        let p = poly::<Q>(rng, 1..=4, Shape::A1, &mut nonzero_label);
        let q2 = poly::<Q>(rng, 1..=4, Shape::A1, &mut nonzero_label);
        let s = generic_label(rng);
        let sum = &p + &q2;
        type Map = Box<dyn Fn(&NcPoly<Q>) -> Result<NcPoly<Q>>>;
        let s2 = s.clone();
        let maps: Vec<Map> = vec![
            Box::new(|x| phi(x, CX)),
            Box::new(iota),
            Box::new(|x| alpha(x, CX)),
            Box::new(|x| gamma(x, CX)),
            Box::new(star),
            Box::new(|x| d_sh(x, CX)),
            Box::new(|x| i_map(x, CX)),
            Box::new(move |x| m_s(&s, x, CX)),
            Box::new(|x| d_star(x, CX)),
            Box::new(move |x| f_s(&s2, x)),
        ];
        for f in &maps {
            if f(&sum)? != &f(&p)? + &f(&q2)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
}

fn l(p: &Word, q: &NcPoly<Q>) -> NcPoly<Q> {
    q.left_mul_word(p)
}

/// Harmonic-product laws, the block maps, and transport of products by
/// `d_*` and `F_s`.
pub(crate) fn products(r: &mut Runner) {
    let engine = HarmonicEngine::<Q>::new();
    r.check("harmonic-products-commutative-associative", |rng, _| {
        let rr = rng.gen_range(1..=3);
        let mut lab = |g: &mut super::SuiteRng| cyc_label(g, rr);
        let total = rng.gen_range(3..=9);
        let a = rng.gen_range(1..=total - 2);
        let b = rng.gen_range(1..=total - a - 1);
        let c = total - a - b;
        let [u, v, w] = [a, b, c].map(|n| NcPoly::<Q>::from_word(word(rng, n, Shape::A1, &mut lab)));
        for kind in HarmonicKind::ALL {
            let uv = engine.product(kind, &u, &v)?;
            if uv != engine.product(kind, &v, &u)? {
                return Ok(false);
            }
            let left = engine.product(kind, &uv, &w)?;
            let right = engine.product(kind, &u, &engine.product(kind, &v, &w)?)?;
            if left != right {
                return Ok(false);
            }
        }
        Ok(true)
    });

    r.check("block-maps", |rng, _| {
        let n = rng.gen_range(0..=6);
        let w = NcPoly::<Q>::from_word(word(rng, n, Shape::Any, &mut nonzero_label));
        let a1 = NcPoly::<Q>::from_word(word(rng, n, Shape::A1, &mut nonzero_label));
        let (s, t) = (nonzero_label(rng), nonzero_label(rng));
        let k = rng.gen_range(1..=3);
        let z = block(k, s.clone());
        let x = Word(vec![Letter::X]);
        let i_ok = i_map(&i_inv(&w, CX)?, CX)? == w && i_inv(&i_map(&w, CX)?, CX)? == w;
        let m_ok = m_s(&s, &m_s(&t, &w, CX)?, CX)? == m_s(&s.checked_mul(&t)?, &w, CX)?;
        let shift_ok = i_map(&l(&z, &w), CX)? == l(&z, &i_map(&m_s(&s, &w, CX)?, CX)?);
        let lx_ok = i_map(&l(&x, &w), CX)? == l(&x, &i_map(&w, CX)?)
            && i_inv(&l(&x, &w), CX)? == l(&x, &i_inv(&w, CX)?)
            && m_s(&s, &l(&x, &w), CX)? == l(&x, &m_s(&s, &w, CX)?);
        let d_ok = d_star(&m_s(&s, &a1, CX)?, CX)? == m_s(&s, &d_star(&a1, CX)?, CX)?;
        Ok(i_ok && m_ok && shift_ok && lx_ok && d_ok)
    });

    r.check("d-star-transports-products", |rng, _| {
        let (a, b) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let w = NcPoly::<Q>::from_word(word(rng, a, Shape::A1, &mut nonzero_label));
        let w2 = NcPoly::<Q>::from_word(word(rng, b, Shape::A1, &mut nonzero_label));
        let d = |p: &NcPoly<Q>| d_star(p, CX);
        let di = |p: &NcPoly<Q>| d_star_inv(p, CX);
        let pr = |k, p: &NcPoly<Q>, q: &NcPoly<Q>| engine.product(k, p, q);
        use HarmonicKind::*;
        Ok(d(&pr(BarStar, &w, &w2)?)? == pr(Star, &d(&w)?, &d(&w2)?)?
            && di(&pr(Star, &w, &w2)?)? == pr(BarStar, &di(&w)?, &di(&w2)?)?
            && d(&pr(DotBarStar, &w, &w2)?)? == pr(DotStar, &d(&w)?, &d(&w2)?)?
            && di(&pr(DotStar, &w, &w2)?)? == pr(DotBarStar, &di(&w)?, &di(&w2)?)?)
    });

    r.check("f-s-transports-products", |rng, _| {
        let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let w = NcPoly::<Q>::from_word(word(rng, a, Shape::A1, &mut nonzero_label));
        let w2 = NcPoly::<Q>::from_word(word(rng, b, Shape::A1, &mut |_| CX.one()));
        let s = if rng.gen_bool(0.2) { CX.one() } else { generic_label(rng) };
        let di = |p: &NcPoly<Q>| d_star_inv(p, CX);
        let lhs = engine.product(HarmonicKind::BarStar, &f_s(&s, &di(&w)?)?, &di(&w2)?)?;
        let rhs = f_s(&s, &di(&engine.product(HarmonicKind::Star, &w, &w2)?)?)?;
        let strong_l = engine.product(HarmonicKind::BarStar, &f_s(&s, &w)?, &w2)?;
        let strong_r = f_s(&s, &engine.product(HarmonicKind::BarStar, &w, &w2)?)?;
        Ok(lhs == rhs && strong_l == strong_r)
    });

    r.check("f-s-shifts-leading-block", |rng, _| {
        let n = rng.gen_range(0..=4);
        let w = NcPoly::<Q>::from_word(word(rng, n, Shape::A1, &mut nonzero_label));
        let (s, t) = (generic_label(rng), generic_label(rng));
        let k = rng.gen_range(1..=3);
        let st = s.checked_mul(&t)?;
        let num = if delta(&st) == 1 { st.one_minus()? } else { CX.one() };
        let label = num.checked_div(&s.one_minus()?)?;
        let lhs = f_s(&s, &l(&block(k, t), &w))?;
        let rhs = l(&block(k, label), &f_s(&st, &w)?);
        Ok(lhs == rhs)
    });
}
