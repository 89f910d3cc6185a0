//! Properties of the derivation tower, its `c`-extensions, and the
//! weight-truncated completion operators.

use std::collections::HashMap;

use rand::Rng;

use crate::algebra::{enumerate_words, Label, LabelDomain, Letter, NcPoly, Word, WordClass};
use crate::derivations::{left_divide, Completion, DerivationTower, ThetaVariant};
use crate::error::{Error, Result};
use crate::hproducts::h_w;
use crate::linmaps::{delta, phi, sigma_s, sigma_s_inv, x_plus_delta_y};
use crate::relations::{gen_ext, gen_ext_variant, Echelon};
use crate::scalar::{q, qi, Coeff, QPoly, Q};

use super::random::{cyc_label, word, Shape};
use super::{Runner, SuiteRng};

type Tower = DerivationTower<QPoly>;

fn cyc(r: u32) -> LabelDomain {
    LabelDomain::Cyclic(r)
}

/// Rational parameter values used to pin down polynomial dependence on a
/// second parameter (a polynomial of degree < k vanishing at k points is 0).
fn sample_params(k: usize) -> Vec<Q> {
    [q(-1, 1), q(1, 2), q(2, 1), q(-3, 2), q(3, 1), q(1, 3), q(-2, 3)][..k].to_vec()
}

fn formal(r: u32, v: ThetaVariant) -> Tower {
    Tower::new(cyc(r), QPoly::c(), v)
}

fn fixed(r: u32, c: Q, v: ThetaVariant) -> Tower {
    Tower::new(cyc(r), QPoly::constant(c), v)
}

fn lift(p: &NcPoly<Q>) -> NcPoly<QPoly> {
    p.map_coeffs(|a| QPoly::constant(a.clone()))
}

fn commutator(a: &Tower, n: usize, b: &Tower, m: usize, p: &NcPoly<QPoly>) -> Result<NcPoly<QPoly>> {
    Ok(&a.partial(n, &b.partial(m, p)?)? - &b.partial(m, &a.partial(n, p)?)?)
}

/// Cache of towers keyed by `(r, variant, parameter)`; `None` is the formal
/// parameter.
#[derive(Default)]
struct Towers {
    map: HashMap<(u32, bool, Option<Q>), Tower>,
}

impl Towers {
    fn get(&mut self, r: u32, v: ThetaVariant, c: Option<Q>) -> &Tower {
        self.map.entry((r, v == ThetaVariant::Hat, c.clone())).or_insert_with(|| match c {
            None => formal(r, v),
            Some(c) => fixed(r, c, v),
        })
    }
}

/// Commutativity of the tower and the identities among its operators.
pub(crate) fn commute(r: &mut Runner) {
    let mut towers = Towers::default();
    r.check("extended-tower-commutes-two-parameters", |rng, _| {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=6 - n);
        let weight = rng.gen_range(1..=4);
        let rr = if weight + n + m <= 7 { rng.gen_range(1..=2) } else { 1 };
        let w = lift(&NcPoly::from_word(word(rng, weight, Shape::Any, &mut |g| cyc_label(g, rr))));
        for c2 in sample_params(m) {
            let b = fixed(rr, c2, ThetaVariant::Hat);
            let a = towers.get(rr, ThetaVariant::Hat, None);
            if !commutator(a, n, &b, m, &w)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    });

    r.check("plain-and-extended-towers-commute", |rng, _| {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=5 - n);
        let weight = rng.gen_range(1..=3);
        let rr = rng.gen_range(1..=2);
        let w = lift(&NcPoly::from_word(word(rng, weight, Shape::Any, &mut |g| cyc_label(g, rr))));
        for c2 in sample_params(m) {
            let b = fixed(rr, c2, ThetaVariant::Hat);
            let a = towers.get(rr, ThetaVariant::Plain, None);
            if !commutator(a, n, &b, m, &w)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    });

    r.check("psi-sequence-identities", |rng, _| {
        let rr = rng.gen_range(1..=3);
        let dom = cyc(rr);
        let n = rng.gen_range(1..=3);
        let weight = rng.gen_range(0..=3);
        let w = lift(&NcPoly::from_word(word(rng, weight, Shape::Any, &mut |g| cyc_label(g, rr))));
        let t = towers.get(rr, ThetaVariant::Hat, None);
        let y1 = NcPoly::<QPoly>::y(dom.one());
        let z = &NcPoly::x() + &y1;
        if !t.psi(n, &z, &w)?.is_zero() {
            return Ok(false);
        }
        // [∂̂_n, L_u] = ψ̂_n(u) and the factorisation through φ̂_{n-1}.
        let letter = if rng.gen_bool(0.3) { Letter::X } else { Letter::Y(cyc_label(rng, rr)) };
        let u = NcPoly::<QPoly>::letter(letter.clone());
        let psi = t.psi(n, &u, &w)?;
        let comm = &t.partial(n, &u.concat(&w))? - &u.concat(&t.partial(n, &w)?);
        let x = NcPoly::<QPoly>::x();
        let fact = match letter {
            Letter::X => x.concat(&t.phi_hat(n - 1, &y1.concat(&w))?),
            Letter::Y(_) => {
                let a = x.concat(&t.phi_hat(n - 1, &u.concat(&w))?);
                let b = u.concat(&t.phi_hat(n - 1, &(&u - &y1).concat(&w))?);
                -&(&a + &b)
            }
        };
        Ok(psi == comm && psi == fact)
    });

    r.check("plain-theta-from-extended-theta", |rng, _| {
        let rr = rng.gen_range(1..=2);
        let weight = rng.gen_range(1..=5);
        let w = word(rng, weight, Shape::Any, &mut |g| cyc_label(g, rr));
        let plain = towers.get(rr, ThetaVariant::Plain, None).theta_c_word(&w);
        let neg = Tower::new(cyc(rr), QPoly::c().neg_ref(), ThetaVariant::Hat);
        let hat = neg.theta_c_word(&w);
        let d1 = neg.partial_1_word(&w).scale(&QPoly::c().mul_q(&qi(weight as i64 - 1)));
        Ok(plain == &hat + &d1)
    });

    r.check("theta-split-independence", |rng, _| {
        let rr = rng.gen_range(1..=2);
        let weight = rng.gen_range(2..=6);
        let w = word(rng, weight, Shape::Any, &mut |g| cyc_label(g, rr));
        for v in [ThetaVariant::Hat, ThetaVariant::Plain] {
            let t = towers.get(rr, v, None);
            let canonical = t.theta_c_word(&w);
            if (1..weight).any(|k| t.theta_c_at_split(&w, k) != canonical) {
                return Ok(false);
            }
        }
        Ok(true)
    });

    r.check("tower-specialisations", |rng, _| {
        let rr = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=3);
        let weight = rng.gen_range(1..=4);
        let w = word(rng, weight, Shape::Any, &mut |g| cyc_label(g, rr));
        let ordinary = DerivationTower::<Q>::ordinary(cyc(rr)).partial_word(n, &w);
        let t = towers.get(rr, ThetaVariant::Hat, None);
        let img = t.partial_word(n, &w);
        let at_zero = img.map_coeffs(|a| a.coeff(0));
        let degree_ok = img.iter().all(|(_, a)| a.param_degree() < n);
        let first_ok = n > 1 || img.iter().all(|(_, a)| a.param_degree() == 0);
        Ok(at_zero == ordinary && degree_ok && first_ok)
    });

    let cases = r.cases().min(15);
    r.check_n("plain-tower-in-extended-algebra", cases, |rng, _| {
        let n = rng.gen_range(1..=3);
        let c = sample_params(7)[rng.gen_range(0..7)].clone();
        plain_in_extended_algebra(n, &c)
    });
}

/// Whether `∂_n^(c)` lies in the span of compositions
/// `∂̂_{i1}^(−c) ∘ … ∘ ∂̂_{ik}^(−c)` with `i1 + … + ik = n`, compared as
/// operators on all words of weight ≤ 3 over `μ_1`.
pub fn plain_in_extended_algebra(n: usize, c: &Q) -> Result<bool> {
    let dom = cyc(1);
    let basis: Vec<Word> = (1..=3).flat_map(|k| enumerate_words(k, 1, WordClass::All)).collect();
    let plain = DerivationTower::<Q>::new(dom, c.clone(), ThetaVariant::Plain);
    let hat = DerivationTower::<Q>::new(dom, -c.clone(), ThetaVariant::Hat);
    let mut columns: HashMap<(usize, Word), usize> = HashMap::new();
    let mut vectorise = |op: &dyn Fn(&Word) -> Result<NcPoly<Q>>| -> Result<Vec<(usize, Q)>> {
        let mut v = Vec::new();
        for (i, b) in basis.iter().enumerate() {
            for (w, a) in op(b)?.iter() {
                let next = columns.len();
                let col = *columns.entry((i, w.clone())).or_insert(next);
                v.push((col, a.clone()));
            }
        }
        v.sort_by_key(|(c, _)| *c);
        Ok(v)
    };
    let mut span = Echelon::new();
    for comp in compositions(n) {
        let row = vectorise(&|b: &Word| {
            let mut p = NcPoly::from_word(b.clone());
            for &i in comp.iter().rev() {
                p = hat.partial(i, &p)?;
            }
            Ok(p)
        })?;
        span.insert_rational(&row);
    }
    let target = vectorise(&|b: &Word| Ok(plain.partial_word(n, b)))?;
    Ok(span.contains_rational(&target))
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// `σ_s^{-1} L^{-1}_{x+δ(s)y_s} ∂̂_n^(c)(x + δ(s) y_s)`, the word whose
/// harmonic multiplication the extended derivation becomes after
/// conjugation by `L_{x+δ(s)y_s} σ_s`.
pub fn conjugating_word(t: &Tower, n: usize, s: &Label) -> Result<NcPoly<QPoly>> {
    let dom = t.domain();
    let a = x_plus_delta_y::<QPoly>(s);
    let d = t.partial(n, &a)?;
    let q0 = left_divide(&d, &a).ok_or_else(|| Error::InvalidArgument {
        op: "conjugating_word",
        reason: "image is not left-divisible".into(),
    })?;
    sigma_s_inv(s, &q0, dom)
}

/// The alternative expression `L_x^{-1} φ ∂̂_n^(c)(x)` for the same word.
pub fn conjugating_word_via_x(t: &Tower, n: usize) -> Result<NcPoly<QPoly>> {
    let d = phi(&t.partial(n, &NcPoly::x())?, t.domain())?;
    left_divide(&d, &NcPoly::x()).ok_or_else(|| Error::InvalidArgument {
        op: "conjugating_word_via_x",
        reason: "image does not start with x".into(),
    })
}

fn truncated_geometric(a: &NcPoly<Q>, cap: usize) -> NcPoly<Q> {
    let mut out = NcPoly::one();
    let mut pow = NcPoly::one();
    for _ in 0..cap {
        pow = pow.concat(a);
        out.add_assign(&pow);
    }
    out.truncate(cap)
}

/// Extended derivations versus harmonic products, and the completion
/// operators `Δ̂`, `Φ`.
pub(crate) fn tower(r: &mut Runner) {
    let mut towers = Towers::default();

    r.check("extended-image-divisible", |rng, _| {
        let rr = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=3);
        let s = cyc_label(rng, rr);
        let weight = rng.gen_range(0..=3);
        let w = lift(&NcPoly::from_word(word(rng, weight, Shape::A1, &mut |g| cyc_label(g, rr))));
        let a = x_plus_delta_y::<QPoly>(&s);
        let img = towers.get(rr, ThetaVariant::Hat, None).partial(n, &a.concat(&w))?;
        Ok(left_divide(&img, &a).is_some())
    });

    r.check("extended-derivation-is-conjugated-harmonic-product", |rng, _| {
        let rr = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=3);
        let s = cyc_label(rng, rr);
        let weight = rng.gen_range(0..=3);
        let v = lift(&NcPoly::from_word(word(rng, weight, Shape::A1, &mut |g| cyc_label(g, rr))));
        let t = towers.get(rr, ThetaVariant::Hat, None);
        let dom = t.domain();
        let wn = conjugating_word(t, n, &s)?;
        let a = x_plus_delta_y::<QPoly>(&s);
        let lhs = t.partial(n, &a.concat(&sigma_s(&s, &v, dom)?))?;
        let rhs = a.concat(&sigma_s(&s, &h_w(&wn, &v)?, dom)?);
        let independent = wn == conjugating_word(t, n, &dom.one())?;
        Ok(lhs == rhs && independent)
    });

    r.inform("conjugating-word-via-x-agrees (informational)", |rng, _| {
        let rr = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=3);
        let t = towers.get(rr, ThetaVariant::Hat, None);
        Ok(conjugating_word_via_x(t, n)? == conjugating_word(t, n, &t.domain().one())?)
    });

    r.check("completion-conjugation", |rng, _| {
        let rr = rng.gen_range(1..=3);
        let dom = cyc(rr);
        let s = cyc_label(rng, rr);
        let weight = rng.gen_range(1..=4);
        let w = NcPoly::<Q>::from_word(word(rng, weight, Shape::Any, &mut |g| cyc_label(g, rr)));
        let comp = Completion::new(dom, 6);
        let lhs = sigma_s(&s, &comp.phi_big(&w)?, dom)?.truncate(6);
        let rhs = comp.delta_hat(&sigma_s(&s, &w, dom)?)?;
        Ok(lhs == rhs)
    });

    r.check("completion-fixed-points", |rng, _| {
        let rr = rng.gen_range(1..=3);
        let dom = cyc(rr);
        let s = cyc_label(rng, rr);
        let cap = rng.gen_range(3..=6);
        let comp = Completion::new(dom, cap);
        let a = x_plus_delta_y::<Q>(&s);
        let mut ratio = NcPoly::<Q>::y(dom.one());
        if delta(&s) == 1 {
            ratio.sub_assign(&NcPoly::y(s.clone()));
        }
        let expect = a.concat(&truncated_geometric(&ratio, cap)).truncate(cap);
        let z = &NcPoly::x() + &NcPoly::y(dom.one());
        Ok(comp.delta_hat(&a)? == expect && comp.delta_hat(&z)? == z)
    });

    r.check("phi-big-automorphism-matches-harmonic-form", |rng, _| {
        let rr = rng.gen_range(1..=2);
        let weight = rng.gen_range(1..=4);
        let w = NcPoly::<Q>::from_word(word(rng, weight, Shape::A1, &mut |g| cyc_label(g, rr)));
        let comp = Completion::new(cyc(rr), 6);
        Ok(comp.phi_big(&w)? == comp.phi_big_harmonic(&w)?)
    });

    r.check("harmonic-inverse-conjugation", |rng, _| {
        let (rr, s, w, cap) = harmonic_inverse_case(rng);
        let comp = Completion::new(cyc(rr), cap);
        Ok(comp.harmonic_inverse(&w)? == comp.conjugated_delta_hat(&s, &w, true)?)
    });

    r.inform("harmonic-inverse-conjugation-as-printed (informational)", |rng, _| {
        let (rr, s, w, cap) = harmonic_inverse_case(rng);
        let comp = Completion::new(cyc(rr), cap);
        Ok(comp.harmonic_inverse(&w)? == comp.conjugated_delta_hat(&s, &w, false)?)
    });

    r.check("extended-rows-at-zero-are-derivation-rows", |rng, _| {
        let rr = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=3);
        let weight = rng.gen_range(2..=4);
        let w = word(rng, weight, Shape::A0, &mut |g| cyc_label(g, rr));
        let ordinary = DerivationTower::<Q>::ordinary(cyc(rr)).partial_word(n, &w);
        let img = towers.get(rr, ThetaVariant::Hat, None).partial_word(n, &w);
        Ok(img.map_coeffs(|a| a.coeff(0)) == ordinary)
    });

    let weights: Vec<usize> = (3..=7).collect();
    let cases = r.cases().min(weights.len());
    r.check_n("plain-and-extended-relation-ranks-agree", cases, |_, i| {
        let n = weights[i];
        Ok(gen_ext(1, n)?.rank() == gen_ext_variant(1, n, ThetaVariant::Plain)?.rank())
    });
}

fn harmonic_inverse_case(rng: &mut SuiteRng) -> (u32, Label, NcPoly<Q>, usize) {
    let rr = rng.gen_range(1..=2);
    let s = cyc_label(rng, rr);
    let cap = rng.gen_range(5..=6);
    let weight = rng.gen_range(1..=3);
    let w = NcPoly::from_word(word(rng, weight, Shape::A1, &mut |g| cyc_label(g, rr)));
    (rr, s, w, cap)
}
