//! Linear maps and automorphisms of the word algebra.
//!
//! * Automorphisms given by letter images: `φ`, `ι`, `α`, `γ` (and `γ^{-1}`).
//! * Word-wise maps on the block factorisation `z_{k1,s1}···z_{kn,sn} x^l`:
//!   `I`, `I^{-1}`, `M_s`, `N_s`.
//! * Tail rules on `w y_s`: `⋆`, `d_sh`, `d_sh^{-1}` (defined on `A^1` only).
//! * Left/right multiplication, left harmonic multiplication `𝓗_w`, and
//!   composites such as `d_* = I^{-1} d_sh I`, `F_s`, and `σ_s = φ I M_s`.
//!
//! Maps need the label domain so that the label `1` of `y_1` can be
//! produced even from words without labels (e.g. `φ(x) = x + y_1`).

use crate::algebra::{Label, LabelDomain, Letter, NcPoly, Word, ZFactor};
use crate::error::{Error, Result};
use crate::hproducts::{hprod, HarmonicKind};
use crate::scalar::{Coeff, Q};

/// `δ(s) = 0` for `s ∈ {0, 1}` and `1` otherwise.
pub fn delta(s: &Label) -> u8 {
    if s.is_zero() || s.is_one() {
        0
    } else {
        1
    }
}

/// Automorphisms determined by their letter images.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Automorphism {
    /// `φ(x) = x + y_1`, `φ(y_s) = δ(s) y_s − y_1`.
    Phi,
    /// `ι(x) = x`, `ι(y_s) = δ(s) y_{1−s} + (1 − δ(s)) y_1` (complex labels only).
    ///
    /// With this sign `ι` fixes `y_1`, which is what makes `ι² = id`,
    /// `φι = ιφ`, `αι = ια` and the Landen formula hold simultaneously.
    Iota,
    /// `α(x) = y_1`, `α(y_s) = (1 − δ(s)) x + δ(s) y_s`.
    Alpha,
    /// `γ(x) = x`, `γ(y_s) = x + y_s`.
    Gamma,
    /// `γ^{-1}(x) = x`, `γ^{-1}(y_s) = y_s − x`.
    GammaInv,
}

/// Maps acting on the block factorisation of each word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Wordwise {
    /// `I(z_{k1,s1}···z_{kn,sn}x^l) = z_{k1,s1} z_{k2,s1s2} ··· z_{kn,s1···sn} x^l`.
    I,
    /// Inverse of `I` (labels become successive ratios).
    IInv,
    /// `M_s`: multiply the label of the first block by `s`.
    M(Label),
    /// `N_s`: multiply every label by `s`.
    N(Label),
}

/// Maps defined through the split `w · y_s` of words in `A^1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TailRule {
    /// `⋆(w y_s) = αι(w)(y_1 − δ(s) y_{1−s})`, with `⋆(1) = −1`.
    Star,
    /// `d_sh(w y_s) = γ(w) y_s`, with `d_sh(1) = 1`.
    DSh,
    /// `d_sh^{-1}(w y_s) = γ^{-1}(w) y_s`.
    DShInv,
}

/// A composable linear map on [`NcPoly`].
#[derive(Clone, PartialEq, Debug)]
pub enum LinearMap<C: Coeff = Q> {
    /// Letter-image automorphism.
    Automorphism(Automorphism),
    /// Block-factorisation rule.
    Wordwise(Wordwise),
    /// Tail rule on `A^1`.
    TailRule(TailRule),
    /// `L_p(u) = p u`.
    LeftMul(NcPoly<C>),
    /// `R_p(u) = u p`.
    RightMul(NcPoly<C>),
    /// `𝓗_p(u) = p ∗ u` (both in `A^1`).
    LeftHarmonic(NcPoly<C>),
    /// `A_1 ∘ A_2 ∘ … ∘ A_k` (the last map is applied first).
    Composite(Vec<LinearMap<C>>),
}

impl<C: Coeff> LinearMap<C> {
    /// The identity map.
    pub fn identity() -> Self {
        LinearMap::Composite(Vec::new())
    }

    /// `d_* = I^{-1} d_sh I`.
    pub fn d_star() -> Self {
        LinearMap::Composite(vec![
            LinearMap::Wordwise(Wordwise::IInv),
            LinearMap::TailRule(TailRule::DSh),
            LinearMap::Wordwise(Wordwise::I),
        ])
    }

    /// `d_*^{-1} = I^{-1} d_sh^{-1} I`.
    pub fn d_star_inv() -> Self {
        LinearMap::Composite(vec![
            LinearMap::Wordwise(Wordwise::IInv),
            LinearMap::TailRule(TailRule::DShInv),
            LinearMap::Wordwise(Wordwise::I),
        ])
    }

    /// `F_s = M_{1/(1−δ(s)s)} I^{-1} ι I M_{(1−δ(s))+δ(s)s}` (complex labels only).
    pub fn f_s(s: &Label) -> Result<Self> {
        if !matches!(s, Label::Num(_)) {
            return Err(Error::CyclicLabel("F_s"));
        }
        if s.is_zero() {
            return Err(Error::ZeroLabel("F_s"));
        }
        let one = LabelDomain::Complex.one();
        let (inner, outer) = if delta(s) == 0 {
            (one.clone(), one)
        } else {
            (s.clone(), s.one_minus()?.inv()?)
        };
        Ok(LinearMap::Composite(vec![
            LinearMap::Wordwise(Wordwise::M(outer)),
            LinearMap::Wordwise(Wordwise::IInv),
            LinearMap::Automorphism(Automorphism::Iota),
            LinearMap::Wordwise(Wordwise::I),
            LinearMap::Wordwise(Wordwise::M(inner)),
        ]))
    }

    /// `σ_s = φ I M_s`.
    pub fn sigma(s: &Label) -> Self {
        LinearMap::Composite(vec![
            LinearMap::Automorphism(Automorphism::Phi),
            LinearMap::Wordwise(Wordwise::I),
            LinearMap::Wordwise(Wordwise::M(s.clone())),
        ])
    }

    /// `σ_s^{-1} = M_{1/s} I^{-1} φ`.
    pub fn sigma_inv(s: &Label) -> Result<Self> {
        Ok(LinearMap::Composite(vec![
            LinearMap::Wordwise(Wordwise::M(s.inv()?)),
            LinearMap::Wordwise(Wordwise::IInv),
            LinearMap::Automorphism(Automorphism::Phi),
        ]))
    }

    /// `self ∘ other`.
    pub fn compose(self, other: LinearMap<C>) -> Self {
        LinearMap::Composite(vec![self, other])
    }

    /// Apply the map to `p`, whose labels must lie in `dom`.
    pub fn apply(&self, p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
        match self {
            LinearMap::Automorphism(a) => apply_automorphism(*a, p, dom),
            LinearMap::Wordwise(w) => apply_wordwise(w, p, dom),
            LinearMap::TailRule(t) => apply_tail_rule(*t, p, dom),
            LinearMap::LeftMul(q) => Ok(q.concat(p)),
            LinearMap::RightMul(q) => Ok(p.concat(q)),
            LinearMap::LeftHarmonic(q) => {
                if !q.in_a1() {
                    return Err(Error::NotInA1 { op: "H_w", word: q.to_string() });
                }
                hprod(HarmonicKind::Star, q, p)
            }
            LinearMap::Composite(maps) => {
                let mut cur = p.clone();
                for m in maps.iter().rev() {
                    cur = m.apply(&cur, dom)?;
                }
                Ok(cur)
            }
        }
    }
}

fn check_labels<C: Coeff>(p: &NcPoly<C>, dom: LabelDomain) -> Result<()> {
    for w in p.terms().keys() {
        for l in w.letters().iter().filter_map(Letter::label) {
            dom.check(l)?;
        }
    }
    Ok(())
}

/// Image of one letter under an automorphism, as `(letter, ±1)` pairs.
fn letter_image(a: Automorphism, l: &Letter, dom: LabelDomain) -> Result<Vec<(Letter, i64)>> {
    let y1 = Letter::Y(dom.one());
    Ok(match (a, l) {
        (Automorphism::Phi, Letter::X) => vec![(Letter::X, 1), (y1, 1)],
        (Automorphism::Phi, Letter::Y(s)) => {
            if delta(s) == 1 {
                vec![(l.clone(), 1), (y1, -1)]
            } else {
                vec![(y1, -1)]
            }
        }
        (Automorphism::Iota, Letter::X) => vec![(Letter::X, 1)],
        (Automorphism::Iota, Letter::Y(s)) => {
            if !matches!(s, Label::Num(_)) {
                return Err(Error::CyclicLabel("iota"));
            }
            if s.is_zero() {
                return Err(Error::ZeroLabel("iota"));
            }
            if delta(s) == 1 {
                vec![(Letter::Y(s.one_minus()?), 1)]
            } else {
                vec![(y1, 1)]
            }
        }
        (Automorphism::Alpha, Letter::X) => vec![(y1, 1)],
        (Automorphism::Alpha, Letter::Y(s)) => {
            if delta(s) == 1 {
                vec![(l.clone(), 1)]
            } else {
                vec![(Letter::X, 1)]
            }
        }
        (Automorphism::Gamma | Automorphism::GammaInv, Letter::X) => vec![(Letter::X, 1)],
        (Automorphism::Gamma, Letter::Y(_)) => vec![(Letter::X, 1), (l.clone(), 1)],
        (Automorphism::GammaInv, Letter::Y(_)) => vec![(l.clone(), 1), (Letter::X, -1)],
    })
}

/// Expand the image of a word letter by letter.
fn expand_word<C: Coeff>(
    letters: &[Letter],
    mut image: impl FnMut(&Letter) -> Result<Vec<(Letter, i64)>>,
) -> Result<NcPoly<C>> {
    let mut cur: Vec<(Vec<Letter>, i64)> = vec![(Vec::with_capacity(letters.len()), 1)];
    for l in letters {
        let img = image(l)?;
        let mut next = Vec::with_capacity(cur.len() * img.len());
        for (w, c) in &cur {
            for (m, d) in &img {
                let mut v = w.clone();
                v.push(m.clone());
                next.push((v, c * d));
            }
        }
        cur = next;
    }
    Ok(NcPoly::from_terms(cur.into_iter().map(|(w, c)| (Word(w), C::from_i64(c)))))
}

/// Image of a single word under an automorphism.
pub fn automorphism_word<C: Coeff>(a: Automorphism, w: &Word, dom: LabelDomain) -> Result<NcPoly<C>> {
    expand_word(w.letters(), |l| {
        if let Letter::Y(s) = l {
            dom.check(s)?;
        }
        letter_image(a, l, dom)
    })
}

/// Apply an automorphism to a polynomial.
pub fn apply_automorphism<C: Coeff>(a: Automorphism, p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    p.map_words(|w| automorphism_word(a, w, dom))
}

/// Image of a single word under a word-wise map.
pub fn wordwise_word(m: &Wordwise, w: &Word) -> Result<Word> {
    let (mut f, tail) = w.factors();
    match m {
        Wordwise::I => {
            for i in 1..f.len() {
                f[i].label = f[i - 1].label.checked_mul(&f[i].label)?;
            }
        }
        Wordwise::IInv => {
            for i in (1..f.len()).rev() {
                f[i].label = f[i].label.checked_div(&f[i - 1].label)?;
            }
        }
        Wordwise::M(s) => {
            if let Some(first) = f.first_mut() {
                first.label = first.label.checked_mul(s)?;
            }
        }
        Wordwise::N(s) => {
            for fac in f.iter_mut() {
                fac.label = fac.label.checked_mul(s)?;
            }
        }
    }
    Ok(Word::from_factors(&f, tail))
}

/// Apply a word-wise map.
pub fn apply_wordwise<C: Coeff>(m: &Wordwise, p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    check_labels(p, dom)?;
    if let Wordwise::M(s) | Wordwise::N(s) = m {
        dom.check(s)?;
        if s.is_zero() {
            return Err(Error::ZeroLabel("M_s/N_s"));
        }
    }
    let mut out = NcPoly::zero();
    for (w, a) in p.iter() {
        out.add_term(wordwise_word(m, w)?, a.clone());
    }
    Ok(out)
}

/// Image of a single `A^1` word under a tail rule.
pub fn tail_rule_word<C: Coeff>(t: TailRule, w: &Word, dom: LabelDomain) -> Result<NcPoly<C>> {
    let name = match t {
        TailRule::Star => "star",
        TailRule::DSh => "d_sh",
        TailRule::DShInv => "d_sh_inv",
    };
    let Some((last, prefix)) = w.letters().split_last() else {
        return Ok(match t {
            TailRule::Star => NcPoly::term(Word::empty(), C::from_i64(-1)),
            _ => NcPoly::one(),
        });
    };
    let Letter::Y(s) = last else {
        return Err(Error::NotInA1 { op: name, word: w.to_string() });
    };
    dom.check(s)?;
    let prefix = Word(prefix.to_vec());
    match t {
        TailRule::DSh => {
            Ok(automorphism_word::<C>(Automorphism::Gamma, &prefix, dom)?.right_mul_word(&Word(vec![last.clone()])))
        }
        TailRule::DShInv => Ok(automorphism_word::<C>(Automorphism::GammaInv, &prefix, dom)?
            .right_mul_word(&Word(vec![last.clone()]))),
        TailRule::Star => {
            if !matches!(s, Label::Num(_)) {
                return Err(Error::CyclicLabel("star"));
            }
            let iota = automorphism_word::<C>(Automorphism::Iota, &prefix, dom)?;
            let head = apply_automorphism(Automorphism::Alpha, &iota, dom)?;
            let mut tail = NcPoly::<C>::y(dom.one());
            if delta(s) == 1 {
                tail.sub_assign(&NcPoly::y(s.one_minus()?));
            }
            Ok(head.concat(&tail))
        }
    }
}

/// Apply a tail rule (rejects inputs outside `A^1`).
pub fn apply_tail_rule<C: Coeff>(t: TailRule, p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    p.map_words(|w| tail_rule_word(t, w, dom))
}

/// `φ(p)`.
pub fn phi<C: Coeff>(p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    apply_automorphism(Automorphism::Phi, p, dom)
}

/// `ι(p)` (complex labels only).
pub fn iota<C: Coeff>(p: &NcPoly<C>) -> Result<NcPoly<C>> {
    apply_automorphism(Automorphism::Iota, p, LabelDomain::Complex)
}

/// `α(p)`.
pub fn alpha<C: Coeff>(p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    apply_automorphism(Automorphism::Alpha, p, dom)
}

/// `γ(p)`.
pub fn gamma<C: Coeff>(p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    apply_automorphism(Automorphism::Gamma, p, dom)
}

/// `d_sh(p)` for `p ∈ A^1`.
pub fn d_sh<C: Coeff>(p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    apply_tail_rule(TailRule::DSh, p, dom)
}

/// `d_sh^{-1}(p)` for `p ∈ A^1`.
pub fn d_sh_inv<C: Coeff>(p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    apply_tail_rule(TailRule::DShInv, p, dom)
}

/// `⋆(p)` for `p ∈ A^1` with complex labels.
pub fn star<C: Coeff>(p: &NcPoly<C>) -> Result<NcPoly<C>> {
    apply_tail_rule(TailRule::Star, p, LabelDomain::Complex)
}

/// `I(p)`.
pub fn i_map<C: Coeff>(p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    apply_wordwise(&Wordwise::I, p, dom)
}

/// `I^{-1}(p)`.
pub fn i_inv<C: Coeff>(p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    apply_wordwise(&Wordwise::IInv, p, dom)
}

/// `M_s(p)`.
pub fn m_s<C: Coeff>(s: &Label, p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    apply_wordwise(&Wordwise::M(s.clone()), p, dom)
}

/// `N_s(p)`.
pub fn n_s<C: Coeff>(s: &Label, p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    apply_wordwise(&Wordwise::N(s.clone()), p, dom)
}

/// `d_*(p)`.
pub fn d_star<C: Coeff>(p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    LinearMap::d_star().apply(p, dom)
}

/// `d_*^{-1}(p)`.
pub fn d_star_inv<C: Coeff>(p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    LinearMap::d_star_inv().apply(p, dom)
}

/// `F_s(p)` (complex labels only).
pub fn f_s<C: Coeff>(s: &Label, p: &NcPoly<C>) -> Result<NcPoly<C>> {
    LinearMap::f_s(s)?.apply(p, LabelDomain::Complex)
}

/// `σ_s(p) = φ I M_s (p)`.
pub fn sigma_s<C: Coeff>(s: &Label, p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    LinearMap::sigma(s).apply(p, dom)
}

/// `σ_s^{-1}(p) = M_{1/s} I^{-1} φ (p)`.
pub fn sigma_s_inv<C: Coeff>(s: &Label, p: &NcPoly<C>, dom: LabelDomain) -> Result<NcPoly<C>> {
    LinearMap::sigma_inv(s)?.apply(p, dom)
}

/// The letter combination `x + δ(s) y_s`.
pub fn x_plus_delta_y<C: Coeff>(s: &Label) -> NcPoly<C> {
    let mut p = NcPoly::x();
    if delta(s) == 1 {
        p.add_assign(&NcPoly::y(s.clone()));
    }
    p
}

/// Factorisation helper re-exported for callers building block words.
pub fn block(k: usize, s: Label) -> Word {
    Word::from_factors(&[ZFactor { k, label: s }], 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn num(n: i64, d: i64) -> Label {
        Label::rational(q(n, d))
    }

    fn yw(l: &Label) -> Word {
        Word(vec![Letter::Y(l.clone())])
    }

    fn p(w: Word) -> NcPoly {
        NcPoly::from_word(w)
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(&Label::cyc(0, 1)), 0);
        assert_eq!(delta(&Label::cyc(1, 3)), 1);
        assert_eq!(delta(&num(1, 2)), 1);
        assert_eq!(delta(&num(0, 1)), 0);
    }

    #[test]
    fn automorphism_examples() {
        let d = LabelDomain::Cyclic(1);
        let x = NcPoly::<Q>::x();
        let px = phi(&x, d).unwrap();
        assert_eq!(px, &x + &NcPoly::y(d.one()));
        assert_eq!(phi(&px, d).unwrap(), x);
        let io = iota(&p(yw(&num(1, 3)))).unwrap();
        assert_eq!(io, p(yw(&num(2, 3))));
        let s = num(2, 7);
        assert_eq!(gamma(&p(yw(&s)), LabelDomain::Complex).unwrap(), &NcPoly::x() + &p(yw(&s)));
        assert!(iota(&p(yw(&Label::cyc(1, 3)))).is_err());
    }

    #[test]
    fn automorphisms_commute_on_letters() {
        let d = LabelDomain::Complex;
        let letters = [NcPoly::<Q>::x(), p(yw(&num(1, 1))), p(yw(&num(1, 3))), p(yw(&num(-2, 5)))];
        for l in &letters {
            let pi = phi(&iota(l).unwrap(), d).unwrap();
            let ip = iota(&phi(l, d).unwrap()).unwrap();
            assert_eq!(pi, ip, "phi iota on {l}");
            let ai = alpha(&iota(l).unwrap(), d).unwrap();
            let ia = iota(&alpha(l, d).unwrap()).unwrap();
            assert_eq!(ai, ia, "alpha iota on {l}");
            assert_eq!(iota(&iota(l).unwrap()).unwrap(), *l);
        }
    }

    #[test]
    fn landen_sign_on_y1() {
        // Li_{y1}(z) = −Li_{y1}(z/(z−1)), so φι(y_1) = −y_1.
        let d = LabelDomain::Complex;
        let y1 = p(yw(&num(1, 1)));
        assert_eq!(phi(&iota(&y1).unwrap(), d).unwrap(), -&y1);
    }

    #[test]
    fn phi_iota_d_sh_equals_minus_d_sh_star_on_x_y1() {
        let d = LabelDomain::Complex;
        let w = p(Word(vec![Letter::X, Letter::Y(num(1, 1))]));
        let lhs = phi(&iota(&d_sh(&w, d).unwrap()).unwrap(), d).unwrap();
        let rhs = -&d_sh(&star(&w).unwrap(), d).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(star(&star(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn tail_rule_examples() {
        let dom = LabelDomain::Complex;
        let (s, t) = (num(1, 3), num(3, 5));
        let yt_ys = p(Word(vec![Letter::Y(t.clone()), Letter::Y(s.clone())]));
        let expect = NcPoly::from_terms([
            (Word(vec![Letter::X, Letter::Y(s.clone())]), qi(1)),
            (Word(vec![Letter::Y(t.clone()), Letter::Y(s.clone())]), qi(1)),
        ]);
        assert_eq!(d_sh(&yt_ys, dom).unwrap(), expect);
        let xys = p(Word(vec![Letter::X, Letter::Y(s.clone())]));
        assert_eq!(d_sh(&xys, dom).unwrap(), xys);
        let xtys = p(Word(vec![Letter::X, Letter::Y(t), Letter::Y(s)]));
        assert_eq!(d_sh_inv(&d_sh(&xtys, dom).unwrap(), dom).unwrap(), xtys);
        assert!(d_sh(&NcPoly::<Q>::x(), dom).is_err());
    }

    #[test]
    fn star_examples() {
        let one = num(1, 1);
        assert_eq!(star(&p(yw(&one))).unwrap(), p(yw(&one)));
        let h = num(1, 2);
        assert_eq!(star(&p(yw(&h))).unwrap(), &p(yw(&one)) - &p(yw(&h)));
        let w = p(Word(vec![Letter::X, Letter::Y(num(1, 3))]));
        assert_eq!(star(&star(&w).unwrap()).unwrap(), w);
        assert!(star(&p(yw(&Label::cyc(0, 1)))).is_err());
    }

    #[test]
    fn iwasawa_examples() {
        let dom = LabelDomain::Complex;
        let (s, t) = (num(2, 3), num(5, 7));
        let st = s.checked_mul(&t).unwrap();
        let w = p(Word(vec![Letter::Y(s.clone()), Letter::Y(t.clone())]));
        assert_eq!(i_map(&w, dom).unwrap(), p(Word(vec![Letter::Y(s.clone()), Letter::Y(st)])));
        let w2 = p(Word::from_factors(
            &[ZFactor { k: 2, label: s.clone() }, ZFactor { k: 1, label: t.clone() }],
            1,
        ));
        assert_eq!(i_inv(&i_map(&w2, dom).unwrap(), dom).unwrap(), w2);
        let c3 = LabelDomain::Cyclic(3);
        let y1y1 = p(Word(vec![Letter::Y(c3.one()), Letter::Y(c3.one())]));
        let z = Label::cyc(1, 3);
        assert_eq!(n_s(&z, &y1y1, c3).unwrap(), p(Word(vec![Letter::Y(z.clone()), Letter::Y(z)])));
    }

    #[test]
    fn d_star_and_f_s_examples() {
        let dom = LabelDomain::Complex;
        let s = num(3, 4);
        assert_eq!(d_star(&p(yw(&s)), dom).unwrap(), p(yw(&s)));
        let w = p(Word(vec![Letter::X, Letter::Y(s.clone()), Letter::Y(num(1, 5))]));
        assert_eq!(d_star_inv(&d_star(&w, dom).unwrap(), dom).unwrap(), w);
        let h = num(1, 2);
        assert_eq!(f_s(&num(1, 1), &p(yw(&h))).unwrap(), p(yw(&h)));
    }

    #[test]
    fn sigma_one_on_y1y1() {
        // σ_1 = φ I: I is trivial on labels 1, and φ(y_1) = −y_1, so y1 y1 is fixed.
        let dom = LabelDomain::Cyclic(1);
        let y1y1 = p(Word(vec![Letter::Y(dom.one()), Letter::Y(dom.one())]));
        assert_eq!(sigma_s(&dom.one(), &y1y1, dom).unwrap(), y1y1);
        let w = p(Word(vec![Letter::X, Letter::Y(Label::cyc(2, 3))]));
        let c3 = LabelDomain::Cyclic(3);
        let s = Label::cyc(1, 3);
        assert_eq!(sigma_s_inv(&s, &sigma_s(&s, &w, c3).unwrap(), c3).unwrap(), w);
    }
}
