//! The four harmonic (quasi-shuffle) products on `A^1`.
//!
//! Writing words as `z_{k,s} w`, the products are defined recursively with
//! the empty word as unit:
//!
//! * `∗`  : `z_{k,s}w ∗ z_{l,t}w' = z_{k,s}(w ∗ z_{l,t}w') + z_{l,t}(z_{k,s}w ∗ w') + z_{k+l,st}(w ∗ w')`
//! * `∗̄`  : the same with the merge term subtracted;
//! * `∗̇`  : merge term only, `z_{k+l,st}(w ∗ w')`;
//! * `∗̇̄` : merge term only with the barred inner product, `z_{k+l,st}(w ∗̄ w')`.

use std::cell::RefCell;

use rustc_hash::FxHashMap;

use crate::algebra::{Letter, NcPoly, Word};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Which harmonic product.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HarmonicKind {
    /// `∗`
    Star,
    /// `∗̄` (merge term with sign −1)
    BarStar,
    /// `∗̇` (merge term only, inner `∗`)
    DotStar,
    /// `∗̇̄` (merge term only, inner `∗̄`)
    DotBarStar,
}

impl HarmonicKind {
    /// All four kinds.
    pub const ALL: [HarmonicKind; 4] =
        [HarmonicKind::Star, HarmonicKind::BarStar, HarmonicKind::DotStar, HarmonicKind::DotBarStar];
}

type Key = (HarmonicKind, Word, Word);

/// Memoising evaluator for harmonic products.
///
/// The memo lives in a `RefCell`, so an engine is confined to one thread;
/// parallel callers create one engine per worker.
#[derive(Default)]
pub struct HarmonicEngine<C: Coeff> {
    memo: RefCell<FxHashMap<Key, NcPoly<C>>>,
}

/// Split the first block `z_{k,s}` off an `A^1` word: returns `(k, letter y_s, rest)`.
fn first_block(w: &[Letter]) -> (usize, &Letter, &[Letter]) {
    let pos = w.iter().position(Letter::is_y).expect("A^1 word has a y letter");
    (pos + 1, &w[pos], &w[pos + 1..])
}

fn z_block(k: usize, y: Letter) -> Word {
    let mut v = vec![Letter::X; k - 1];
    v.push(y);
    Word(v)
}

impl<C: Coeff> HarmonicEngine<C> {
    /// A fresh engine with an empty memo.
    pub fn new() -> Self {
        HarmonicEngine { memo: RefCell::new(FxHashMap::default()) }
    }

    /// Number of memoised word pairs.
    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }

    /// Product of two words.
    pub fn words(&self, kind: HarmonicKind, a: &Word, b: &Word) -> Result<NcPoly<C>> {
        for w in [a, b] {
            if !w.in_a1() {
                return Err(Error::NotInA1 { op: "harmonic product", word: w.to_string() });
            }
        }
        self.rec(kind, a.letters(), b.letters())
    }

    /// Bilinear extension to polynomials.
    pub fn product(&self, kind: HarmonicKind, p: &NcPoly<C>, q: &NcPoly<C>) -> Result<NcPoly<C>> {
        let mut out = NcPoly::zero();
        for (u, a) in p.iter() {
            for (v, b) in q.iter() {
                let prod = self.words(kind, u, v)?;
                out.add_scaled(&prod, &a.mul_ref(b));
            }
        }
        Ok(out)
    }

    fn rec(&self, kind: HarmonicKind, a: &[Letter], b: &[Letter]) -> Result<NcPoly<C>> {
        if a.is_empty() {
            return Ok(NcPoly::from_word(Word(b.to_vec())));
        }
        if b.is_empty() {
            return Ok(NcPoly::from_word(Word(a.to_vec())));
        }
        let key = (kind, Word(a.to_vec()), Word(b.to_vec()));
        if let Some(hit) = self.memo.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let (k, ya, rest_a) = first_block(a);
        let (l, yb, rest_b) = first_block(b);
        let st = match (ya, yb) {
            (Letter::Y(s), Letter::Y(t)) => s.checked_mul(t)?,
            _ => unreachable!(),
        };
        let merge = z_block(k + l, Letter::Y(st));
        let out = match kind {
            HarmonicKind::Star | HarmonicKind::BarStar => {
                let mut out = self.rec(kind, rest_a, b)?.left_mul_word(&z_block(k, ya.clone()));
                out.add_assign(&self.rec(kind, a, rest_b)?.left_mul_word(&z_block(l, yb.clone())));
                let m = self.rec(kind, rest_a, rest_b)?.left_mul_word(&merge);
                if kind == HarmonicKind::Star {
                    out.add_assign(&m);
                } else {
                    out.sub_assign(&m);
                }
                out
            }
            HarmonicKind::DotStar => self.rec(HarmonicKind::Star, rest_a, rest_b)?.left_mul_word(&merge),
            HarmonicKind::DotBarStar => {
                self.rec(HarmonicKind::BarStar, rest_a, rest_b)?.left_mul_word(&merge)
            }
        };
        self.memo.borrow_mut().insert(key, out.clone());
        Ok(out)
    }
}

/// One-shot harmonic product of two polynomials in `A^1`.
pub fn hprod<C: Coeff>(kind: HarmonicKind, p: &NcPoly<C>, q: &NcPoly<C>) -> Result<NcPoly<C>> {
    HarmonicEngine::new().product(kind, p, q)
}

/// `𝓗_w(w') = w ∗ w'`, the left `∗`-multiplication operator by `w ∈ A^1`.
pub fn h_w<C: Coeff>(w: &NcPoly<C>, arg: &NcPoly<C>) -> Result<NcPoly<C>> {
    if !w.in_a1() {
        return Err(Error::NotInA1 { op: "H_w", word: w.to_string() });
    }
    hprod(HarmonicKind::Star, w, arg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Label, LabelDomain};
    use crate::scalar::{qi, Q};

    fn yl(e: i64, r: u32) -> Letter {
        Letter::Y(Label::cyc(e, r))
    }

    fn w(ls: &[Letter]) -> Word {
        Word(ls.to_vec())
    }

    #[test]
    fn depth_one_products() {
        let r = 5;
        let (s, t) = (yl(1, r), yl(3, r));
        let st = yl(4, r);
        let ys = NcPoly::<Q>::from_word(w(std::slice::from_ref(&s)));
        let yt = NcPoly::<Q>::from_word(w(std::slice::from_ref(&t)));
        let shuffle = NcPoly::from_terms([(w(&[s.clone(), t.clone()]), qi(1)), (w(&[t.clone(), s.clone()]), qi(1))]);
        let merge = NcPoly::from_word(w(&[Letter::X, st]));
        assert_eq!(hprod(HarmonicKind::Star, &ys, &yt).unwrap(), &shuffle + &merge);
        assert_eq!(hprod(HarmonicKind::BarStar, &ys, &yt).unwrap(), &shuffle - &merge);
        assert_eq!(hprod(HarmonicKind::DotStar, &ys, &yt).unwrap(), merge.clone());
        assert_eq!(hprod(HarmonicKind::DotBarStar, &ys, &yt).unwrap(), merge);
    }

    #[test]
    fn unit_laws() {
        let xy = NcPoly::<Q>::from_word(w(&[Letter::X, yl(1, 3)]));
        for kind in HarmonicKind::ALL {
            assert_eq!(hprod(kind, &NcPoly::one(), &xy).unwrap(), xy);
            assert_eq!(hprod(kind, &xy, &NcPoly::one()).unwrap(), xy);
        }
    }

    #[test]
    fn h_w_examples() {
        let y1 = NcPoly::<Q>::y(LabelDomain::Cyclic(1).one());
        let out = h_w(&y1, &y1).unwrap();
        let expect = NcPoly::from_terms([
            (w(&[yl(0, 1), yl(0, 1)]), qi(2)),
            (w(&[Letter::X, yl(0, 1)]), qi(1)),
        ]);
        assert_eq!(out, expect);
        assert_eq!(h_w(&NcPoly::one(), &y1).unwrap(), y1);
        // H_{y1}(x y1) = y1 x y1 + x y1 y1 + x x y1 by one unfolding.
        let xy = NcPoly::from_word(w(&[Letter::X, yl(0, 1)]));
        let got = h_w(&y1, &xy).unwrap();
        let mut expect = NcPoly::from_word(w(&[yl(0, 1), Letter::X, yl(0, 1)]));
        expect.add_term(w(&[Letter::X, yl(0, 1), yl(0, 1)]), qi(1));
        expect.add_term(w(&[Letter::X, Letter::X, yl(0, 1)]), qi(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn rejects_non_a1() {
        let x = NcPoly::<Q>::x();
        assert!(hprod(HarmonicKind::Star, &x, &NcPoly::one()).is_err());
    }
}
