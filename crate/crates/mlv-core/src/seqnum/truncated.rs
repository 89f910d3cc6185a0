//! Truncated MLVs `s^♯_w(m)`, `S^♯_w(m)` and strict polylogarithm
//! coefficients, by dynamic programming over the blocks of a word.
//!
//! For `w = z_{k1,s1}···z_{kn,sn}` the pinned sums are
//!
//! * `s^sh_w(m) = Σ_{m=m1≥…≥mn≥0} s1^{m1−m2}···s_{n−1}^{m_{n−1}−mn} sn^{mn+1} / Π(mi+1)^{ki}`,
//! * `s^*_w(m)  = Σ_{m=m1≥…≥mn≥0} s1^{m1+1}···sn^{mn+1} / Π(mi+1)^{ki}`,
//!
//! and `S^♯_w(m) = Σ_{i≤m} s^♯_w(i)`; the empty word has `s = S = 1`.
//! One pass produces the whole sequence `m = 0..=M` in `O(depth · M)`.

use crate::algebra::{NcPoly, Word, ZFactor};
use crate::error::{Error, Result};
use crate::scalar::Q;

use super::SeqScalar;

/// Shuffle-type or harmonic-type truncation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TruncKind {
    /// `s^sh`, `S^sh`.
    Sh,
    /// `s^*`, `S^*`.
    Ast,
}

/// Pinned outer index (`s`) or cumulative (`S`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TruncVariant {
    /// `m1 = m`.
    Equal,
    /// `m1 ≤ m`.
    Leq,
}

fn blocks(w: &Word, op: &'static str) -> Result<Vec<ZFactor>> {
    if !w.in_a1() {
        return Err(Error::NotInA1 { op, word: w.to_string() });
    }
    Ok(w.factors().0)
}

/// Powers `s^0..=s^n`.
fn powers<T: SeqScalar>(s: &T, n: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(n + 1);
    let mut p = T::one();
    for _ in 0..=n {
        out.push(p.clone());
        p = p * s.clone();
    }
    out
}

/// Values `m = 0..=m_max` of a truncated MLV of one word.
pub fn word_values<T: SeqScalar>(kind: TruncKind, variant: TruncVariant, w: &Word, m_max: usize) -> Result<Vec<T>> {
    let bl = blocks(w, "truncated MLV")?;
    if bl.is_empty() {
        return Ok(vec![T::one(); m_max + 1]);
    }
    let labels: Vec<T> = bl.iter().map(|b| T::label_value(&b.label, "truncated MLV")).collect::<Result<_>>()?;
    let n = bl.len();
    let inv: Vec<Vec<T>> = bl.iter().map(|b| (0..=m_max).map(|j| T::inv_pow(j as u64 + 1, b.k)).collect()).collect();
    // f holds f_{i+1}(j) while processing block i (innermost first).
    let last_pow = powers(&labels[n - 1], m_max + 1);
    let mut f: Vec<T> = (0..=m_max).map(|j| last_pow[j + 1].clone() * inv[n - 1][j].clone()).collect();
    for i in (0..n - 1).rev() {
        let s = &labels[i];
        let mut g = T::zero();
        let mut next = Vec::with_capacity(m_max + 1);
        match kind {
            TruncKind::Sh => {
                for j in 0..=m_max {
                    g = s.clone() * g + f[j].clone();
                    next.push(g.clone() * inv[i][j].clone());
                }
            }
            TruncKind::Ast => {
                let pw = powers(s, m_max + 1);
                for j in 0..=m_max {
                    g = g + f[j].clone();
                    next.push(pw[j + 1].clone() * g.clone() * inv[i][j].clone());
                }
            }
        }
        f = next;
    }
    if variant == TruncVariant::Leq {
        let mut acc = T::zero();
        for v in f.iter_mut() {
            acc = acc + v.clone();
            *v = acc.clone();
        }
    }
    Ok(f)
}

/// Values of a truncated MLV extended linearly to a polynomial.
pub fn poly_values<T: SeqScalar>(
    kind: TruncKind,
    variant: TruncVariant,
    p: &NcPoly<Q>,
    m_max: usize,
) -> Result<Vec<T>> {
    let mut out = vec![T::zero(); m_max + 1];
    for (w, c) in p.iter() {
        let vals = word_values::<T>(kind, variant, w, m_max)?;
        let c = T::from_q(c);
        for (o, v) in out.iter_mut().zip(vals) {
            *o = o.clone() + c.clone() * v;
        }
    }
    Ok(out)
}

/// Coefficients `j = 0..=j_max` of the strict shuffle-type series
/// `Σ_{j=m1>…>mn>0} s1^{m1−m2}···sn^{mn} / Π mi^{ki}` (coefficient of `z^j`
/// in `Li^sh_w(z)`).  The empty word gives `1, 0, 0, …`.
pub fn strict_coefficients<T: SeqScalar>(w: &Word, j_max: usize) -> Result<Vec<T>> {
    let bl = blocks(w, "strict series")?;
    let mut out = vec![T::zero(); j_max + 1];
    if bl.is_empty() {
        out[0] = T::one();
        return Ok(out);
    }
    let labels: Vec<T> = bl.iter().map(|b| T::label_value(&b.label, "strict series")).collect::<Result<_>>()?;
    let n = bl.len();
    let inv = |j: usize, k: usize| if j == 0 { T::zero() } else { T::inv_pow(j as u64, k) };
    let last_pow = powers(&labels[n - 1], j_max);
    let mut f: Vec<T> = (0..=j_max).map(|j| last_pow[j].clone() * inv(j, bl[n - 1].k)).collect();
    f[0] = T::zero();
    for i in (0..n - 1).rev() {
        let s = &labels[i];
        let mut g = T::zero();
        let mut next = vec![T::zero(); j_max + 1];
        for j in 1..=j_max {
            g = s.clone() * (g + f[j - 1].clone());
            next[j] = g.clone() * inv(j, bl[i].k);
        }
        f = next;
    }
    Ok(f)
}

/// Strict coefficients of a polynomial.
pub fn strict_poly_coefficients<T: SeqScalar>(p: &NcPoly<Q>, j_max: usize) -> Result<Vec<T>> {
    let mut out = vec![T::zero(); j_max + 1];
    for (w, c) in p.iter() {
        let vals = strict_coefficients::<T>(w, j_max)?;
        let c = T::from_q(c);
        for (o, v) in out.iter_mut().zip(vals) {
            *o = o.clone() + c.clone() * v;
        }
    }
    Ok(out)
}

/// Brute-force evaluation of `s^♯_w(m)` by enumerating all index chains
/// (test oracle; exponential in the depth).
pub fn brute_force<T: SeqScalar>(kind: TruncKind, w: &Word, m: usize) -> Result<T> {
    let bl = blocks(w, "truncated MLV")?;
    if bl.is_empty() {
        return Ok(T::one());
    }
    let labels: Vec<T> = bl.iter().map(|b| T::label_value(&b.label, "truncated MLV")).collect::<Result<_>>()?;
    fn pw<T: SeqScalar>(s: &T, e: usize) -> T {
        (0..e).fold(T::one(), |a, _| a * s.clone())
    }
    fn rec<T: SeqScalar>(kind: TruncKind, bl: &[ZFactor], labels: &[T], i: usize, prev: usize, chain: &mut Vec<usize>) -> T {
        if i == bl.len() {
            let n = bl.len();
            let mut v = T::one();
            for (t, &mi) in chain.iter().enumerate() {
                v = v * T::inv_pow(mi as u64 + 1, bl[t].k);
                v = v * match kind {
                    TruncKind::Ast => pw(&labels[t], mi + 1),
                    TruncKind::Sh if t + 1 < n => pw(&labels[t], mi - chain[t + 1]),
                    TruncKind::Sh => pw(&labels[t], mi + 1),
                };
            }
            return v;
        }
        let mut acc = T::zero();
        for mi in 0..=prev {
            chain.push(mi);
            acc = acc + rec(kind, bl, labels, i + 1, mi, chain);
            chain.pop();
        }
        acc
    }
    let mut chain = vec![m];
    Ok(rec(kind, &bl, &labels, 1, m, &mut chain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CRat, Label, LabelDomain, Letter};
    use crate::linmaps::i_map;
    use crate::scalar::q;

    fn y(n: i64, d: i64) -> Letter {
        Letter::Y(Label::rational(q(n, d)))
    }

    fn cr(n: i64, d: i64) -> CRat {
        CRat::new(q(n, d), q(0, 1))
    }

    #[test]
    fn s_sh_y1_is_harmonic_reciprocal() {
        let w = Word(vec![y(1, 1)]);
        let v = word_values::<CRat>(TruncKind::Sh, TruncVariant::Equal, &w, 10).unwrap();
        for (m, x) in v.iter().enumerate() {
            assert_eq!(*x, cr(1, m as i64 + 1));
        }
    }

    #[test]
    fn dp_matches_brute_force() {
        let w = Word(vec![Letter::X, y(1, 2), y(2, 3), Letter::X, y(1, 1)]);
        for kind in [TruncKind::Sh, TruncKind::Ast] {
            let v = word_values::<CRat>(kind, TruncVariant::Equal, &w, 6).unwrap();
            for (m, x) in v.iter().enumerate() {
                assert_eq!(*x, brute_force::<CRat>(kind, &w, m).unwrap(), "{kind:?} m={m}");
            }
        }
    }

    #[test]
    fn leq_is_partial_sum_and_star_is_sh_of_i() {
        let w = Word(vec![y(1, 3), Letter::X, y(3, 4)]);
        let s = word_values::<CRat>(TruncKind::Sh, TruncVariant::Equal, &w, 12).unwrap();
        let big = word_values::<CRat>(TruncKind::Sh, TruncVariant::Leq, &w, 12).unwrap();
        let mut acc = cr(0, 1);
        for m in 0..=12 {
            acc += s[m].clone();
            assert_eq!(big[m], acc);
        }
        let ast = word_values::<CRat>(TruncKind::Ast, TruncVariant::Equal, &w, 12).unwrap();
        let iw = i_map(&NcPoly::<Q>::from_word(w.clone()), LabelDomain::Complex).unwrap();
        let via = poly_values::<CRat>(TruncKind::Sh, TruncVariant::Equal, &iw, 12).unwrap();
        assert_eq!(ast, via);
    }

    #[test]
    fn strict_coefficients_of_depth_two() {
        // Li_{(2,1;1,1)}: coefficient of z^3 is (1/9)(1 + 1/2) = 1/6.
        let w = Word(vec![Letter::X, y(1, 1), y(1, 1)]);
        let c = strict_coefficients::<CRat>(&w, 3).unwrap();
        assert_eq!(c[0], cr(0, 1));
        assert_eq!(c[1], cr(0, 1));
        assert_eq!(c[2], cr(1, 4));
        assert_eq!(c[3], cr(1, 6));
    }
}
