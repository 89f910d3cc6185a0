//! The arrays `c_{s1,…,sp}(m)` and their binomially weighted bivariate
//! companions `c_{s;t}(m,l)`.
//!
//! ```text
//! c_{s}(m)      = Σ_{m=m1≥…≥mp≥0} Π_{i<p} s_i^{mi−m_{i+1}}/(mi+1) · sp^{mp}
//! c_{s;t}(m,l)  = C(m+l,m)^{-1} Σ_{chains in m and l} Π_{i<p} C(Δmi+Δli, Δmi) si^{Δmi} ti^{Δli}/(mi+li+1)
//!                 · C(mp+lp, mp) sp^{mp} tp^{lp}
//! ```
//!
//! The identity `Δ^l c_s(m) = c_{s;1−s}(m, l)` is checked by direct
//! evaluation of both sides.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::algebra::CRat;
use crate::scalar::Q;

use super::sequence::Sequence;

fn crat_int(n: BigInt) -> CRat {
    CRat::new(Q::from_integer(n), Q::zero())
}

fn crat_recip(n: usize) -> CRat {
    CRat::new(Q::new(1.into(), BigInt::from(n)), Q::zero())
}

fn powers(s: &CRat, n: usize) -> Vec<CRat> {
    let mut out = Vec::with_capacity(n + 1);
    let mut p = CRat::new(Q::from_integer(1.into()), Q::zero());
    for _ in 0..=n {
        out.push(p.clone());
        p = &p * s;
    }
    out
}

/// `c_{s1,…,sp}(m)` for `m = 0..=m_max` (empty label list gives 1).
pub fn c_array(labels: &[CRat], m_max: usize) -> Vec<CRat> {
    let one = crat_int(1.into());
    let Some(last) = labels.last() else {
        return vec![one; m_max + 1];
    };
    let mut f = powers(last, m_max);
    for s in labels[..labels.len() - 1].iter().rev() {
        let mut g = CRat::zero();
        f = (0..=m_max)
            .map(|j| {
                g = s * &g + &f[j];
                &g * crat_recip(j + 1)
            })
            .collect();
    }
    f
}

/// `c_{s;t}(m,l)` for one `(m, l)`; `s` and `t` must have the same length.
#[allow(clippy::needless_range_loop)]
pub fn bivariate_c(s: &[CRat], t: &[CRat], m: usize, l: usize) -> CRat {
    assert_eq!(s.len(), t.len(), "bivariate c needs as many t labels as s labels");
    let p = s.len();
    if p == 0 {
        return crat_int(1.into());
    }
    let binom = |a: usize, b: usize| crat_int(binomial(BigInt::from(a + b), BigInt::from(a)));
    let (sp, tp) = (powers(&s[p - 1], m), powers(&t[p - 1], l));
    // h[a][b] for the innermost level.
    let mut h: Vec<Vec<CRat>> =
        (0..=m).map(|a| (0..=l).map(|b| binom(a, b) * &sp[a] * &tp[b]).collect()).collect();
    for i in (0..p - 1).rev() {
        let (si, ti) = (powers(&s[i], m), powers(&t[i], l));
        let mut next = vec![vec![CRat::zero(); l + 1]; m + 1];
        for a in 0..=m {
            for b in 0..=l {
                let mut acc = CRat::zero();
                for a2 in 0..=a {
                    for b2 in 0..=b {
                        let (da, db) = (a - a2, b - b2);
                        acc += binom(da, db) * &si[da] * &ti[db] * &h[a2][b2];
                    }
                }
                next[a][b] = acc * crat_recip(a + b + 1);
            }
        }
        h = next;
    }
    &h[m][l] / binom(m, l)
}

/// Check `Δ^l c_s(m) = c_{s;1−s}(m,l)` for all `m ≤ m_max`, `l ≤ l_max`.
pub fn delta_identity_holds(labels: &[CRat], m_max: usize, l_max: usize) -> bool {
    let one = crat_int(1.into());
    let t: Vec<CRat> = labels.iter().map(|s| &one - s).collect();
    let base = Sequence::new(c_array(labels, m_max + l_max));
    (0..=l_max).all(|l| {
        let d = base.delta_pow(l);
        (0..=m_max).all(|m| *d.get(m) == bivariate_c(labels, &t, m, l))
    })
}
