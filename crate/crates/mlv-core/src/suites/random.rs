//! Random labels, words and polynomials for the property suites.

use rand::Rng;

use crate::algebra::{Label, Letter, NcPoly, Word};
use crate::scalar::{q, qi, Coeff, Q};

use super::SuiteRng;

/// Where a random word must lie.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Shape {
    /// Any word.
    Any,
    /// `A^1`: empty or ending in a `y`.
    A1,
    /// `A^0` (weight ≥ 2 is required when the only label is 1).
    A0,
}

/// A rational in `(0, 1]` with denominator ≤ 6.
pub(crate) fn unit_rational(rng: &mut SuiteRng) -> Q {
    let d = rng.gen_range(1..=6);
    q(rng.gen_range(1..=d), d)
}

/// A label in `(0, 1]`.
pub(crate) fn unit_label(rng: &mut SuiteRng) -> Label {
    Label::rational(unit_rational(rng))
}

/// A label in `[0, 1]` (as used for the non-negativity of difference arrays).
pub(crate) fn closed_unit_rational(rng: &mut SuiteRng) -> Q {
    let d = rng.gen_range(1..=6);
    q(rng.gen_range(0..=d), d)
}

/// A non-zero rational `±n/d` with `n, d ≤ 5`.
pub(crate) fn nonzero_rational(rng: &mut SuiteRng) -> Q {
    let v = q(rng.gen_range(1..=5), rng.gen_range(1..=5));
    if rng.gen_bool(0.3) {
        -v
    } else {
        v
    }
}

/// A non-zero rational label.
pub(crate) fn nonzero_label(rng: &mut SuiteRng) -> Label {
    Label::rational(nonzero_rational(rng))
}

/// A rational label outside `{0, 1}`.
pub(crate) fn generic_label(rng: &mut SuiteRng) -> Label {
    loop {
        let v = nonzero_rational(rng);
        if v != qi(1) {
            return Label::rational(v);
        }
    }
}

/// A root of unity `ζ_r^e`.
pub(crate) fn cyc_label(rng: &mut SuiteRng, r: u32) -> Label {
    Label::cyc(rng.gen_range(0..i64::from(r)), r)
}

/// A word of the given weight and shape with labels from `label`.
///
/// For [`Shape::A0`] the first letter is `x` or a `y` whose label is not 1;
/// `label` must be able to produce such a label when the weight is 1.
pub(crate) fn word(
    rng: &mut SuiteRng,
    weight: usize,
    shape: Shape,
    label: &mut dyn FnMut(&mut SuiteRng) -> Label,
) -> Word {
    if weight == 0 {
        return Word::empty();
    }
    loop {
        let mut v: Vec<Letter> = (0..weight)
            .map(|_| if rng.gen_bool(0.5) { Letter::X } else { Letter::Y(label(rng)) })
            .collect();
        if shape != Shape::Any {
            if let Some(last) = v.last_mut() {
                if *last == Letter::X {
                    *last = Letter::Y(label(rng));
                }
            }
        }
        let w = Word(v);
        let ok = match shape {
            Shape::Any => true,
            Shape::A1 => w.in_a1(),
            Shape::A0 => w.in_a0(),
        };
        if ok {
            return w;
        }
        if shape == Shape::A0 && weight >= 2 && rng.gen_bool(0.5) {
            let mut v = w.0;
            v[0] = Letter::X;
            return Word(v);
        }
    }
}

/// A polynomial with 1–3 terms of weights in `weights`, small integer
/// coefficients.
pub(crate) fn poly<C: Coeff>(
    rng: &mut SuiteRng,
    weights: std::ops::RangeInclusive<usize>,
    shape: Shape,
    label: &mut dyn FnMut(&mut SuiteRng) -> Label,
) -> NcPoly<C> {
    let mut p = NcPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let n = rng.gen_range(weights.clone());
        let c = rng.gen_range(-3i64..=3);
        p.add_term(word(rng, n, shape, label), C::from_i64(if c == 0 { 1 } else { c }));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn shapes_are_respected() {
        let mut rng = SuiteRng::seed_from_u64(1);
        for n in 1..6 {
            for _ in 0..50 {
                assert!(word(&mut rng, n, Shape::A1, &mut unit_label).in_a1());
                assert!(word(&mut rng, n + 1, Shape::A0, &mut |r| cyc_label(r, 1)).in_a0());
                assert_eq!(word(&mut rng, n, Shape::Any, &mut nonzero_label).weight(), n);
            }
        }
        for _ in 0..50 {
            let v = unit_rational(&mut rng);
            assert!(v > qi(0) && v <= qi(1));
            assert!(!generic_label(&mut rng).is_one());
        }
    }
}
