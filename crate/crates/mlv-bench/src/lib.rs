//! Shared inputs for the benchmarks in `benches/`.

use mlv_core::algebra::{LabelDomain, NcPoly, Word};
use mlv_core::Q;

/// Parse an index string over `μ_r` into a one-term polynomial.
///
/// # Panics
/// If `text` is not a valid index string; bench inputs are constants.
pub fn word(text: &str, r: u32) -> NcPoly<Q> {
    NcPoly::from_word(Word::parse(text, LabelDomain::Cyclic(r)).expect("valid bench input"))
}

/// Parse an index string with rational labels `p/q`.
///
/// # Panics
/// If `text` is not a valid index string.
pub fn rational_word(text: &str) -> NcPoly<Q> {
    NcPoly::from_word(Word::parse(text, LabelDomain::Complex).expect("valid bench input"))
}

/// Pairs of words of growing depth for harmonic-product benchmarks:
/// `(label, left, right)`.
pub const PRODUCT_INPUTS: [(&str, &str, &str); 3] = [
    ("depth2x2", "2:0,1:1", "1:1,2:0"),
    ("depth3x3", "2:0,1:1,1:0", "1:1,2:0,1:1"),
    ("depth4x4", "1:1,2:0,1:1,1:0", "2:1,1:0,1:1,1:1"),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_parse() {
        for (_, a, b) in PRODUCT_INPUTS {
            assert_eq!(word(a, 2).len(), 1);
            assert_eq!(word(b, 2).len(), 1);
        }
        assert_eq!(rational_word("1:1/2").len(), 1);
    }
}
