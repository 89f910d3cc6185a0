//! Floating-point estimates of MLVs by direct summation.
//!
//! `L^sh(w) = lim_M Σ_{M≥m1>…>mn>0} s1^{m1−m2}···sn^{mn} / Π mi^{ki}` is
//! summed in one `O(depth · M)` pass; the harmonic type uses
//! `L^*(w) = L^sh(I(w))`.  With Aitken acceleration the partial sums at
//! `M/4, M/2, M` are extrapolated and the error proxy is the distance to
//! the same extrapolation one level down (`M/8, M/4, M/2`).

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{LabelDomain, NcPoly};
use crate::error::{Error, Result};
use crate::linmaps::i_map;
use crate::scalar::Q;

use super::truncated::strict_coefficients;
use super::SeqScalar;

/// Acceleration of the partial sums.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Accel {
    /// Plain truncated sum.
    None,
    /// Aitken Δ² extrapolation.
    Aitken,
}

/// Which MLV is estimated.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MlvKind {
    /// Shuffle type `L^sh`.
    Sh,
    /// Harmonic type `L^*`.
    Ast,
}

/// A numeric MLV estimate (the CLI's JSON shape).
#[derive(Clone, Debug, Serialize)]
pub struct NumericResult {
    /// Real part.
    pub estimate_re: f64,
    /// Imaginary part.
    pub estimate_im: f64,
    /// Spread-based error proxy.
    pub error_proxy: f64,
    /// Truncation point.
    pub m_max: usize,
    /// Acceleration used.
    pub accel: Accel,
}

impl NumericResult {
    /// The estimate.
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.estimate_re, self.estimate_im)
    }
}

fn aitken(x0: Complex64, x1: Complex64, x2: Complex64) -> Complex64 {
    let d1 = x2 - x1;
    let den = d1 - (x1 - x0);
    if den.norm() <= f64::EPSILON * x2.norm().max(1.0) {
        x2
    } else {
        x2 - d1 * d1 / den
    }
}

/// Partial sums of a polynomial's strict series at `z = 1`, sampled at the
/// given truncation points (each ≤ `m_max`).
fn sampled_partial_sums(p: &NcPoly<Q>, m_max: usize, points: &[usize]) -> Result<Vec<Complex64>> {
    let mut out = vec![Complex64::new(0.0, 0.0); points.len()];
    for (w, c) in p.iter() {
        let coeffs = strict_coefficients::<Complex64>(w, m_max)?;
        let c = Complex64::from_q(c);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut k = 0;
        for (j, a) in coeffs.iter().enumerate() {
            acc += a;
            while k < points.len() && points[k] == j {
                out[k] += c * acc;
                k += 1;
            }
        }
    }
    Ok(out)
}

/// Estimate `L^sh(p)` or `L^*(p)` for an admissible polynomial.
pub fn mlv_numeric(p: &NcPoly<Q>, kind: MlvKind, m_max: usize, accel: Accel) -> Result<NumericResult> {
    if let Some((w, _)) = p.iter().find(|(w, _)| !w.in_a0()) {
        return Err(Error::NotAdmissible { op: "mlv_numeric", word: w.to_string() });
    }
    if m_max < 8 {
        return Err(Error::InvalidArgument { op: "mlv_numeric", reason: "m_max must be at least 8".into() });
    }
    let target = match kind {
        MlvKind::Sh => p.clone(),
        MlvKind::Ast => {
            let dom = p.label_domain()?.unwrap_or(LabelDomain::Cyclic(1));
            i_map(p, dom)?
        }
    };
    let pts = [m_max / 8, m_max / 4, m_max / 2, m_max];
    let s = sampled_partial_sums(&target, m_max, &pts)?;
    let (value, proxy) = match accel {
        Accel::None => (s[3], (s[3] - s[2]).norm()),
        Accel::Aitken => {
            let hi = aitken(s[1], s[2], s[3]);
            let lo = aitken(s[0], s[1], s[2]);
            (hi, (hi - lo).norm())
        }
    };
    Ok(NumericResult { estimate_re: value.re, estimate_im: value.im, error_proxy: proxy, m_max, accel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Label, Letter, Word};

    fn y1() -> Letter {
        Letter::Y(Label::cyc(0, 1))
    }

    #[test]
    fn zeta_two() {
        let p = NcPoly::from_word(Word(vec![Letter::X, y1()]));
        let r = mlv_numeric(&p, MlvKind::Sh, 100_000, Accel::Aitken).unwrap();
        let exact = std::f64::consts::PI.powi(2) / 6.0;
        assert!((r.estimate_re - exact).abs() < 1e-7, "{r:?}");
        assert!(r.estimate_im.abs() < 1e-12);
    }

    #[test]
    fn alternating_log_two() {
        // L^sh(1; ζ_2) = Σ (−1)^m / m = −log 2.
        let p = NcPoly::from_word(Word(vec![Letter::Y(Label::cyc(1, 2))]));
        let r = mlv_numeric(&p, MlvKind::Sh, 4096, Accel::None).unwrap();
        assert!((r.estimate_re + std::f64::consts::LN_2).abs() < 1e-3);
    }

    #[test]
    fn rejects_non_admissible() {
        let p = NcPoly::from_word(Word(vec![y1()]));
        assert!(mlv_numeric(&p, MlvKind::Sh, 100, Accel::None).is_err());
    }
}
