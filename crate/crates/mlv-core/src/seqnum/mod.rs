//! Truncated MLVs, sequence transforms, Newton series, polylogarithm
//! series and numeric MLV estimates.
//!
//! Everything here is generic over [`SeqScalar`]: exact complex rationals
//! ([`CRat`]) when all labels are complex-rational, and `Complex<f64>` for
//! roots of unity or for long floating-point summations.

use std::fmt::Debug;

use num_complex::Complex64;
use num_traits::{Num, ToPrimitive};

use crate::algebra::{CRat, Label};
use crate::error::{Error, Result};
use crate::scalar::Q;

pub mod carray;
pub mod newton;
pub mod numeric;
pub mod sequence;
pub mod series;
pub mod truncated;

pub use carray::{bivariate_c, c_array, delta_identity_holds};
pub use newton::{newton_eval, newton_eval_exact, NewtonAccel, NewtonKind, NewtonResult};
pub use numeric::{mlv_numeric, Accel, MlvKind, NumericResult};
pub use sequence::{Sequence, Transform};
pub use series::{landen_check, mpl_series, LandenReport, MplSeries};
pub use truncated::{poly_values, word_values, TruncKind, TruncVariant};

/// Scalars that truncated sums can be evaluated in.
pub trait SeqScalar: Clone + Debug + Num + std::ops::Neg<Output = Self> + Send + Sync + 'static {
    /// Value of a label (`None` when the label is not representable, e.g. a
    /// primitive root of unity in exact mode).
    fn from_label(s: &Label) -> Option<Self>;
    /// Embedding of a rational.
    fn from_q(x: &Q) -> Self;
    /// Embedding of a machine integer.
    fn from_i64(n: i64) -> Self;
    /// Modulus as a float (for error proxies and reporting).
    fn abs_f64(&self) -> f64;
    /// Floating-point value.
    fn to_c64(&self) -> Complex64;
    /// Whether values of this type are exact.
    const EXACT: bool;

    /// `1 / n^k`.
    fn inv_pow(n: u64, k: usize) -> Self {
        let b = Self::from_i64(n as i64);
        let mut d = Self::one();
        for _ in 0..k {
            d = d * b.clone();
        }
        Self::one() / d
    }

    /// Label value or an error naming the caller.
    fn label_value(s: &Label, op: &'static str) -> Result<Self> {
        Self::from_label(s).ok_or(Error::CyclicLabel(op))
    }
}

impl SeqScalar for CRat {
    fn from_label(s: &Label) -> Option<Self> {
        s.to_crat()
    }
    fn from_q(x: &Q) -> Self {
        CRat::new(x.clone(), num_traits::Zero::zero())
    }
    fn from_i64(n: i64) -> Self {
        Self::from_q(&Q::from_integer(n.into()))
    }
    fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
    const EXACT: bool = true;
}

impl SeqScalar for Complex64 {
    fn from_label(s: &Label) -> Option<Self> {
        Some(s.to_c64())
    }
    fn from_q(x: &Q) -> Self {
        Complex64::new(x.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn abs_f64(&self) -> f64 {
        self.norm()
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn inv_pow(n: u64, k: usize) -> Self {
        Complex64::new((n as f64).powi(-(k as i32)), 0.0)
    }
    const EXACT: bool = false;
}
