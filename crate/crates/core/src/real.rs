//! Fixed-precision binary floating point used wherever the colorings need
//! real analysis (inverse polynomials, logarithms). Every value is carried
//! with a 192-bit significand.

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::ops::{BitTest, UnsignedAbs};
use dashu_int::IBig;
use dashu_ratio::RBig;

pub type Real = FBig<HalfEven, 2>;

pub const PRECISION: usize = 192;

pub fn from_int(i: &IBig) -> Real {
    let bits = i.unsigned_abs().bit_len();
    Real::from(i.clone())
        .with_precision(PRECISION.max(bits))
        .value()
}

pub fn from_u64(v: u64) -> Real {
    from_int(&IBig::from(v))
}

pub fn from_ratio(r: &RBig) -> Real {
    from_int(r.numerator()) / from_int(&IBig::from(r.denominator().clone()))
}

pub fn from_f64(v: f64) -> Real {
    Real::try_from(v)
        .expect("finite f64")
        .with_precision(PRECISION)
        .value()
}

pub fn ln(x: &Real) -> Real {
    x.ln()
}

pub fn floor(x: &Real) -> IBig {
    x.floor().to_int().value()
}

pub fn ceil(x: &Real) -> IBig {
    x.ceil().to_int().value()
}

/// Largest integer strictly below `x`.
pub fn floor_strict(x: &Real) -> IBig {
    ceil(x) - IBig::ONE
}

pub fn to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

pub fn is_positive(x: &Real) -> bool {
    *x > Real::ZERO
}

pub fn abs(x: &Real) -> Real {
    if *x < Real::ZERO {
        -x.clone()
    } else {
        x.clone()
    }
}

/// Saturating conversion of a nonnegative integer to u128.
pub(crate) fn ibig_to_u128_saturating(i: &IBig) -> u128 {
    if *i < IBig::ZERO {
        0
    } else {
        u128::try_from(i.clone()).unwrap_or(u128::MAX)
    }
}
