use dashu_int::IBig;

use super::psi::{psi_profile, GrowthCase};
use super::zpoly::ZPoly;
use super::IntPolynomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BandPart {
    /// Both `Q(n) - P(n+l-1)` and `P(n+l) - Q(n)` are unbounded.
    PartI,
    /// `P(n+l) - Q(n)` is constant; `k1` is twice that constant.
    PartII { k1: IBig },
    /// `Q(n) - P(n+l-1)` is constant; `k2` is twice that constant.
    PartIII { k2: IBig },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandOffset {
    pub l: u64,
    pub n0: u64,
    pub part: BandPart,
}

/// `P(n + s)` as a polynomial in `n`.
fn shifted(p: &IntPolynomial, s: u64) -> ZPoly {
    p.to_zpoly().shift(&IBig::from(s))
}

/// Lower difference `Q(n) - P(n+l-1)`.
pub(crate) fn lower_gap(p: &IntPolynomial, q: &IntPolynomial, l: u64) -> ZPoly {
    q.to_zpoly().sub(&shifted(p, l - 1))
}

/// Upper difference `P(n+l) - Q(n)`.
pub(crate) fn upper_gap(p: &IntPolynomial, q: &IntPolynomial, l: u64) -> ZPoly {
    shifted(p, l).sub(&q.to_zpoly())
}

fn eventually_nonnegative(z: &ZPoly) -> bool {
    z.is_zero() || z.lead() > IBig::ZERO
}

/// Offset `l` and start `N0` such that `P(n+l-1) <= Q(n) <= P(n+l)` for
/// all `n >= N0`, with the part of the construction that applies.
///
/// `l` is the least value for which the lower gap is eventually
/// nonnegative and the upper gap eventually positive, so that every large
/// `Q(n)` lies in the half-open band `[P(n+l-1), P(n+l))`.
pub fn band_offset(p: &IntPolynomial, q: &IntPolynomial) -> Result<BandOffset> {
    let profile = psi_profile(p, q)?;
    if profile.case != GrowthCase::GrowthCaseII {
        return Err(Error::NotCaseII);
    }
    let mut l = 1u64;
    let (lower, upper) = loop {
        let lower = lower_gap(p, q, l);
        if !eventually_nonnegative(&lower) {
            // lower(1) >= 0 by dominance, and lower(l) = -upper(l-1) when
            // the loop advances
            unreachable!("no band offset exists");
        }
        let upper = upper_gap(p, q, l);
        if !upper.is_zero() && upper.lead() > IBig::ZERO {
            break (lower, upper);
        }
        l += 1;
    };

    let part = if let Some(c) = upper.as_constant() {
        BandPart::PartII {
            k1: c * IBig::from(2u8),
        }
    } else if let Some(c) = lower.as_constant() {
        BandPart::PartIII {
            k2: c * IBig::from(2u8),
        }
    } else {
        BandPart::PartI
    };

    let one = IBig::ONE;
    let zp = p.to_zpoly();
    let zq = q.to_zpoly();
    let conditions = [
        (zp.sub_constant(&IBig::from(2u8)), false),
        (zp.shift(&one).sub(&zp), true),
        (zq.shift(&one).sub(&zq), true),
        (lower.clone(), false),
        (upper.clone(), false),
    ];
    let mut n0 = one.clone();
    for (z, strict) in &conditions {
        let from = z.holds_from(*strict, &one).ok_or(Error::NotCaseII)?;
        if from > n0 {
            n0 = from;
        }
    }
    let n0 = u64::try_from(n0).map_err(|_| Error::Overflow("N0 exceeds u64".into()))?;

    for n in n0..=n0 + 1000 {
        let n = IBig::from(n);
        let qn = q.eval(&n);
        assert!(p.eval(&(&n + IBig::from(l - 1))) <= qn);
        assert!(qn <= p.eval(&(&n + IBig::from(l))));
        assert!(p.eval(&(&n + &one)) > p.eval(&n));
        assert!(q.eval(&(&n + &one)) > qn);
    }

    Ok(BandOffset { l, n0, part })
}
