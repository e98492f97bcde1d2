use std::cmp::Ordering;

use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::real::{self, Real};

/// `ln N - 2^(-2^(k+9)) ln ln ln N`, the logarithm of the density
/// threshold `N (ln ln N)^(-2^(-2^(k+9)))`.
///
/// The subtracted term is far below any fixed working precision, so it is
/// kept apart as `ln ln ln N` and the dyadic exponent `2^(k+9)`; ordering
/// and the deficit are computed from those exactly.
#[derive(Clone, Debug)]
pub struct GowersThreshold {
    k: u32,
    n: u64,
    ln_n: Real,
    lnlnln_n: Real,
}

const MAX_K: u32 = 50;

pub fn gowers_threshold(k: u32, n: u64) -> Result<GowersThreshold> {
    if k == 0 || k > MAX_K {
        return Err(Error::BadParams(format!(
            "k must lie in 1..={MAX_K} (got {k})"
        )));
    }
    let ln_n = real::ln(&real::from_u64(n.max(1)));
    let lnln_n = if real::is_positive(&ln_n) {
        real::ln(&ln_n)
    } else {
        Real::ZERO
    };
    if lnln_n <= real::from_u64(1) {
        return Err(Error::Domain(format!(
            "need N > e^e so that ln ln N > 1 (got N = {n})"
        )));
    }
    Ok(GowersThreshold {
        k,
        n,
        ln_n,
        lnlnln_n: real::ln(&lnln_n),
    })
}

impl GowersThreshold {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn ln_n(&self) -> &Real {
        &self.ln_n
    }

    pub fn lnlnln_n(&self) -> &Real {
        &self.lnlnln_n
    }

    /// `E = 2^(k+9)`; the deficit is `ln ln ln N * 2^(-E)`.
    pub fn exponent(&self) -> u64 {
        1u64 << (self.k + 9)
    }

    /// `ln N - threshold`, scaled exactly by the binary exponent.
    pub fn deficit(&self) -> Real {
        let scale = Real::from_parts(IBig::ONE, -(self.exponent() as isize));
        &self.lnlnln_n * scale
    }

    /// `log2` of the deficit.
    pub fn deficit_log2(&self) -> Real {
        real::ln(&self.lnlnln_n) / real::ln(&real::from_u64(2)) - real::from_u64(self.exponent())
    }

    /// The threshold rounded to working precision. The deficit is below
    /// the rounding error, so this usually equals `ln N`; use the ordering
    /// or [`Self::deficit`] for exact comparisons.
    pub fn ln_threshold(&self) -> Real {
        &self.ln_n - self.deficit()
    }

    pub fn to_f64(&self) -> f64 {
        real::to_f64(&self.ln_n)
    }
}

impl PartialEq for GowersThreshold {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for GowersThreshold {}

impl PartialOrd for GowersThreshold {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GowersThreshold {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = &self.ln_n - &other.ln_n;
        // deficits are at most 2^-1000, rounding error about 2^-185
        let gap = Real::from_parts(IBig::ONE, -100);
        if real::abs(&diff) > gap {
            return diff.partial_cmp(&Real::ZERO).unwrap();
        }
        // equal N: the smaller deficit is the larger threshold
        other
            .deficit_log2()
            .partial_cmp(&self.deficit_log2())
            .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dashu_float::round::mode::HalfEven;
    use dashu_float::FBig;

    type Wide = FBig<HalfEven, 2>;

    #[test]
    fn example_at_a_million() {
        let g = gowers_threshold(3, 1_000_000).unwrap();
        assert_eq!(g.exponent(), 4096);
        // independent evaluation at 256 bits
        let n = Wide::from(1_000_000u32).with_precision(256).value();
        let lll = n.ln().ln().ln();
        let want = lll * Wide::from_parts(IBig::ONE, -4096);
        let got = g.deficit();
        let rel = real::abs(&((got.clone() - want.clone()) / want));
        assert!(rel < Real::from_parts(IBig::ONE, -180));
        assert!(real::is_positive(&got));
    }

    #[test]
    fn orderings() {
        let g = |k, n| gowers_threshold(k, n).unwrap();
        assert!(g(3, 1000) < g(3, 1001));
        assert!(g(1, 1 << 40) < g(2, 1 << 40));
        assert_eq!(g(2, 99), g(2, 99));
        assert!(g(10, 16) < g(1, 17));
    }

    #[test]
    fn domain() {
        assert!(matches!(gowers_threshold(1, 10), Err(Error::Domain(_))));
        assert!(matches!(gowers_threshold(1, 15), Err(Error::Domain(_))));
        assert!(gowers_threshold(1, 16).is_ok());
        assert!(matches!(gowers_threshold(0, 100), Err(Error::BadParams(_))));
    }
}
