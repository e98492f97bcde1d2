//! Band and block colorings for pairs with equal degree and equal leading
//! coefficient.

use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::poly::{band_offset, BandOffset, BandPart, IntPolynomial};

#[derive(Clone, Debug)]
pub struct Case2Coloring {
    p: IntPolynomial,
    q: IntPolynomial,
    band: BandOffset,
}

impl Case2Coloring {
    pub fn new(p: &IntPolynomial, q: &IntPolynomial) -> Result<Self> {
        let band = band_offset(p, q)?;
        Ok(Case2Coloring {
            p: p.clone(),
            q: q.clone(),
            band,
        })
    }

    pub fn band(&self) -> &BandOffset {
        &self.band
    }

    pub fn color(&self, z: u64) -> u8 {
        let z = z as u128;
        let n0 = self.band.n0 as u128;
        let l = self.band.l as u128;
        match &self.band.part {
            BandPart::PartI => {
                // bands [P(n+l-1), Q(n)) for n >= N0 are disjoint and ordered,
                // and band n sits inside [P(n+l-1), P(n+l))
                match self.p.floor_inverse_u128(z, n0 + l - 1) {
                    None => 1,
                    Some(j) => {
                        let n = j + 1 - l;
                        match self.q.eval_u128(n) {
                            Some(qn) if z < qn => 2,
                            _ => 1,
                        }
                    }
                }
            }
            // colors 0 and 1 of the construction become 1 and 2
            BandPart::PartII { .. } => match self.q.floor_inverse_u128(z, n0) {
                None => 2,
                Some(m) => block_color((m - n0) / l),
            },
            BandPart::PartIII { .. } => match self.p.floor_inverse_u128(z, n0) {
                None => 2,
                Some(m) => block_color((m - n0) / (l - 1)),
            },
        }
    }

    /// Index beyond which `P`-points shifted by `n` are colored 2 and
    /// `Q`-points colored 1 under the Part I coloring: the smallest
    /// `M0 > N0 + 2l` such that every `m > M0` has
    /// `n + Q(m) < P(m+l)` and `n + P(m) < Q(m-l+1)`.
    pub fn part_one_escape(&self, n: u64) -> Result<u64> {
        if self.band.part != BandPart::PartI {
            return Err(Error::BadParams(
                "escape index applies to Part I only".into(),
            ));
        }
        let l = self.band.l;
        let shift = IBig::from(n);
        let zp = self.p.to_zpoly();
        let zq = self.q.to_zpoly();
        // P(m+l) - Q(m) - n > 0
        let upper = zp.shift(&IBig::from(l)).sub(&zq).sub_constant(&shift);
        // Q(m-l+1) - P(m) - n > 0
        let lower = zq
            .shift(&(IBig::ONE - IBig::from(l)))
            .sub(&zp)
            .sub_constant(&shift);
        let mut m0 = IBig::from(self.band.n0 + 2 * l + 1);
        for z in [upper, lower] {
            let from = z
                .holds_from(true, &IBig::ONE)
                .ok_or_else(|| Error::BadParams("gap does not grow".into()))?;
            let candidate = from - IBig::ONE;
            if candidate > m0 {
                m0 = candidate;
            }
        }
        u64::try_from(m0).map_err(|_| Error::Overflow("escape index exceeds u64".into()))
    }
}

fn block_color(k: u128) -> u8 {
    if k % 2 == 0 {
        1
    } else {
        2
    }
}
