//! Finite-window versions of return sets, gap statistics, the two-word
//! dichotomy test and sliding-window density for words over `1..=k`.

use serde::Serialize;

use crate::coloring::{Coloring, RunLength};
use crate::error::{Error, Result};

/// Symbols `x(1), ..., x(N)` over the palette `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    palette: u8,
    symbols: Vec<u8>,
}

impl Word {
    pub fn new(palette: u8, symbols: Vec<u8>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyPattern);
        }
        if let Some(s) = symbols.iter().find(|&&s| s == 0 || s > palette) {
            return Err(Error::BadParams(format!(
                "symbol {s} outside palette {palette}"
            )));
        }
        Ok(Word { palette, symbols })
    }

    pub fn from_coloring(c: &Coloring, n: usize) -> Result<Self> {
        Word::new(c.palette(), c.colors(1, n))
    }

    pub fn from_run_length(rl: &RunLength) -> Result<Self> {
        Word::new(rl.palette, rl.decode())
    }

    pub fn to_run_length(&self) -> RunLength {
        RunLength::encode(self.palette, &self.symbols)
    }

    pub fn palette(&self) -> u8 {
        self.palette
    }

    pub fn len(&self) -> u64 {
        self.symbols.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// `x(i)` for `1 <= i <= N`.
    pub fn at(&self, i: u64) -> u8 {
        self.symbols[(i - 1) as usize]
    }

    fn cover(&self, needed: u64) -> Result<()> {
        if needed > self.len() {
            return Err(Error::WindowOverrun {
                needed,
                len: self.len(),
            });
        }
        Ok(())
    }
}

fn check_pair(a: u64, b: u64) -> Result<()> {
    if a == 0 || a >= b {
        return Err(Error::BadPair { a, b });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReturnSet {
    pub a: u64,
    pub b: u64,
    pub h: u64,
    pub horizon: u64,
    pub elements: Vec<u64>,
}

/// `{n <= M : x(h + a n) = x(h + b n)}`.
pub fn return_set(x: &Word, a: u64, b: u64, h: u64, horizon: u64) -> Result<ReturnSet> {
    check_pair(a, b)?;
    let needed = b
        .checked_mul(horizon)
        .and_then(|v| v.checked_add(h))
        .ok_or_else(|| Error::Overflow("h + bM exceeds u64".into()))?;
    x.cover(needed)?;
    let elements = (1..=horizon)
        .filter(|&n| x.at(h + a * n) == x.at(h + b * n))
        .collect();
    Ok(ReturnSet {
        a,
        b,
        h,
        horizon,
        elements,
    })
}

/// Largest difference between consecutive elements of `S ∪ {0, M + 1}`
/// (elements of `S` above `M` are ignored). `M + 1` when `S ∩ [1, M]` is
/// empty.
pub fn max_gap(set: &[u64], horizon: u64) -> u64 {
    let mut prev = 0;
    let mut gap = 0;
    for &s in set.iter().filter(|&&s| s >= 1 && s <= horizon) {
        gap = gap.max(s - prev);
        prev = s;
    }
    gap.max(horizon + 1 - prev)
}

/// Smallest `d <= D` with `y(d) != z(d)`, `y(d) = y(d + a(b-a)k)` and
/// `z(d) = z(d + b(b-a)k)` for every `1 <= k <= K`.
pub fn dichotomy_detect(
    y: &Word,
    z: &Word,
    a: u64,
    b: u64,
    d_max: u64,
    k_max: u64,
) -> Result<Option<u64>> {
    check_pair(a, b)?;
    let step_y = a * (b - a);
    let step_z = b * (b - a);
    let needed = step_z
        .checked_mul(k_max)
        .and_then(|v| v.checked_add(d_max))
        .ok_or_else(|| Error::Overflow("D + b(b-a)K exceeds u64".into()))?;
    y.cover(needed)?;
    z.cover(needed)?;
    Ok((1..=d_max).find(|&d| {
        let (yd, zd) = (y.at(d), z.at(d));
        yd != zd
            && (1..=k_max).all(|k| y.at(d + step_y * k) == yd)
            && (1..=k_max).all(|k| z.at(d + step_z * k) == zd)
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DensityPoint {
    pub window: u64,
    pub density: f64,
}

/// For each width `W`, the largest `|S ∩ (t, t + W]| / W` over
/// `0 <= t <= M - W`.
pub fn density_profile(set: &[u64], horizon: u64, widths: &[u64]) -> Result<Vec<DensityPoint>> {
    let m = horizon as usize;
    let mut prefix = vec![0u64; m + 1];
    let mut member = vec![false; m + 1];
    for &s in set {
        if s >= 1 && s <= horizon {
            member[s as usize] = true;
        }
    }
    for i in 1..=m {
        prefix[i] = prefix[i - 1] + member[i] as u64;
    }
    widths
        .iter()
        .map(|&w| {
            if w == 0 || w > horizon {
                return Err(Error::BadParams(format!(
                    "window {w} must lie in 1..={horizon}"
                )));
            }
            let w_ = w as usize;
            let best = (0..=m - w_)
                .map(|t| prefix[t + w_] - prefix[t])
                .max()
                .unwrap_or(0);
            Ok(DensityPoint {
                window: w,
                density: best as f64 / w as f64,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{custom_coloring, CustomSpec};
    use proptest::prelude::*;

    fn periodic(p: &[u8], n: usize) -> Word {
        Word::from_coloring(
            &custom_coloring(CustomSpec::Periodic(p.to_vec())).unwrap(),
            n,
        )
        .unwrap()
    }

    #[test]
    fn return_set_examples() {
        // x(n) = 1 for even n, 2 for odd n
        let parity = periodic(&[2, 1], 100);
        assert_eq!(
            return_set(&parity, 1, 3, 1, 20).unwrap().elements,
            (1..=20).collect::<Vec<_>>()
        );
        assert_eq!(
            return_set(&parity, 1, 2, 1, 20).unwrap().elements,
            (2..=20).step_by(2).collect::<Vec<_>>()
        );
        let one = periodic(&[1], 100);
        assert_eq!(return_set(&one, 2, 5, 0, 19).unwrap().elements.len(), 19);
        assert_eq!(
            return_set(&one, 1, 3, 1, 50).unwrap_err(),
            Error::WindowOverrun {
                needed: 151,
                len: 100
            }
        );
        assert!(matches!(
            return_set(&one, 2, 2, 0, 5),
            Err(Error::BadPair { .. })
        ));
    }

    #[test]
    fn max_gap_examples() {
        let evens: Vec<u64> = (2..=20).step_by(2).collect();
        assert_eq!(max_gap(&evens, 20), 2);
        assert_eq!(max_gap(&[], 10), 11);
        assert_eq!(max_gap(&[1, 10], 10), 9);
    }

    #[test]
    fn dichotomy_examples() {
        let y = periodic(&[1], 100);
        let z = periodic(&[2], 100);
        assert_eq!(dichotomy_detect(&y, &z, 1, 2, 5, 10).unwrap(), Some(1));
        assert_eq!(dichotomy_detect(&y, &y, 1, 2, 5, 10).unwrap(), None);
        // y = 1,1,2 repeated; z = 2: a(b-a) = 1 so y must be constant on
        // d, d+1, ..., d+K, which a period-3 word never is for K >= 2
        let y3 = periodic(&[1, 1, 2], 100);
        assert_eq!(dichotomy_detect(&y3, &z, 1, 2, 10, 5).unwrap(), None);
        // with a = 3, b = 6 the steps are 9 and 18, both multiples of 3
        assert_eq!(dichotomy_detect(&y3, &z, 3, 6, 10, 5).unwrap(), Some(1));
        assert!(matches!(
            dichotomy_detect(&y, &z, 1, 2, 90, 10),
            Err(Error::WindowOverrun { .. })
        ));
    }

    #[test]
    fn density_examples() {
        let evens: Vec<u64> = (2..=100).step_by(2).collect();
        assert_eq!(density_profile(&evens, 100, &[10]).unwrap()[0].density, 0.5);
        let block: Vec<u64> = (1..=50).collect();
        assert_eq!(density_profile(&block, 100, &[10]).unwrap()[0].density, 1.0);
        let squares: Vec<u64> = (1..=10).map(|i| i * i).collect();
        // (0, 20] holds 1, 4, 9, 16
        assert_eq!(
            density_profile(&squares, 100, &[20]).unwrap()[0].density,
            0.2
        );
        assert!(density_profile(&squares, 100, &[101]).is_err());
    }

    #[test]
    fn eventually_constant_progressions_are_detected() {
        // a = 2, b = 4: steps 4 and 8. y is 1 on 3 + 4N and z is 2 on
        // 3 + 8N; elsewhere both alternate in blocks so no other class is
        // constant along its progression
        let n = 200u64;
        let y: Vec<u8> = (1..=n)
            .map(|i| {
                if i % 4 == 3 {
                    1
                } else {
                    1 + ((i / 4) % 2) as u8
                }
            })
            .collect();
        let z: Vec<u8> = (1..=n)
            .map(|i| {
                if i % 8 == 3 {
                    2
                } else {
                    1 + ((i / 8) % 2) as u8
                }
            })
            .collect();
        let (y, z) = (Word::new(2, y).unwrap(), Word::new(2, z).unwrap());
        let d = dichotomy_detect(&y, &z, 2, 4, 20, 10).unwrap().unwrap();
        assert_eq!(d, 3);
    }

    proptest! {
        #[test]
        fn detected_index_satisfies_predicate(
            ys in prop::collection::vec(1u8..=2, 120),
            zs in prop::collection::vec(1u8..=2, 120),
            a in 1u64..3, extra in 1u64..3, k in 1u64..4,
        ) {
            let b = a + extra;
            let (y, z) = (Word::new(2, ys.clone()).unwrap(), Word::new(2, zs.clone()).unwrap());
            let d_max = 10;
            if let Some(d) = dichotomy_detect(&y, &z, a, b, d_max, k).unwrap() {
                let at = |w: &[u8], i: u64| w[(i - 1) as usize];
                prop_assert!(at(&ys, d) != at(&zs, d));
                for j in 1..=k {
                    prop_assert_eq!(at(&ys, d + a * (b - a) * j), at(&ys, d));
                    prop_assert_eq!(at(&zs, d + b * (b - a) * j), at(&zs, d));
                }
            }
        }

        #[test]
        fn densities_are_fractions(set in prop::collection::btree_set(1u64..100, 0..60)) {
            let v: Vec<u64> = set.into_iter().collect();
            for p in density_profile(&v, 100, &[1, 5, 10, 50, 100]).unwrap() {
                prop_assert!((0.0..=1.0).contains(&p.density));
            }
        }
    }
}
