//! Colorings that are constant on the pieces of geometric bands
//! `[l^m, l^(m+1))`, `m >= 1`, cut at rational multiples of `l^m`.

use dashu_int::ops::{SquareRoot, UnsignedAbs};
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

use super::breaks::BreakTable;
use crate::descriptor::{format_ratio, Descriptor};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalScheme {
    /// Band ratio `l > 1`.
    pub base: RBig,
    /// Increasing cut points strictly between 1 and `base`.
    pub cuts: Vec<RBig>,
    /// One color per piece: `colors[0]` on `[l^m, cuts[0] l^m)`, and so on.
    pub colors: Vec<u8>,
    /// Color below `l` and wherever no band applies.
    pub fallback: u8,
}

impl IntervalScheme {
    fn validate(&self) -> Result<()> {
        let one = RBig::ONE;
        if self.base <= one {
            return Err(Error::BadParams("band ratio must exceed 1".into()));
        }
        if self.colors.len() != self.cuts.len() + 1 {
            return Err(Error::BadParams("need one color per piece".into()));
        }
        let mut prev = &one;
        for c in &self.cuts {
            if c <= prev {
                return Err(Error::BadParams("cut points must increase from 1".into()));
            }
            prev = c;
        }
        if *prev >= self.base {
            return Err(Error::BadParams(
                "cut points must lie below the band ratio".into(),
            ));
        }
        Ok(())
    }

    /// Exact run table up to `u64::MAX`. Every boundary `r` is placed at
    /// `ceil(r)`, since an integer `z` satisfies `z >= r` iff `z >= ceil(r)`.
    pub(crate) fn table(&self) -> Result<BreakTable> {
        self.validate()?;
        let max = IBig::from(u64::MAX);
        let mut t = BreakTable::new(self.fallback);
        let mut lm = self.base.clone();
        'bands: loop {
            let mut bounds = vec![(lm.clone(), self.colors[0])];
            for (cut, &color) in self.cuts.iter().zip(&self.colors[1..]) {
                bounds.push((cut * &lm, color));
            }
            for (b, color) in bounds {
                let start = b.ceil();
                if start > max {
                    break 'bands;
                }
                t.push(u64::try_from(start).unwrap(), color);
            }
            lm = &lm * &self.base;
        }
        Ok(t)
    }
}

fn check_pair(a: u64, b: u64) -> Result<()> {
    if a == 0 || a >= b {
        return Err(Error::BadPair { a, b });
    }
    Ok(())
}

fn ratio(p: u64, q: u64) -> RBig {
    RBig::from_parts(IBig::from(p), UBig::from(q))
}

fn midpoint(x: &RBig, y: &RBig) -> RBig {
    (x + y) / RBig::from(2u8)
}

/// Rational `s` with `s^2 < x` and `s > lower`, using the coarsest dyadic
/// grid that separates `lower` from `sqrt(x)`.
fn sqrt_below(x: &RBig, lower: &RBig) -> RBig {
    for k in 1..=128usize {
        let scale = UBig::ONE << (2 * k);
        let scaled = (x * RBig::from(scale)).floor();
        let root = scaled.unsigned_abs().sqrt();
        let mut s = RBig::from_parts(IBig::from(root), UBig::ONE << k);
        if &s * &s >= *x {
            s -= RBig::from_parts(IBig::ONE, UBig::ONE << k);
        }
        if s > *lower {
            return s;
        }
    }
    lower.clone()
}

/// Two colors on `[(b/a)^(2m), (b/a)^(2m+1))` and
/// `[(b/a)^(2m+1), (b/a)^(2m+2))`, `m >= 1`.
pub fn power_scheme(a: u64, b: u64) -> Result<IntervalScheme> {
    check_pair(a, b)?;
    let r = ratio(b, a);
    Ok(IntervalScheme {
        base: &r * &r,
        cuts: vec![r],
        colors: vec![1, 2],
        fallback: 1,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Geo3Params {
    pub l: Option<RBig>,
    pub x: Option<RBig>,
    pub y: Option<RBig>,
}

/// Resolved `(l, x, y)` for the three-color scheme, filling defaults with
/// midpoints of the admissible ranges.
pub fn geo3_resolve(a: u64, b: u64, params: &Geo3Params) -> Result<(RBig, RBig, RBig)> {
    check_pair(a, b)?;
    let ba = ratio(b, a);
    let ab = ratio(a, b);
    let b2 = &ba * &ba;
    let b3 = &b2 * &ba;
    let l = params.l.clone().unwrap_or_else(|| midpoint(&b2, &b3));
    if l < b2 || l >= b3 {
        return Err(Error::BadParams(format!(
            "l = {} must lie in [{}, {})",
            format_ratio(&l),
            format_ratio(&b2),
            format_ratio(&b3)
        )));
    }
    let x_lo = &l * &ab;
    let x = params.x.clone().unwrap_or_else(|| midpoint(&x_lo, &b2));
    if x <= x_lo || x >= b2 {
        return Err(Error::BadParams(format!(
            "x = {} must lie in ({}, {})",
            format_ratio(&x),
            format_ratio(&x_lo),
            format_ratio(&b2)
        )));
    }
    let y_lo = &x * &ab;
    let y = match &params.y {
        Some(y) => y.clone(),
        None => midpoint(&y_lo, &sqrt_below(&x, &y_lo)),
    };
    if y <= y_lo || &y * &y >= x {
        return Err(Error::BadParams(format!(
            "y = {} must lie in ({}, sqrt({}))",
            format_ratio(&y),
            format_ratio(&y_lo),
            format_ratio(&x)
        )));
    }
    Ok((l, x, y))
}

pub fn geo3_scheme(l: RBig, x: RBig, y: RBig) -> IntervalScheme {
    IntervalScheme {
        base: l,
        cuts: vec![y, x],
        colors: vec![1, 2, 3],
        fallback: 1,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TripleParams {
    pub x: Option<RBig>,
    pub l: Option<RBig>,
}

pub fn triple_resolve(a: u64, b: u64, c: u64, params: &TripleParams) -> Result<(RBig, RBig)> {
    if a == 0 || a >= b || b >= c {
        return Err(Error::BadParams(format!(
            "need 0 < a < b < c (got {a}, {b}, {c})"
        )));
    }
    let cb = ratio(c, b);
    let ba = ratio(b, a);
    let ca = ratio(c, a);
    let y = if cb > ba { cb } else { ba };
    if y >= ca {
        return Err(Error::BadParams(format!(
            "max(c/b, b/a) = {} is not below c/a = {}; no x exists",
            format_ratio(&y),
            format_ratio(&ca)
        )));
    }
    let x = params.x.clone().unwrap_or_else(|| midpoint(&y, &ca));
    if x <= y || x >= ca {
        return Err(Error::BadParams(format!(
            "x = {} must lie in ({}, {})",
            format_ratio(&x),
            format_ratio(&y),
            format_ratio(&ca)
        )));
    }
    let l_lo = &x * &y;
    let l_hi = &x * &ca;
    let l = params.l.clone().unwrap_or_else(|| midpoint(&l_lo, &l_hi));
    if l <= l_lo || l >= l_hi {
        return Err(Error::BadParams(format!(
            "l = {} must lie in ({}, {})",
            format_ratio(&l),
            format_ratio(&l_lo),
            format_ratio(&l_hi)
        )));
    }
    Ok((x, l))
}

pub fn triple_scheme(x: RBig, l: RBig) -> IntervalScheme {
    IntervalScheme {
        base: l,
        cuts: vec![x],
        colors: vec![1, 2],
        fallback: 1,
    }
}

pub(crate) fn descriptor_geo3(a: u64, b: u64, l: &RBig, x: &RBig, y: &RBig) -> Descriptor {
    Descriptor::new("geo3")
        .with("a", a)
        .with("b", b)
        .with("l", format_ratio(l))
        .with("x", format_ratio(x))
        .with("y", format_ratio(y))
}

pub(crate) fn descriptor_triple(a: u64, b: u64, c: u64, x: &RBig, l: &RBig) -> Descriptor {
    Descriptor::new("triple")
        .with("a", a)
        .with("b", b)
        .with("c", c)
        .with("x", format_ratio(x))
        .with("l", format_ratio(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::parse_ratio;

    fn r(s: &str) -> RBig {
        parse_ratio(s).unwrap()
    }

    #[test]
    fn power_bands() {
        let t = power_scheme(1, 2).unwrap().table().unwrap();
        assert_eq!(t.color(3), 1);
        assert_eq!(t.color(5), 1);
        assert_eq!(t.color(9), 2);
        for z in 8..16 {
            assert_eq!(t.color(z), 2);
        }
        assert_eq!(t.color(16), 1);
        assert_eq!(t.color(1 << 62), 1);
        assert_eq!(t.color((1 << 63) + 5), 2);
    }

    #[test]
    fn power_rejects_bad_pair() {
        assert_eq!(power_scheme(2, 2), Err(Error::BadPair { a: 2, b: 2 }));
        assert_eq!(power_scheme(0, 2), Err(Error::BadPair { a: 0, b: 2 }));
    }

    #[test]
    fn geo3_given_params() {
        let p = Geo3Params {
            l: Some(r("4")),
            x: Some(r("3")),
            y: Some(r("8/5")),
        };
        let (l, x, y) = geo3_resolve(1, 2, &p).unwrap();
        let t = geo3_scheme(l, x, y).table().unwrap();
        assert_eq!(t.color(7), 2);
        assert_eq!(t.color(13), 3);
        assert_eq!(t.color(2), 1);
        assert_eq!(t.color(6), 1);
        assert_eq!(t.color(12), 3);
    }

    #[test]
    fn geo3_defaults() {
        let (l, x, y) = geo3_resolve(1, 2, &Geo3Params::default()).unwrap();
        assert_eq!(l, r("6"));
        assert_eq!(x, r("7/2"));
        assert_eq!(y, r("57/32"));
        assert!(&y * &y < x);
        let (l, x, y) = geo3_resolve(2, 3, &Geo3Params::default()).unwrap();
        assert!(RBig::ONE < y && y < x && x < l);
    }

    #[test]
    fn geo3_rejects() {
        let bad_y = Geo3Params {
            l: Some(r("4")),
            x: Some(r("3")),
            y: Some(r("7/4")),
        };
        assert!(matches!(
            geo3_resolve(1, 2, &bad_y),
            Err(Error::BadParams(_))
        ));
        let bad_l = Geo3Params {
            l: Some(r("8")),
            ..Default::default()
        };
        assert!(matches!(
            geo3_resolve(1, 2, &bad_l),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn triple_defaults_and_examples() {
        let (x, l) = triple_resolve(1, 2, 3, &TripleParams::default()).unwrap();
        assert_eq!((x.clone(), l.clone()), (r("5/2"), r("25/4")));
        let t = triple_scheme(x, l).table().unwrap();
        assert_eq!(t.color(10), 1);
        assert_eq!(t.color(20), 2);
        assert_eq!(t.color(3), 1);
        assert_eq!(t.color(6), 1);
        assert_eq!(t.color(7), 1);
        assert_eq!(t.color(15), 1);
        assert_eq!(t.color(16), 2);
        assert_eq!(t.color(39), 2);
        assert_eq!(t.color(40), 1);
    }

    #[test]
    fn triple_rejects_out_of_range_params() {
        // c/a = (c/b)(b/a) exceeds max(c/b, b/a), so defaults always exist
        for (a, b, c) in [(1, 3, 9), (2, 3, 4), (5, 6, 7)] {
            assert!(triple_resolve(a, b, c, &TripleParams::default()).is_ok());
        }
        let x = |v: u64| TripleParams {
            x: Some(RBig::from(v)),
            l: None,
        };
        assert!(matches!(
            triple_resolve(1, 3, 9, &x(3)),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            triple_resolve(1, 3, 9, &x(9)),
            Err(Error::BadParams(_))
        ));
        assert!(triple_resolve(1, 3, 9, &x(4)).is_ok());
    }
}
