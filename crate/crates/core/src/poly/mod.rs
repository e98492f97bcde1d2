//! Integer polynomials with zero constant term and positive leading
//! coefficient, plus the real-analytic map `psi = Q o P^-1`.

mod band;
mod psi;
pub(crate) mod zpoly;

use std::fmt;
use std::str::FromStr;

use dashu_int::ops::UnsignedAbs;
use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::real::{self, Real};
use zpoly::ZPoly;

pub use band::{band_offset, BandOffset, BandPart};
pub use psi::{psi_eval, psi_profile, GrowthCase, Psi, PsiProfile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<IBig>,
    small: Option<Vec<i128>>,
}

impl IntPolynomial {
    /// Builds from coefficients indexed by exponent. Trailing zeros are
    /// trimmed; the constant term must be zero and the leading coefficient
    /// positive.
    pub fn new(mut coeffs: Vec<IBig>) -> Result<Self> {
        while coeffs.last().is_some_and(|c| *c == IBig::ZERO) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::InvalidPolynomial("degree must be at least 1".into()));
        }
        if coeffs[0] != IBig::ZERO {
            return Err(Error::InvalidPolynomial(
                "constant term must be zero".into(),
            ));
        }
        if *coeffs.last().unwrap() < IBig::ZERO {
            return Err(Error::InvalidPolynomial(
                "leading coefficient must be positive".into(),
            ));
        }
        let small = coeffs
            .iter()
            .map(|c| i128::try_from(c.clone()).ok())
            .collect();
        Ok(IntPolynomial { coeffs, small })
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| IBig::from(c)).collect())
    }

    /// `c * n^d`.
    pub fn monomial(c: u64, d: usize) -> Result<Self> {
        let mut coeffs = vec![IBig::ZERO; d + 1];
        coeffs[d] = IBig::from(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[IBig] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &IBig {
        self.coeffs.last().unwrap()
    }

    pub fn eval(&self, n: &IBig) -> IBig {
        let mut acc = IBig::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c;
        }
        acc
    }

    pub fn eval_i128(&self, n: i128) -> Option<i128> {
        if let Some(small) = &self.small {
            let mut acc: i128 = 0;
            let mut ok = true;
            for &c in small.iter().rev() {
                match acc.checked_mul(n).and_then(|v| v.checked_add(c)) {
                    Some(v) => acc = v,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return Some(acc);
            }
        }
        i128::try_from(self.eval(&IBig::from(n))).ok()
    }

    /// Value at `n` if it is a nonnegative integer fitting in u64.
    pub fn eval_u64(&self, n: u64) -> Option<u64> {
        self.eval_i128(n as i128)
            .and_then(|v| u64::try_from(v).ok())
    }

    /// Value at `n` if it is a nonnegative integer fitting in u128.
    pub fn eval_u128(&self, n: u128) -> Option<u128> {
        if let Ok(small) = i128::try_from(n) {
            if let Some(v) = self.eval_i128(small) {
                return u128::try_from(v).ok();
            }
        }
        u128::try_from(self.eval(&IBig::from(n))).ok()
    }

    pub fn eval_real(&self, t: &Real) -> Real {
        let mut acc = real::from_u64(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t + real::from_int(c);
        }
        acc
    }

    pub fn derivative_real(&self, t: &Real) -> Real {
        let mut acc = real::from_u64(0);
        for (i, c) in self.coeffs.iter().enumerate().skip(1).rev() {
            acc = acc * t + real::from_int(&(c * IBig::from(i)));
        }
        acc
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + real::to_f64(&real::from_int(c)))
    }

    pub(crate) fn to_zpoly(&self) -> ZPoly {
        ZPoly::new(self.coeffs.clone())
    }

    /// Smallest integer `m >= 0` from which the polynomial is strictly
    /// increasing on the integers and on the reals.
    pub fn increasing_from(&self) -> u64 {
        let d = self.to_zpoly().derivative();
        // derivative >= 1 on [a, inf) in the Taylor sense
        let a = d
            .sub_constant(&IBig::ONE)
            .taylor_threshold()
            .expect("positive leading coefficient");
        u64::try_from(a).unwrap_or(u64::MAX)
    }

    /// Largest `j >= lo` with `P(j) <= v`, assuming `P` is increasing on
    /// `[lo, inf)`. `None` when `P(lo) > v`.
    pub fn floor_inverse_u128(&self, v: u128, lo: u128) -> Option<u128> {
        let le = |j: u128| self.eval_u128(j).is_some_and(|p| p <= v);
        if !le(lo) {
            return None;
        }
        let mut good = lo;
        let mut step: u128 = 1;
        let mut bad = loop {
            let next = good.saturating_add(step);
            if next == good {
                return Some(good);
            }
            if !le(next) {
                break next;
            }
            good = next;
            step = step.saturating_mul(2);
        };
        while bad - good > 1 {
            let mid = good + (bad - good) / 2;
            if le(mid) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        Some(good)
    }

    /// All `j >= 0` with `P(j) = v`, in increasing order.
    pub fn preimages_u128(&self, v: u128) -> Vec<u128> {
        self.preimages_u128_from(v, self.increasing_from() as u128)
    }

    /// As [`preimages_u128`](Self::preimages_u128), with a caller-cached
    /// [`increasing_from`](Self::increasing_from) value.
    pub fn preimages_u128_from(&self, v: u128, start: u128) -> Vec<u128> {
        let mut out: Vec<u128> = (0..start)
            .filter(|&j| self.eval_u128(j) == Some(v))
            .collect();
        if let Some(j) = self.floor_inverse_u128(v, start) {
            if self.eval_u128(j) == Some(v) {
                out.push(j);
            }
        }
        out
    }

    /// Rendering without spaces, used inside descriptors.
    pub fn to_compact_string(&self) -> String {
        self.to_string().replace(' ', "")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate().rev() {
            if *c == IBig::ZERO {
                continue;
            }
            let neg = *c < IBig::ZERO;
            let mag = c.unsigned_abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if mag != dashu_int::UBig::ONE {
                write!(f, "{mag}")?;
            }
            match exp {
                1 => f.write_str("n")?,
                _ => write!(f, "n^{exp}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut coeffs: Vec<IBig> = Vec::new();
        let mut cur = Cursor {
            s: s.as_bytes(),
            pos: 0,
        };
        cur.skip_ws();
        if cur.at_end() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let mut first = true;
        loop {
            cur.skip_ws();
            let mut neg = false;
            match cur.peek() {
                Some(b'+') if !first => cur.pos += 1,
                Some(b'-') => {
                    neg = true;
                    cur.pos += 1;
                }
                Some(_) if first => {}
                Some(_) => return Err(Error::parse(cur.pos, "expected '+' or '-'")),
                None => return Err(Error::parse(cur.pos, "unexpected end of input")),
            }
            first = false;
            cur.skip_ws();
            let term_start = cur.pos;
            let coef = cur.digits();
            cur.skip_ws();
            let mut has_var = false;
            if cur.peek() == Some(b'*') {
                if coef.is_none() {
                    return Err(Error::parse(cur.pos, "'*' must follow a coefficient"));
                }
                cur.pos += 1;
                cur.skip_ws();
                if cur.peek() != Some(b'n') {
                    return Err(Error::parse(cur.pos, "expected 'n' after '*'"));
                }
            }
            let mut exp = 0usize;
            if cur.peek() == Some(b'n') {
                cur.pos += 1;
                has_var = true;
                exp = 1;
                cur.skip_ws();
                if cur.peek() == Some(b'^') {
                    cur.pos += 1;
                    cur.skip_ws();
                    let at = cur.pos;
                    let e = cur
                        .digits()
                        .ok_or_else(|| Error::parse(at, "expected exponent"))?;
                    exp = usize::try_from(e)
                        .ok()
                        .filter(|&e| e <= 64)
                        .ok_or_else(|| Error::parse(at, "exponent too large"))?;
                }
            }
            if coef.is_none() && !has_var {
                return Err(Error::parse(term_start, "expected a term"));
            }
            let mut c = coef.unwrap_or(IBig::ONE);
            if neg {
                c = -c;
            }
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, IBig::ZERO);
            }
            coeffs[exp] += c;
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.s.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> Option<IBig> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Some(text.parse().unwrap())
    }
}

/// Parses a comma-separated polynomial list such as `"n,2n,3n"`.
pub fn parse_poly_list(s: &str) -> Result<Vec<IntPolynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in s.split(',') {
        let p = part.parse::<IntPolynomial>().map_err(|e| match e {
            Error::Parse { pos, msg } => Error::parse(offset + pos, msg),
            other => other,
        })?;
        out.push(p);
        offset += part.len() + 1;
    }
    Ok(out)
}
