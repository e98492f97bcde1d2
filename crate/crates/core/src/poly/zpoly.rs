//! Unrestricted integer polynomials used for exact sign analysis of
//! differences and derivatives of [`IntPolynomial`](super::IntPolynomial)s.

use dashu_int::IBig;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZPoly {
    coeffs: Vec<IBig>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<IBig>) -> Self {
        while coeffs.last().is_some_and(|c| *c == IBig::ZERO) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn constant(c: IBig) -> Self {
        ZPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<IBig> {
        match self.coeffs.len() {
            0 => Some(IBig::ZERO),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn lead(&self) -> IBig {
        self.coeffs.last().cloned().unwrap_or(IBig::ZERO)
    }

    pub fn eval(&self, x: &IBig) -> IBig {
        let mut acc = IBig::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = IBig::ZERO;
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).unwrap_or(&zero).clone()
                    - other.coeffs.get(i).unwrap_or(&zero).clone()
            })
            .collect();
        ZPoly::new(coeffs)
    }

    pub fn sub_constant(&self, c: &IBig) -> ZPoly {
        self.sub(&ZPoly::constant(c.clone()))
    }

    pub fn derivative(&self) -> ZPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * IBig::from(i))
            .collect();
        ZPoly::new(coeffs)
    }

    /// Coefficients of `x -> self(x + s)`.
    pub fn shift(&self, s: &IBig) -> ZPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let carry = s * &c[j + 1];
                c[j] += carry;
            }
        }
        ZPoly::new(c)
    }

    fn taylor_nonnegative_at(&self, a: &IBig) -> bool {
        self.shift(a).coeffs.iter().all(|c| *c >= IBig::ZERO)
    }

    /// Smallest integer `a >= 0` at which every Taylor coefficient is
    /// nonnegative. Beyond such `a` the polynomial is nonnegative and
    /// nondecreasing, and strictly positive on `(a, inf)` unless it is zero.
    /// `None` when the leading coefficient is negative.
    pub fn taylor_threshold(&self) -> Option<IBig> {
        if self.is_zero() {
            return Some(IBig::ZERO);
        }
        if self.lead() < IBig::ZERO {
            return None;
        }
        if self.taylor_nonnegative_at(&IBig::ZERO) {
            return Some(IBig::ZERO);
        }
        let mut hi = IBig::ONE;
        while !self.taylor_nonnegative_at(&hi) {
            hi *= IBig::from(2u8);
        }
        let mut lo = &hi / IBig::from(2u8);
        // invariant: lo fails (or is 0, which failed above), hi passes
        while &hi - &lo > IBig::ONE {
            let mid = (&lo + &hi) / IBig::from(2u8);
            if self.taylor_nonnegative_at(&mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Some(hi)
    }

    /// Smallest integer `N >= floor` such that the value at every integer
    /// `n >= N` is positive (`strict`) or nonnegative.
    pub fn holds_from(&self, strict: bool, floor: &IBig) -> Option<IBig> {
        if self.is_zero() {
            return if strict { None } else { Some(floor.clone()) };
        }
        let a = self.taylor_threshold()?;
        let ok = |v: &IBig| {
            if strict {
                *v > IBig::ZERO
            } else {
                *v >= IBig::ZERO
            }
        };
        let mut n = if ok(&self.eval(&a)) { a } else { a + IBig::ONE };
        while n > *floor && ok(&self.eval(&(&n - IBig::ONE))) {
            n -= IBig::ONE;
        }
        Some(if n < *floor { floor.clone() } else { n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        ZPoly::new(c.iter().map(|&v| IBig::from(v)).collect())
    }

    #[test]
    fn shift_binomial() {
        assert_eq!(z(&[0, 0, 1]).shift(&IBig::ONE), z(&[1, 2, 1]));
        assert_eq!(z(&[0, -1, 0, 1]).shift(&IBig::from(2)), z(&[6, 11, 6, 1]));
    }

    #[test]
    fn threshold_of_shifted_square() {
        // (x-3)^2 - 1 has roots 2 and 4; Taylor coefficients at a are
        // (a-3)^2-1, 2(a-3), 1, all nonnegative first at a = 4.
        let p = z(&[8, -6, 1]);
        assert_eq!(p.taylor_threshold(), Some(IBig::from(4)));
        assert_eq!(p.holds_from(true, &IBig::ZERO), Some(IBig::from(5)));
        assert_eq!(p.holds_from(false, &IBig::ZERO), Some(IBig::from(4)));
    }

    #[test]
    fn holds_from_walks_below_threshold() {
        // x^2 - x + 1 is positive everywhere but its linear Taylor
        // coefficient is negative at 0.
        let p = z(&[1, -1, 1]);
        assert_eq!(p.taylor_threshold(), Some(IBig::ONE));
        assert_eq!(p.holds_from(true, &IBig::ZERO), Some(IBig::ZERO));
    }

    #[test]
    fn zero_and_negative() {
        assert_eq!(z(&[]).holds_from(true, &IBig::ZERO), None);
        assert_eq!(z(&[]).holds_from(false, &IBig::ONE), Some(IBig::ONE));
        assert_eq!(z(&[0, -1]).taylor_threshold(), None);
    }
}
