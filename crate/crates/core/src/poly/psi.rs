use dashu_int::ops::UnsignedAbs;
use dashu_int::IBig;
use dashu_ratio::RBig;
use serde::Serialize;

use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::real::{self, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GrowthCase {
    /// `delta > 1`, or `delta = 1` and `c > 1`.
    GrowthCaseI,
    /// `delta = c = 1`.
    GrowthCaseII,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiProfile {
    /// `deg Q / deg P`.
    pub delta: RBig,
    /// `lead Q / lead P`.
    pub c: RBig,
    pub case: GrowthCase,
}

/// Classifies the growth of `psi = Q o P^-1`. `Q` must eventually exceed
/// `P`; when it does not, swap the pair.
pub fn psi_profile(p: &IntPolynomial, q: &IntPolynomial) -> Result<PsiProfile> {
    if p == q {
        return Err(Error::EqualPolynomials);
    }
    let delta = RBig::from_parts(IBig::from(q.degree()), p.degree().into());
    let c = RBig::from_parts(q.leading().clone(), p.leading().unsigned_abs());
    let one = RBig::ONE;
    if delta < one || (delta == one && c < one) {
        return Err(Error::NotDominant);
    }
    if delta == one && c == one {
        if q.to_zpoly().sub(&p.to_zpoly()).lead() < IBig::ZERO {
            return Err(Error::NotDominant);
        }
        return Ok(PsiProfile {
            delta,
            c,
            case: GrowthCase::GrowthCaseII,
        });
    }
    Ok(PsiProfile {
        delta,
        c,
        case: GrowthCase::GrowthCaseI,
    })
}

/// `psi = Q o P^-1` on `(P(a*), inf)`, where `a*` is the smallest integer
/// from which `P >= 1`, `P' >= 1` and, for `P != Q`, `Q > P` and `Q' > P'`
/// hold on the whole half-line. The threshold is certified by nonnegative
/// Taylor coefficients, so it is exact rather than sampled.
#[derive(Clone, Debug)]
pub struct Psi {
    p: IntPolynomial,
    q: IntPolynomial,
    a_star: IBig,
    start: Real,
    tol: Real,
}

impl Psi {
    pub fn new(p: &IntPolynomial, q: &IntPolynomial) -> Result<Self> {
        let one = IBig::ONE;
        let zp = p.to_zpoly();
        let dp = zp.derivative();
        let mut conditions = vec![zp.sub_constant(&one), dp.sub_constant(&one)];
        if p != q {
            let zq = q.to_zpoly();
            conditions.push(zq.sub(&zp));
            conditions.push(zq.derivative().sub(&dp));
        }
        let mut a_star = IBig::ZERO;
        for c in &conditions {
            let a = c.taylor_threshold().ok_or(Error::NotDominant)?;
            if a > a_star {
                a_star = a;
            }
        }
        let start = real::from_int(&p.eval(&a_star));
        Ok(Psi {
            p: p.clone(),
            q: q.clone(),
            a_star,
            start,
            tol: Real::from_parts(IBig::ONE, -180),
        })
    }

    pub fn p(&self) -> &IntPolynomial {
        &self.p
    }

    pub fn q(&self) -> &IntPolynomial {
        &self.q
    }

    /// The branch threshold `a*`.
    pub fn threshold(&self) -> &IBig {
        &self.a_star
    }

    /// `P(a*)`; `psi` is defined strictly above this value.
    pub fn domain_start(&self) -> &Real {
        &self.start
    }

    fn check_domain(&self, t: &Real) -> Result<()> {
        if *t <= self.start {
            return Err(Error::Domain(format!(
                "psi is defined only above P(a*) = {} (a* = {})",
                self.start, self.a_star
            )));
        }
        Ok(())
    }

    /// `P^-1(t)` on the increasing branch, by safeguarded Newton iteration.
    pub fn p_inverse(&self, t: &Real) -> Result<Real> {
        self.check_domain(t)?;
        let p = &self.p;
        let mut lo = real::from_int(&self.a_star);
        let lead = real::to_f64(&real::from_int(p.leading()));
        let guess = (real::to_f64(t) / lead).powf(1.0 / p.degree() as f64);
        let mut hi = if guess.is_finite() && guess > 0.0 {
            real::from_f64(guess * 1.01 + 1.0)
        } else {
            &lo + real::from_u64(1)
        };
        if hi <= lo {
            hi = &lo + real::from_u64(1);
        }
        while p.eval_real(&hi) < *t {
            let width = &hi - &lo;
            lo = hi.clone();
            hi = &hi + width * real::from_u64(2);
        }
        let mut s = if guess.is_finite() {
            let g = real::from_f64(guess);
            if g > lo && g < hi {
                g
            } else {
                (&lo + &hi) / real::from_u64(2)
            }
        } else {
            (&lo + &hi) / real::from_u64(2)
        };
        for _ in 0..400 {
            let fs = p.eval_real(&s) - t;
            if fs == Real::ZERO {
                return Ok(s);
            }
            if fs < Real::ZERO {
                lo = s.clone();
            } else {
                hi = s.clone();
            }
            let d = p.derivative_real(&s);
            let newton = &s - fs / d;
            let next = if newton > lo && newton < hi {
                newton
            } else {
                (&lo + &hi) / real::from_u64(2)
            };
            let scale = if real::abs(&s) > Real::ONE {
                real::abs(&s)
            } else {
                real::from_u64(1)
            };
            if real::abs(&(&next - &s)) <= &self.tol * scale {
                return Ok(next);
            }
            s = next;
        }
        Ok(s)
    }

    /// `psi(t)`. Exact when `t` is an integer of the form `P(j)`.
    pub fn eval(&self, t: &Real) -> Result<Real> {
        let s = self.p_inverse(t)?;
        if t.floor() == *t {
            let j = real::floor(&(&s + real::from_ratio(&RBig::from_parts(1.into(), 2u8.into()))));
            if self.p.eval(&j) == real::floor(t) {
                return Ok(real::from_int(&self.q.eval(&j)));
            }
        }
        Ok(self.q.eval_real(&s))
    }

    /// `psi(t)` through the numeric inverse only, without the exact shortcut.
    pub fn eval_numeric(&self, t: &Real) -> Result<Real> {
        let s = self.p_inverse(t)?;
        Ok(self.q.eval_real(&s))
    }

    /// `psi'(t) = Q'(s) / P'(s)` with `s = P^-1(t)`.
    pub fn derivative(&self, t: &Real) -> Result<Real> {
        let s = self.p_inverse(t)?;
        Ok(self.q.derivative_real(&s) / self.p.derivative_real(&s))
    }
}

pub fn psi_eval(p: &IntPolynomial, q: &IntPolynomial, t: &Real) -> Result<Real> {
    Psi::new(p, q)?.eval(t)
}
