//! Two-coloring for pairs where `psi = Q o P^-1` grows faster than the
//! identity, built from the orbit `a_n = psi(a_{n-1})` and the sets `A_n`.
//!
//! `A_n` is the block `[a_n, a_n + ln a_n)` together with every
//! `i + Q(j)` such that `0 <= i < ln a_{n-1}` and `i + P(j)` lies in
//! `A_{n-1}`. Points of `A_n` take color 2 for even `n` and 1 for odd `n`;
//! any other point of `[a_n, a_{n+1})` takes color 2 for even `n` and 1 for
//! odd `n`; everything below `a_0` takes color 1.
//!
//! Sets only keep elements up to `u64::MAX`, the largest query point. That
//! truncation is closed under the recursion: an element above the cap only
//! produces elements above the cap.

use std::sync::RwLock;

use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::poly::{psi_profile, GrowthCase, IntPolynomial, Psi, PsiProfile};
use crate::real::{self, Real};

pub const DEFAULT_SCAN_LIMIT: u64 = 1_000_000;

const GRID: usize = 100;

#[derive(Clone, Debug)]
pub struct Admissibility {
    pub a0: u64,
    pub lambda0: Real,
    pub eps0: Real,
    pub u: Real,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Level {
    pub a: Real,
    /// `ln a`.
    pub width: Real,
    /// `ceil(a)`, saturated.
    pub start: u128,
    pub set: Vec<u64>,
}

impl Level {
    pub fn inf(&self) -> Option<u64> {
        self.set.first().copied()
    }

    pub fn sup(&self) -> Option<u64> {
        self.set.last().copied()
    }
}

#[derive(Clone, Debug)]
pub struct RecursiveColoringState {
    pub a0: u64,
    pub levels: Vec<Level>,
    pub lambda0: Real,
    pub eps0: Real,
    pub u: Real,
}

#[derive(Debug)]
pub struct RecursiveColoring {
    psi: Psi,
    adm: Admissibility,
    p_start: u128,
    levels: RwLock<Vec<Level>>,
}

fn ln(t: &Real) -> Real {
    real::ln(t)
}

fn log_grid(lo: &Real, hi: &Real, k: usize) -> Vec<Real> {
    let (l, h) = (real::to_f64(lo), real::to_f64(hi));
    let mut out = vec![lo.clone()];
    for i in 1..k - 1 {
        let t = l * (h / l).powf(i as f64 / (k - 1) as f64);
        out.push(real::from_f64(t));
    }
    out.push(hi.clone());
    out
}

/// Checks the three properties of `a0` at desk scale; `Err` carries the
/// first violated condition.
pub fn check_a0(
    psi: &Psi,
    profile: &PsiProfile,
    a0: u64,
) -> std::result::Result<Admissibility, String> {
    let q = psi.q();
    if q.degree() <= 1 {
        return Err("uniqueness of representations needs deg Q > 1".into());
    }
    let start = psi.domain_start().clone();
    let a0r = real::from_u64(a0);
    let fa0 = ln(&a0r);
    let half = &a0r / real::from_u64(2);
    let four = &a0r * real::from_u64(4);
    let low = &a0r - &fa0;
    if fa0 <= start || half <= start || low <= start {
        return Err(format!("ln a0 must exceed P(a*) = {start}"));
    }
    let e = |r: Result<Real>| r.map_err(|e| e.to_string());
    let delta = real::from_ratio(&profile.delta);
    let c = real::from_ratio(&profile.c);

    // Property III: psi' > lambda0^2 on t > ln a0
    let mut min_d: Option<Real> = None;
    for t in log_grid(&fa0, &four, GRID) {
        let d = e(psi.derivative(&t))?;
        if min_d.as_ref().is_none_or(|m| d < *m) {
            min_d = Some(d);
        }
    }
    let min_d = min_d.unwrap();
    let lambda0 = min_d.powf(&real::from_f64(0.5)) * real::from_f64(1.0 - 1e-12);
    if lambda0 <= delta {
        return Err(format!(
            "min psi' = {:.6} leaves no lambda0 > delta",
            real::to_f64(&min_d)
        ));
    }
    let eps0 = (&lambda0 - &delta) / real::from_u64(2);
    let lam = &lambda0 - &eps0;
    let u =
        &lam * (&lam - real::from_u64(1)) / (real::from_u64(2) * &lambda0 * &eps0 - &eps0 * &eps0);
    let psi_a0 = e(psi.eval(&a0r))?;
    let lhs = e(psi.eval(&low))? - &a0r - ln(&psi_a0);
    if lhs < &u * &fa0 {
        return Err(format!(
            "psi(a0 - ln a0) - a0 - ln psi(a0) = {:.4} is below u ln a0 = {:.4}",
            real::to_f64(&lhs),
            real::to_f64(&(&u * &fa0))
        ));
    }

    // Property I: unique representations r + Q(s), 0 <= r < ln psi(t)
    let top = e(psi.eval(&four))?;
    let r_bound = ln(&top);
    let rmax = real::floor_strict(&r_bound);
    let limit = real::ceil(&(&top + &r_bound));
    let q_start = q.increasing_from();
    let mut values: Vec<IBig> = Vec::new();
    let mut s = 0u64;
    loop {
        let v = q.eval(&IBig::from(s));
        if s >= q_start && v > limit {
            break;
        }
        values.push(v);
        s += 1;
    }
    values.sort();
    let a0i = IBig::from(a0);
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if &values[j] - &values[i] > rmax {
                break;
            }
            // z = values[j] + x = values[i] + r for 0 <= x < r <= rmax
            if IBig::from(2u8) * (&values[i] + &rmax) > a0i {
                return Err(format!(
                    "{} and {} are too close to separate representations",
                    values[i], values[j]
                ));
            }
        }
    }

    // Property III, second bullet, and Property II
    let h_factor = if delta > real::from_u64(1) {
        real::from_ratio(&dashu_ratio::RBig::from_parts(1.into(), 2u8.into()))
    } else {
        (real::from_u64(2) * &c - real::from_u64(2)) / (real::from_u64(3) * &c)
    };
    for t in log_grid(&half, &four, GRID) {
        let ft = ln(&t);
        let pt = e(psi.eval(&t))?;
        let fpt = ln(&pt);
        if fpt >= &lam * &ft {
            return Err(format!(
                "ln psi(t) >= (lambda0 - eps0) ln t at t = {:.4}",
                real::to_f64(&t)
            ));
        }
        let bound = &h_factor * &ft;
        for h in [real::from_u64(0), &bound / real::from_u64(2), bound.clone()] {
            let lhs = e(psi.eval(&(&t + &ft - &h)))? - &pt;
            if lhs <= &fpt - &h {
                return Err(format!(
                    "increment condition fails at t = {:.4}, h = {:.4}",
                    real::to_f64(&t),
                    real::to_f64(&h)
                ));
            }
        }
    }

    Ok(Admissibility {
        a0,
        lambda0,
        eps0,
        u,
    })
}

fn case_one(p: &IntPolynomial, q: &IntPolynomial) -> Result<(PsiProfile, Psi)> {
    let profile = psi_profile(p, q)?;
    if profile.case != GrowthCase::GrowthCaseI {
        return Err(Error::NotCaseI);
    }
    if q.degree() <= 1 {
        return Err(Error::InadmissibleA0(
            "uniqueness of representations needs deg Q > 1".into(),
        ));
    }
    let psi = Psi::new(p, q)?;
    Ok((profile, psi))
}

fn scan(psi: &Psi, profile: &PsiProfile, scan_limit: u64) -> Result<Admissibility> {
    // ln a0 > P(a*) is necessary; skip straight past it
    let floor = real::to_f64(psi.domain_start()).exp().floor();
    let first = if floor >= scan_limit as f64 {
        return Err(Error::NoAdmissibleA0 { scan_limit });
    } else {
        (floor as u64).max(1)
    };
    for a0 in first..=scan_limit {
        if let Ok(adm) = check_a0(psi, profile, a0) {
            return Ok(adm);
        }
    }
    Err(Error::NoAdmissibleA0 { scan_limit })
}

/// Smallest `a0 <= scan_limit` passing the admissibility checks.
pub fn find_admissible_a0(p: &IntPolynomial, q: &IntPolynomial, scan_limit: u64) -> Result<u64> {
    let (profile, psi) = case_one(p, q)?;
    scan(&psi, &profile, scan_limit).map(|adm| adm.a0)
}

impl RecursiveColoring {
    pub fn new(p: &IntPolynomial, q: &IntPolynomial, a0: Option<u64>, window: u64) -> Result<Self> {
        let (profile, psi) = case_one(p, q)?;
        let adm = match a0 {
            Some(a0) => check_a0(&psi, &profile, a0).map_err(Error::InadmissibleA0)?,
            None => scan(&psi, &profile, DEFAULT_SCAN_LIMIT)?,
        };
        if window < adm.a0 {
            return Err(Error::WindowTooSmall { window, a0: adm.a0 });
        }
        let p_start = p.increasing_from() as u128;
        let rc = RecursiveColoring {
            psi,
            adm,
            p_start,
            levels: RwLock::new(Vec::new()),
        };
        {
            let mut levels = rc.levels.write().unwrap();
            let first = rc.build_level(real::from_u64(rc.adm.a0), None);
            levels.push(first);
            while !covers(&levels, window) {
                rc.extend(&mut levels).map_err(Error::InadmissibleA0)?;
            }
        }
        Ok(rc)
    }

    pub fn a0(&self) -> u64 {
        self.adm.a0
    }

    pub fn admissibility(&self) -> &Admissibility {
        &self.adm
    }

    pub fn psi(&self) -> &Psi {
        &self.psi
    }

    pub fn state(&self) -> RecursiveColoringState {
        RecursiveColoringState {
            a0: self.adm.a0,
            levels: self.levels.read().unwrap().clone(),
            lambda0: self.adm.lambda0.clone(),
            eps0: self.adm.eps0.clone(),
            u: self.adm.u.clone(),
        }
    }

    fn build_level(&self, a: Real, prev: Option<&Level>) -> Level {
        let cap = u64::MAX as u128;
        let width = ln(&a);
        let start = real::ibig_to_u128_saturating(&real::ceil(&a));
        let end = real::ibig_to_u128_saturating(&real::floor_strict(&(&a + &width)));
        let mut set: Vec<u64> = Vec::new();
        if start <= cap {
            set.extend((start..=end.min(cap)).map(|z| z as u64));
        }
        if let Some(prev) = prev {
            let imax = real::floor_strict(&prev.width);
            if imax >= IBig::ZERO {
                let imax = u64::try_from(imax).unwrap_or(u64::MAX);
                let (p, q) = (self.psi.p(), self.psi.q());
                for &e in &prev.set {
                    for i in 0..=imax.min(e) {
                        for j in p.preimages_u128_from((e - i) as u128, self.p_start) {
                            let z = q.eval_u128(j).and_then(|v| v.checked_add(i as u128));
                            if let Some(z) = z.filter(|&z| z <= cap) {
                                set.push(z as u64);
                            }
                        }
                    }
                }
            }
        }
        set.sort_unstable();
        set.dedup();
        Level {
            a,
            width,
            start,
            set,
        }
    }

    fn extend(&self, levels: &mut Vec<Level>) -> std::result::Result<(), String> {
        let last = levels.last().unwrap();
        let a = self.psi.eval(&last.a).map_err(|e| e.to_string())?;
        let next = self.build_level(a, Some(last));
        if let (Some(sup), Some(inf)) = (last.sup(), next.inf()) {
            if inf <= sup {
                return Err(format!(
                    "separation fails between levels {} and {}: inf {} <= sup {}",
                    levels.len() - 1,
                    levels.len(),
                    inf,
                    sup
                ));
            }
        }
        levels.push(next);
        Ok(())
    }

    fn ensure(&self, z: u64) {
        if covers(&self.levels.read().unwrap(), z) {
            return;
        }
        let mut levels = self.levels.write().unwrap();
        while !covers(&levels, z) {
            if let Err(msg) = self.extend(&mut levels) {
                panic!("recursive coloring beyond the checked window: {msg}");
            }
        }
    }

    pub fn color(&self, z: u64) -> u8 {
        self.ensure(z);
        let levels = self.levels.read().unwrap();
        let k = levels.partition_point(|l| l.inf().is_some_and(|i| i <= z));
        if k > 0 && levels[k - 1].set.binary_search(&z).is_ok() {
            return parity_color(k - 1);
        }
        match levels.partition_point(|l| l.start <= z as u128) {
            0 => 1,
            m => parity_color(m - 1),
        }
    }
}

/// Every level that could contain or bound `z` is materialized.
fn covers(levels: &[Level], z: u64) -> bool {
    match levels.last() {
        None => false,
        Some(l) => l.inf().is_none_or(|i| i > z),
    }
}

fn parity_color(n: usize) -> u8 {
    if n % 2 == 0 {
        2
    } else {
        1
    }
}
