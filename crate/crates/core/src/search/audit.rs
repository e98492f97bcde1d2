use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Summary of one bad set `{m <= M : coloring(n + P(m)) = color for all P}`.
///
/// `stabilized` means the set misses `(M/2, M]`, the finite-horizon stand-in
/// for finiteness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub n: u64,
    pub color: u8,
    pub count: u64,
    pub max_element: Option<u64>,
    pub horizon: u64,
    pub stabilized: bool,
}

impl AuditReport {
    pub fn from_set(n: u64, color: u8, set: &[u64], horizon: u64) -> Self {
        let max_element = set.last().copied();
        AuditReport {
            n,
            color,
            count: set.len() as u64,
            max_element,
            horizon,
            stabilized: max_element.is_none_or(|m| m <= horizon / 2),
        }
    }
}

/// Bad sets for every color at once, indexed by `color - 1`.
pub fn bad_sets_all_colors(
    c: &Coloring,
    n: u64,
    polys: &[IntPolynomial],
    horizon: u64,
) -> Result<Vec<Vec<u64>>> {
    if horizon < 2 {
        return Err(Error::Domain(format!(
            "horizon must be at least 2 (got {horizon})"
        )));
    }
    if polys.is_empty() {
        return Err(Error::BadParams("need at least one polynomial".into()));
    }
    let mut sets = vec![Vec::new(); c.palette() as usize];
    let mut cursors: Vec<_> = polys.iter().map(|_| c.cursor()).collect();
    let point = |p: &IntPolynomial, m: u64| -> Result<u64> {
        let v = p
            .eval_i128(m as i128)
            .and_then(|v| v.checked_add(n as i128))
            .ok_or_else(|| Error::Overflow(format!("{n} + ({p})({m}) overflows")))?;
        if v < 1 {
            return Err(Error::Domain(format!(
                "{n} + ({p})({m}) = {v} is not positive"
            )));
        }
        u64::try_from(v).map_err(|_| Error::Overflow(format!("{n} + ({p})({m}) exceeds u64")))
    };
    for m in 1..=horizon {
        let first = cursors[0].color(point(&polys[0], m)?);
        let mut same = true;
        for (p, cur) in polys.iter().zip(cursors.iter_mut()).skip(1) {
            if cur.color(point(p, m)?) != first {
                same = false;
                break;
            }
        }
        if same {
            sets[first as usize - 1].push(m);
        }
    }
    Ok(sets)
}

/// Exact bad set for one color and its report.
pub fn bad_set(
    c: &Coloring,
    n: u64,
    polys: &[IntPolynomial],
    color: u8,
    horizon: u64,
) -> Result<(Vec<u64>, AuditReport)> {
    if color == 0 || color > c.palette() {
        return Err(Error::BadParams(format!(
            "color {color} outside palette {}",
            c.palette()
        )));
    }
    let mut sets = bad_sets_all_colors(c, n, polys, horizon)?;
    let set = std::mem::take(&mut sets[color as usize - 1]);
    let report = AuditReport::from_set(n, color, &set, horizon);
    Ok((set, report))
}

/// Reports for every base in `ns` and every color, ordered by base then
/// color.
pub fn audit(
    c: &Coloring,
    ns: &[u64],
    polys: &[IntPolynomial],
    horizon: u64,
) -> Result<Vec<AuditReport>> {
    let one = |&n: &u64| -> Result<Vec<AuditReport>> {
        let sets = bad_sets_all_colors(c, n, polys, horizon)?;
        Ok(sets
            .iter()
            .enumerate()
            .map(|(i, s)| AuditReport::from_set(n, i as u8 + 1, s, horizon))
            .collect())
    };
    #[cfg(feature = "parallel")]
    let per_n: Vec<Result<Vec<AuditReport>>> = {
        use rayon::prelude::*;
        ns.par_iter().map(one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let per_n: Vec<Result<Vec<AuditReport>>> = ns.iter().map(one).collect();
    let mut out = Vec::new();
    for r in per_n {
        out.extend(r?);
    }
    Ok(out)
}

/// One row of a bad-set growth curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthPoint {
    pub horizon: u64,
    pub count: u64,
    pub max_element: Option<u64>,
}

/// Count and maximum of `set ∩ [1, M]` for each horizon `M`.
pub fn growth_curve(set: &[u64], horizons: &[u64]) -> Vec<GrowthPoint> {
    horizons
        .iter()
        .map(|&m| {
            let k = set.partition_point(|&x| x <= m);
            GrowthPoint {
                horizon: m,
                count: k as u64,
                max_element: k.checked_sub(1).map(|i| set[i]),
            }
        })
        .collect()
}
