//! Bitset search for monochromatic configurations `B + P(C)` over a family
//! of polynomials, plus the finite-horizon diagnostics built on it.

mod ap;
mod audit;
mod gowers;

use crate::bitvec::BitVec;
use crate::coloring::{ColorWindow, Coloring};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

pub use ap::{longest_ap, Progression};
pub use audit::{audit, bad_set, bad_sets_all_colors, growth_curve, AuditReport, GrowthPoint};
pub use gowers::{gowers_threshold, GowersThreshold};

/// Claimed witness: `coloring(h + P(k)) = color` for all `h` in `b`, `k` in
/// `c` and `P` in `polys`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub polys: Vec<IntPolynomial>,
    pub color: u8,
}

impl Configuration {
    /// Every point `h + P(k)`, or `None` if one is not a positive `u64`.
    pub fn points(&self) -> Option<Vec<u64>> {
        let mut out = Vec::with_capacity(self.b.len() * self.c.len() * self.polys.len());
        for &k in &self.c {
            for p in &self.polys {
                let v = p.eval_i128(k as i128)?;
                for &h in &self.b {
                    let z = v.checked_add(h as i128)?;
                    if z < 1 {
                        return None;
                    }
                    out.push(u64::try_from(z).ok()?);
                }
            }
        }
        Some(out)
    }
}

/// The common color of all configuration points, if there is one.
pub fn verify_config(c: &Coloring, cfg: &Configuration) -> Option<u8> {
    if cfg.b.is_empty() || cfg.c.is_empty() || cfg.polys.is_empty() {
        return None;
    }
    let pts = cfg.points()?;
    let first = c.color(pts[0]);
    pts.iter().all(|&z| c.color(z) == first).then_some(first)
}

/// Same check against a window; points outside it fail.
pub fn verify_in_window(w: &ColorWindow, cfg: &Configuration) -> Option<u8> {
    if cfg.b.is_empty() || cfg.c.is_empty() || cfg.polys.is_empty() {
        return None;
    }
    let pts = cfg.points()?;
    let color = w.color(usize::try_from(pts[0]).ok()?)?;
    pts.iter()
        .all(|&z| usize::try_from(z).ok().and_then(|z| w.color(z)) == Some(color))
        .then_some(color)
}

/// Shifts `P(c)` for every polynomial, or `None` unless all lie in `[0, n)`.
fn shifts_for(polys: &[IntPolynomial], c: u64, n: usize) -> Option<Vec<usize>> {
    polys
        .iter()
        .map(|p| {
            p.eval_i128(c as i128)
                .and_then(|v| usize::try_from(v).ok())
                .filter(|&v| v < n)
        })
        .collect()
}

/// `{b : b + P(c) <= N and b + P(c) in S_color for all c in C, P in polys}`.
pub fn survivor_set(w: &ColorWindow, polys: &[IntPolynomial], c_set: &[u64], color: u8) -> BitVec {
    let n = w.len();
    let s = w.plane(color);
    let mut out = BitVec::full(n);
    for &c in c_set {
        for p in polys {
            match p.eval_i128(c as i128) {
                Some(v) if v >= 0 && v < n as i128 => out.and_shifted_assign(s, v as usize),
                Some(v) if v < 0 && v > -(n as i128) => {
                    // b + P(c) must stay >= 1, so only b > |P(c)| can survive
                    let back = (-v) as usize;
                    let ones: Vec<usize> = out.iter_ones().collect();
                    for b in ones {
                        if b <= back || !s.get(b - back) {
                            out.clear(b);
                        }
                    }
                }
                _ => return BitVec::new(n),
            }
        }
    }
    out
}

/// A configuration together with its survivor count (the number of valid
/// `b` for its `C`, of which `B` holds the smallest `r`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub config: Configuration,
    pub survivors: u64,
}

/// Candidate set for the greedy search: `c = 1, 1 + stride, ...` with every
/// `P(c)` in `[0, N)`, keeping at most `max_candidates` of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyOptions {
    pub stride: u64,
    pub max_candidates: Option<usize>,
}

impl Default for GreedyOptions {
    fn default() -> Self {
        GreedyOptions {
            stride: 1,
            max_candidates: None,
        }
    }
}

fn candidates(polys: &[IntPolynomial], n: usize, opts: &GreedyOptions) -> Vec<(u64, Vec<usize>)> {
    let stride = opts.stride.max(1);
    let cap = opts.max_candidates.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    let mut c = 1u64;
    let mut misses = 0;
    while out.len() < cap && (c as usize) < n {
        match shifts_for(polys, c, n) {
            Some(s) => {
                out.push((c, s));
                misses = 0;
            }
            None => {
                // polynomials with a negative dip near 0 recover quickly;
                // a long run of misses means every value is past N
                misses += 1;
                if misses > 64
                    && polys
                        .iter()
                        .all(|p| p.eval_i128(c as i128).is_none_or(|v| v >= n as i128))
                {
                    break;
                }
            }
        }
        c = match c.checked_add(stride) {
            Some(v) => v,
            None => break,
        };
    }
    out
}

/// Popcount of `survivors & shift(s, k)` over all shifts `k`, touching only
/// the nonzero survivor words.
fn score(survivors: &BitVec, live: &[usize], s: &BitVec, shifts: &[usize]) -> u64 {
    let words = survivors.words();
    let mut total = 0;
    for &i in live {
        let mut acc = words[i];
        for &k in shifts {
            acc &= s.shifted_word(i, k);
            if acc == 0 {
                break;
            }
        }
        total += acc.count_ones() as u64;
    }
    total
}

fn best_candidate(
    cands: &[(u64, Vec<usize>)],
    taken: &[u64],
    survivors: &BitVec,
    s: &BitVec,
) -> Option<(u64, u64)> {
    let live: Vec<usize> = survivors
        .words()
        .iter()
        .enumerate()
        .filter(|(_, &w)| w != 0)
        .map(|(i, _)| i)
        .collect();
    let eval = |(c, shifts): &(u64, Vec<usize>)| -> Option<(u64, u64)> {
        if taken.contains(c) {
            return None;
        }
        Some((score(survivors, &live, s, shifts), *c))
    };
    // larger score wins, then smaller c; the order is total so the reduction
    // order does not matter
    let pick = |a: Option<(u64, u64)>, b: Option<(u64, u64)>| match (a, b) {
        (Some(x), Some(y)) => Some(
            if (x.0, std::cmp::Reverse(x.1)) >= (y.0, std::cmp::Reverse(y.1)) {
                x
            } else {
                y
            },
        ),
        (x, None) => x,
        (None, y) => y,
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        cands.par_iter().map(eval).reduce(|| None, pick)
    }
    #[cfg(not(feature = "parallel"))]
    {
        cands.iter().map(eval).fold(None, pick)
    }
}

/// Greedy search restricted to one color.
pub fn greedy_color(
    w: &ColorWindow,
    polys: &[IntPolynomial],
    r: usize,
    max_c: usize,
    color: u8,
    opts: &GreedyOptions,
) -> Option<Found> {
    let n = w.len();
    let s = w.plane(color);
    let cands = candidates(polys, n, opts);
    let mut survivors = BitVec::full(n);
    let mut chosen: Vec<u64> = Vec::new();
    let mut count = survivors.count_ones();
    while chosen.len() < max_c {
        let Some((sc, c)) = best_candidate(&cands, &chosen, &survivors, s) else {
            break;
        };
        if sc < r as u64 {
            break;
        }
        let shifts = &cands.iter().find(|(k, _)| *k == c).unwrap().1;
        for &k in shifts {
            survivors.and_shifted_assign(s, k);
        }
        chosen.push(c);
        count = sc;
    }
    if chosen.is_empty() {
        return None;
    }
    chosen.sort_unstable();
    Some(Found {
        config: Configuration {
            b: survivors
                .first_ones(r)
                .into_iter()
                .map(|b| b as u64)
                .collect(),
            c: chosen,
            polys: polys.to_vec(),
            color,
        },
        survivors: count,
    })
}

fn better(a: &Found, b: &Found) -> bool {
    (
        a.config.c.len(),
        a.survivors,
        std::cmp::Reverse(a.config.color),
    ) > (
        b.config.c.len(),
        b.survivors,
        std::cmp::Reverse(b.config.color),
    )
}

/// Greedy search over every color; keeps the largest `|C|`, then the larger
/// survivor count, then the smaller color.
pub fn greedy_search(
    w: &ColorWindow,
    polys: &[IntPolynomial],
    r: usize,
    max_c: usize,
    opts: &GreedyOptions,
) -> Result<Found> {
    check_search_args(polys, r, max_c)?;
    let mut best: Option<Found> = None;
    for color in 1..=w.palette() {
        if let Some(f) = greedy_color(w, polys, r, max_c, color, opts) {
            if best.as_ref().is_none_or(|b| better(&f, b)) {
                best = Some(f);
            }
        }
    }
    best.ok_or(Error::NoConfiguration)
}

fn check_search_args(polys: &[IntPolynomial], r: usize, size: usize) -> Result<()> {
    if polys.is_empty() {
        return Err(Error::BadParams("need at least one polynomial".into()));
    }
    if r == 0 || size == 0 {
        return Err(Error::BadParams("r and |C| must be at least 1".into()));
    }
    Ok(())
}

/// Exact search over all `C` of size `size_c`: returns the configuration
/// with the most survivors (ties to the lexicographically smallest `C`,
/// then the smaller color), or `None` when no `C` leaves `r` survivors.
pub fn exhaustive_search(
    w: &ColorWindow,
    polys: &[IntPolynomial],
    r: usize,
    size_c: usize,
) -> Result<Option<Found>> {
    check_search_args(polys, r, size_c)?;
    let n = w.len();
    let cands = candidates(polys, n, &GreedyOptions::default());
    let mut best: Option<Found> = None;
    for color in 1..=w.palette() {
        let s = w.plane(color);
        let mut stack = Vec::with_capacity(size_c);
        let mut local: Option<(u64, Vec<u64>, BitVec)> = None;
        dfs(
            &cands,
            0,
            s,
            &BitVec::full(n),
            r as u64,
            size_c,
            &mut stack,
            &mut local,
        );
        if let Some((count, c, surv)) = local {
            let f = Found {
                config: Configuration {
                    b: surv.first_ones(r).into_iter().map(|b| b as u64).collect(),
                    c,
                    polys: polys.to_vec(),
                    color,
                },
                survivors: count,
            };
            if best.as_ref().is_none_or(|b| f.survivors > b.survivors) {
                best = Some(f);
            }
        }
    }
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    cands: &[(u64, Vec<usize>)],
    from: usize,
    s: &BitVec,
    surv: &BitVec,
    r: u64,
    size: usize,
    stack: &mut Vec<u64>,
    best: &mut Option<(u64, Vec<u64>, BitVec)>,
) {
    if stack.len() == size {
        let count = surv.count_ones();
        if best.as_ref().is_none_or(|b| count > b.0) {
            *best = Some((count, stack.clone(), surv.clone()));
        }
        return;
    }
    for (i, (c, shifts)) in cands.iter().enumerate().skip(from) {
        let mut next = surv.clone();
        for &k in shifts {
            next.and_shifted_assign(s, k);
        }
        // survivor counts only shrink as C grows
        let count = next.count_ones();
        if count < r || best.as_ref().is_some_and(|b| count <= b.0) {
            continue;
        }
        stack.push(*c);
        dfs(cands, i + 1, s, &next, r, size, stack, best);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{custom_coloring, power_2coloring, CustomSpec};
    use crate::poly::parse_poly_list;
    use proptest::prelude::*;

    fn periodic(p: &[u8]) -> Coloring {
        custom_coloring(CustomSpec::Periodic(p.to_vec())).unwrap()
    }

    fn polys(s: &str) -> Vec<IntPolynomial> {
        parse_poly_list(s).unwrap()
    }

    #[test]
    fn verify_examples() {
        let one = periodic(&[1]);
        let cfg = |b: &[u64], c: &[u64], p: &str| Configuration {
            b: b.to_vec(),
            c: c.to_vec(),
            polys: polys(p),
            color: 1,
        };
        assert_eq!(verify_config(&one, &cfg(&[3], &[1, 9], "n,n^2")), Some(1));
        // even -> 1, odd -> 2
        let parity = periodic(&[2, 1]);
        assert_eq!(
            verify_config(&parity, &cfg(&[2, 4], &[2, 4, 6], "n,3n")),
            Some(1)
        );
        assert_eq!(verify_config(&parity, &cfg(&[2, 4], &[1], "n,3n")), Some(2));
        assert_eq!(verify_config(&parity, &cfg(&[2, 4], &[1, 2], "n,3n")), None);
        let p2 = power_2coloring(1, 2).unwrap();
        assert_eq!(verify_config(&p2, &cfg(&[5], &[1], "n,2n")), Some(1));
    }

    #[test]
    fn survivor_examples() {
        let w = periodic(&[2, 1]).window(20);
        let got: Vec<usize> = survivor_set(&w, &polys("n,2n"), &[2], 1)
            .iter_ones()
            .collect();
        assert_eq!(got, (2..=16).step_by(2).collect::<Vec<_>>());
        assert_eq!(survivor_set(&w, &polys("n"), &[], 2).count_ones(), 20);
        let single = ColorWindow::from_colors(
            2,
            &(1..=12)
                .map(|i| if i == 10 { 1 } else { 2 })
                .collect::<Vec<_>>(),
        );
        let got: Vec<usize> = survivor_set(&single, &polys("n"), &[3], 1)
            .iter_ones()
            .collect();
        assert_eq!(got, vec![7]);
    }

    #[test]
    fn negative_shifts_respect_positivity() {
        // n^2 - 3n is -2 at n = 1
        let w = periodic(&[1]).window(10);
        let got: Vec<usize> = survivor_set(&w, &polys("n^2-3n"), &[1], 1)
            .iter_ones()
            .collect();
        assert_eq!(got, (3..=10).collect::<Vec<_>>());
    }

    #[test]
    fn greedy_examples() {
        let parity = periodic(&[2, 1]).window(50);
        let f = greedy_search(&parity, &polys("n,3n"), 2, 10, &GreedyOptions::default()).unwrap();
        assert!(f.config.c.len() >= 5);
        assert_eq!(
            verify_config(&periodic(&[2, 1]), &f.config),
            Some(f.config.color)
        );

        let one = periodic(&[1]);
        let f = greedy_search(
            &one.window(20),
            &polys("n,2n"),
            2,
            3,
            &GreedyOptions::default(),
        )
        .unwrap();
        assert_eq!(f.config.c.len(), 3);

        let alt = periodic(&[1, 2]);
        let f = greedy_search(
            &alt.window(30),
            &polys("n,2n"),
            1,
            2,
            &GreedyOptions::default(),
        )
        .unwrap();
        assert_eq!(f.config.c.len(), 2);
        assert!(verify_config(&alt, &f.config).is_some());
    }

    #[test]
    fn no_configuration() {
        let w = periodic(&[1, 2]).window(3);
        assert_eq!(
            greedy_search(&w, &polys("n,2n"), 5, 2, &GreedyOptions::default()).unwrap_err(),
            Error::NoConfiguration
        );
        assert_eq!(exhaustive_search(&w, &polys("n,2n"), 5, 1).unwrap(), None);
    }

    #[test]
    fn exhaustive_examples() {
        let f = exhaustive_search(&periodic(&[1]).window(10), &polys("n,2n"), 2, 2)
            .unwrap()
            .unwrap();
        // C = {1, 2} leaves b + {1, 2, 4} <= 10, i.e. 6 survivors
        assert_eq!((f.config.c.clone(), f.survivors), (vec![1, 2], 6));
    }

    fn nested_exists(colors: &[u8], polys: &[IntPolynomial], r: usize, size: usize) -> bool {
        let n = colors.len() as i128;
        let col = |z: i128| {
            if z >= 1 && z <= n {
                Some(colors[z as usize - 1])
            } else {
                None
            }
        };
        let cs: Vec<u64> = (1..n as u64).collect();
        let combos: Vec<Vec<u64>> = if size == 1 {
            cs.iter().map(|&c| vec![c]).collect()
        } else {
            let mut v = Vec::new();
            for i in 0..cs.len() {
                for j in i + 1..cs.len() {
                    v.push(vec![cs[i], cs[j]]);
                }
            }
            v
        };
        let palette = *colors.iter().max().unwrap();
        combos.iter().any(|c_set| {
            (1..=palette).any(|color| {
                let mut count = 0;
                for b in 1..=n {
                    let ok = c_set.iter().all(|&c| {
                        polys
                            .iter()
                            .all(|p| col(b + p.eval_i128(c as i128).unwrap()) == Some(color))
                    });
                    if ok {
                        count += 1;
                    }
                }
                count >= r
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn survivor_set_matches_definition(
            colors in prop::collection::vec(1u8..=2, 1..200),
            c_set in prop::collection::vec(1u64..30, 0..4),
            which in 0usize..3,
        ) {
            let ps = polys(["n,2n", "n^2", "n,3n,n^2-n"][which]);
            let w = ColorWindow::from_colors(2, &colors);
            let n = colors.len() as i128;
            for color in 1..=2u8 {
                let got = survivor_set(&w, &ps, &c_set, color);
                for b in 1..=n {
                    let want = c_set.iter().all(|&c| ps.iter().all(|p| {
                        let z = b + p.eval_i128(c as i128).unwrap();
                        z >= 1 && z <= n && colors[z as usize - 1] == color
                    }));
                    prop_assert_eq!(got.get(b as usize), want);
                }
            }
        }

        #[test]
        fn exhaustive_agrees_with_nested_loops(
            colors in prop::collection::vec(1u8..=2, 2..40),
            size in 1usize..=2,
        ) {
            let ps = polys("n,2n");
            let w = ColorWindow::from_colors(2, &colors);
            let found = exhaustive_search(&w, &ps, 2, size).unwrap();
            prop_assert_eq!(found.is_some(), nested_exists(&colors, &ps, 2, size));
            if let Some(f) = found {
                prop_assert_eq!(verify_in_window(&w, &f.config), Some(f.config.color));
                prop_assert_eq!(f.config.c.len(), size);
            }
            if let Ok(g) = greedy_search(&w, &ps, 2, 2, &GreedyOptions::default()) {
                prop_assert_eq!(verify_in_window(&w, &g.config), Some(g.config.color));
                let opt = (1..=2).rev().find(|&k| exhaustive_search(&w, &ps, 2, k).unwrap().is_some()).unwrap_or(0);
                prop_assert!(g.config.c.len() <= opt);
            }
        }
    }
}
