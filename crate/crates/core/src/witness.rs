//! Closed-form witness sets `(B, C)` for the four terminal cases of the
//! extraction argument, with exact checks of their sumset identities
//! `B + aC` and `B + bC`.
//!
//! All arithmetic is in `i128`; parameters are bounded so no intermediate
//! value can overflow.

use std::collections::BTreeSet;

use crate::descriptor::Descriptor;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessVariant {
    /// `B = {d~ + a(s + (r-1)t + b) + j(b-a)t : 0 <= j < r}`,
    /// `C = {d_i - s - (r-1)t - a}`.
    StepI { s: i128, t: i128, d: Vec<i128> },
    /// `B = {d~ + a^2 b(r+1) + aE/(b-a) + jab(b-a) : 1 <= j <= r}`,
    /// `C = {v_i/a - ab(r+1) - E/(b-a)}`. Optional anchors `(d_i, k_i)`
    /// must satisfy `E = (b/a)v_i - b d_i - 2b^2(b-a)k_i`.
    CaseI {
        e: i128,
        v: Vec<i128>,
        anchors: Option<Vec<(i128, i128)>>,
    },
    /// `B = {d~ + ((j-1)beta + 1)L0 a^2 b + (L0 - s_t)ab(b-a)}` over the
    /// offsets `s_t`, `C = {v_i/a - ((j-1)beta + 1)L0 ab}`.
    SituationI {
        j: i128,
        beta: i128,
        l0: i128,
        offsets: Vec<i128>,
        v: Vec<i128>,
    },
    /// `B = {d~ + a(xi - alpha)/(b-a) - alpha - jab(b-a)L0 beta : 0 <= j < r}`,
    /// `C = {v_i/a - (xi - alpha)/(b-a)}`.
    SituationII {
        xi: i128,
        alpha: i128,
        beta: i128,
        l0: i128,
        v: Vec<i128>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessParams {
    pub a: i128,
    pub b: i128,
    pub r: i128,
    /// The base shift `d~ >= 0`.
    pub shift: i128,
    pub variant: WitnessVariant,
}

/// Largest magnitude accepted for any parameter. No formula multiplies more
/// than six parameters, so every intermediate stays below `2^127`.
pub const PARAM_BOUND: i128 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

fn divides(d: i128, n: i128) -> bool {
    n % d == 0
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Divisibility(msg()))
    }
}

fn distinct(xs: &[i128], what: &str) -> Result<()> {
    let set: BTreeSet<_> = xs.iter().collect();
    if xs.is_empty() || set.len() != xs.len() {
        return Err(Error::BadParams(format!(
            "{what} must be nonempty and distinct"
        )));
    }
    Ok(())
}

impl WitnessParams {
    pub fn variant_name(&self) -> &'static str {
        match self.variant {
            WitnessVariant::StepI { .. } => "stepI",
            WitnessVariant::CaseI { .. } => "caseI",
            WitnessVariant::SituationI { .. } => "situationI",
            WitnessVariant::SituationII { .. } => "situationII",
        }
    }

    fn values(&self) -> Vec<i128> {
        let mut out = vec![self.a, self.b, self.r, self.shift];
        match &self.variant {
            WitnessVariant::StepI { s, t, d } => {
                out.extend([*s, *t]);
                out.extend(d);
            }
            WitnessVariant::CaseI { e, v, anchors } => {
                out.push(*e);
                out.extend(v);
                for (d, k) in anchors.iter().flatten() {
                    out.extend([*d, *k]);
                }
            }
            WitnessVariant::SituationI {
                j,
                beta,
                l0,
                offsets,
                v,
            } => {
                out.extend([*j, *beta, *l0]);
                out.extend(offsets);
                out.extend(v);
            }
            WitnessVariant::SituationII {
                xi,
                alpha,
                beta,
                l0,
                v,
            } => {
                out.extend([*xi, *alpha, *beta, *l0]);
                out.extend(v);
            }
        }
        out
    }

    /// Checks every side condition of the variant.
    pub fn validate(&self) -> Result<()> {
        let (a, b) = (self.a, self.b);
        if a <= 0 || a >= b {
            return Err(Error::BadParams(format!(
                "need 0 < a < b (got a={a}, b={b})"
            )));
        }
        if self.r < 1 || self.shift < 0 {
            return Err(Error::BadParams("need r >= 1 and shift >= 0".into()));
        }
        if self.values().iter().any(|x| x.abs() > PARAM_BOUND) || self.r > 4096 {
            return Err(Error::BadParams(format!(
                "parameters must lie within ±{PARAM_BOUND}, r <= 4096"
            )));
        }
        match &self.variant {
            WitnessVariant::StepI { s, t, d } => {
                if *s < 1 || *t < 1 {
                    return Err(Error::BadParams("need s, t >= 1".into()));
                }
                distinct(d, "d")?;
                need(divides(a, *t), || format!("a = {a} must divide t = {t}"))
            }
            WitnessVariant::CaseI { e, v, anchors } => {
                distinct(v, "v")?;
                need(divides(b * (b - a), *e), || {
                    format!("b(b-a) = {} must divide E = {e}", b * (b - a))
                })?;
                for x in v {
                    need(divides(a, *x), || format!("a = {a} must divide v = {x}"))?;
                }
                if let Some(anchors) = anchors {
                    if anchors.len() != v.len() {
                        return Err(Error::BadParams("one anchor (d, k) per value v".into()));
                    }
                    for (x, (d, k)) in v.iter().zip(anchors) {
                        let want = b * (x / a) - b * d - 2 * b * b * (b - a) * k;
                        if want != *e {
                            return Err(Error::BadParams(format!(
                                "anchor (d={d}, k={k}) gives E = {want}, not {e}"
                            )));
                        }
                    }
                }
                Ok(())
            }
            WitnessVariant::SituationI {
                j,
                beta,
                l0,
                offsets,
                v,
            } => {
                if *j < 1 || *beta < 1 || *l0 < 2 {
                    return Err(Error::BadParams("need j >= 1, beta >= 1, L0 >= 2".into()));
                }
                distinct(offsets, "offsets")?;
                distinct(v, "v")?;
                if offsets.iter().any(|s| *s < 1 || *s > l0 - 1) {
                    return Err(Error::BadParams(format!(
                        "offsets must lie in [1, {}]",
                        l0 - 1
                    )));
                }
                if offsets.len() as i128 != self.r {
                    return Err(Error::BadParams(
                        "r must equal the number of offsets".into(),
                    ));
                }
                for x in v {
                    need(divides(a, *x), || format!("a = {a} must divide v = {x}"))?;
                }
                Ok(())
            }
            WitnessVariant::SituationII {
                xi,
                alpha,
                beta,
                l0,
                v,
            } => {
                if *beta < 1 || *l0 < 1 {
                    return Err(Error::BadParams("need beta >= 1, L0 >= 1".into()));
                }
                distinct(v, "v")?;
                need(divides(b - a, xi - alpha), || {
                    format!("b - a = {} must divide xi - alpha = {}", b - a, xi - alpha)
                })?;
                for x in v {
                    need(divides(a, *x), || format!("a = {a} must divide v = {x}"))?;
                }
                Ok(())
            }
        }
    }

    /// The canonical descriptor, e.g. `kind=stepI;a=1;b=2;r=2;shift=0;s=1;t=1;d=10,20`.
    pub fn to_descriptor(&self) -> Descriptor {
        let list = |xs: &[i128]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let d = Descriptor::new(self.variant_name())
            .with("a", self.a)
            .with("b", self.b)
            .with("r", self.r)
            .with("shift", self.shift);
        match &self.variant {
            WitnessVariant::StepI { s, t, d: ds } => {
                d.with("s", s).with("t", t).with("d", list(ds))
            }
            WitnessVariant::CaseI { e, v, anchors } => {
                let d = d.with("e", e).with("v", list(v));
                match anchors {
                    Some(an) => {
                        let ds: Vec<i128> = an.iter().map(|x| x.0).collect();
                        let ks: Vec<i128> = an.iter().map(|x| x.1).collect();
                        d.with("d", list(&ds)).with("k", list(&ks))
                    }
                    None => d,
                }
            }
            WitnessVariant::SituationI {
                j,
                beta,
                l0,
                offsets,
                v,
            } => d
                .with("j", j)
                .with("beta", beta)
                .with("l0", l0)
                .with("offsets", list(offsets))
                .with("v", list(v)),
            WitnessVariant::SituationII {
                xi,
                alpha,
                beta,
                l0,
                v,
            } => d
                .with("xi", xi)
                .with("alpha", alpha)
                .with("beta", beta)
                .with("l0", l0)
                .with("v", list(v)),
        }
    }

    pub fn from_descriptor(desc: &Descriptor) -> Result<Self> {
        let int = |k: &str| -> Result<i128> {
            desc.require(k)?
                .parse()
                .map_err(|_| Error::BadParams(format!("'{k}' must be an integer")))
        };
        let list = |k: &str| -> Result<Vec<i128>> {
            desc.require(k)?
                .split(',')
                .map(|x| {
                    x.trim().parse().map_err(|_| {
                        Error::BadParams(format!("'{k}' must be a comma-separated integer list"))
                    })
                })
                .collect()
        };
        let shift = match desc.get("shift") {
            Some(_) => int("shift")?,
            None => 0,
        };
        let (a, b) = (int("a")?, int("b")?);
        let (r, variant) = match desc.kind() {
            "stepI" => (
                int("r")?,
                WitnessVariant::StepI {
                    s: int("s")?,
                    t: int("t")?,
                    d: list("d")?,
                },
            ),
            "caseI" => {
                let v = list("v")?;
                let anchors = match (desc.get("d"), desc.get("k")) {
                    (None, None) => None,
                    (Some(_), Some(_)) => {
                        let (ds, ks) = (list("d")?, list("k")?);
                        if ds.len() != ks.len() {
                            return Err(Error::BadParams(
                                "'d' and 'k' must have equal length".into(),
                            ));
                        }
                        Some(ds.into_iter().zip(ks).collect())
                    }
                    _ => return Err(Error::BadParams("anchors need both 'd' and 'k'".into())),
                };
                (
                    int("r")?,
                    WitnessVariant::CaseI {
                        e: int("e")?,
                        v,
                        anchors,
                    },
                )
            }
            "situationI" => {
                let offsets = list("offsets")?;
                let r = match desc.get("r") {
                    Some(_) => int("r")?,
                    None => offsets.len() as i128,
                };
                (
                    r,
                    WitnessVariant::SituationI {
                        j: int("j")?,
                        beta: int("beta")?,
                        l0: int("l0")?,
                        offsets,
                        v: list("v")?,
                    },
                )
            }
            "situationII" => (
                int("r")?,
                WitnessVariant::SituationII {
                    xi: int("xi")?,
                    alpha: int("alpha")?,
                    beta: int("beta")?,
                    l0: int("l0")?,
                    v: list("v")?,
                },
            ),
            other => {
                return Err(Error::BadParams(format!(
                    "unknown witness variant '{other}'"
                )))
            }
        };
        let p = WitnessParams {
            a,
            b,
            r,
            shift,
            variant,
        };
        p.validate()?;
        Ok(p)
    }

    /// Right-hand sides of the two displayed identities: the sets that
    /// `B + aC` and `B + bC` must equal.
    pub fn expected_sumsets(&self) -> Result<(BTreeSet<i128>, BTreeSet<i128>)> {
        self.validate()?;
        let (a, b, r, sh) = (self.a, self.b, self.r, self.shift);
        let mut lhs = BTreeSet::new();
        let mut rhs = BTreeSet::new();
        match &self.variant {
            WitnessVariant::StepI { s, t, d } => {
                for di in d {
                    for j in 0..r {
                        lhs.insert(sh + a * di + a * (b - a) + j * (b - a) * t);
                        rhs.insert(sh + b * di - (s + j * t) * (b - a));
                    }
                }
            }
            WitnessVariant::CaseI { e, v, anchors } => {
                let g = a * b * (b - a);
                for (i, vi) in v.iter().enumerate() {
                    for j in 1..=r {
                        lhs.insert(sh + vi + j * g);
                        rhs.insert(match anchors {
                            Some(an) => {
                                let (di, ki) = an[i];
                                sh + b * di + (2 * b * ki - j * a) * b * (b - a)
                            }
                            None => sh + b * (vi / a) - e - j * g,
                        });
                    }
                }
            }
            WitnessVariant::SituationI {
                j,
                beta,
                l0,
                offsets,
                v,
            } => {
                let g = a * b * (b - a);
                for vi in v {
                    for st in offsets {
                        lhs.insert(sh + vi + (l0 - st) * g);
                        rhs.insert(sh + b * (vi / a) - ((j - 1) * beta * l0 + st) * g);
                    }
                }
            }
            WitnessVariant::SituationII {
                xi,
                alpha,
                beta,
                l0,
                v,
            } => {
                let g = a * b * (b - a) * l0 * beta;
                for vi in v {
                    for j in 0..r {
                        lhs.insert(sh + vi - alpha - j * g);
                        rhs.insert(sh + b * (vi / a) - xi - j * g);
                    }
                }
            }
        }
        Ok((lhs, rhs))
    }
}

fn positive(xs: Vec<i128>, what: &str) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(xs.len());
    for x in xs {
        if x < 1 {
            return Err(Error::NonPositiveElement(format!("{what} contains {x}")));
        }
        out.push(x as u64);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The witness sets for `p`.
pub fn build_witness(p: &WitnessParams) -> Result<Witness> {
    p.validate()?;
    let (a, b, r, sh) = (p.a, p.b, p.r, p.shift);
    let (bs, cs): (Vec<i128>, Vec<i128>) = match &p.variant {
        WitnessVariant::StepI { s, t, d } => (
            (0..r)
                .map(|j| sh + a * (s + (r - 1) * t + b) + j * (b - a) * t)
                .collect(),
            d.iter().map(|di| di - s - (r - 1) * t - a).collect(),
        ),
        WitnessVariant::CaseI { e, v, .. } => {
            let q = e / (b - a);
            (
                (1..=r)
                    .map(|j| sh + a * a * b * (r + 1) + a * q + j * a * b * (b - a))
                    .collect(),
                v.iter().map(|vi| vi / a - a * b * (r + 1) - q).collect(),
            )
        }
        WitnessVariant::SituationI {
            j,
            beta,
            l0,
            offsets,
            v,
        } => {
            let m = ((j - 1) * beta + 1) * l0;
            (
                offsets
                    .iter()
                    .map(|st| sh + m * a * a * b + (l0 - st) * a * b * (b - a))
                    .collect(),
                v.iter().map(|vi| vi / a - m * a * b).collect(),
            )
        }
        WitnessVariant::SituationII {
            xi,
            alpha,
            beta,
            l0,
            v,
        } => {
            let q = (xi - alpha) / (b - a);
            (
                (0..r)
                    .map(|j| sh + a * q - alpha - j * a * b * (b - a) * l0 * beta)
                    .collect(),
                v.iter().map(|vi| vi / a - q).collect(),
            )
        }
    };
    Ok(Witness {
        b: positive(bs, "B")?,
        c: positive(cs, "C")?,
    })
}

/// Whether `B + aC` and `B + bC` equal the displayed right-hand sides.
pub fn check_sumset_identity(p: &WitnessParams, b_set: &[u64], c_set: &[u64]) -> bool {
    let Ok((want_a, want_b)) = p.expected_sumsets() else {
        return false;
    };
    let sum = |k: i128| -> BTreeSet<i128> {
        b_set
            .iter()
            .flat_map(|&h| c_set.iter().map(move |&c| h as i128 + k * c as i128))
            .collect()
    };
    !b_set.is_empty() && !c_set.is_empty() && sum(p.a) == want_a && sum(p.b) == want_b
}
