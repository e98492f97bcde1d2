use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use sumset_ramsey::coloring::parse_coloring_spec_seeded;
use sumset_ramsey::descriptor::parse_ratio;
use sumset_ramsey::dynamics::{
    density_profile, dichotomy_detect, max_gap, return_set, DensityPoint, Word,
};
use sumset_ramsey::poly::parse_poly_list;
use sumset_ramsey::search::{
    bad_sets_all_colors, exhaustive_search, gowers_threshold, greedy_search, growth_curve,
    longest_ap, verify_config, AuditReport, GreedyOptions,
};
use sumset_ramsey::witness::{build_witness, check_sumset_identity, WitnessParams};
use sumset_ramsey::{real, Coloring, Descriptor, Error, IntPolynomial};

use crate::args::*;
use crate::{n_max, Failure, EXIT_DOMAIN};

pub struct Outcome {
    pub text: String,
    /// Set when the output is complete but the verdict it reports is negative.
    pub failure: Option<Failure>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            failure: None,
        }
    }
}

type Res<T> = Result<T, Failure>;

pub fn execute(cli: &Cli) -> Res<Outcome> {
    match &cli.command {
        Command::Color(a) => color(a, cli.seed).map(Outcome::ok),
        Command::Search(a) => search(a, cli.seed).map(Outcome::ok),
        Command::Audit(a) => audit(a, cli.seed).map(Outcome::ok),
        Command::Ap(a) => ap(a).map(Outcome::ok),
        Command::Dynamics(a) => dynamics(a, cli.seed).map(Outcome::ok),
        Command::Witness(a) => witness(a),
    }
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output is always serializable");
    s.push('\n');
    s
}

/// Floats are printed with twelve decimals so output is byte-stable.
fn fixed(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}

fn polys(s: &str) -> Res<Vec<IntPolynomial>> {
    parse_poly_list(s).map_err(Failure::usage)
}

fn poly_strings(ps: &[IntPolynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

/// Integers separated by commas or whitespace.
fn int_list<T: std::str::FromStr>(s: &str, what: &str) -> Res<Vec<T>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for tok in s.split(|c: char| c == ',' || c.is_whitespace()) {
        if !tok.is_empty() {
            let v = tok.parse().map_err(|_| {
                Failure::usage(Error::Parse {
                    pos,
                    msg: format!("{what}: '{tok}' is not a valid integer"),
                })
            })?;
            out.push(v);
        }
        pos += tok.len() + 1;
    }
    Ok(out)
}

fn window_len(n: u64) -> Res<usize> {
    let cap = n_max()?;
    if n == 0 {
        return Err(Failure::usage(Error::BadParams(
            "N must be positive".into(),
        )));
    }
    if n > cap {
        return Err(Failure::domain(Error::Domain(format!(
            "N = {n} exceeds the window cap {cap}; raise {} to allow it",
            crate::NMAX_VAR
        ))));
    }
    Ok(n as usize)
}

fn build(mut d: Descriptor) -> Res<Coloring> {
    if d.kind() == "recursive" && d.get("window").is_none() {
        d.set("window", n_max()?);
    }
    Ok(Coloring::from_descriptor(&d)?)
}

fn coloring_from_spec(spec: &str, seed: u64) -> Res<Coloring> {
    build(parse_coloring_spec_seeded(spec, seed).map_err(Failure::usage)?)
}

fn coloring_from_flags(a: &ColorArgs, seed: u64) -> Res<Coloring> {
    if let Some(spec) = &a.coloring {
        return coloring_from_spec(spec, seed);
    }
    let kind = a.kind.as_deref().unwrap_or_default();
    const KINDS: [&str; 9] = [
        "power2",
        "geo3",
        "triple",
        "case2",
        "recursive",
        "periodic",
        "explicit",
        "random",
        "file",
    ];
    if !KINDS.contains(&kind) {
        return Err(Failure::usage(Error::BadParams(format!(
            "unknown coloring kind '{kind}'"
        ))));
    }
    let mut d = Descriptor::new(kind);
    for (key, v) in [
        ("a", a.a),
        ("b", a.b),
        ("c", a.c),
        ("a0", a.a0),
        ("window", a.window),
        ("k", a.k),
    ] {
        if let Some(v) = v {
            d.set(key, v);
        }
    }
    for (key, v) in [("l", &a.l), ("x", &a.x), ("y", &a.y)] {
        if let Some(v) = v {
            parse_ratio(v).map_err(Failure::usage)?;
            d.set(key, v);
        }
    }
    for (key, v) in [("P", &a.p), ("Q", &a.q)] {
        if let Some(v) = v {
            v.parse::<IntPolynomial>().map_err(Failure::usage)?;
            d.set(key, v);
        }
    }
    for (key, v) in [
        ("pattern", &a.pattern),
        ("colors", &a.colors),
        ("path", &a.path),
    ] {
        if let Some(v) = v {
            d.set(key, v);
        }
    }
    if kind == "random" && d.get("seed").is_none() {
        d.set("seed", seed);
    }
    build(d)
}

#[derive(Serialize)]
struct ColorJson {
    coloring: String,
    palette: u8,
    #[serde(rename = "N")]
    n: u64,
    runs: Vec<(u8, u64)>,
}

fn color(a: &ColorArgs, seed: u64) -> Res<String> {
    let n = window_len(a.n)?;
    let c = coloring_from_flags(a, seed)?;
    let rl = c.run_length(n);
    Ok(match a.out {
        ColorFormat::Runlength => rl.to_string(),
        ColorFormat::Json => json(&ColorJson {
            coloring: c.descriptor().to_string(),
            palette: c.palette(),
            n: a.n,
            runs: rl.runs,
        }),
        ColorFormat::Text => {
            let symbols = c.colors(1, n);
            let sep = if c.palette() > 9 { "," } else { "" };
            let mut s = symbols
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(sep);
            s.push('\n');
            s
        }
    })
}

fn pool(threads: usize) -> Res<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| {
            Failure::domain(Error::BadParams(format!(
                "cannot start {threads} threads: {e}"
            )))
        })
}

#[derive(Serialize)]
struct ConfigJson {
    coloring: String,
    strategy: &'static str,
    #[serde(rename = "N")]
    n: u64,
    polys: Vec<String>,
    r: usize,
    color: u8,
    #[serde(rename = "B")]
    b: Vec<u64>,
    #[serde(rename = "C")]
    c: Vec<u64>,
    survivors: u64,
    verified: bool,
}

fn search(a: &SearchArgs, seed: u64) -> Res<String> {
    let ps = polys(&a.polys)?;
    let n = window_len(a.n)?;
    let c = coloring_from_spec(&a.coloring, seed)?;
    let w = c.window(n);
    let found = pool(a.threads)?.install(|| match a.strategy {
        Strategy::Greedy => {
            let opts = GreedyOptions {
                stride: a.stride,
                max_candidates: a.max_candidates,
            };
            greedy_search(&w, &ps, a.r, a.max_c, &opts)
        }
        Strategy::Exhaustive => {
            exhaustive_search(&w, &ps, a.r, a.size_c)?.ok_or(Error::NoConfiguration)
        }
    })?;
    let verified = verify_config(&c, &found.config) == Some(found.config.color);
    Ok(json(&ConfigJson {
        coloring: c.descriptor().to_string(),
        strategy: match a.strategy {
            Strategy::Greedy => "greedy",
            Strategy::Exhaustive => "exhaustive",
        },
        n: a.n,
        polys: poly_strings(&ps),
        r: a.r,
        color: found.config.color,
        b: found.config.b,
        c: found.config.c,
        survivors: found.survivors,
        verified,
    }))
}

fn audit(a: &AuditArgs, seed: u64) -> Res<String> {
    let ps = polys(&a.polys)?;
    let ns: Vec<u64> = match (&a.n, a.n_max) {
        (Some(list), _) => int_list(list, "--n")?,
        (None, Some(max)) => (1..=max).collect(),
        (None, None) => unreachable!("clap requires --n or --n-max"),
    };
    if ns.is_empty() || ns.contains(&0) {
        return Err(Failure::usage(Error::BadParams(
            "n must be positive".into(),
        )));
    }
    if a.format == TableFormat::Csv && a.steps == 0 {
        return Err(Failure::usage(Error::BadParams(
            "--steps must be positive".into(),
        )));
    }
    let c = coloring_from_spec(&a.coloring, seed)?;
    let sets: Vec<Vec<Vec<u64>>> = pool(a.threads)?.install(|| {
        ns.par_iter()
            .map(|&n| bad_sets_all_colors(&c, n, &ps, a.m))
            .collect::<Result<_, Error>>()
    })?;
    Ok(match a.format {
        TableFormat::Json => {
            let reports: Vec<AuditReport> = ns
                .iter()
                .zip(&sets)
                .flat_map(|(&n, per_color)| {
                    per_color
                        .iter()
                        .enumerate()
                        .map(move |(i, s)| AuditReport::from_set(n, i as u8 + 1, s, a.m))
                })
                .collect();
            json(&reports)
        }
        TableFormat::Csv => {
            let mut horizons: Vec<u64> = (1..=a.steps)
                .map(|i| a.m * i / a.steps)
                .filter(|&m| m > 0)
                .collect();
            horizons.dedup();
            let mut s = String::from("n,color,M,count,max_element\n");
            for (&n, per_color) in ns.iter().zip(&sets) {
                for (i, set) in per_color.iter().enumerate() {
                    for g in growth_curve(set, &horizons) {
                        let max = g.max_element.map(|m| m.to_string()).unwrap_or_default();
                        s.push_str(&format!("{n},{},{},{},{max}\n", i + 1, g.horizon, g.count));
                    }
                }
            }
            s
        }
    })
}

#[derive(Serialize)]
struct GowersJson {
    k: u32,
    #[serde(rename = "N")]
    n: u64,
    ln_n: f64,
    deficit_log2: f64,
    above_threshold: bool,
}

#[derive(Serialize)]
struct ApJson {
    size: usize,
    start: u64,
    difference: u64,
    length: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gowers: Option<GowersJson>,
}

fn ap(a: &ApArgs) -> Res<String> {
    let text = match (&a.set, &a.input) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(Error::Io(format!("{path}: {e}"))))?,
        (None, None) => unreachable!("clap requires --set or --input"),
    };
    let set: BTreeSet<u64> = int_list::<u64>(&text, "set")?.into_iter().collect();
    if set.contains(&0) {
        return Err(Failure::usage(Error::BadParams(
            "set elements must be positive".into(),
        )));
    }
    let v: Vec<u64> = set.into_iter().collect();
    let p = longest_ap(&v)?;
    let gowers = match a.gowers_k {
        Some(k) => {
            let n = *v.last().unwrap();
            let g = gowers_threshold(k, n)?;
            GowersJson {
                k,
                n,
                ln_n: fixed(g.to_f64()),
                deficit_log2: fixed(real::to_f64(&g.deficit_log2())),
                // any S within [1, N] short of all of it falls below ln N
                // by at least 1/N, far more than the deficit
                above_threshold: v.len() as u64 == n,
            }
            .into()
        }
        None => None,
    };
    Ok(json(&ApJson {
        size: v.len(),
        start: p.start,
        difference: p.difference,
        length: p.length,
        gowers,
    }))
}

#[derive(Serialize)]
struct Density {
    window: u64,
    density: f64,
}

#[derive(Serialize)]
struct ReturnsJson {
    word: String,
    #[serde(rename = "N")]
    n: u64,
    a: u64,
    b: u64,
    h: u64,
    #[serde(rename = "M")]
    m: u64,
    count: usize,
    elements: Vec<u64>,
    max_gap: u64,
    density: Vec<Density>,
}

#[derive(Serialize)]
struct DichotomyJson {
    y: String,
    z: String,
    #[serde(rename = "N")]
    n: u64,
    a: u64,
    b: u64,
    #[serde(rename = "D")]
    d_max: u64,
    #[serde(rename = "K")]
    k_max: u64,
    d: Option<u64>,
}

fn word(spec: &str, n: u64, seed: u64) -> Res<(Word, String)> {
    let len = window_len(n)?;
    let c = coloring_from_spec(spec, seed)?;
    Ok((Word::from_coloring(&c, len)?, c.descriptor().to_string()))
}

fn dynamics(a: &DynamicsArgs, seed: u64) -> Res<String> {
    match &a.op {
        DynamicsOp::Returns {
            word: spec,
            n,
            a,
            b,
            h,
            m,
            widths,
        } => {
            let widths: Vec<u64> = match widths {
                Some(w) => int_list(w, "--widths")?,
                None => Vec::new(),
            };
            let (x, desc) = word(spec, *n, seed)?;
            let rs = return_set(&x, *a, *b, *h, *m)?;
            let density = density_profile(&rs.elements, *m, &widths)?
                .into_iter()
                .map(|DensityPoint { window, density }| Density {
                    window,
                    density: fixed(density),
                })
                .collect();
            Ok(json(&ReturnsJson {
                word: desc,
                n: *n,
                a: *a,
                b: *b,
                h: *h,
                m: *m,
                count: rs.elements.len(),
                max_gap: max_gap(&rs.elements, *m),
                elements: rs.elements,
                density,
            }))
        }
        DynamicsOp::Dichotomy {
            y,
            z,
            n,
            a,
            b,
            d,
            k,
        } => {
            let (yw, yd) = word(y, *n, seed)?;
            let (zw, zd) = word(z, *n, seed)?;
            let found = dichotomy_detect(&yw, &zw, *a, *b, *d, *k)?;
            Ok(json(&DichotomyJson {
                y: yd,
                z: zd,
                n: *n,
                a: *a,
                b: *b,
                d_max: *d,
                k_max: *k,
                d: found,
            }))
        }
    }
}

#[derive(Serialize)]
struct WitnessJson {
    variant: &'static str,
    params: String,
    #[serde(rename = "B")]
    b: Vec<u64>,
    #[serde(rename = "C")]
    c: Vec<u64>,
    #[serde(rename = "B_plus_aC")]
    b_plus_ac: Vec<i128>,
    #[serde(rename = "B_plus_bC")]
    b_plus_bc: Vec<i128>,
    identity: bool,
    notes: Vec<String>,
}

fn required_keys(variant: &str) -> Res<&'static [&'static str]> {
    Ok(match variant {
        "stepI" => &["a", "b", "r", "s", "t", "d"],
        "caseI" => &["a", "b", "r", "e", "v"],
        "situationI" => &["a", "b", "j", "beta", "l0", "offsets", "v"],
        "situationII" => &["a", "b", "r", "xi", "alpha", "beta", "l0", "v"],
        other => {
            return Err(Failure::usage(Error::BadParams(format!(
                "unknown witness variant '{other}'"
            ))));
        }
    })
}

fn witness_descriptor(a: &WitnessArgs) -> Res<Descriptor> {
    if let Some(p) = &a.params {
        return p.parse().map_err(Failure::usage);
    }
    let mut d = Descriptor::new(a.variant.as_deref().unwrap_or_default());
    let flags = [
        ("a", &a.a),
        ("b", &a.b),
        ("r", &a.r),
        ("shift", &a.shift),
        ("s", &a.s),
        ("t", &a.t),
        ("d", &a.d),
        ("e", &a.e),
        ("v", &a.v),
        ("k", &a.k),
        ("j", &a.j),
        ("beta", &a.beta),
        ("l0", &a.l0),
        ("offsets", &a.offsets),
        ("xi", &a.xi),
        ("alpha", &a.alpha),
    ];
    for (key, v) in flags {
        if let Some(v) = v {
            d.set(key, v);
        }
    }
    Ok(d)
}

fn sumset(b: &[u64], c: &[u64], m: i128) -> Vec<i128> {
    let s: BTreeSet<i128> = b
        .iter()
        .flat_map(|&x| c.iter().map(move |&y| x as i128 + m * y as i128))
        .collect();
    s.into_iter().collect()
}

fn witness(a: &WitnessArgs) -> Res<Outcome> {
    let d = witness_descriptor(a)?;
    for key in required_keys(d.kind())? {
        d.require(key).map_err(Failure::usage)?;
    }
    let p = WitnessParams::from_descriptor(&d)?;
    let (b, c) = match (&a.b_set, &a.c_set) {
        (Some(b), Some(c)) => (int_list(b, "--B")?, int_list(c, "--C")?),
        (None, None) => {
            let w = build_witness(&p)?;
            (w.b, w.c)
        }
        _ => {
            return Err(Failure::usage(Error::BadParams(
                "--B and --C go together".into(),
            )))
        }
    };
    let identity = check_sumset_identity(&p, &b, &c);
    let mut notes = Vec::new();
    if d.kind() == "caseI" && d.get("k").is_none() {
        notes.push("no (d, k) anchors supplied; the E constraint was not checked".to_string());
    }
    let text = json(&WitnessJson {
        variant: p.variant_name(),
        params: p.to_descriptor().to_string(),
        b_plus_ac: sumset(&b, &c, p.a),
        b_plus_bc: sumset(&b, &c, p.b),
        b,
        c,
        identity,
        notes,
    });
    let failure = (a.check && !identity).then(|| Failure {
        code: EXIT_DOMAIN,
        error: "IdentityFailed".into(),
        message: "B + aC or B + bC differs from the closed form".into(),
        position: None,
    });
    Ok(Outcome { text, failure })
}
