//! Deterministic colorings of the positive integers.

mod breaks;
pub mod case2;
pub mod custom;
pub mod interval;
pub mod recursive;
pub mod rle;
mod spec;
mod window;

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use breaks::BreakTable;
use case2::Case2Coloring;
use custom::RandomColoring;
use recursive::RecursiveColoring;

use crate::descriptor::Descriptor;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

pub use interval::{Geo3Params, IntervalScheme, TripleParams};
pub use recursive::{find_admissible_a0, Level, RecursiveColoringState};
pub use rle::RunLength;
pub use spec::{parse_coloring_spec, parse_coloring_spec_seeded};
pub use window::ColorWindow;

#[derive(Clone)]
enum Oracle {
    Table(Arc<BreakTable>),
    Periodic(Arc<[u8]>),
    Random(RandomColoring),
    Case2(Arc<Case2Coloring>),
    Recursive(Arc<RecursiveColoring>),
}

/// A total map from the positive integers to `1..=palette`.
#[derive(Clone)]
pub struct Coloring {
    palette: u8,
    descriptor: Descriptor,
    oracle: Oracle,
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Coloring")
            .field("palette", &self.palette)
            .field("descriptor", &self.descriptor.to_string())
            .finish()
    }
}

/// Explicit colorings supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CustomSpec {
    /// Colors of `1, 2, ...`; color 1 past the end.
    Explicit(Vec<u8>),
    /// Repeated with period `pattern.len()`, starting at 1.
    Periodic(Vec<u8>),
    Random {
        seed: u64,
        palette: u8,
    },
}

fn symbols_palette(symbols: &[u8]) -> Result<u8> {
    if symbols.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if symbols.contains(&0) {
        return Err(Error::BadParams("colors start at 1".into()));
    }
    Ok(symbols.iter().copied().max().unwrap().max(2))
}

fn format_symbols(symbols: &[u8]) -> String {
    if symbols.iter().all(|&s| s <= 9) {
        symbols.iter().map(|s| char::from(b'0' + s)).collect()
    } else {
        symbols
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub(crate) fn parse_symbols(s: &str) -> Result<Vec<u8>> {
    let bad = || Error::BadParams(format!("'{s}' is not a color pattern"));
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
            .collect()
    }
}

pub fn power_2coloring(a: u64, b: u64) -> Result<Coloring> {
    let table = interval::power_scheme(a, b)?.table()?;
    Ok(Coloring {
        palette: 2,
        descriptor: Descriptor::new("power2").with("a", a).with("b", b),
        oracle: Oracle::Table(Arc::new(table)),
    })
}

pub fn geometric_3coloring(a: u64, b: u64, params: Option<Geo3Params>) -> Result<Coloring> {
    let (l, x, y) = interval::geo3_resolve(a, b, &params.unwrap_or_default())?;
    let descriptor = interval::descriptor_geo3(a, b, &l, &x, &y);
    let table = interval::geo3_scheme(l, x, y).table()?;
    Ok(Coloring {
        palette: 3,
        descriptor,
        oracle: Oracle::Table(Arc::new(table)),
    })
}

pub fn triple_2coloring(a: u64, b: u64, c: u64, params: Option<TripleParams>) -> Result<Coloring> {
    let (x, l) = interval::triple_resolve(a, b, c, &params.unwrap_or_default())?;
    let descriptor = interval::descriptor_triple(a, b, c, &x, &l);
    let table = interval::triple_scheme(x, l).table()?;
    Ok(Coloring {
        palette: 2,
        descriptor,
        oracle: Oracle::Table(Arc::new(table)),
    })
}

pub fn case2_coloring(p: &IntPolynomial, q: &IntPolynomial) -> Result<Coloring> {
    let c = Case2Coloring::new(p, q)?;
    Ok(Coloring {
        palette: 2,
        descriptor: Descriptor::new("case2")
            .with("P", p.to_compact_string())
            .with("Q", q.to_compact_string()),
        oracle: Oracle::Case2(Arc::new(c)),
    })
}

pub fn recursive_log_coloring(
    p: &IntPolynomial,
    q: &IntPolynomial,
    a0: Option<u64>,
    window: u64,
) -> Result<Coloring> {
    let rc = RecursiveColoring::new(p, q, a0, window)?;
    Ok(Coloring {
        palette: 2,
        descriptor: Descriptor::new("recursive")
            .with("P", p.to_compact_string())
            .with("Q", q.to_compact_string())
            .with("a0", rc.a0())
            .with("window", window),
        oracle: Oracle::Recursive(Arc::new(rc)),
    })
}

pub fn custom_coloring(spec: CustomSpec) -> Result<Coloring> {
    match spec {
        CustomSpec::Explicit(symbols) => {
            let palette = symbols_palette(&symbols)?;
            let descriptor = Descriptor::new("explicit").with("colors", format_symbols(&symbols));
            Ok(Coloring {
                palette,
                descriptor,
                oracle: Oracle::Table(Arc::new(table_from_symbols(&symbols))),
            })
        }
        CustomSpec::Periodic(symbols) => {
            let palette = symbols_palette(&symbols)?;
            let descriptor = Descriptor::new("periodic").with("pattern", format_symbols(&symbols));
            Ok(Coloring {
                palette,
                descriptor,
                oracle: Oracle::Periodic(symbols.into()),
            })
        }
        CustomSpec::Random { seed, palette } => {
            if palette < 2 {
                return Err(Error::BadParams("palette must be at least 2".into()));
            }
            Ok(Coloring {
                palette,
                descriptor: Descriptor::new("random")
                    .with("seed", seed)
                    .with("k", palette),
                oracle: Oracle::Random(RandomColoring::new(seed, palette)),
            })
        }
    }
}

fn table_from_symbols(symbols: &[u8]) -> BreakTable {
    let mut t = BreakTable::new(symbols[0]);
    for (i, &c) in symbols.iter().enumerate() {
        t.push(i as u64 + 1, c);
    }
    t.push(symbols.len() as u64 + 1, 1);
    t
}

/// Coloring that follows a run-length file and is 1 past its end.
pub fn from_run_length(rl: &RunLength, path: &str) -> Result<Coloring> {
    if rl.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let mut t = BreakTable::new(rl.runs[0].0);
    let mut pos = 1u64;
    for &(c, len) in &rl.runs {
        t.push(pos, c);
        pos = pos
            .checked_add(len)
            .ok_or_else(|| Error::Overflow("run lengths exceed u64".into()))?;
    }
    t.push(pos, 1);
    Ok(Coloring {
        palette: rl.palette,
        descriptor: Descriptor::new("file").with("path", path),
        oracle: Oracle::Table(Arc::new(t)),
    })
}

pub fn load_run_length_file(path: &Path) -> Result<Coloring> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let rl: RunLength = text.parse()?;
    from_run_length(&rl, &path.display().to_string())
}

/// Colors of `[1, n]` as one bit-vector per color.
pub fn window(c: &Coloring, n: usize) -> ColorWindow {
    c.window(n)
}

impl Coloring {
    pub fn palette(&self) -> u8 {
        self.palette
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    /// Color of `z >= 1`.
    pub fn color(&self, z: u64) -> u8 {
        assert!(z >= 1, "colorings are defined on positive integers");
        match &self.oracle {
            Oracle::Table(t) => t.color(z),
            Oracle::Periodic(p) => p[((z - 1) % p.len() as u64) as usize],
            Oracle::Random(r) => r.color(z),
            Oracle::Case2(c) => c.color(z),
            Oracle::Recursive(r) => r.color(z),
        }
    }

    /// Colors of `start, start + 1, ...` into `out`.
    pub fn fill(&self, start: u64, out: &mut [u8]) {
        match &self.oracle {
            Oracle::Random(r) => r.fill(start, out),
            _ => {
                let mut cur = self.cursor();
                for (i, slot) in out.iter_mut().enumerate() {
                    *slot = cur.color(start + i as u64);
                }
            }
        }
    }

    pub fn colors(&self, start: u64, len: usize) -> Vec<u8> {
        let mut out = vec![0; len];
        self.fill(start, &mut out);
        out
    }

    pub fn window(&self, n: usize) -> ColorWindow {
        ColorWindow::from_colors(self.palette, &self.colors(1, n))
    }

    /// Lookup handle that is fast for nondecreasing query sequences.
    pub fn cursor(&self) -> ColorCursor<'_> {
        ColorCursor {
            coloring: self,
            run: 0,
        }
    }

    /// Run-length encoding of `[1, n]`.
    pub fn run_length(&self, n: usize) -> RunLength {
        RunLength::encode(self.palette, &self.colors(1, n))
    }

    pub fn case2(&self) -> Option<&Case2Coloring> {
        match &self.oracle {
            Oracle::Case2(c) => Some(c),
            _ => None,
        }
    }

    pub fn recursive_state(&self) -> Option<RecursiveColoringState> {
        match &self.oracle {
            Oracle::Recursive(r) => Some(r.state()),
            _ => None,
        }
    }

    /// Builds the coloring a descriptor records.
    pub fn from_descriptor(d: &Descriptor) -> Result<Coloring> {
        let u = |k: &str| -> Result<u64> {
            d.get_u64(k)?
                .ok_or_else(|| Error::BadParams(format!("missing parameter '{k}'")))
        };
        let poly = |k: &str| -> Result<IntPolynomial> { d.require(k)?.parse() };
        match d.kind() {
            "power2" => power_2coloring(u("a")?, u("b")?),
            "geo3" => geometric_3coloring(
                u("a")?,
                u("b")?,
                Some(Geo3Params {
                    l: d.get_ratio("l")?,
                    x: d.get_ratio("x")?,
                    y: d.get_ratio("y")?,
                }),
            ),
            "triple" => triple_2coloring(
                u("a")?,
                u("b")?,
                u("c")?,
                Some(TripleParams {
                    x: d.get_ratio("x")?,
                    l: d.get_ratio("l")?,
                }),
            ),
            "case2" => case2_coloring(&poly("P")?, &poly("Q")?),
            "recursive" => {
                let a0 = d.get_u64("a0")?;
                let window = d.get_u64("window")?;
                let (p, q) = (poly("P")?, poly("Q")?);
                match (a0, window) {
                    (a0, Some(w)) => recursive_log_coloring(&p, &q, a0, w),
                    (Some(a0), None) => recursive_log_coloring(&p, &q, Some(a0), a0),
                    (None, None) => {
                        let a0 = find_admissible_a0(&p, &q, recursive::DEFAULT_SCAN_LIMIT)?;
                        recursive_log_coloring(&p, &q, Some(a0), a0)
                    }
                }
            }
            "periodic" => {
                custom_coloring(CustomSpec::Periodic(parse_symbols(d.require("pattern")?)?))
            }
            "explicit" => {
                custom_coloring(CustomSpec::Explicit(parse_symbols(d.require("colors")?)?))
            }
            "random" => {
                let seed = d.get_u64("seed")?.unwrap_or(0);
                let k = d.get_u64("k")?.unwrap_or(2);
                let palette = u8::try_from(k)
                    .map_err(|_| Error::BadParams("palette must be at most 255".into()))?;
                custom_coloring(CustomSpec::Random { seed, palette })
            }
            "file" => load_run_length_file(Path::new(d.require("path")?)),
            other => Err(Error::BadParams(format!("unknown coloring kind '{other}'"))),
        }
    }

    /// Parses a `kind[:params][@file]` spec and builds it.
    pub fn from_spec(s: &str) -> Result<Coloring> {
        Coloring::from_descriptor(&parse_coloring_spec(s)?)
    }
}

pub struct ColorCursor<'a> {
    coloring: &'a Coloring,
    run: usize,
}

impl ColorCursor<'_> {
    pub fn color(&mut self, z: u64) -> u8 {
        match &self.coloring.oracle {
            Oracle::Table(t) => {
                let i = self.run;
                let next = |k: usize| {
                    if k + 1 < t.len() {
                        t.start(k + 1)
                    } else {
                        u64::MAX
                    }
                };
                if z >= t.start(i) {
                    if z < next(i) || (i + 1 == t.len()) {
                        return t.color_of_run(i);
                    }
                    if i + 2 >= t.len() || z < next(i + 1) {
                        self.run = i + 1;
                        return t.color_of_run(i + 1);
                    }
                }
                self.run = t.run_index(z);
                t.color_of_run(self.run)
            }
            _ => self.coloring.color(z),
        }
    }
}
