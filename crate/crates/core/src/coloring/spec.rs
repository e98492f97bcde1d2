//! Command-line coloring specs: `kind[:params][@file]`.
//!
//! Parameters are comma-separated; bare values fill the kind's positional
//! slots in order and `key=value` items set slots by name.
//!
//! ```text
//! power2:1,2
//! geo3:1,2,l=4,x=3,y=8/5
//! case2:n^2,n^2+2n
//! random:seed=7,k=3
//! file@coloring.rl
//! ```

use crate::descriptor::{parse_ratio, Descriptor};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Int,
    Ratio,
    Poly,
    Symbols,
    Text,
}

fn slots(kind: &str) -> Option<&'static [(&'static str, Slot)]> {
    use Slot::*;
    Some(match kind {
        "power2" => &[("a", Int), ("b", Int)],
        "geo3" => &[
            ("a", Int),
            ("b", Int),
            ("l", Ratio),
            ("x", Ratio),
            ("y", Ratio),
        ],
        "triple" => &[
            ("a", Int),
            ("b", Int),
            ("c", Int),
            ("x", Ratio),
            ("l", Ratio),
        ],
        "case2" => &[("P", Poly), ("Q", Poly)],
        "recursive" => &[("P", Poly), ("Q", Poly), ("a0", Int), ("window", Int)],
        "periodic" => &[("pattern", Symbols)],
        "constant" => &[("color", Int)],
        "explicit" => &[("colors", Symbols)],
        "random" => &[("seed", Int), ("k", Int)],
        "file" => &[("path", Text)],
        _ => return None,
    })
}

fn check(slot: Slot, value: &str, pos: usize) -> Result<()> {
    let ok = match slot {
        Slot::Int => value.parse::<u64>().is_ok(),
        Slot::Ratio => parse_ratio(value).is_ok(),
        Slot::Poly => {
            return value
                .parse::<IntPolynomial>()
                .map(|_| ())
                .map_err(|e| match e {
                    Error::Parse { pos: p, msg } => Error::parse(pos + p, msg),
                    other => Error::parse(pos, other.to_string()),
                })
        }
        Slot::Symbols => super::parse_symbols(value).is_ok_and(|s| !s.is_empty()),
        Slot::Text => !value.is_empty(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::parse(pos, format!("invalid value '{value}'")))
    }
}

/// Parses a coloring spec into the descriptor of the coloring it names.
///
/// `constant:c` is shorthand for the periodic pattern `c`.
pub fn parse_coloring_spec(s: &str) -> Result<Descriptor> {
    parse_coloring_spec_seeded(s, 0)
}

/// As [`parse_coloring_spec`], with `default_seed` for `random` specs that
/// leave the seed out.
pub fn parse_coloring_spec_seeded(s: &str, default_seed: u64) -> Result<Descriptor> {
    let (head, file) = match s.find('@') {
        Some(i) => (&s[..i], Some((i + 1, &s[i + 1..]))),
        None => (s, None),
    };
    let (kind, params) = match head.find(':') {
        Some(i) => (&head[..i], Some((i + 1, &head[i + 1..]))),
        None => (head, None),
    };
    let kind = kind.trim();
    let table =
        slots(kind).ok_or_else(|| Error::parse(0, format!("unknown coloring kind '{kind}'")))?;
    let mut d = Descriptor::new(kind);
    let mut next = 0usize;
    if let Some((start, params)) = params {
        let mut offset = start;
        for item in params.split(',') {
            let here = offset;
            offset += item.len() + 1;
            let item = item.trim();
            if item.is_empty() {
                return Err(Error::parse(here, "empty parameter"));
            }
            let (key, value, vpos) = match item.split_once('=') {
                Some((k, v)) => (k.trim(), v.trim(), here + item.find('=').unwrap() + 1),
                None => {
                    let (k, _) = *table.get(next).ok_or_else(|| {
                        Error::parse(here, format!("too many parameters for '{kind}'"))
                    })?;
                    next += 1;
                    (k, item, here)
                }
            };
            let slot = table
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, s)| *s)
                .ok_or_else(|| Error::parse(here, format!("'{kind}' has no parameter '{key}'")))?;
            if d.get(key).is_some() {
                return Err(Error::parse(here, format!("parameter '{key}' given twice")));
            }
            check(slot, value, vpos)?;
            d.set(key, value);
        }
    }
    if let Some((pos, path)) = file {
        if kind != "file" {
            return Err(Error::parse(pos - 1, "only 'file' takes an @path"));
        }
        if d.get("path").is_some() {
            return Err(Error::parse(pos - 1, "path given twice"));
        }
        check(Slot::Text, path, pos)?;
        d.set("path", path);
    }
    match kind {
        "constant" => {
            let c = d.get("color").unwrap_or("1").to_string();
            Ok(Descriptor::new("periodic").with("pattern", c))
        }
        "random" => Ok(Descriptor::new("random")
            .with(
                "seed",
                d.get("seed")
                    .map_or(default_seed.to_string(), str::to_string),
            )
            .with("k", d.get("k").unwrap_or("2"))),
        _ => {
            for (key, _) in table {
                let optional = matches!(
                    (kind, *key),
                    ("geo3", "l" | "x" | "y")
                        | ("triple", "x" | "l")
                        | ("recursive", "a0" | "window")
                );
                if !optional && d.get(key).is_none() {
                    return Err(Error::parse(s.len(), format!("missing parameter '{key}'")));
                }
            }
            Ok(d)
        }
    }
}
