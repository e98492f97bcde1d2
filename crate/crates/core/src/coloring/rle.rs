//! Run-length text format shared by colorings and words:
//!
//! ```text
//! palette 2
//! start 1
//! 1 4
//! 2 3
//! ```
//!
//! Each body line is `color length`. Writers always emit maximal runs, so
//! equal colorings serialize identically. Lines starting with `#` are
//! ignored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunLength {
    pub palette: u8,
    pub runs: Vec<(u8, u64)>,
}

impl RunLength {
    pub fn encode(palette: u8, symbols: &[u8]) -> Self {
        let mut runs: Vec<(u8, u64)> = Vec::new();
        for &s in symbols {
            match runs.last_mut() {
                Some((c, len)) if *c == s => *len += 1,
                _ => runs.push((s, 1)),
            }
        }
        RunLength { palette, runs }
    }

    pub fn len(&self) -> u64 {
        self.runs.iter().map(|r| r.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn decode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.len() as usize);
        for &(c, len) in &self.runs {
            out.extend(std::iter::repeat_n(c, len as usize));
        }
        out
    }
}

impl fmt::Display for RunLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "palette {}", self.palette)?;
        writeln!(f, "start 1")?;
        for (c, len) in &self.runs {
            writeln!(f, "{c} {len}")?;
        }
        Ok(())
    }
}

impl FromStr for RunLength {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut palette: Option<u8> = None;
        let mut started = false;
        let mut runs: Vec<(u8, u64)> = Vec::new();
        let mut offset = 0;
        for line in s.split_inclusive('\n') {
            let here = offset;
            offset += line.len();
            let text = line.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let mut parts = text.split_whitespace();
            let (a, b) = match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(Error::parse(here, "expected two fields")),
            };
            if palette.is_none() {
                if a != "palette" {
                    return Err(Error::parse(here, "first line must be 'palette k'"));
                }
                let k: u8 =
                    b.parse().ok().filter(|&k| k >= 2).ok_or_else(|| {
                        Error::parse(here, "palette must be an integer in 2..=255")
                    })?;
                palette = Some(k);
                continue;
            }
            if !started {
                if a != "start" || b != "1" {
                    return Err(Error::parse(here, "second line must be 'start 1'"));
                }
                started = true;
                continue;
            }
            let k = palette.unwrap();
            let color: u8 = a
                .parse()
                .ok()
                .filter(|&c| c >= 1 && c <= k)
                .ok_or_else(|| Error::parse(here, format!("color must lie in 1..={k}")))?;
            let len: u64 = b
                .parse()
                .ok()
                .filter(|&l| l >= 1)
                .ok_or_else(|| Error::parse(here, "run length must be a positive integer"))?;
            match runs.last_mut() {
                Some((c, l)) if *c == color => *l += len,
                _ => runs.push((color, len)),
            }
        }
        match (palette, started) {
            (Some(palette), true) => Ok(RunLength { palette, runs }),
            _ => Err(Error::parse(offset, "missing header")),
        }
    }
}
