//! Canonical `key=value;key=value` descriptors recording exactly how a
//! coloring or witness was built.

use std::fmt;
use std::str::FromStr;

use dashu_int::ops::UnsignedAbs;
use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Descriptor {
    entries: Vec<(String, String)>,
}

impl Descriptor {
    pub fn new(kind: &str) -> Self {
        Descriptor {
            entries: vec![("kind".to_string(), kind.to_string())],
        }
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.set(key, value);
        self
    }

    pub fn set(&mut self, key: &str, value: impl fmt::Display) {
        let value = value.to_string();
        match self.entries.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.entries.push((key.to_string(), value)),
        }
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn kind(&self) -> &str {
        self.get("kind").unwrap_or("")
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| Error::BadParams(format!("missing parameter '{key}'")))
    }

    pub fn get_u64(&self, key: &str) -> Result<Option<u64>> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::BadParams(format!("'{key}' must be a nonnegative integer")))
            })
            .transpose()
    }

    pub fn get_ratio(&self, key: &str) -> Result<Option<RBig>> {
        self.get(key).map(parse_ratio).transpose()
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries: Vec<(String, String)> = Vec::new();
        let mut offset = 0;
        for part in s.split(';') {
            let trimmed = part.trim();
            if !trimmed.is_empty() {
                let eq = part
                    .find('=')
                    .ok_or_else(|| Error::parse(offset, "expected key=value"))?;
                let key = part[..eq].trim();
                if key.is_empty() {
                    return Err(Error::parse(offset, "empty key"));
                }
                if entries.iter().any(|(k, _)| k == key) {
                    return Err(Error::parse(offset, format!("duplicate key '{key}'")));
                }
                entries.push((key.to_string(), part[eq + 1..].trim().to_string()));
            }
            offset += part.len() + 1;
        }
        Ok(Descriptor { entries })
    }
}

/// Parses `p`, `-p` or `p/q` exactly.
pub fn parse_ratio(s: &str) -> Result<RBig> {
    let bad = || Error::BadParams(format!("'{s}' is not a rational number"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let digits = |t: &str| {
        let t = t.strip_prefix('-').unwrap_or(t);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num) || !den.bytes().all(|b| b.is_ascii_digit()) || den.is_empty() {
        return Err(bad());
    }
    let n: IBig = num.parse().map_err(|_| bad())?;
    let d: IBig = den.parse().map_err(|_| bad())?;
    if d == IBig::ZERO {
        return Err(bad());
    }
    Ok(RBig::from_parts(n, d.unsigned_abs()))
}

/// Renders `p/q` in lowest terms, or `p` for integers.
pub fn format_ratio(r: &RBig) -> String {
    if *r.denominator() == dashu_int::UBig::ONE {
        r.numerator().to_string()
    } else {
        format!("{}/{}", r.numerator(), r.denominator())
    }
}
