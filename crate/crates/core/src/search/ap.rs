use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Progression {
    pub start: u64,
    pub difference: u64,
    pub length: u64,
}

/// A longest arithmetic progression inside `set`, found by dynamic
/// programming over pairs. Ties go to the smallest difference, then the
/// smallest start; a single element is a progression of difference 0.
pub fn longest_ap(set: &[u64]) -> Result<Progression> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    let Some(&first) = s.first() else {
        return Err(Error::EmptySet);
    };
    let mut best = Progression {
        start: first,
        difference: 0,
        length: 1,
    };
    // ending[i][d]: length of the longest progression with difference d
    // whose last term is s[i]
    let mut ending: Vec<HashMap<u64, u64>> = vec![HashMap::new(); s.len()];
    for j in 1..s.len() {
        for i in 0..j {
            let d = s[j] - s[i];
            let len = 1 + ending[i].get(&d).copied().unwrap_or(1);
            ending[j].insert(d, len);
            let cand = Progression {
                start: s[j] - d * (len - 1),
                difference: d,
                length: len,
            };
            let key = |p: &Progression| {
                (
                    p.length,
                    std::cmp::Reverse(p.difference),
                    std::cmp::Reverse(p.start),
                )
            };
            if key(&cand) > key(&best) {
                best = cand;
            }
        }
    }
    Ok(best)
}
