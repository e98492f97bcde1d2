//! Word-packed bit-vectors over the positions `1..=n`.
//!
//! Bit `i` lives at bit `i % 64` of word `i / 64`; bit 0 is never set.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVec {
    n: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// All positions clear.
    pub fn new(n: usize) -> Self {
        BitVec {
            n,
            words: vec![0; n / 64 + 1],
        }
    }

    /// All positions `1..=n` set.
    pub fn full(n: usize) -> Self {
        let mut v = BitVec {
            n,
            words: vec![u64::MAX; n / 64 + 1],
        };
        v.words[0] &= !1;
        v.mask_tail();
        v
    }

    pub fn from_ones(n: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::new(n);
        for i in ones {
            v.set(i);
        }
        v
    }

    fn mask_tail(&mut self) {
        let last = self.words.len() - 1;
        let used = (self.n % 64) + 1;
        if used < 64 {
            self.words[last] &= (1u64 << used) - 1;
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        i >= 1 && i <= self.n && (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        assert!(i >= 1 && i <= self.n, "position {i} outside 1..={}", self.n);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn clear(&mut self, i: usize) {
        if i >= 1 && i <= self.n {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn first_ones(&self, k: usize) -> Vec<usize> {
        self.iter_ones().take(k).collect()
    }

    /// Word `i` of the vector whose bit `b` is bit `b + shift` of `self`.
    #[inline]
    pub fn shifted_word(&self, i: usize, shift: usize) -> u64 {
        let w = i + shift / 64;
        let r = shift % 64;
        let lo = self.words.get(w).copied().unwrap_or(0);
        if r == 0 {
            return lo;
        }
        let hi = self.words.get(w + 1).copied().unwrap_or(0);
        (lo >> r) | (hi << (64 - r))
    }

    pub fn and_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        for a in self.words.iter_mut().skip(other.words.len()) {
            *a = 0;
        }
    }

    /// `self[b] &= other[b + shift]` for every `b`.
    pub fn and_shifted_assign(&mut self, other: &BitVec, shift: usize) {
        for i in 0..self.words.len() {
            self.words[i] &= other.shifted_word(i, shift);
        }
    }

    /// Popcount of `self & shift(other, s1) & shift(other, s2) & ...`
    /// without materializing the result.
    pub fn count_and_shifted(&self, other: &BitVec, shifts: &[usize]) -> u64 {
        let mut total = 0u64;
        for (i, &w) in self.words.iter().enumerate() {
            let mut acc = w;
            for &s in shifts {
                if acc == 0 {
                    break;
                }
                acc &= other.shifted_word(i, s);
            }
            total += acc.count_ones() as u64;
        }
        total
    }
}
