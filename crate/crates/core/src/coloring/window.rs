use crate::bitvec::BitVec;

/// One bit-vector per color over `[1, n]`; the vectors partition the range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorWindow {
    n: usize,
    planes: Vec<BitVec>,
}

impl ColorWindow {
    /// `colors[i]` is the color of `i + 1`.
    pub fn from_colors(palette: u8, colors: &[u8]) -> Self {
        let n = colors.len();
        let mut planes = vec![BitVec::new(n); palette as usize];
        for (i, &c) in colors.iter().enumerate() {
            assert!(
                c >= 1 && c <= palette,
                "color {c} outside palette {palette}"
            );
            planes[c as usize - 1].set(i + 1);
        }
        ColorWindow { n, planes }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn palette(&self) -> u8 {
        self.planes.len() as u8
    }

    /// Positions colored `color` (1-based color index).
    pub fn plane(&self, color: u8) -> &BitVec {
        &self.planes[color as usize - 1]
    }

    pub fn color(&self, i: usize) -> Option<u8> {
        self.planes
            .iter()
            .position(|p| p.get(i))
            .map(|c| c as u8 + 1)
    }

    pub fn colors(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.n];
        for (c, p) in self.planes.iter().enumerate() {
            for i in p.iter_ones() {
                out[i - 1] = c as u8 + 1;
            }
        }
        out
    }
}
