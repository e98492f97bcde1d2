/// Piecewise-constant coloring of `1..=u64::MAX` stored as sorted run
/// starts. Run `i` covers `[starts[i], starts[i+1])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BreakTable {
    starts: Vec<u64>,
    colors: Vec<u8>,
}

impl BreakTable {
    pub fn new(first: u8) -> Self {
        BreakTable {
            starts: vec![1],
            colors: vec![first],
        }
    }

    /// Starts a new run at `start`, which must not precede the last run.
    /// Empty and redundant runs are merged away.
    pub fn push(&mut self, start: u64, color: u8) {
        let last = *self.starts.last().unwrap();
        assert!(start >= last, "runs must be pushed in order");
        if start == last {
            *self.colors.last_mut().unwrap() = color;
            let k = self.colors.len();
            if k >= 2 && self.colors[k - 2] == color {
                self.starts.pop();
                self.colors.pop();
            }
            return;
        }
        if *self.colors.last().unwrap() != color {
            self.starts.push(start);
            self.colors.push(color);
        }
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn start(&self, i: usize) -> u64 {
        self.starts[i]
    }

    pub fn color_of_run(&self, i: usize) -> u8 {
        self.colors[i]
    }

    pub fn run_index(&self, z: u64) -> usize {
        self.starts.partition_point(|&s| s <= z) - 1
    }

    pub fn color(&self, z: u64) -> u8 {
        self.colors[self.run_index(z)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merging() {
        let mut t = BreakTable::new(1);
        t.push(1, 2);
        t.push(5, 2);
        t.push(8, 1);
        t.push(8, 2);
        t.push(10, 1);
        assert_eq!(t.len(), 2);
        assert_eq!(
            (t.color(1), t.color(9), t.color(10), t.color(u64::MAX)),
            (2, 2, 1, 1)
        );
    }
}
