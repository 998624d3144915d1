//! Fixed-size one-row words, the working representation of the closure engine.
//!
//! A word is a partition rotated into `P(0, m)`. Colors are packed into a bit
//! mask (set bit = black) and block labels form a restricted growth string.
//! Rotations of the partition become cyclic shifts of the word, and both the
//! involution and the verticolor reflection become "reverse and invert".

use crate::partition::{Color, ColoredPartition};

/// Longest word the engine handles, intermediates included.
pub const MAX_POINTS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Word {
    pub(crate) len: u8,
    pub(crate) colors: u32,
    pub(crate) labels: [u8; MAX_POINTS],
}

impl Word {
    #[cfg(test)]
    pub(crate) fn empty() -> Word {
        Word { len: 0, colors: 0, labels: [0; MAX_POINTS] }
    }

    pub(crate) fn len(&self) -> usize {
        self.len as usize
    }

    /// True for black.
    #[inline]
    pub(crate) fn black(&self, i: usize) -> bool {
        self.colors >> i & 1 == 1
    }

    pub(crate) fn num_blocks(&self) -> usize {
        self.labels[..self.len()].iter().map(|&x| x as usize + 1).max().unwrap_or(0)
    }

    /// Builds a word from raw labels, relabelling them in order of first
    /// appearance. Raw labels must be below `2 * MAX_POINTS`.
    #[inline]
    pub(crate) fn from_raw(len: usize, colors: u32, raw: &[u8]) -> Word {
        let mut map = [u8::MAX; 2 * MAX_POINTS];
        let mut next = 0u8;
        let mut labels = [0u8; MAX_POINTS];
        for i in 0..len {
            let r = raw[i] as usize;
            if map[r] == u8::MAX {
                map[r] = next;
                next += 1;
            }
            labels[i] = map[r];
        }
        let mask = if len == 32 { u32::MAX } else { (1u32 << len) - 1 };
        Word { len: len as u8, colors: colors & mask, labels }
    }

    pub(crate) fn from_partition(p: &ColoredPartition) -> Option<Word> {
        let row = p.to_one_row();
        let len = row.size();
        if len > MAX_POINTS {
            return None;
        }
        let colors = row
            .lower_colors()
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, c)| if *c == Color::Black { acc | 1 << i } else { acc });
        let raw: Vec<u8> = row.labels().iter().map(|&x| x as u8).collect();
        Some(Word::from_raw(len, colors, &raw))
    }

    /// The word as a partition in `P(0, len)`.
    pub(crate) fn to_partition(&self) -> ColoredPartition {
        let colors: Vec<Color> = (0..self.len())
            .map(|i| if self.black(i) { Color::Black } else { Color::White })
            .collect();
        ColoredPartition::from_labels(Vec::new(), colors, &self.labels[..self.len()])
            .expect("label count matches")
    }

    /// Cyclic shift moving the first point to the end.
    pub(crate) fn rotate(&self) -> Word {
        let n = self.len();
        if n < 2 {
            return *self;
        }
        let mut raw = [0u8; MAX_POINTS];
        raw[..n - 1].copy_from_slice(&self.labels[1..n]);
        raw[n - 1] = self.labels[0];
        let colors = (self.colors >> 1) | ((self.colors & 1) << (n - 1));
        Word::from_raw(n, colors, &raw)
    }

    /// Reverse the word and invert every color.
    pub(crate) fn reflect(&self) -> Word {
        let n = self.len();
        let mut raw = [0u8; MAX_POINTS];
        let mut colors = 0u32;
        for i in 0..n {
            raw[i] = self.labels[n - 1 - i];
            if !self.black(n - 1 - i) {
                colors |= 1 << i;
            }
        }
        Word::from_raw(n, colors, &raw)
    }

    /// Forgets colors by painting every point white.
    pub(crate) fn uncolored(&self) -> Word {
        Word { colors: 0, ..*self }
    }

    /// All rotations of the word and of its reflection, including itself.
    #[cfg(test)]
    pub(crate) fn dihedral_orbit(&self) -> Vec<Word> {
        let mut out = Vec::with_capacity(2 * self.len().max(1));
        for start in [*self, self.reflect()] {
            let mut w = start;
            for _ in 0..self.len().max(1) {
                out.push(w);
                w = w.rotate();
            }
        }
        out
    }

    /// Caps the last `c` points of `self` against the first `c` points of `q`
    /// in nested fashion and concatenates what remains. Colors are not
    /// checked here.
    #[inline]
    pub(crate) fn junction(&self, q: &Word, c: usize) -> Word {
        let (a, b) = (self.len(), q.len());
        let np = self.num_blocks();
        let mut parent = [0u8; 2 * MAX_POINTS];
        for (i, slot) in parent.iter_mut().enumerate() {
            *slot = i as u8;
        }
        fn find(parent: &mut [u8; 2 * MAX_POINTS], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for j in 0..c {
            let x = find(&mut parent, self.labels[a - 1 - j]);
            let y = find(&mut parent, np as u8 + q.labels[j]);
            if x != y {
                let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                parent[hi as usize] = lo;
            }
        }
        let len = a + b - 2 * c;
        let mut raw = [0u8; MAX_POINTS];
        for i in 0..a - c {
            raw[i] = find(&mut parent, self.labels[i]);
        }
        for i in c..b {
            raw[a - c + i - c] = find(&mut parent, np as u8 + q.labels[i]);
        }
        let left = self.colors & ((1u32 << (a - c)) - 1);
        let colors = left | ((q.colors >> c) << (a - c));
        Word::from_raw(len, colors, &raw)
    }

    pub(crate) fn color_sum(&self) -> i64 {
        self.len() as i64 - 2 * self.colors.count_ones() as i64
    }

}
