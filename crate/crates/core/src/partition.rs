//! Two-colored partitions and the operations a category is closed under.
//!
//! A partition in `P(k, l)` has `k` upper points `u1..uk` and `l` lower points
//! `l1..ll`. Blocks are stored as a restricted growth string over the points in
//! the order `u1..uk, l1..ll`, which makes the representation canonical: two
//! partitions are equal iff their fields are equal.

use std::fmt;

use crate::error::PartitionError;
use crate::unionfind::UnionFind;

/// Point color. White is written `o` and black `x` in literals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn inverse(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'o' => Some(Color::White),
            'x' => Some(Color::Black),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Color::White => 'o',
            Color::Black => 'x',
        }
    }
}

/// Parses a color word such as `"oxxo"`.
pub fn parse_color_word(word: &str) -> Result<Vec<Color>, PartitionError> {
    word.chars()
        .enumerate()
        .map(|(pos, c)| {
            Color::from_char(c).ok_or_else(|| PartitionError::Syntax {
                pos,
                msg: format!("expected 'o' or 'x', found {c:?}"),
            })
        })
        .collect()
}

pub fn color_word(colors: &[Color]) -> String {
    colors.iter().map(|c| c.to_char()).collect()
}

/// A point of a partition, zero-based within its row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Upper(usize),
    Lower(usize),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Upper(i) => write!(f, "u{}", i + 1),
            Point::Lower(i) => write!(f, "l{}", i + 1),
        }
    }
}

/// The four single-point rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    /// `u1` becomes the new `l1`.
    UpperLeftToLower,
    /// `l1` becomes the new `u1`.
    LowerLeftToUpper,
    /// `uk` becomes the new last lower point.
    UpperRightToLower,
    /// The last lower point becomes the new last upper point.
    LowerRightToUpper,
}

impl Corner {
    pub const ALL: [Corner; 4] = [
        Corner::UpperLeftToLower,
        Corner::LowerLeftToUpper,
        Corner::UpperRightToLower,
        Corner::LowerRightToUpper,
    ];

    /// The rotation undoing `self`.
    pub fn inverse(self) -> Corner {
        match self {
            Corner::UpperLeftToLower => Corner::LowerLeftToUpper,
            Corner::LowerLeftToUpper => Corner::UpperLeftToLower,
            Corner::UpperRightToLower => Corner::LowerRightToUpper,
            Corner::LowerRightToUpper => Corner::UpperRightToLower,
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Corner::UpperLeftToLower => "upper-left->lower",
            Corner::LowerLeftToUpper => "lower-left->upper",
            Corner::UpperRightToLower => "upper-right->lower",
            Corner::LowerRightToUpper => "lower-right->upper",
        };
        f.write_str(s)
    }
}

/// Relabels `labels` into a restricted growth string.
pub(crate) fn normalize_labels<T: Copy + Eq + std::hash::Hash>(labels: &[T]) -> Vec<u32> {
    let mut seen: Vec<(T, u32)> = Vec::new();
    labels
        .iter()
        .map(|x| match seen.iter().find(|(y, _)| y == x) {
            Some(&(_, id)) => id,
            None => {
                let id = seen.len() as u32;
                seen.push((*x, id));
                id
            }
        })
        .collect()
}

fn blocks_from_labels(k: usize, labels: &[u32]) -> Vec<Vec<Point>> {
    let count = labels.iter().map(|&x| x as usize + 1).max().unwrap_or(0);
    let mut blocks = vec![Vec::new(); count];
    for (i, &b) in labels.iter().enumerate() {
        let pt = if i < k { Point::Upper(i) } else { Point::Lower(i - k) };
        blocks[b as usize].push(pt);
    }
    blocks
}

fn noncrossing_sequence(seq: &[u32]) -> bool {
    let count = seq.iter().map(|&x| x as usize + 1).max().unwrap_or(0);
    let mut remaining = vec![0usize; count];
    for &x in seq {
        remaining[x as usize] += 1;
    }
    let mut open = vec![false; count];
    let mut stack: Vec<u32> = Vec::new();
    for &x in seq {
        let xi = x as usize;
        if open[xi] {
            if stack.last() != Some(&x) {
                return false;
            }
        } else if remaining[xi] > 1 {
            stack.push(x);
            open[xi] = true;
        }
        remaining[xi] -= 1;
        if remaining[xi] == 0 && open[xi] {
            stack.pop();
            open[xi] = false;
        }
    }
    true
}

/// A partition without colors, the image of [`ColoredPartition::forget_colors`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlainPartition {
    k: usize,
    l: usize,
    labels: Vec<u32>,
}

impl PlainPartition {
    /// Builds a plain partition from arbitrary block labels per point.
    pub fn from_labels(k: usize, l: usize, labels: &[usize]) -> Result<Self, PartitionError> {
        if labels.len() != k + l {
            return Err(PartitionError::InvalidParameter(format!(
                "{} labels for {} points",
                labels.len(),
                k + l
            )));
        }
        Ok(PlainPartition { k, l, labels: normalize_labels(labels) })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&x| x as usize + 1).max().unwrap_or(0)
    }

    pub fn blocks(&self) -> Vec<Vec<Point>> {
        blocks_from_labels(self.k, &self.labels)
    }

    /// Attaches colors to every point.
    pub fn with_colors(
        &self,
        upper: Vec<Color>,
        lower: Vec<Color>,
    ) -> Result<ColoredPartition, PartitionError> {
        if upper.len() != self.k || lower.len() != self.l {
            return Err(PartitionError::InvalidParameter(format!(
                "color words of length {} and {} for a partition in P({}, {})",
                upper.len(),
                lower.len(),
                self.k,
                self.l
            )));
        }
        Ok(ColoredPartition { upper, lower, labels: self.labels.clone() })
    }
}

/// A two-colored partition in `P(k, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPartition {
    upper: Vec<Color>,
    lower: Vec<Color>,
    labels: Vec<u32>,
}

impl ColoredPartition {
    /// Builds a partition from explicit blocks, checking that they cover every
    /// point exactly once.
    pub fn new(
        upper: Vec<Color>,
        lower: Vec<Color>,
        blocks: &[Vec<Point>],
    ) -> Result<Self, PartitionError> {
        let k = upper.len();
        let l = lower.len();
        let mut labels: Vec<Option<usize>> = vec![None; k + l];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &pt in block {
                let slot = match pt {
                    Point::Upper(i) if i < k => i,
                    Point::Lower(i) if i < l => k + i,
                    _ => return Err(PartitionError::IndexOutOfRange(pt.to_string())),
                };
                if labels[slot].replace(b).is_some() {
                    return Err(PartitionError::DuplicatePoint(pt.to_string()));
                }
            }
        }
        let mut out = Vec::with_capacity(k + l);
        for (i, lab) in labels.into_iter().enumerate() {
            match lab {
                Some(b) => out.push(b),
                None => {
                    let pt = if i < k { Point::Upper(i) } else { Point::Lower(i - k) };
                    return Err(PartitionError::UncoveredPoint(pt.to_string()));
                }
            }
        }
        Ok(ColoredPartition { upper, lower, labels: normalize_labels(&out) })
    }

    /// Builds a partition from arbitrary block labels given per point in the
    /// order `u1..uk, l1..ll`.
    pub fn from_labels<T: Copy + Eq + std::hash::Hash>(
        upper: Vec<Color>,
        lower: Vec<Color>,
        labels: &[T],
    ) -> Result<Self, PartitionError> {
        if labels.len() != upper.len() + lower.len() {
            return Err(PartitionError::InvalidParameter(format!(
                "{} labels for {} points",
                labels.len(),
                upper.len() + lower.len()
            )));
        }
        Ok(ColoredPartition { upper, lower, labels: normalize_labels(labels) })
    }

    pub fn empty() -> Self {
        ColoredPartition { upper: Vec::new(), lower: Vec::new(), labels: Vec::new() }
    }

    /// The identity partition on a color word: `ui` is joined to `li`.
    pub fn identity(colors: &[Color]) -> Self {
        let n = colors.len();
        let labels: Vec<u32> = (0..2 * n).map(|i| (i % n.max(1)) as u32).collect();
        ColoredPartition { upper: colors.to_vec(), lower: colors.to_vec(), labels }
    }

    pub fn k(&self) -> usize {
        self.upper.len()
    }

    pub fn l(&self) -> usize {
        self.lower.len()
    }

    /// Total number of points `k + l`.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn upper_colors(&self) -> &[Color] {
        &self.upper
    }

    pub fn lower_colors(&self) -> &[Color] {
        &self.lower
    }

    /// Block labels of `u1..uk, l1..ll` as a restricted growth string.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn color_of(&self, pt: Point) -> Color {
        match pt {
            Point::Upper(i) => self.upper[i],
            Point::Lower(i) => self.lower[i],
        }
    }

    pub fn block_of(&self, pt: Point) -> usize {
        match pt {
            Point::Upper(i) => self.labels[i] as usize,
            Point::Lower(i) => self.labels[self.k() + i] as usize,
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&x| x as usize + 1).max().unwrap_or(0)
    }

    /// Blocks in canonical order, each listing its points in order.
    pub fn blocks(&self) -> Vec<Vec<Point>> {
        blocks_from_labels(self.k(), &self.labels)
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Horizontal concatenation; `q` is placed to the right of `self`.
    pub fn tensor(&self, q: &ColoredPartition) -> ColoredPartition {
        let (k1, k2) = (self.k(), q.k());
        let shift = self.num_blocks() as u32;
        let mut raw = Vec::with_capacity(self.size() + q.size());
        raw.extend_from_slice(&self.labels[..k1]);
        raw.extend(q.labels[..k2].iter().map(|&x| x + shift));
        raw.extend_from_slice(&self.labels[k1..]);
        raw.extend(q.labels[k2..].iter().map(|&x| x + shift));
        let mut upper = self.upper.clone();
        upper.extend_from_slice(&q.upper);
        let mut lower = self.lower.clone();
        lower.extend_from_slice(&q.lower);
        ColoredPartition { upper, lower, labels: normalize_labels(&raw) }
    }

    /// Composes `self` in `P(k, l)` with `p` in `P(l, m)` by stacking `self`
    /// on top of `p` and removing the middle row.
    ///
    /// Returns the result in `P(k, m)` together with the number of removed
    /// blocks that touched only middle points.
    pub fn compose(&self, p: &ColoredPartition) -> Result<(ColoredPartition, usize), PartitionError> {
        let (k, l, m) = (self.k(), self.l(), p.l());
        if p.k() != l {
            return Err(PartitionError::ArityMismatch { lower: l, upper: p.k() });
        }
        if let Some(j) = (0..l).find(|&j| self.lower[j] != p.upper[j]) {
            return Err(PartitionError::ColorMismatch { position: j + 1 });
        }
        // Nodes: outer upper (k), middle from self (l), middle from p (l), outer lower (m).
        let mut uf = UnionFind::new(k + 2 * l + m);
        let mut first = vec![usize::MAX; self.num_blocks()];
        for (i, &b) in self.labels.iter().enumerate() {
            let b = b as usize;
            if first[b] == usize::MAX {
                first[b] = i;
            } else {
                uf.union(first[b], i);
            }
        }
        let off = k + l;
        let mut first = vec![usize::MAX; p.num_blocks()];
        for (i, &b) in p.labels.iter().enumerate() {
            let b = b as usize;
            if first[b] == usize::MAX {
                first[b] = off + i;
            } else {
                uf.union(first[b], off + i);
            }
        }
        for j in 0..l {
            uf.union(k + j, off + j);
        }
        let outer: Vec<usize> = (0..k).chain(off + l..off + l + m).collect();
        let roots: Vec<usize> = outer.iter().map(|&i| uf.find(i)).collect();
        let mut outer_roots = roots.clone();
        outer_roots.sort_unstable();
        outer_roots.dedup();
        let mut middle_roots: Vec<usize> = (k..off + l).map(|i| uf.find(i)).collect();
        middle_roots.sort_unstable();
        middle_roots.dedup();
        let loops = middle_roots
            .iter()
            .filter(|r| outer_roots.binary_search(r).is_err())
            .count();
        let composed = ColoredPartition {
            upper: self.upper.clone(),
            lower: p.lower.clone(),
            labels: normalize_labels(&roots),
        };
        Ok((composed, loops))
    }

    /// Reflection at the horizontal axis, `P(k, l) -> P(l, k)`.
    pub fn involute(&self) -> ColoredPartition {
        let k = self.k();
        let mut raw = Vec::with_capacity(self.size());
        raw.extend_from_slice(&self.labels[k..]);
        raw.extend_from_slice(&self.labels[..k]);
        ColoredPartition {
            upper: self.lower.clone(),
            lower: self.upper.clone(),
            labels: normalize_labels(&raw),
        }
    }

    /// Left-right mirror with every color inverted.
    pub fn verticolor_reflect(&self) -> ColoredPartition {
        let k = self.k();
        let mut raw: Vec<u32> = self.labels[..k].iter().rev().copied().collect();
        raw.extend(self.labels[k..].iter().rev());
        let flip = |row: &[Color]| row.iter().rev().map(|c| c.inverse()).collect();
        ColoredPartition {
            upper: flip(&self.upper),
            lower: flip(&self.lower),
            labels: normalize_labels(&raw),
        }
    }

    /// Moves one corner point to the other row, inverting its color.
    pub fn rotate(&self, corner: Corner) -> Result<ColoredPartition, PartitionError> {
        let (k, l) = (self.k(), self.l());
        let lab = &self.labels;
        let (upper, lower, raw): (Vec<Color>, Vec<Color>, Vec<u32>) = match corner {
            Corner::UpperLeftToLower => {
                if k == 0 {
                    return Err(PartitionError::EmptyRow(corner));
                }
                let mut lower = vec![self.upper[0].inverse()];
                lower.extend_from_slice(&self.lower);
                let mut raw = lab[1..k].to_vec();
                raw.push(lab[0]);
                raw.extend_from_slice(&lab[k..]);
                (self.upper[1..].to_vec(), lower, raw)
            }
            Corner::LowerLeftToUpper => {
                if l == 0 {
                    return Err(PartitionError::EmptyRow(corner));
                }
                let mut upper = vec![self.lower[0].inverse()];
                upper.extend_from_slice(&self.upper);
                let mut raw = vec![lab[k]];
                raw.extend_from_slice(&lab[..k]);
                raw.extend_from_slice(&lab[k + 1..]);
                (upper, self.lower[1..].to_vec(), raw)
            }
            Corner::UpperRightToLower => {
                if k == 0 {
                    return Err(PartitionError::EmptyRow(corner));
                }
                let mut lower = self.lower.clone();
                lower.push(self.upper[k - 1].inverse());
                let mut raw = lab[..k - 1].to_vec();
                raw.extend_from_slice(&lab[k..]);
                raw.push(lab[k - 1]);
                (self.upper[..k - 1].to_vec(), lower, raw)
            }
            Corner::LowerRightToUpper => {
                if l == 0 {
                    return Err(PartitionError::EmptyRow(corner));
                }
                let mut upper = self.upper.clone();
                upper.push(self.lower[l - 1].inverse());
                let mut raw = lab[..k].to_vec();
                raw.push(lab[k + l - 1]);
                raw.extend_from_slice(&lab[k..k + l - 1]);
                (upper, self.lower[..l - 1].to_vec(), raw)
            }
        };
        Ok(ColoredPartition { upper, lower, labels: normalize_labels(&raw) })
    }

    /// Moves the last `t` lower points to the upper row one at a time, so that
    /// the last lower point ends up as `u1`.
    pub fn rot_t(&self, t: usize) -> Result<ColoredPartition, PartitionError> {
        let mut p = self.clone();
        for _ in 0..t {
            p = p.rotate(Corner::LowerRightToUpper)?;
        }
        Ok(p)
    }

    pub fn forget_colors(&self) -> PlainPartition {
        PlainPartition { k: self.k(), l: self.l(), labels: self.labels.clone() }
    }

    /// Number of white minus number of black points, where upper points count
    /// with the opposite sign. This is the count of the one-row form, so it is
    /// invariant under rotation.
    pub fn color_sum(&self) -> i64 {
        let count = |row: &[Color]| -> i64 {
            row.iter().map(|c| if *c == Color::White { 1 } else { -1 }).sum()
        };
        count(&self.lower) - count(&self.upper)
    }

    /// Whether the blocks can be drawn without crossings.
    pub fn is_noncrossing(&self) -> bool {
        // Cyclic order u1..uk, then lk..l1.
        let k = self.k();
        let seq: Vec<u32> =
            self.labels[..k].iter().chain(self.labels[k..].iter().rev()).copied().collect();
        noncrossing_sequence(&seq)
    }

    /// Same blocks with new colors.
    pub fn recolor(&self, upper: Vec<Color>, lower: Vec<Color>) -> Result<Self, PartitionError> {
        self.forget_colors().with_colors(upper, lower)
    }

    /// The one-row form: the partition rotated into `P(0, k + l)` by moving
    /// the upper points down on the left, `u1` ending up next to `l1`.
    pub fn to_one_row(&self) -> ColoredPartition {
        let k = self.k();
        let mut lower: Vec<Color> = self.upper.iter().rev().map(|c| c.inverse()).collect();
        lower.extend_from_slice(&self.lower);
        let mut raw: Vec<u32> = self.labels[..k].iter().rev().copied().collect();
        raw.extend_from_slice(&self.labels[k..]);
        ColoredPartition { upper: Vec::new(), lower, labels: normalize_labels(&raw) }
    }

    /// Inverse of [`to_one_row`](Self::to_one_row): splits a one-row partition
    /// so that the first `k` points become the upper row.
    pub fn from_one_row(p: &ColoredPartition, k: usize) -> Result<Self, PartitionError> {
        if p.k() != 0 || k > p.l() {
            return Err(PartitionError::InvalidParameter(format!(
                "cannot split a partition in P({}, {}) at {k}",
                p.k(),
                p.l()
            )));
        }
        let upper: Vec<Color> = p.lower[..k].iter().rev().map(|c| c.inverse()).collect();
        let mut raw: Vec<u32> = p.labels[..k].iter().rev().copied().collect();
        raw.extend_from_slice(&p.labels[k..]);
        Ok(ColoredPartition {
            upper,
            lower: p.lower[k..].to_vec(),
            labels: normalize_labels(&raw),
        })
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::literal::render_partition(self))
    }
}
