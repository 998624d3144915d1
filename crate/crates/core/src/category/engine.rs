//! Semi-naive fixed-point iteration over one-row words.

use rustc_hash::{FxHashMap, FxHashSet};

use super::word::{Word, MAX_POINTS};
use super::{
    base_generators, CategorySlice, ClosureError, ColorMode, Completeness, Origin,
};
use crate::base;
use crate::partition::{ColoredPartition, Corner};

/// Default limit on the number of stored words.
pub const DEFAULT_MEMBER_CAP: usize = 4_000_000;

/// Longest color prefix used to bucket words.
const T_MAX: usize = 4;

/// Upper bound on junction attempts spent by the stability probe.
const PROBE_BUDGET: f64 = 4.0e7;

fn bucket(len: usize, t: usize, pattern: u32) -> usize {
    (len * (T_MAX + 1) + t) * (1 << T_MAX) + pattern as usize
}

struct CapExceeded;

struct Pool {
    mode: ColorMode,
    p_max: usize,
    i_max: usize,
    cap: usize,
    words: Vec<Word>,
    origins: Vec<Origin>,
    index: FxHashMap<Word, u32>,
    /// Words by length and leading colors.
    head: Vec<Vec<u32>>,
    /// Words by length and trailing colors, read backwards.
    tail: Vec<Vec<u32>>,
}

impl Pool {
    fn new(mode: ColorMode, p_max: usize, i_max: usize, cap: usize) -> Pool {
        let buckets = bucket(MAX_POINTS + 1, 0, 0);
        Pool {
            mode,
            p_max,
            i_max,
            cap,
            words: Vec::new(),
            origins: Vec::new(),
            index: FxHashMap::default(),
            head: vec![Vec::new(); buckets],
            tail: vec![Vec::new(); buckets],
        }
    }

    fn colored(&self) -> bool {
        self.mode == ColorMode::Colored
    }

    fn canon(&self, w: Word) -> Word {
        match self.mode {
            ColorMode::Colored => w,
            ColorMode::Uncolored => w.uncolored(),
        }
    }

    fn push(&mut self, w: Word, origin: Origin) -> Result<u32, CapExceeded> {
        if self.words.len() >= self.cap {
            return Err(CapExceeded);
        }
        let idx = self.words.len() as u32;
        let n = w.len();
        for t in 0..=T_MAX.min(n) {
            let mut head = 0u32;
            let mut tail = 0u32;
            for j in 0..t {
                head |= (w.black(j) as u32) << j;
                tail |= (w.black(n - 1 - j) as u32) << j;
            }
            self.head[bucket(n, t, head)].push(idx);
            self.tail[bucket(n, t, tail)].push(idx);
        }
        self.words.push(w);
        self.origins.push(origin);
        self.index.insert(w, idx);
        Ok(idx)
    }

    /// Inserts `w` together with all its rotations and reflections.
    fn add(&mut self, w: Word, origin: Origin) -> Result<(), CapExceeded> {
        let w = self.canon(w);
        if self.index.contains_key(&w) {
            return Ok(());
        }
        let first = self.push(w, origin)?;
        self.add_rotations(w, first)?;
        let r = self.canon(w.reflect());
        let ri = match self.index.get(&r) {
            Some(&i) => i,
            None => self.push(r, Origin::Reflect(first))?,
        };
        self.add_rotations(r, ri)
    }

    fn add_rotations(&mut self, w: Word, idx: u32) -> Result<(), CapExceeded> {
        let mut prev = idx;
        let mut cur = w;
        for _ in 1..w.len() {
            cur = self.canon(cur.rotate());
            prev = match self.index.get(&cur) {
                Some(&i) => i,
                None => self.push(cur, Origin::Rotate(prev))?,
            };
        }
        Ok(())
    }

    /// Smallest cap count that brings `a + b` points down to `p_max`.
    fn min_caps(&self, a: usize, b: usize) -> usize {
        (a + b).saturating_sub(self.p_max).div_ceil(2)
    }

    /// Patterns selecting partners `q` for `p·q` (head of `q`) and `q·p`
    /// (tail of `q`) whose first `t` capped pairs have inverse colors.
    fn patterns(&self, p: &Word, t: usize) -> (u32, u32) {
        let a = p.len();
        let mut right = 0u32;
        let mut left = 0u32;
        for j in 0..t {
            right |= (!p.black(a - 1 - j) as u32) << j;
            left |= (!p.black(j) as u32) << j;
        }
        (right, left)
    }

    /// Calls `f` with each junction of `x·y` with `c_min..=c_max` caps whose
    /// capped pairs all have inverse colors.
    fn junctions(&self, x: &Word, y: &Word, c_min: usize, c_max: usize, mut f: impl FnMut(Word, usize)) {
        let a = x.len();
        let colored = self.colored();
        if colored && (0..c_min).any(|j| x.black(a - 1 - j) == y.black(j)) {
            return;
        }
        for c in c_min..=c_max {
            if colored && c > c_min && x.black(a - c) == y.black(c - 1) {
                return;
            }
            f(x.junction(y, c), c);
        }
    }

    /// Runs the semi-naive loop starting at word `start`.
    fn saturate(&mut self) -> Result<(), CapExceeded> {
        let mut i = 0usize;
        let mut found: Vec<(Word, Origin)> = Vec::new();
        while i < self.words.len() {
            let p = self.words[i];
            let a = p.len();
            for b in 0..=self.i_max.saturating_sub(a) {
                let c_min = self.min_caps(a, b);
                let c_max = a.min(b);
                if c_min > c_max {
                    continue;
                }
                let t = if self.colored() { c_min.min(T_MAX) } else { 0 };
                let (right, left) = self.patterns(&p, t);
                let hb = bucket(b, t, right);
                for k in 0..self.head[hb].len() {
                    let qi = self.head[hb][k] as usize;
                    if qi > i {
                        break;
                    }
                    let q = self.words[qi];
                    self.junctions(&p, &q, c_min, c_max, |w, c| {
                        found.push((w, Origin::Junction { left: i as u32, right: qi as u32, caps: c as u8 }))
                    });
                }
                let tb = bucket(b, t, left);
                for k in 0..self.tail[tb].len() {
                    let qi = self.tail[tb][k] as usize;
                    if qi >= i {
                        break;
                    }
                    let q = self.words[qi];
                    self.junctions(&q, &p, c_min, c_max, |w, c| {
                        found.push((w, Origin::Junction { left: qi as u32, right: i as u32, caps: c as u8 }))
                    });
                }
                for (w, origin) in found.drain(..) {
                    self.add(w, origin)?;
                }
            }
            i += 1;
        }
        Ok(())
    }

    /// Repeats the junction step for concatenations of `I_max + 1` and
    /// `I_max + 2` points. Returns whether no new member appeared, or `None`
    /// if the probe would exceed its budget.
    fn probe_stable(&self) -> Option<bool> {
        let limit = (self.i_max + 2).min(MAX_POINTS);
        if limit <= self.i_max {
            return None;
        }
        let mut by_len = vec![0f64; MAX_POINTS + 1];
        for w in &self.words {
            by_len[w.len()] += 1.0;
        }
        let mut cost = 0f64;
        for a in 0..=MAX_POINTS {
            for b in 0..=MAX_POINTS {
                if a + b > self.i_max && a + b <= limit {
                    let t = if self.colored() { self.min_caps(a, b).min(T_MAX) } else { 0 };
                    cost += by_len[a] * by_len[b] / f64::from(1u32 << t);
                }
            }
        }
        if cost > PROBE_BUDGET {
            return None;
        }
        for (i, p) in self.words.iter().enumerate() {
            let a = p.len();
            for b in (self.i_max + 1).saturating_sub(a)..=limit.saturating_sub(a) {
                let c_min = self.min_caps(a, b);
                let c_max = a.min(b);
                if c_min > c_max {
                    continue;
                }
                let t = if self.colored() { c_min.min(T_MAX) } else { 0 };
                let (right, left) = self.patterns(p, t);
                let mut fresh = false;
                for &qi in &self.head[bucket(b, t, right)] {
                    if qi as usize > i {
                        break;
                    }
                    let q = &self.words[qi as usize];
                    self.junctions(p, q, c_min, c_max, |w, _| {
                        fresh |= !self.index.contains_key(&self.canon(w))
                    });
                }
                for &qi in &self.tail[bucket(b, t, left)] {
                    if qi as usize >= i {
                        break;
                    }
                    let q = &self.words[qi as usize];
                    self.junctions(q, p, c_min, c_max, |w, _| {
                        fresh |= !self.index.contains_key(&self.canon(w))
                    });
                }
                if fresh {
                    return Some(false);
                }
            }
        }
        Some(true)
    }
}

fn seeds(generators: &[ColoredPartition]) -> Vec<ColoredPartition> {
    let mut all = base_generators();
    all.extend_from_slice(generators);
    all
}

fn run(
    seeds: &[ColoredPartition],
    mode: ColorMode,
    p_max: usize,
    i_max: usize,
    cap: usize,
) -> (Pool, bool) {
    let mut pool = Pool::new(mode, p_max, i_max, cap);
    let mut ok = true;
    for (g, p) in seeds.iter().enumerate() {
        if p.size() > i_max {
            continue;
        }
        let w = Word::from_partition(p).expect("checked against MAX_POINTS");
        if pool.add(w, Origin::Generator(g as u32)).is_err() {
            ok = false;
            break;
        }
    }
    if ok {
        ok = pool.saturate().is_ok();
    }
    (pool, ok)
}

/// Picks the color mode: the white pair makes the category closed under
/// recoloring, which a small colored run detects cheaply.
fn detect_mode(seeds: &[ColoredPartition], p_max: usize, i_max: usize) -> ColorMode {
    if i_max < p_max + 2 {
        return ColorMode::Colored;
    }
    let (pool, ok) = run(seeds, ColorMode::Colored, p_max.min(4), i_max.min(8), 200_000);
    let white_pair = Word::from_partition(&base::pair(
        crate::partition::Color::White,
        crate::partition::Color::White,
    ))
    .expect("two points");
    if ok && pool.index.contains_key(&white_pair) {
        ColorMode::Uncolored
    } else {
        ColorMode::Colored
    }
}

pub(super) fn generate(
    generators: &[ColoredPartition],
    p_max: usize,
    i_max: usize,
    cap: usize,
) -> Result<CategorySlice, ClosureError> {
    generate_in_mode(generators, p_max, i_max, cap, None)
}

/// As [`generate`], optionally forcing the color mode.
pub(super) fn generate_in_mode(
    generators: &[ColoredPartition],
    p_max: usize,
    i_max: usize,
    cap: usize,
    mode: Option<ColorMode>,
) -> Result<CategorySlice, ClosureError> {
    if p_max < 2 || i_max < p_max || i_max > MAX_POINTS {
        return Err(ClosureError::InvalidBounds { p_max, i_max });
    }
    if let Some(g) = generators.iter().find(|g| g.size() > i_max) {
        return Err(ClosureError::GeneratorTooLarge {
            literal: g.to_string(),
            size: g.size(),
            i_max,
        });
    }
    let seeds = seeds(generators);
    let mode = mode.unwrap_or_else(|| detect_mode(&seeds, p_max, i_max));
    let (pool, ok) = run(&seeds, mode, p_max, i_max, cap);
    let completeness = if !ok {
        Completeness::Truncated
    } else if pool.probe_stable() == Some(true) {
        Completeness::Stable
    } else {
        Completeness::Heuristic
    };
    let members: FxHashSet<Word> =
        pool.words.iter().filter(|w| w.len() <= p_max).copied().collect();
    let slice = CategorySlice {
        generators: generators.to_vec(),
        p_max,
        i_max,
        mode,
        completeness,
        origins: pool.origins,
        index: pool.index,
        members,
    };
    if ok {
        Ok(slice)
    } else {
        Err(ClosureError::ResourceCap { cap, partial: Box::new(slice) })
    }
}

/// Evaluates the recorded derivation of word `idx` with partition operations,
/// returning a partition in `P(0, m)`.
pub(super) fn replay(slice: &CategorySlice, idx: u32) -> ColoredPartition {
    let seeds = seeds(&slice.generators);
    let mut memo: FxHashMap<u32, ColoredPartition> = FxHashMap::default();
    let mut stack = vec![idx];
    while let Some(&top) = stack.last() {
        if memo.contains_key(&top) {
            stack.pop();
            continue;
        }
        let deps: Vec<u32> = match slice.origins[top as usize] {
            Origin::Generator(_) => Vec::new(),
            Origin::Rotate(p) | Origin::Reflect(p) => vec![p],
            Origin::Junction { left, right, .. } => vec![left, right],
        };
        let missing: Vec<u32> = deps.iter().copied().filter(|d| !memo.contains_key(d)).collect();
        if !missing.is_empty() {
            stack.extend(missing);
            continue;
        }
        let value = match slice.origins[top as usize] {
            Origin::Generator(g) => seeds[g as usize].to_one_row(),
            Origin::Rotate(p) => memo[&p]
                .rotate(Corner::LowerLeftToUpper)
                .and_then(|r| r.rotate(Corner::UpperRightToLower))
                .unwrap_or_else(|_| memo[&p].clone()),
            Origin::Reflect(p) => memo[&p].verticolor_reflect(),
            Origin::Junction { left, right, caps } => {
                let (x, y) = (&memo[&left], &memo[&right]);
                let c = caps as usize;
                let keep = ColoredPartition::identity(&x.lower_colors()[..x.l() - c]);
                let below = keep.tensor(
                    &ColoredPartition::from_one_row(y, c).expect("caps fit the right word"),
                );
                x.compose(&below).expect("recorded junction has matching colors").0
            }
        };
        memo.insert(top, value);
        stack.pop();
    }
    memo.remove(&idx).expect("evaluated")
}
