//! Bounded generation of categories of partitions.
//!
//! [`generate_closure`] computes the slice of `⟨p1, ..., pn⟩` consisting of all
//! members with at most `P_max` points. Members are kept as one-row words and
//! the slice is closed under all rotations and reflections. Composition and
//! tensor product both become a *junction* of two words: concatenate them and
//! cap the innermost `c` pairs across the seam (`c = 0` is the tensor product).
//! A junction is tried whenever the concatenation has at most `I_max` points.
//!
//! The engine is sound: every member is derivable from the generators, and
//! [`CategorySlice::replay`] reconstructs a derivation with the partition
//! operations. Completeness within the bounds is checked by a stability
//! probe that repeats the junction step with `I_max + 2`.

mod engine;
pub(crate) mod word;

use std::fmt;

use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::base;
use crate::partition::{Color, ColoredPartition};

pub use engine::DEFAULT_MEMBER_CAP;
pub use word::MAX_POINTS;
use word::Word;

/// Default retained size.
pub const DEFAULT_P_MAX: usize = 8;

/// Default intermediate size for a given `P_max`.
pub fn default_i_max(p_max: usize) -> usize {
    (p_max + 4).min(MAX_POINTS)
}

#[derive(Debug, Error)]
pub enum ClosureError {
    #[error("invalid bounds: need 2 <= P_max <= I_max <= {MAX_POINTS}, got P_max={p_max} I_max={i_max}")]
    InvalidBounds { p_max: usize, i_max: usize },
    #[error("generator {literal} has {size} points, more than I_max={i_max}")]
    GeneratorTooLarge { literal: String, size: usize, i_max: usize },
    #[error("member cap of {cap} words exceeded; partial slice has {} members", partial.len())]
    ResourceCap { cap: usize, partial: Box<CategorySlice> },
    #[error("partition has {size} points, more than the slice bound {bound}")]
    TooLarge { size: usize, bound: usize },
}

/// How trustworthy a negative membership answer is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// Raising `I_max` by two produced no new member.
    Stable,
    /// The stability probe found new members, or was not run.
    Heuristic,
    /// Generation stopped at the member cap.
    Truncated,
}

impl Completeness {
    /// The value written in slice export headers.
    pub fn header_value(self) -> &'static str {
        match self {
            Completeness::Stable => "yes",
            _ => "heuristic",
        }
    }
}

/// Answer of a membership query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Yes,
    No,
    /// Not found, but the slice is not known to be complete within its bounds.
    UnknownWithinBound,
}

/// How colors are tracked during generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorMode {
    /// Every coloring is tracked separately.
    Colored,
    /// The slice contains the white pair, so it is closed under recoloring and
    /// only block structures are tracked.
    Uncolored,
}

/// Four-way case split by the singleton pair and the `wbwb` four-block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    O,
    B,
    H,
    S,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::O => "O",
            Case::B => "B",
            Case::H => "H",
            Case::S => "S",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colorization {
    Global,
    Local,
}

impl fmt::Display for Colorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colorization::Global => "global",
            Colorization::Local => "local",
        })
    }
}

/// Smallest positive color sum among the members, 0 if there is none.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GlobalParameter {
    pub value: u64,
    /// Larger members could lower the value or make it nonzero.
    pub bound_limited: bool,
}

/// Membership probes standing in for the local parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalParameterEstimate {
    /// Values `d >= 1` with `b_d ⊗ b̃_d` in the slice.
    pub block_pairs: Vec<usize>,
    /// Values `d >= 1` with the positioner of `d` singletons in the slice.
    pub positioners: Vec<usize>,
}

impl LocalParameterEstimate {
    /// The smallest probed `d`, if any probe succeeded.
    pub fn smallest(&self) -> Option<usize> {
        self.block_pairs.iter().chain(&self.positioners).copied().min()
    }
}

/// The base partitions every category contains.
pub fn base_generators() -> Vec<ColoredPartition> {
    use Color::{Black, White};
    vec![
        base::pair(White, Black),
        base::pair(Black, White),
        base::identity(White, White),
        base::identity(Black, Black),
    ]
}

/// Where a word came from, for derivation replay.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Origin {
    Generator(u32),
    Rotate(u32),
    Reflect(u32),
    Junction { left: u32, right: u32, caps: u8 },
}

/// The members of a generated category with at most `P_max` points.
#[derive(Clone, Debug)]
pub struct CategorySlice {
    generators: Vec<ColoredPartition>,
    p_max: usize,
    i_max: usize,
    mode: ColorMode,
    completeness: Completeness,
    origins: Vec<Origin>,
    index: rustc_hash::FxHashMap<Word, u32>,
    /// Members with at most `p_max` points; in uncolored mode all colors are white.
    members: FxHashSet<Word>,
}

/// Generates the bounded slice of the category spanned by `generators` and
/// the base partitions.
pub fn generate_closure(
    generators: &[ColoredPartition],
    p_max: usize,
    i_max: usize,
) -> Result<CategorySlice, ClosureError> {
    generate_closure_with_cap(generators, p_max, i_max, DEFAULT_MEMBER_CAP)
}

/// As [`generate_closure`] with an explicit limit on the number of stored words.
pub fn generate_closure_with_cap(
    generators: &[ColoredPartition],
    p_max: usize,
    i_max: usize,
    cap: usize,
) -> Result<CategorySlice, ClosureError> {
    engine::generate(generators, p_max, i_max, cap)
}

impl CategorySlice {
    pub fn generators(&self) -> &[ColoredPartition] {
        &self.generators
    }

    pub fn p_max(&self) -> usize {
        self.p_max
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    pub fn mode(&self) -> ColorMode {
        self.mode
    }

    pub fn completeness(&self) -> Completeness {
        self.completeness
    }

    /// Number of members counted as colored partitions in one-row form.
    pub fn len(&self) -> usize {
        match self.mode {
            ColorMode::Colored => self.members.len(),
            ColorMode::Uncolored => self.members.iter().map(|w| 1usize << w.len()).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn key(&self, w: &Word) -> Word {
        match self.mode {
            ColorMode::Colored => *w,
            ColorMode::Uncolored => w.uncolored(),
        }
    }

    fn check_size(&self, p: &ColoredPartition) -> Result<Word, ClosureError> {
        if p.size() > self.p_max {
            return Err(ClosureError::TooLarge { size: p.size(), bound: self.p_max });
        }
        Ok(Word::from_partition(p).expect("p_max fits a word"))
    }

    /// Whether `p` is a member of the slice.
    pub fn contains(&self, p: &ColoredPartition) -> Result<bool, ClosureError> {
        let w = self.check_size(p)?;
        Ok(self.members.contains(&self.key(&w)))
    }

    /// Membership with negative answers qualified by the completeness flag.
    pub fn membership(&self, p: &ColoredPartition) -> Result<Membership, ClosureError> {
        Ok(if self.contains(p)? {
            Membership::Yes
        } else if self.completeness == Completeness::Stable {
            Membership::No
        } else {
            Membership::UnknownWithinBound
        })
    }

    fn contains_small(&self, p: &ColoredPartition) -> bool {
        self.contains(p).unwrap_or(false)
    }

    /// Case split by membership of `↓◦ ⊗ ↓•` and the `wbwb` four-block.
    pub fn classify_case(&self) -> Case {
        let singletons = self.contains_small(&base::singleton_pair());
        let four = self.contains_small(&base::four_block_wbwb());
        match (singletons, four) {
            (false, false) => Case::O,
            (true, false) => Case::B,
            (false, true) => Case::H,
            (true, true) => Case::S,
        }
    }

    /// Global when `⊓◦◦ ⊗ ⊓••` is a member.
    pub fn colorization(&self) -> Colorization {
        if self.contains_small(&base::global_pairs()) {
            Colorization::Global
        } else {
            Colorization::Local
        }
    }

    pub fn global_parameter(&self) -> GlobalParameter {
        let value = match self.mode {
            ColorMode::Uncolored => {
                // Recoloring reaches every count of the parity of the length.
                let odd = self.members.iter().any(|w| w.len() % 2 == 1);
                let even = self.members.iter().any(|w| w.len() >= 2);
                if odd {
                    1
                } else if even {
                    2
                } else {
                    0
                }
            }
            ColorMode::Colored => self
                .members
                .iter()
                .map(|w| w.color_sum())
                .filter(|&c| c > 0)
                .min()
                .unwrap_or(0) as u64,
        };
        GlobalParameter { value, bound_limited: self.completeness != Completeness::Stable }
    }

    /// Which `b_d ⊗ b̃_d` and positioners lie in the slice.
    pub fn local_parameter_estimate(&self) -> LocalParameterEstimate {
        let block_pairs = (1..=self.p_max / 2)
            .filter(|&d| self.contains_small(&base::b(d).tensor(&base::b_tilde(d))))
            .collect();
        let positioners = (1..=self.p_max.saturating_sub(2) / 2)
            .filter(|&d| self.contains_small(&base::positioner(d)))
            .collect();
        LocalParameterEstimate { block_pairs, positioners }
    }

    /// Member words expanded to colored one-row words with at most `bound` points.
    fn expanded_words(&self, bound: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for w in self.members.iter().filter(|w| w.len() <= bound) {
            match self.mode {
                ColorMode::Colored => out.push(*w),
                ColorMode::Uncolored => {
                    for colors in 0u32..1 << w.len() {
                        out.push(Word { colors, ..*w });
                    }
                }
            }
        }
        out
    }

    fn count_within(&self, bound: usize) -> usize {
        self.members
            .iter()
            .filter(|w| w.len() <= bound)
            .map(|w| match self.mode {
                ColorMode::Colored => 1,
                ColorMode::Uncolored => 1usize << w.len(),
            })
            .sum()
    }

    fn contains_word(&self, w: &Word) -> bool {
        self.members.contains(&self.key(w))
    }

    /// Members in one-row form, `P(0, m)`, sorted by literal.
    pub fn one_row_members(&self) -> Vec<ColoredPartition> {
        let mut words = self.expanded_words(self.p_max);
        words.sort_unstable();
        let mut out: Vec<ColoredPartition> = words.iter().map(|w| w.to_partition()).collect();
        out.sort_by_cached_key(|p| p.to_string());
        out
    }

    /// Members in `P(k, l)` with the given row colors.
    pub fn members_with_colors(
        &self,
        upper: &[Color],
        lower: &[Color],
    ) -> Result<Vec<ColoredPartition>, ClosureError> {
        let size = upper.len() + lower.len();
        if size > self.p_max {
            return Err(ClosureError::TooLarge { size, bound: self.p_max });
        }
        let shape = ColoredPartition::from_labels(
            upper.to_vec(),
            lower.to_vec(),
            &vec![0u32; size],
        )
        .expect("label count matches");
        let target = Word::from_partition(&shape).expect("fits");
        let mut out: Vec<ColoredPartition> = self
            .members
            .iter()
            .filter(|w| w.len() == size)
            .filter(|w| self.mode == ColorMode::Uncolored || w.colors == target.colors)
            .map(|w| {
                let colored = Word { colors: target.colors, ..*w };
                ColoredPartition::from_one_row(&colored.to_partition(), upper.len())
                    .expect("split fits")
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Canonical literals of all members in every shape, sorted, preceded by
    /// the header line.
    pub fn export(&self) -> String {
        let mut lines: Vec<String> = Vec::new();
        for w in self.expanded_words(self.p_max) {
            let row = w.to_partition();
            for k in 0..=row.size() {
                lines.push(
                    ColoredPartition::from_one_row(&row, k).expect("split fits").to_string(),
                );
            }
        }
        lines.sort_unstable();
        let mut out = format!(
            "P_max={} I_max={} complete={}\n",
            self.p_max,
            self.i_max,
            self.completeness.header_value()
        );
        for line in lines {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    /// Reconstructs `p` from the generators with the partition operations,
    /// following the recorded derivation. Returns `None` if `p` is not a member
    /// or the slice was generated without tracking colors.
    pub fn replay(&self, p: &ColoredPartition) -> Option<ColoredPartition> {
        if self.mode != ColorMode::Colored || p.size() > self.p_max {
            return None;
        }
        let w = Word::from_partition(p)?;
        let &idx = self.index.get(&w)?;
        let row = engine::replay(self, idx);
        ColoredPartition::from_one_row(&row, p.k()).ok()
    }
}

/// Whether two slices agree on all members with at most `bound` points.
pub fn slices_equal(a: &CategorySlice, b: &CategorySlice, bound: usize) -> Result<bool, ClosureError> {
    for s in [a, b] {
        if bound > s.p_max {
            return Err(ClosureError::TooLarge { size: bound, bound: s.p_max });
        }
    }
    if a.mode == b.mode {
        let left = a.members.iter().filter(|w| w.len() <= bound);
        let count_b = b.members.iter().filter(|w| w.len() <= bound).count();
        let mut count_a = 0;
        for w in left {
            count_a += 1;
            if !b.members.contains(w) {
                return Ok(false);
            }
        }
        return Ok(count_a == count_b);
    }
    if a.count_within(bound) != b.count_within(bound) {
        return Ok(false);
    }
    Ok(a.expanded_words(bound).iter().all(|w| b.contains_word(w)))
}

/// First member with at most `bound` points found in exactly one of the two
/// slices, in one-row form.
pub fn separating_member(
    a: &CategorySlice,
    b: &CategorySlice,
    bound: usize,
) -> Option<ColoredPartition> {
    let mut candidates: Vec<Word> = a
        .expanded_words(bound)
        .into_iter()
        .filter(|w| !b.contains_word(w))
        .chain(b.expanded_words(bound).into_iter().filter(|w| !a.contains_word(w)))
        .collect();
    candidates.sort_by_key(|w| (w.len(), *w));
    candidates.first().map(|w| w.to_partition())
}
