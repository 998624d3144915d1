//! Builders for the partitions used as generators throughout the catalog.

use crate::error::PartitionError;
use crate::partition::{Color, ColoredPartition};

use Color::{Black as B, White as W};

fn lower_only(colors: Vec<Color>, labels: &[usize]) -> ColoredPartition {
    ColoredPartition::from_labels(Vec::new(), colors, labels).expect("label count matches")
}

/// The pair partition in `P(0, 2)`.
pub fn pair(c1: Color, c2: Color) -> ColoredPartition {
    lower_only(vec![c1, c2], &[0, 0])
}

/// The pair partition in `P(2, 0)`.
pub fn pair_up(c1: Color, c2: Color) -> ColoredPartition {
    ColoredPartition::from_labels(vec![c1, c2], Vec::new(), &[0, 0]).expect("two labels")
}

/// The identity partition in `P(1, 1)` with the given colors.
pub fn identity(upper: Color, lower: Color) -> ColoredPartition {
    ColoredPartition::from_labels(vec![upper], vec![lower], &[0, 0]).expect("two labels")
}

pub fn singleton(c: Color) -> ColoredPartition {
    lower_only(vec![c], &[0])
}

pub fn singleton_up(c: Color) -> ColoredPartition {
    ColoredPartition::from_labels(vec![c], Vec::new(), &[0]).expect("one label")
}

/// `k` singletons of one color side by side.
pub fn singletons(k: usize, c: Color) -> ColoredPartition {
    lower_only(vec![c; k], &(0..k).collect::<Vec<_>>())
}

/// The one-block partition on `k` white lower points.
pub fn b(k: usize) -> ColoredPartition {
    lower_only(vec![W; k], &vec![0; k])
}

/// The one-block partition on `k` black lower points.
pub fn b_tilde(k: usize) -> ColoredPartition {
    lower_only(vec![B; k], &vec![0; k])
}

/// A single block on four lower points with the given colors.
pub fn four_block(colors: [Color; 4]) -> ColoredPartition {
    lower_only(colors.to_vec(), &[0, 0, 0, 0])
}

pub fn four_block_wbwb() -> ColoredPartition {
    four_block([W, B, W, B])
}

pub fn four_block_wwbb() -> ColoredPartition {
    four_block([W, W, B, B])
}

/// The crossing in `P(2, 2)`: `u1` meets `l2` and `u2` meets `l1`.
pub fn crossing(upper: [Color; 2], lower: [Color; 2]) -> ColoredPartition {
    ColoredPartition::from_labels(upper.to_vec(), lower.to_vec(), &[0, 1, 1, 0]).expect("four labels")
}

pub fn crossing_white() -> ColoredPartition {
    crossing([W, W], [W, W])
}

/// `k` white pairs nested into each other: `(l1 l2k)(l2 l2k-1)...`.
pub fn nested_pair(k: usize) -> ColoredPartition {
    let labels: Vec<usize> = (0..2 * k).map(|i| i.min(2 * k - 1 - i)).collect();
    lower_only(vec![W; 2 * k], &labels)
}

/// `k` white pairs side by side.
pub fn white_pairs(k: usize) -> ColoredPartition {
    let labels: Vec<usize> = (0..2 * k).map(|i| i / 2).collect();
    lower_only(vec![W; 2 * k], &labels)
}

/// The white pair next to the black pair, whose membership makes a category
/// globally colorized.
pub fn global_pairs() -> ColoredPartition {
    pair(W, W).tensor(&pair(B, B))
}

/// The singleton pair `↓◦ ⊗ ↓•`.
pub fn singleton_pair() -> ColoredPartition {
    singleton(W).tensor(&singleton(B))
}

/// The positioner partition in `P(0, 2d + 2)`: `d` white singletons followed
/// by a white point paired with a final black point, with `d` black
/// singletons in between. For `d = 0` this is the pair with colors `ox`, for
/// `d = 1` it is the `wwbb` positioner.
pub fn positioner(d: usize) -> ColoredPartition {
    let m = 2 * d + 2;
    let mut colors = vec![W; d + 1];
    colors.extend(vec![B; d + 1]);
    let pair_label = m;
    let labels: Vec<usize> =
        (0..m).map(|i| if i == d || i == m - 1 { pair_label } else { i }).collect();
    lower_only(colors, &labels)
}

/// The `wbwb` positioner in `P(0, 4)`: points 2 and 4 form a pair, points 1
/// and 3 are singletons.
pub fn positioner_wbwb() -> ColoredPartition {
    lower_only(vec![W, B, W, B], &[0, 1, 2, 1])
}

/// The positioner with `r + 1` leading singletons in `P(0, 2r + 2)`: white
/// singletons at points `1..=r+1`, black singletons at `r+3..=2r+1` and a
/// black pair on `{r+2, 2r+2}`.
pub fn positioner_shifted(r: usize) -> ColoredPartition {
    let m = 2 * r + 2;
    let mut colors = vec![W; r + 1];
    colors.extend(vec![B; r + 1]);
    let pair_label = m;
    let labels: Vec<usize> =
        (0..m).map(|i| if i == r + 1 || i == m - 1 { pair_label } else { i }).collect();
    lower_only(colors, &labels)
}

fn parse_letters<const N: usize>(word: &str) -> Option<[Color; N]> {
    let colors: Vec<Color> = word
        .chars()
        .map(|c| match c {
            'o' | 'w' => Some(W),
            'x' | 'b' => Some(B),
            _ => None,
        })
        .collect::<Option<_>>()?;
    colors.try_into().ok()
}

/// Names accepted by [`base_partition`], with the number of parameters.
pub const BASE_NAMES: &[(&str, usize)] = &[
    ("pair_<cc>", 0),
    ("pair_up_<cc>", 0),
    ("id_<cc>", 0),
    ("singleton_<c>", 0),
    ("singleton_up_<c>", 0),
    ("singletons", 1),
    ("b", 1),
    ("b_tilde", 1),
    ("four_block_<cccc>", 0),
    ("crossing_<cccc>", 0),
    ("nested_pair", 1),
    ("white_pairs", 1),
    ("global_pairs", 0),
    ("singleton_pair", 0),
    ("positioner", 1),
    ("positioner_wbwb", 0),
    ("positioner_shifted", 1),
];

/// Builds a named partition. Color letters may be `o`/`w` for white and
/// `x`/`b` for black, so `four_block_wbwb` and `four_block_oxox` agree.
pub fn base_partition(name: &str, params: &[usize]) -> Result<ColoredPartition, PartitionError> {
    let unknown = || PartitionError::UnknownName(name.to_string());
    let want = |n: usize| -> Result<(), PartitionError> {
        if params.len() == n {
            Ok(())
        } else {
            Err(PartitionError::InvalidParameter(format!(
                "{name} takes {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let with_one = |f: fn(usize) -> ColoredPartition| -> Result<ColoredPartition, PartitionError> {
        want(1)?;
        Ok(f(params[0]))
    };
    match name {
        "singletons" => {
            want(1)?;
            return Ok(singletons(params[0], W));
        }
        "b" => return with_one(b),
        "b_tilde" => return with_one(b_tilde),
        "nested_pair" => return with_one(nested_pair),
        "white_pairs" => return with_one(white_pairs),
        "positioner" => return with_one(positioner),
        "positioner_shifted" => return with_one(positioner_shifted),
        "positioner_wbwb" => {
            want(0)?;
            return Ok(positioner_wbwb());
        }
        "global_pairs" => {
            want(0)?;
            return Ok(global_pairs());
        }
        "singleton_pair" => {
            want(0)?;
            return Ok(singleton_pair());
        }
        _ => {}
    }
    want(0)?;
    if let Some(c) = name.strip_prefix("pair_up_") {
        let [a, b] = parse_letters::<2>(c).ok_or_else(unknown)?;
        return Ok(pair_up(a, b));
    }
    if let Some(c) = name.strip_prefix("pair_") {
        let [a, b] = parse_letters::<2>(c).ok_or_else(unknown)?;
        return Ok(pair(a, b));
    }
    if let Some(c) = name.strip_prefix("id_") {
        let [a, b] = parse_letters::<2>(c).ok_or_else(unknown)?;
        return Ok(identity(a, b));
    }
    if let Some(c) = name.strip_prefix("singleton_up_") {
        let [a] = parse_letters::<1>(c).ok_or_else(unknown)?;
        return Ok(singleton_up(a));
    }
    if let Some(c) = name.strip_prefix("singleton_") {
        let [a] = parse_letters::<1>(c).ok_or_else(unknown)?;
        return Ok(singleton(a));
    }
    if let Some(c) = name.strip_prefix("four_block_") {
        return Ok(four_block(parse_letters::<4>(c).ok_or_else(unknown)?));
    }
    if let Some(c) = name.strip_prefix("crossing_") {
        let [a, b, c, d] = parse_letters::<4>(c).ok_or_else(unknown)?;
        return Ok(crossing([a, b], [c, d]));
    }
    Err(unknown())
}
