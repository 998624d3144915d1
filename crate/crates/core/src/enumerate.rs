//! Exhaustive enumeration of small partitions.

use crate::partition::{Color, ColoredPartition, PlainPartition};

/// Calls `f` with every restricted growth string of length `m`, in
/// lexicographic order. There are Bell(m) of them.
pub fn for_each_rgs(m: usize, mut f: impl FnMut(&[u32])) {
    if m == 0 {
        f(&[]);
        return;
    }
    let mut a = vec![0u32; m];
    // max[i] = largest label among a[..i].
    let mut max = vec![0u32; m];
    loop {
        f(&a);
        let Some(i) = (1..m).rev().find(|&i| a[i] <= max[i]) else {
            return;
        };
        a[i] += 1;
        for j in i + 1..m {
            a[j] = 0;
            max[j] = max[j - 1].max(a[j - 1]);
        }
    }
}

/// All plain partitions in `P(k, l)`.
pub fn plain_partitions(k: usize, l: usize) -> Vec<PlainPartition> {
    let mut out = Vec::new();
    for_each_rgs(k + l, |rgs| {
        let labels: Vec<usize> = rgs.iter().map(|&x| x as usize).collect();
        out.push(PlainPartition::from_labels(k, l, &labels).expect("length matches"));
    });
    out
}

/// All partitions in `P(k, l)` with the given row colors.
pub fn colored_partitions(upper: &[Color], lower: &[Color]) -> Vec<ColoredPartition> {
    plain_partitions(upper.len(), lower.len())
        .into_iter()
        .map(|p| p.with_colors(upper.to_vec(), lower.to_vec()).expect("lengths match"))
        .collect()
}

/// All `2^m` color words of length `m`; bit `i` of the counter is the color of
/// position `i`, set meaning black.
pub fn color_words(m: usize) -> Vec<Vec<Color>> {
    (0u64..1 << m)
        .map(|bits| {
            (0..m).map(|i| if bits >> i & 1 == 1 { Color::Black } else { Color::White }).collect()
        })
        .collect()
}

/// All colored partitions with exactly `m` points, over every split `k + l = m`.
pub fn all_colored_partitions(m: usize) -> Vec<ColoredPartition> {
    let mut out = Vec::new();
    for k in 0..=m {
        let l = m - k;
        let plain = plain_partitions(k, l);
        for word in color_words(m) {
            for p in &plain {
                out.push(
                    p.with_colors(word[..k].to_vec(), word[k..].to_vec()).expect("lengths match"),
                );
            }
        }
    }
    out
}
