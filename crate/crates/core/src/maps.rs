//! The linear maps `T_p : (C^n)^{⊗k} → (C^n)^{⊗l}` attached to partitions.
//!
//! `T_p` has 0/1 entries, `T_p[β][α] = δ_p(α, β)`, so it is stored as the
//! sorted list of its nonzero coordinates. A multi-index of length `m` over
//! `{0..n}` is encoded as the base-`n` number with the first index most
//! significant.

use std::env;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::category::{CategorySlice, ClosureError};
use crate::exact::ExactMatrix;
use crate::partition::{color_word, Color, ColoredPartition, Point};

/// Default limit on `n^max(k, l)` and on the number of stored coordinates.
pub const DEFAULT_COORD_CAP: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_COORD_CAP`].
pub const COORD_CAP_VAR: &str = "EASYQG_COORD_CAP";

/// The coordinate cap in effect.
pub fn coord_cap() -> u64 {
    env::var(COORD_CAP_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_COORD_CAP)
}

#[derive(Debug, Error)]
pub enum MapError {
    #[error("index tuple has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("map would need {needed} coordinates, above the cap of {cap}")]
    SizeCap { needed: u128, cap: u64 },
    #[error("n must be at least 1")]
    ZeroDimension,
    #[error("partitions differ in arity or colors: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("not a permutation of 1..={0}")]
    NotPermutation(usize),
    #[error(transparent)]
    Closure(#[from] ClosureError),
}

/// A multi-index with entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    n: usize,
    entries: Vec<usize>,
}

impl MultiIndex {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<MultiIndex, MapError> {
        if let Some(&index) = entries.iter().find(|&&e| e == 0 || e > n) {
            return Err(MapError::IndexOutOfRange { index, n });
        }
        Ok(MultiIndex { n, entries })
    }

    /// Decodes the base-`n` code of a tuple of length `len`.
    pub fn decode(n: usize, len: usize, mut code: u64) -> MultiIndex {
        let mut entries = vec![0; len];
        for slot in entries.iter_mut().rev() {
            *slot = (code % n as u64) as usize + 1;
            code /= n as u64;
        }
        MultiIndex { n, entries }
    }

    pub fn encode(&self) -> u64 {
        self.entries.iter().fold(0u64, |acc, &e| acc * self.n as u64 + (e - 1) as u64)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `δ_p(α, β)`: whether every block carries a single index. Entries may be
/// any integers; only equality matters. Colors play no role.
pub fn delta(p: &ColoredPartition, alpha: &[usize], beta: &[usize]) -> Result<bool, MapError> {
    if alpha.len() != p.k() {
        return Err(MapError::LengthMismatch { expected: p.k(), got: alpha.len() });
    }
    if beta.len() != p.l() {
        return Err(MapError::LengthMismatch { expected: p.l(), got: beta.len() });
    }
    let mut value: Vec<Option<usize>> = vec![None; p.num_blocks()];
    let points = alpha.iter().chain(beta);
    for (&label, &x) in p.labels().iter().zip(points) {
        match value[label as usize] {
            None => value[label as usize] = Some(x),
            Some(v) if v != x => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

/// A 0/1 matrix `T_p` with `n^l` rows and `n^k` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMap {
    n: usize,
    k: usize,
    l: usize,
    /// Sorted `(row, col)` pairs holding a 1.
    coords: Vec<(u64, u64)>,
}

fn power(n: usize, e: usize) -> u128 {
    (n as u128).saturating_pow(e as u32)
}

fn check_cap(needed: u128) -> Result<(), MapError> {
    let cap = coord_cap();
    if needed > cap as u128 {
        return Err(MapError::SizeCap { needed, cap });
    }
    Ok(())
}

/// Builds `T_p` for dimension `n`.
pub fn build_map(p: &ColoredPartition, n: usize) -> Result<PartitionMap, MapError> {
    if n == 0 {
        return Err(MapError::ZeroDimension);
    }
    let (k, l) = (p.k(), p.l());
    check_cap(power(n, k.max(l)))?;
    let b = p.num_blocks();
    check_cap(power(n, b))?;
    // Weight of a block's value in the row and column codes.
    let mut row_w = vec![0u64; b];
    let mut col_w = vec![0u64; b];
    for i in 0..k {
        col_w[p.block_of(Point::Upper(i))] += (n as u64).pow((k - 1 - i) as u32);
    }
    for j in 0..l {
        row_w[p.block_of(Point::Lower(j))] += (n as u64).pow((l - 1 - j) as u32);
    }
    let mut coords = Vec::with_capacity(power(n, b) as usize);
    let mut values = vec![0u64; b];
    loop {
        let row = values.iter().zip(&row_w).map(|(v, w)| v * w).sum();
        let col = values.iter().zip(&col_w).map(|(v, w)| v * w).sum();
        coords.push((row, col));
        // Odometer over block values.
        let mut i = b;
        loop {
            if i == 0 {
                coords.sort_unstable();
                return Ok(PartitionMap { n, k, l, coords });
            }
            i -= 1;
            values[i] += 1;
            if values[i] < n as u64 {
                break;
            }
            values[i] = 0;
        }
    }
}

impl PartitionMap {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn rows(&self) -> u64 {
        (self.n as u64).pow(self.l as u32)
    }

    pub fn cols(&self) -> u64 {
        (self.n as u64).pow(self.k as u32)
    }

    pub fn nnz(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[(u64, u64)] {
        &self.coords
    }

    /// The entry at row `β` and column `α`.
    pub fn entry(&self, beta: &MultiIndex, alpha: &MultiIndex) -> Result<u8, MapError> {
        if beta.len() != self.l {
            return Err(MapError::LengthMismatch { expected: self.l, got: beta.len() });
        }
        if alpha.len() != self.k {
            return Err(MapError::LengthMismatch { expected: self.k, got: alpha.len() });
        }
        Ok(self.coords.binary_search(&(beta.encode(), alpha.encode())).is_ok() as u8)
    }

    pub fn transpose(&self) -> PartitionMap {
        let mut coords: Vec<(u64, u64)> = self.coords.iter().map(|&(r, c)| (c, r)).collect();
        coords.sort_unstable();
        PartitionMap { n: self.n, k: self.l, l: self.k, coords }
    }

    /// The Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &PartitionMap) -> PartitionMap {
        assert_eq!(self.n, other.n, "dimensions differ");
        let (rows2, cols2) = (other.rows(), other.cols());
        let mut coords = Vec::with_capacity(self.nnz() * other.nnz());
        for &(r1, c1) in &self.coords {
            for &(r2, c2) in &other.coords {
                coords.push((r1 * rows2 + r2, c1 * cols2 + c2));
            }
        }
        coords.sort_unstable();
        PartitionMap { n: self.n, k: self.k + other.k, l: self.l + other.l, coords }
    }

    /// The integer product `self · other`, as sorted `((row, col), value)`.
    pub fn product(&self, other: &PartitionMap) -> Vec<((u64, u64), u64)> {
        assert_eq!(self.k, other.l, "inner dimensions differ");
        let mut by_row: FxHashMap<u64, Vec<u64>> = FxHashMap::default();
        for &(r, c) in &other.coords {
            by_row.entry(r).or_default().push(c);
        }
        let mut acc: FxHashMap<(u64, u64), u64> = FxHashMap::default();
        for &(r, mid) in &self.coords {
            if let Some(cols) = by_row.get(&mid) {
                for &c in cols {
                    *acc.entry((r, c)).or_default() += 1;
                }
            }
        }
        let mut out: Vec<((u64, u64), u64)> = acc.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// `Σ T_p[x] T_q[x]`, the number of shared coordinates.
    pub fn inner(&self, other: &PartitionMap) -> u64 {
        let (a, b) = (&self.coords, &other.coords);
        let (mut i, mut j, mut count) = (0, 0, 0u64);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// The dense matrix, rows `β`, columns `α`.
    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.cols() as usize]; self.rows() as usize];
        for &(r, c) in &self.coords {
            m[r as usize][c as usize] = 1;
        }
        m
    }
}

/// Which functor laws held for a pair of partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub n: usize,
    /// `T_{p⊗q} = T_p ⊗ T_q`.
    pub tensor: bool,
    /// `T_{p*} = T_pᵀ` and `T_{q*} = T_qᵀ`.
    pub adjoint: bool,
    /// `T_q T_p = n^{rl} T_{qp}` with `p` on top of `q`; `None` when the
    /// middle rows differ in length or colors.
    pub composition: Option<bool>,
    pub removed_loops: Option<usize>,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.tensor && self.adjoint && self.composition.unwrap_or(true)
    }
}

/// Checks the tensor, adjoint and composition laws exactly.
pub fn verify_functor_laws(
    p: &ColoredPartition,
    q: &ColoredPartition,
    n: usize,
) -> Result<LawReport, MapError> {
    let tp = build_map(p, n)?;
    let tq = build_map(q, n)?;
    let tensor = build_map(&p.tensor(q), n)? == tp.kron(&tq);
    let adjoint =
        build_map(&p.involute(), n)? == tp.transpose() && build_map(&q.involute(), n)? == tq.transpose();
    let (composition, removed_loops) = match p.compose(q) {
        Ok((pq, rl)) => {
            let scale = (n as u64).pow(rl as u32);
            let expected: Vec<((u64, u64), u64)> =
                build_map(&pq, n)?.coords.iter().map(|&c| (c, scale)).collect();
            (Some(tq.product(&tp) == expected), Some(rl))
        }
        Err(_) => (None, None),
    };
    Ok(LawReport { n, tensor, adjoint, composition, removed_loops })
}

/// The Gram matrix `G[a][b] = <T_a, T_b>` of partitions sharing arities and
/// row colors.
pub fn gram_matrix(parts: &[ColoredPartition], n: usize) -> Result<ExactMatrix, MapError> {
    if let Some(first) = parts.first() {
        for p in parts {
            if p.upper_colors() != first.upper_colors() || p.lower_colors() != first.lower_colors() {
                return Err(MapError::ShapeMismatch(first.to_string(), p.to_string()));
            }
        }
    }
    let maps: Vec<PartitionMap> = parts.iter().map(|p| build_map(p, n)).collect::<Result<_, _>>()?;
    let mut g = ExactMatrix::zeros(maps.len(), maps.len());
    for i in 0..maps.len() {
        for j in 0..=i {
            let v = BigInt::from(maps[i].inner(&maps[j]));
            g.set(i, j, v.clone());
            g.set(j, i, v);
        }
    }
    Ok(g)
}

/// The Gram matrix as text: a header `n=<n> r=<word> s=<word>` followed by
/// the rows.
pub fn export_gram(g: &ExactMatrix, n: usize, upper: &[Color], lower: &[Color]) -> String {
    format!("n={n} r={} s={}\n{g}", color_word(upper), color_word(lower))
}

/// Members of `slice` in `P(|upper|, |lower|)` with the given colors, and
/// their Gram matrix.
pub fn intertwiner_gram(
    slice: &CategorySlice,
    upper: &[Color],
    lower: &[Color],
    n: usize,
) -> Result<(Vec<ColoredPartition>, ExactMatrix), MapError> {
    let parts = slice.members_with_colors(upper, lower)?;
    let g = gram_matrix(&parts, n)?;
    Ok((parts, g))
}

/// Dimension of the span of `T_p` over the members of `slice` with the
/// given row colors: the exact rank of their Gram matrix.
pub fn intertwiner_dimension(
    slice: &CategorySlice,
    upper: &[Color],
    lower: &[Color],
    n: usize,
) -> Result<usize, MapError> {
    Ok(intertwiner_gram(slice, upper, lower, n)?.1.rank())
}

/// The all-white partition in `P(k, k)` joining upper point `i` with lower
/// point `σ(i)`. `sigma` lists `σ(1), ..., σ(k)`.
pub fn permutation_partition(sigma: &[usize]) -> Result<ColoredPartition, MapError> {
    let k = sigma.len();
    let mut seen = vec![false; k];
    for &s in sigma {
        if s == 0 || s > k || seen[s - 1] {
            return Err(MapError::NotPermutation(k));
        }
        seen[s - 1] = true;
    }
    let mut labels = vec![0usize; 2 * k];
    for (i, &s) in sigma.iter().enumerate() {
        labels[i] = i;
        labels[k + s - 1] = i;
    }
    Ok(ColoredPartition::from_labels(vec![Color::White; k], vec![Color::White; k], &labels)
        .expect("label count matches"))
}

/// All permutations of `1..=k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).expect("exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base;
    use crate::literal::parse_partition;

    fn lit(s: &str) -> ColoredPartition {
        parse_partition(s).unwrap()
    }

    #[test]
    fn delta_examples() {
        let p = lit("oooo|ooo;(u1 u2)(u3 u4 l3)(l1 l2)");
        assert!(delta(&p, &[1, 1, 5, 5], &[2, 2, 5]).unwrap());
        assert!(!delta(&p, &[1, 1, 5, 1], &[2, 2, 5]).unwrap());
        let id = lit("o|o;(u1 l1)");
        assert!(delta(&id, &[2], &[2]).unwrap());
        assert!(!delta(&id, &[2], &[3]).unwrap());
        assert!(delta(&id, &[2], &[2, 2]).is_err());
    }

    #[test]
    fn small_maps() {
        let id = build_map(&lit("o|o;(u1 l1)"), 3).unwrap();
        assert_eq!(id.to_dense(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let pair = build_map(&lit("|oo;(l1 l2)"), 2).unwrap();
        assert_eq!(pair.to_dense(), vec![vec![1], vec![0], vec![0], vec![1]]);
        let singles = build_map(&lit("o|o;(u1)(l1)"), 2).unwrap();
        assert_eq!(singles.to_dense(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn pair_loop() {
        let p = lit("|ox;(l1 l2)");
        let q = p.involute();
        let report = verify_functor_laws(&p, &q, 2).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.removed_loops, Some(1));
        let tp = build_map(&p, 2).unwrap();
        let tq = build_map(&q, 2).unwrap();
        assert_eq!(tq.product(&tp), vec![((0, 0), 2)]);
    }

    #[test]
    fn gram_examples() {
        let pair = lit("|oo;(l1 l2)");
        assert_eq!(gram_matrix(&[pair], 2).unwrap(), ExactMatrix::from_rows(&[vec![2]]));
        let g = gram_matrix(&[lit("o|o;(u1 l1)"), lit("o|o;(u1)(l1)")], 2).unwrap();
        assert_eq!(g, ExactMatrix::from_rows(&[vec![2, 2], vec![2, 4]]));
        assert_eq!(g.rank(), 2);
        assert!(gram_matrix(&[lit("o|o;(u1 l1)"), lit("x|x;(u1 l1)")], 2).is_err());
        let text = export_gram(&g, 2, &[Color::White], &[Color::White]);
        assert_eq!(text, "n=2 r=o s=o\n2 2\n2 4\n");
    }

    #[test]
    fn permutation_partitions() {
        assert_eq!(permutation_partition(&[1, 2]).unwrap().to_string(), "oo|oo;(u1 l1)(u2 l2)");
        let p = permutation_partition(&[2, 4, 1, 3, 5]).unwrap();
        assert_eq!(p, lit("ooooo|ooooo;(u1 l2)(u2 l4)(u3 l1)(u4 l3)(u5 l5)"));
        assert!(permutation_partition(&[1, 1]).is_err());
        assert_eq!(permutations(3).len(), 6);
    }

    #[test]
    fn permutation_action() {
        // ρ(σ) maps e_{i_1..i_k} to e_{i_σ(1)..i_σ(k)} and equals T for σ⁻¹.
        let n = 2;
        for sigma in permutations(3) {
            let mut inverse = vec![0; 3];
            for (i, &s) in sigma.iter().enumerate() {
                inverse[s - 1] = i + 1;
            }
            let t = build_map(&permutation_partition(&inverse).unwrap(), n).unwrap();
            for code in 0..8u64 {
                let a = MultiIndex::decode(n, 3, code);
                let image: Vec<usize> =
                    (0..3).map(|j| a.entries()[sigma[j] - 1]).collect();
                let b = MultiIndex::new(n, image).unwrap();
                assert_eq!(t.entry(&b, &a).unwrap(), 1);
            }
        }
    }

    #[test]
    fn cap_refuses_large_maps() {
        assert!(matches!(
            build_map(&base::singletons(24, Color::White), 10),
            Err(MapError::SizeCap { .. })
        ));
    }
}
