//! The relations `R(p)` on the entries of a matrix `u`, symbolically and
//! evaluated on concrete matrices.
//!
//! For `p` in `P(k, l)` with row colors `r` and `s`, and for all `β` of length
//! `l` and `i` of length `k`,
//!
//! ```text
//! Σ_α δ_p(α, β) u^{r_1}_{α_1 i_1} ... u^{r_k}_{α_k i_k}
//!     = Σ_γ δ_p(i, γ) u^{s_1}_{β_1 γ_1} ... u^{s_l}_{β_l γ_l}
//! ```
//!
//! where `u^◦ = u` and `u^• = u*`. In the rendering, upper external indices
//! use the letter `j` and lower ones `i`; summation indices use `k` on the
//! left and `l` on the right.

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::maps::{build_map, coord_cap, MapError};
use crate::partition::{Color, ColoredPartition, Point};
use crate::sample::ConcreteMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Factor {
    /// `u[row][col]`, conjugated for black points.
    U { conj: bool, row: String, col: String },
    /// A sum over a variable occurring in this factor only.
    Summed { var: String, conj: bool, row: String, col: String },
}

fn u_symbol(conj: bool, row: &str, col: &str) -> String {
    format!("u{}[{row}][{col}]", if conj { "*" } else { "" })
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::U { conj, row, col } => f.write_str(&u_symbol(*conj, row, col)),
            Factor::Summed { var, conj, row, col } => {
                write!(f, "(sum_{var} {})", u_symbol(*conj, row, col))
            }
        }
    }
}

/// One side of a relation: hoisted sums, delta factors and `u` factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    sums: Vec<String>,
    deltas: Vec<(String, String)>,
    factors: Vec<Factor>,
}

impl Side {
    /// Number of `u` factors.
    pub fn degree(&self) -> usize {
        self.factors.len()
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens: Vec<String> = self.sums.iter().map(|v| format!("sum_{v}")).collect();
        tokens.extend(self.deltas.iter().map(|(a, b)| format!("delta({a},{b})")));
        tokens.extend(self.factors.iter().map(|x| x.to_string()));
        if tokens.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&tokens.join(" "))
        }
    }
}

/// The relation `R(p)`. The side carrying `Σ_α` is `left`; for display the
/// sides are swapped when only the right one has `u` factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicRelation {
    pub partition: ColoredPartition,
    pub left: Side,
    pub right: Side,
}

impl SymbolicRelation {
    pub fn swapped(&self) -> bool {
        self.left.degree() == 0 && self.right.degree() > 0
    }
}

impl fmt::Display for SymbolicRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.swapped() {
            write!(f, "{} = {}", self.right, self.left)
        } else {
            write!(f, "{} = {}", self.left, self.right)
        }
    }
}

/// Names of the external indices of one row: the first point of the unique
/// through block, if any, gets the bare letter; a lone point does too;
/// everything else is numbered left to right.
fn row_names(letter: &str, len: usize, special: Option<usize>) -> Vec<String> {
    match special {
        Some(s) => {
            let mut next = 0;
            (0..len)
                .map(|i| {
                    if i == s {
                        letter.to_string()
                    } else {
                        next += 1;
                        format!("{letter}{next}")
                    }
                })
                .collect()
        }
        None if len == 1 => vec![letter.to_string()],
        None => (1..=len).map(|i| format!("{letter}{i}")).collect(),
    }
}

/// Names summation variables for `blocks` (each a list of point names):
/// singletons borrow the suffix of their point, other blocks take the bare
/// letter when they are the only sum, else the next free numbered name.
fn sum_names(letter: &str, family: &str, blocks: &[Vec<String>]) -> Vec<String> {
    let mut names: Vec<Option<String>> = blocks
        .iter()
        .map(|b| match b.as_slice() {
            [single] => Some(format!("{letter}{}", single.strip_prefix(family).unwrap_or(""))),
            _ => None,
        })
        .collect();
    let only = blocks.len() == 1;
    for i in 0..names.len() {
        if names[i].is_some() {
            continue;
        }
        let taken = |c: &str, names: &[Option<String>]| names.iter().flatten().any(|x| x == c);
        let name = if only && !taken(letter, &names) {
            letter.to_string()
        } else {
            (1..)
                .map(|n| format!("{letter}{n}"))
                .find(|c| !taken(c, &names))
                .expect("unbounded")
        };
        names[i] = Some(name);
    }
    names.into_iter().map(|n| n.expect("assigned")).collect()
}

fn chain(names: &[String]) -> Vec<(String, String)> {
    names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
}

/// Emits `R(p)` symbolically.
pub fn emit_relation(p: &ColoredPartition) -> SymbolicRelation {
    let (k, l) = (p.k(), p.l());
    let blocks = p.blocks();
    let upper_of = |b: &[Point]| -> Vec<usize> {
        b.iter().filter_map(|pt| if let Point::Upper(i) = pt { Some(*i) } else { None }).collect()
    };
    let lower_of = |b: &[Point]| -> Vec<usize> {
        b.iter().filter_map(|pt| if let Point::Lower(i) = pt { Some(*i) } else { None }).collect()
    };
    let through: Vec<&Vec<Point>> =
        blocks.iter().filter(|b| !upper_of(b).is_empty() && !lower_of(b).is_empty()).collect();
    let (special_up, special_low) = match through.as_slice() {
        [b] => (upper_of(b).first().copied(), lower_of(b).first().copied()),
        _ => (None, None),
    };
    let j_names = row_names("j", k, special_up);
    let i_names = row_names("i", l, special_low);

    // Left side: Σ_α δ_p(α, β) Π u^{r_m}[α_m][i_m].
    let upper_only: Vec<&Vec<Point>> = blocks.iter().filter(|b| lower_of(b).is_empty()).collect();
    let left_vars = sum_names(
        "k",
        "j",
        &upper_only
            .iter()
            .map(|b| upper_of(b).iter().map(|&m| j_names[m].clone()).collect())
            .collect::<Vec<_>>(),
    );
    let mut left = Side { sums: Vec::new(), deltas: Vec::new(), factors: Vec::new() };
    let mut value_left: Vec<Option<(String, bool)>> = vec![None; k];
    for (b, var) in upper_only.iter().zip(&left_vars) {
        let ups = upper_of(b);
        let hoisted = ups.len() > 1;
        if hoisted {
            left.sums.push(var.clone());
        }
        for m in ups {
            value_left[m] = Some((var.clone(), !hoisted));
        }
    }
    for b in &blocks {
        let lows = lower_of(b);
        if lows.is_empty() {
            continue;
        }
        let names: Vec<String> = lows.iter().map(|&m| i_names[m].clone()).collect();
        left.deltas.extend(chain(&names));
        for m in upper_of(b) {
            value_left[m] = Some((names[0].clone(), false));
        }
    }
    for m in 0..k {
        let (row, in_place) = value_left[m].clone().expect("every point has a block");
        let conj = p.color_of(Point::Upper(m)) == Color::Black;
        let col = j_names[m].clone();
        left.factors.push(if in_place {
            Factor::Summed { var: row.clone(), conj, row, col }
        } else {
            Factor::U { conj, row, col }
        });
    }

    // Right side: Σ_γ δ_p(i, γ) Π u^{s_m}[β_m][γ_m].
    let lower_only: Vec<&Vec<Point>> = blocks.iter().filter(|b| upper_of(b).is_empty()).collect();
    let right_vars = sum_names(
        "l",
        "i",
        &lower_only
            .iter()
            .map(|b| lower_of(b).iter().map(|&m| i_names[m].clone()).collect())
            .collect::<Vec<_>>(),
    );
    let mut right = Side { sums: Vec::new(), deltas: Vec::new(), factors: Vec::new() };
    let mut value_right: Vec<Option<(String, bool)>> = vec![None; l];
    for (b, var) in lower_only.iter().zip(&right_vars) {
        let lows = lower_of(b);
        let hoisted = lows.len() > 1;
        if hoisted {
            right.sums.push(var.clone());
        }
        for m in lows {
            value_right[m] = Some((var.clone(), !hoisted));
        }
    }
    for b in &blocks {
        let ups = upper_of(b);
        if ups.is_empty() {
            continue;
        }
        let names: Vec<String> = ups.iter().map(|&m| j_names[m].clone()).collect();
        right.deltas.extend(chain(&names));
        for m in lower_of(b) {
            value_right[m] = Some((names[0].clone(), false));
        }
    }
    for m in 0..l {
        let (col, in_place) = value_right[m].clone().expect("every point has a block");
        let conj = p.color_of(Point::Lower(m)) == Color::Black;
        let row = i_names[m].clone();
        right.factors.push(if in_place {
            Factor::Summed { var: col.clone(), conj, row, col }
        } else {
            Factor::U { conj, row, col }
        });
    }
    SymbolicRelation { partition: p.clone(), left, right }
}

#[derive(Debug, Error)]
pub enum RelationError {
    #[error("checking needs {needed} index tuples, above the cap of {cap}")]
    SizeCap { needed: u128, cap: u64 },
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Outcome of evaluating `R(p)` on a matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub partition: String,
    pub matrix: String,
    pub n: usize,
    pub tol: f64,
    /// Largest `|left − right|` over all index tuples.
    pub max_deviation: f64,
    pub passed: bool,
    /// Largest distance between the direct evaluation and the products
    /// `T_p u^{⊗r}` and `u^{⊗s} T_p`.
    pub cross_check_deviation: f64,
    /// Whether `T_p u^{⊗r} = u^{⊗s} T_p` within `tol`.
    pub cross_check_passed: bool,
}

impl RelationReport {
    /// `key: value` lines.
    pub fn render(&self) -> String {
        format!(
            "partition: {}\nmatrix: {}\nn: {}\ntol: {:e}\nmax_deviation: {:e}\ncross_check_deviation: {:e}\nverdict: {}\n",
            self.partition,
            self.matrix,
            self.n,
            self.tol,
            self.max_deviation,
            self.cross_check_deviation,
            if self.passed { "pass" } else { "fail" }
        )
    }
}

fn tuples(n: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (n as u64).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        t
    })
}

/// Both sides of `R(p)` at every `(β, i)`, as `[β][i]` row-major arrays,
/// evaluated block by block: fixed blocks contribute single factors and each
/// free block an independent sum.
fn evaluate_direct(p: &ColoredPartition, u: &ConcreteMatrix) -> (Vec<Complex64>, Vec<Complex64>) {
    let n = u.n();
    let (k, l) = (p.k(), p.l());
    let ubar = u.conj();
    let pick = |c: Color| if c == Color::Black { &ubar } else { u };
    let b = p.num_blocks();
    let mut has_upper = vec![false; b];
    let mut has_lower = vec![false; b];
    for i in 0..k {
        has_upper[p.block_of(Point::Upper(i))] = true;
    }
    for j in 0..l {
        has_lower[p.block_of(Point::Lower(j))] = true;
    }
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let cols = n.pow(k as u32);
    let mut left = vec![zero; n.pow(l as u32) * cols];
    let mut right = left.clone();
    // Index values forced on each block by a tuple, or None if inconsistent.
    let forced = |tuple: &[usize], upper: bool| -> Option<Vec<Option<usize>>> {
        let mut v: Vec<Option<usize>> = vec![None; b];
        for (m, &x) in tuple.iter().enumerate() {
            let blk = p.block_of(if upper { Point::Upper(m) } else { Point::Lower(m) });
            match v[blk] {
                None => v[blk] = Some(x),
                Some(y) if y != x => return None,
                _ => {}
            }
        }
        Some(v)
    };
    for (bi, beta) in tuples(n, l).enumerate() {
        let from_beta = forced(&beta, false);
        for (ii, i) in tuples(n, k).enumerate() {
            let idx = bi * cols + ii;
            if let Some(vals) = &from_beta {
                let mut prod = one;
                let mut free: Vec<Vec<usize>> = vec![Vec::new(); b];
                for m in 0..k {
                    let blk = p.block_of(Point::Upper(m));
                    match vals[blk] {
                        Some(a) => prod *= pick(p.color_of(Point::Upper(m))).get(a, i[m]),
                        None => free[blk].push(m),
                    }
                }
                for ms in free.iter().filter(|ms| !ms.is_empty()) {
                    let s: Complex64 = (0..n)
                        .map(|a| {
                            ms.iter().map(|&m| pick(p.color_of(Point::Upper(m))).get(a, i[m])).product::<Complex64>()
                        })
                        .sum();
                    prod *= s;
                }
                left[idx] = prod;
            }
            if let Some(vals) = forced(&i, true) {
                let mut prod = one;
                let mut free: Vec<Vec<usize>> = vec![Vec::new(); b];
                for m in 0..l {
                    let blk = p.block_of(Point::Lower(m));
                    match vals[blk] {
                        Some(g) => prod *= pick(p.color_of(Point::Lower(m))).get(beta[m], g),
                        None => free[blk].push(m),
                    }
                }
                for ms in free.iter().filter(|ms| !ms.is_empty()) {
                    let s: Complex64 = (0..n)
                        .map(|g| {
                            ms.iter().map(|&m| pick(p.color_of(Point::Lower(m))).get(beta[m], g)).product::<Complex64>()
                        })
                        .sum();
                    prod *= s;
                }
                right[idx] = prod;
            }
        }
    }
    let _ = (has_upper, has_lower);
    (left, right)
}

/// Replaces column mode `m` of a `rows × n^k` array: `A[β][..a..] ↦ Σ_a A[β][..a..] X[a][c]`.
fn apply_column_mode(a: &[Complex64], rows: usize, n: usize, k: usize, m: usize, x: &ConcreteMatrix) -> Vec<Complex64> {
    let cols = n.pow(k as u32);
    let stride = n.pow((k - 1 - m) as u32);
    let mut out = vec![Complex64::new(0.0, 0.0); a.len()];
    for r in 0..rows {
        for c in 0..cols {
            let digit = (c / stride) % n;
            let base = c - digit * stride;
            let mut s = Complex64::new(0.0, 0.0);
            for v in 0..n {
                s += a[r * cols + base + v * stride] * x.get(v, digit);
            }
            out[r * cols + c] = s;
        }
    }
    out
}

/// Replaces row mode `m` of an `n^l × cols` array: `A[..b..][c] ↦ Σ_g Y[b][g] A[..g..][c]`.
fn apply_row_mode(a: &[Complex64], cols: usize, n: usize, l: usize, m: usize, y: &ConcreteMatrix) -> Vec<Complex64> {
    let rows = n.pow(l as u32);
    let stride = n.pow((l - 1 - m) as u32);
    let mut out = vec![Complex64::new(0.0, 0.0); a.len()];
    for r in 0..rows {
        let digit = (r / stride) % n;
        let base = r - digit * stride;
        for c in 0..cols {
            let mut s = Complex64::new(0.0, 0.0);
            for g in 0..n {
                s += y.get(digit, g) * a[(base + g * stride) * cols + c];
            }
            out[r * cols + c] = s;
        }
    }
    out
}

/// `T_p u^{⊗r}` and `u^{⊗s} T_p` as `[β][i]` arrays.
fn evaluate_via_map(
    p: &ColoredPartition,
    u: &ConcreteMatrix,
) -> Result<(Vec<Complex64>, Vec<Complex64>), RelationError> {
    let n = u.n();
    let (k, l) = (p.k(), p.l());
    let t = build_map(p, n)?;
    let (rows, cols) = (n.pow(l as u32), n.pow(k as u32));
    let mut dense = vec![Complex64::new(0.0, 0.0); rows * cols];
    for &(r, c) in t.coords() {
        dense[r as usize * cols + c as usize] = Complex64::new(1.0, 0.0);
    }
    let ubar = u.conj();
    let pick = |c: Color| if c == Color::Black { &ubar } else { u };
    let mut left = dense.clone();
    for m in 0..k {
        left = apply_column_mode(&left, rows, n, k, m, pick(p.color_of(Point::Upper(m))));
    }
    let mut right = dense;
    for m in 0..l {
        right = apply_row_mode(&right, cols, n, l, m, pick(p.color_of(Point::Lower(m))));
    }
    Ok((left, right))
}

fn max_dist(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Evaluates `R(p)` on `u` for every index tuple and cross-checks the result
/// against the intertwiner identity `T_p u^{⊗r} = u^{⊗s} T_p`.
pub fn check_relation(
    p: &ColoredPartition,
    u: &ConcreteMatrix,
    tol: f64,
) -> Result<RelationReport, RelationError> {
    let n = u.n();
    let needed = (n as u128).pow((p.k() + p.l()) as u32);
    let cap = coord_cap();
    if needed > cap as u128 {
        return Err(RelationError::SizeCap { needed, cap });
    }
    let (left, right) = evaluate_direct(p, u);
    let max_deviation = max_dist(&left, &right);
    let (map_left, map_right) = evaluate_via_map(p, u)?;
    let cross_check_deviation = max_dist(&left, &map_left).max(max_dist(&right, &map_right));
    Ok(RelationReport {
        partition: p.to_string(),
        matrix: format!("{n}x{n}"),
        n,
        tol,
        max_deviation,
        passed: max_deviation <= tol,
        cross_check_deviation,
        cross_check_passed: max_dist(&map_left, &map_right) <= tol,
    })
}
