//! Seeded samplers for the matrix groups of the group case, and the check
//! that sampled elements satisfy the relations of a catalog category.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::category::base_generators;
use crate::relation::{check_relation, RelationError};

/// Tolerance for sampler postconditions.
pub const SAMPLER_TOL: f64 = 1e-12;

/// The matrix groups attached to categories containing the crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    /// Permutation matrices.
    Symmetric,
    /// Signed permutation matrices.
    Hyperoctahedral,
    /// Permutation matrices with `s`-th roots of unity as entries; `s = 0`
    /// allows arbitrary phases.
    WreathCyclic(usize),
    Orthogonal,
    Unitary,
    /// Orthogonal matrices with all row and column sums 1.
    Bistochastic,
    /// Unitary matrices with all row and column sums 1.
    UnitaryBistochastic,
}

/// A group `G` twisted by `Z_k`: its elements are `ω g` with `g ∈ G` and `ω`
/// a `k`-th root of unity. `k = 1` is `G` itself and `k = 0` allows any phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub twist: usize,
}

impl GroupSpec {
    pub fn new(kind: GroupKind) -> GroupSpec {
        GroupSpec { kind, twist: 1 }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Symmetric => f.write_str("S_n"),
            GroupKind::Hyperoctahedral => f.write_str("H_n"),
            GroupKind::WreathCyclic(s) => write!(f, "Z_{s} wr S_n"),
            GroupKind::Orthogonal => f.write_str("O_n"),
            GroupKind::Unitary => f.write_str("U_n"),
            GroupKind::Bistochastic => f.write_str("B_n"),
            GroupKind::UnitaryBistochastic => f.write_str("C_n"),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.twist != 1 {
            write!(f, " x~ Z_{}", self.twist)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SampleError {
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("matrix size must be at least 2, got {0}")]
    BadSize(usize),
    #[error("sampled matrix violates {0}")]
    Postcondition(String),
    #[error("bad matrix text: {0}")]
    MatrixSyntax(String),
}

/// Parses `S_n`, `H_n`, `O_n`, `U_n`, `B_n`, `C_n` or `Z_s wr S_n`, each
/// optionally followed by a twist `x~ Z_k`. Short forms such as `S`, `Z3wrS`
/// and `O:2` (twist 2) are accepted too.
pub fn parse_group(text: &str) -> Result<GroupSpec, SampleError> {
    let unknown = || SampleError::UnknownGroup(text.to_string());
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (base, twist) = if let Some((b, t)) = compact.split_once("x~") {
        (b.to_string(), Some(t.trim_start_matches("Z_").trim_start_matches('Z').to_string()))
    } else if let Some((b, t)) = compact.split_once(':') {
        (b.to_string(), Some(t.to_string()))
    } else {
        (compact, None)
    };
    let twist = match twist {
        Some(t) => t.parse().map_err(|_| unknown())?,
        None => 1,
    };
    let base = base.strip_suffix("_n").unwrap_or(&base);
    let kind = match base {
        "S" => GroupKind::Symmetric,
        "H" => GroupKind::Hyperoctahedral,
        "O" => GroupKind::Orthogonal,
        "U" => GroupKind::Unitary,
        "B" => GroupKind::Bistochastic,
        "C" => GroupKind::UnitaryBistochastic,
        _ => {
            let rest = base.strip_prefix("Z").ok_or_else(unknown)?;
            let rest = rest.strip_prefix('_').unwrap_or(rest);
            let s = rest.strip_suffix("wrS").ok_or_else(unknown)?;
            GroupKind::WreathCyclic(s.parse().map_err(|_| unknown())?)
        }
    };
    Ok(GroupSpec { kind, twist })
}

/// A dense complex `n × n` matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ConcreteMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ConcreteMatrix {
    pub fn zeros(n: usize) -> ConcreteMatrix {
        ConcreteMatrix { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> ConcreteMatrix {
        let mut m = ConcreteMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_real(n: usize, entries: &[f64]) -> ConcreteMatrix {
        assert_eq!(entries.len(), n * n, "need n*n entries");
        ConcreteMatrix { n, data: entries.iter().map(|&x| Complex64::new(x, 0.0)).collect() }
    }

    pub fn from_complex(n: usize, entries: Vec<Complex64>) -> ConcreteMatrix {
        assert_eq!(entries.len(), n * n, "need n*n entries");
        ConcreteMatrix { n, data: entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn conj(&self) -> ConcreteMatrix {
        ConcreteMatrix { n: self.n, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn transpose(&self) -> ConcreteMatrix {
        let mut t = ConcreteMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn adjoint(&self) -> ConcreteMatrix {
        self.transpose().conj()
    }

    pub fn mul(&self, other: &ConcreteMatrix) -> ConcreteMatrix {
        let n = self.n;
        let mut out = ConcreteMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn scale(&self, z: Complex64) -> ConcreteMatrix {
        ConcreteMatrix { n: self.n, data: self.data.iter().map(|x| x * z).collect() }
    }

    /// Largest entry-wise distance.
    pub fn max_diff(&self, other: &ConcreteMatrix) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Distance of `U* U` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        self.adjoint().mul(self).max_diff(&ConcreteMatrix::identity(self.n))
    }

    /// Largest distance of a row or column sum from 1.
    pub fn sum_defect(&self) -> f64 {
        let n = self.n;
        let one = Complex64::new(1.0, 0.0);
        let mut worst = 0f64;
        for i in 0..n {
            let row: Complex64 = (0..n).map(|j| self.get(i, j)).sum();
            let col: Complex64 = (0..n).map(|j| self.get(j, i)).sum();
            worst = worst.max((row - one).norm()).max((col - one).norm());
        }
        worst
    }

    fn max_imag(&self) -> f64 {
        self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }
}

impl fmt::Display for ConcreteMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| {
                    let z = self.get(i, j);
                    format!("{}{:+}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for ConcreteMatrix {
    type Err = SampleError;

    /// Reads the [`Display`](fmt::Display) format: one row per line,
    /// entries such as `1`, `-0.5`, `2i` or `0.5-0.25i` separated by
    /// whitespace. Blank lines and `#` comments are skipped.
    fn from_str(text: &str) -> Result<ConcreteMatrix, SampleError> {
        let mut rows: Vec<Vec<Complex64>> = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<Complex64>().map_err(|_| SampleError::MatrixSyntax(format!("entry {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(SampleError::MatrixSyntax("expected a square matrix".into()));
        }
        Ok(ConcreteMatrix::from_complex(n, rows.concat()))
    }
}

fn root_of_unity(s: usize, rng: &mut ChaCha8Rng) -> Complex64 {
    // Exact signs keep real groups real.
    if s == 2 {
        return Complex64::new(if rng.random::<bool>() { 1.0 } else { -1.0 }, 0.0);
    }
    let angle = if s == 0 {
        rng.random::<f64>() * 2.0 * PI
    } else {
        2.0 * PI * rng.random_range(0..s) as f64 / s as f64
    };
    Complex64::from_polar(1.0, angle)
}

fn permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    sigma
}

/// Orthonormalizes the columns of `cols` in place (modified Gram–Schmidt).
fn gram_schmidt(cols: &mut [Vec<Complex64>]) {
    for j in 0..cols.len() {
        for i in 0..j {
            let (done, rest) = cols.split_at_mut(j);
            let q = &done[i];
            let v = &mut rest[0];
            let dot: Complex64 = q.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in v.iter_mut().zip(q) {
                *x -= dot * y;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for x in cols[j].iter_mut() {
            *x /= norm;
        }
    }
}

fn from_columns(cols: &[Vec<Complex64>]) -> ConcreteMatrix {
    let n = cols.len();
    let mut m = ConcreteMatrix::zeros(n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            m.set(i, j, z);
        }
    }
    m
}

/// Haar-distributed orthogonal (`complex = false`) or unitary matrix.
fn gaussian_orthonormal(n: usize, complex: bool, rng: &mut ChaCha8Rng) -> ConcreteMatrix {
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let re: f64 = rng.sample(StandardNormal);
                    let im: f64 = if complex { rng.sample(StandardNormal) } else { 0.0 };
                    Complex64::new(re, im)
                })
                .collect()
        })
        .collect();
    gram_schmidt(&mut cols);
    from_columns(&cols)
}

/// A real orthogonal matrix whose first column is the normalized ones vector.
fn ones_frame(n: usize, rng: &mut ChaCha8Rng) -> ConcreteMatrix {
    let mut cols = vec![vec![Complex64::new(1.0, 0.0); n]];
    for _ in 1..n {
        cols.push((0..n).map(|_| Complex64::new(rng.sample(StandardNormal), 0.0)).collect());
    }
    gram_schmidt(&mut cols);
    from_columns(&cols)
}

/// `Q diag(1, V) Qᵀ`, which fixes the ones vector.
fn fix_ones(n: usize, complex: bool, rng: &mut ChaCha8Rng) -> ConcreteMatrix {
    let q = ones_frame(n, rng);
    let v = gaussian_orthonormal(n - 1, complex, rng);
    let mut block = ConcreteMatrix::zeros(n);
    block.set(0, 0, Complex64::new(1.0, 0.0));
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            block.set(i + 1, j + 1, v.get(i, j));
        }
    }
    q.mul(&block).mul(&q.transpose())
}

fn sample_base(kind: GroupKind, n: usize, rng: &mut ChaCha8Rng) -> ConcreteMatrix {
    let one = Complex64::new(1.0, 0.0);
    let monomial = |rng: &mut ChaCha8Rng, entry: &mut dyn FnMut(&mut ChaCha8Rng) -> Complex64| {
        let sigma = permutation(n, rng);
        let mut m = ConcreteMatrix::zeros(n);
        for (j, &i) in sigma.iter().enumerate() {
            let z = entry(rng);
            m.set(i, j, z);
        }
        m
    };
    match kind {
        GroupKind::Symmetric => monomial(rng, &mut |_| one),
        GroupKind::Hyperoctahedral => monomial(rng, &mut |r| root_of_unity(2, r)),
        GroupKind::WreathCyclic(s) => monomial(rng, &mut |r| root_of_unity(s, r)),
        GroupKind::Orthogonal => gaussian_orthonormal(n, false, rng),
        GroupKind::Unitary => gaussian_orthonormal(n, true, rng),
        GroupKind::Bistochastic => fix_ones(n, false, rng),
        GroupKind::UnitaryBistochastic => fix_ones(n, true, rng),
    }
}

/// Checks the defining properties of `kind` on an untwisted element.
pub fn check_membership(kind: GroupKind, m: &ConcreteMatrix, tol: f64) -> Result<(), String> {
    if !m.is_finite() {
        return Err("finite entries".into());
    }
    let defect = m.unitarity_defect();
    if defect > tol {
        return Err(format!("unitarity (defect {defect:e})"));
    }
    let real = matches!(
        kind,
        GroupKind::Symmetric
            | GroupKind::Hyperoctahedral
            | GroupKind::Orthogonal
            | GroupKind::Bistochastic
    );
    if real && m.max_imag() > tol {
        return Err("real entries".into());
    }
    if matches!(kind, GroupKind::Bistochastic | GroupKind::UnitaryBistochastic) {
        let d = m.sum_defect();
        if d > tol {
            return Err(format!("row and column sums 1 (defect {d:e})"));
        }
    }
    let monomial_roots = match kind {
        GroupKind::Symmetric => Some(1),
        GroupKind::Hyperoctahedral => Some(2),
        GroupKind::WreathCyclic(s) => Some(s),
        _ => None,
    };
    if let Some(s) = monomial_roots {
        let n = m.n();
        for i in 0..n {
            let nonzero: Vec<Complex64> =
                (0..n).map(|j| m.get(i, j)).filter(|z| z.norm() > tol).collect();
            if nonzero.len() != 1 {
                return Err("one nonzero entry per row".into());
            }
            let z = nonzero[0];
            if (z.norm() - 1.0).abs() > tol || (s > 0 && (z.powu(s as u32) - 1.0).norm() > tol) {
                return Err(format!("entries that are roots of unity of order {s}"));
            }
        }
    }
    Ok(())
}

/// A seeded element of the twisted group, with its membership asserted.
pub fn sample_group_element(
    group: GroupSpec,
    n: usize,
    seed: u64,
) -> Result<ConcreteMatrix, SampleError> {
    if n < 2 {
        return Err(SampleError::BadSize(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = sample_base(group.kind, n, &mut rng);
    check_membership(group.kind, &base, SAMPLER_TOL).map_err(SampleError::Postcondition)?;
    let m = if group.twist == 1 { base } else { base.scale(root_of_unity(group.twist, &mut rng)) };
    if m.unitarity_defect() > SAMPLER_TOL {
        return Err(SampleError::Postcondition("unitarity after twist".into()));
    }
    Ok(m)
}

/// Outcome of checking a category against sampled group elements.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupReport {
    pub entry: String,
    pub group: GroupSpec,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Number of relations checked per sample.
    pub relations: usize,
    pub max_deviation: f64,
    /// Largest disagreement between the direct evaluation and the
    /// intertwiner identity.
    pub cross_check_deviation: f64,
    /// Samples on which the two evaluations disagreed about pass/fail.
    pub cross_check_mismatches: usize,
    /// First relation that failed, with the sample index.
    pub first_failure: Option<(String, usize)>,
}

impl GroupReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none() && self.cross_check_mismatches == 0
    }

    /// `key: value` lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("partition: {}\n", self.entry));
        out.push_str(&format!("group: {}\n", self.group));
        out.push_str(&format!("n: {}\n", self.n));
        out.push_str(&format!("samples: {}\n", self.samples));
        out.push_str(&format!("relations: {}\n", self.relations));
        out.push_str(&format!("max_deviation: {:e}\n", self.max_deviation));
        out.push_str(&format!("cross_check_deviation: {:e}\n", self.cross_check_deviation));
        if let Some((rel, sample)) = &self.first_failure {
            out.push_str(&format!("first_failure: {rel} (sample {sample})\n"));
        }
        out.push_str(&format!("verdict: {}\n", if self.passed() { "pass" } else { "fail" }));
        out
    }
}

#[derive(Debug, Error)]
pub enum GroupCheckError {
    #[error("{entry} is not a group-case category")]
    NotGroupCase { entry: String },
    #[error("{entry} corresponds to {expected}, not {given}")]
    Mismatch { entry: String, expected: GroupSpec, given: GroupSpec },
    #[error(transparent)]
    Sample(#[from] SampleError),
    #[error(transparent)]
    Relation(#[from] RelationError),
}

/// Checks every generator relation of `entry`, including those of the base
/// partitions, on `samples` elements of `group` drawn with seeds
/// `seed, seed + 1, ...`.
pub fn verify_group_category(
    group: GroupSpec,
    entry: &CatalogEntry,
    n: usize,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<GroupReport, GroupCheckError> {
    let expected =
        entry.group.ok_or_else(|| GroupCheckError::NotGroupCase { entry: entry.name() })?;
    if expected != group {
        return Err(GroupCheckError::Mismatch { entry: entry.name(), expected, given: group });
    }
    verify_relations_on_group(group, entry, n, samples, seed, tol)
}

/// As [`verify_group_category`] without requiring the pairing to be the
/// listed one; used to show that wrong pairings fail.
pub fn verify_relations_on_group(
    group: GroupSpec,
    entry: &CatalogEntry,
    n: usize,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<GroupReport, GroupCheckError> {
    let mut partitions = base_generators();
    partitions.extend(entry.generators.iter().cloned());
    let mut report = GroupReport {
        entry: entry.name(),
        group,
        n,
        samples,
        seed,
        tol,
        relations: partitions.len(),
        max_deviation: 0.0,
        cross_check_deviation: 0.0,
        cross_check_mismatches: 0,
        first_failure: None,
    };
    for s in 0..samples {
        let u = sample_group_element(group, n, seed.wrapping_add(s as u64))?;
        for p in &partitions {
            let r = check_relation(p, &u, tol)?;
            report.max_deviation = report.max_deviation.max(r.max_deviation);
            report.cross_check_deviation =
                report.cross_check_deviation.max(r.cross_check_deviation);
            if r.passed != r.cross_check_passed {
                report.cross_check_mismatches += 1;
            }
            if !r.passed && report.first_failure.is_none() {
                report.first_failure = Some((p.to_string(), s));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const KINDS: [GroupKind; 8] = [
        GroupKind::Symmetric,
        GroupKind::Hyperoctahedral,
        GroupKind::WreathCyclic(3),
        GroupKind::WreathCyclic(0),
        GroupKind::Orthogonal,
        GroupKind::Unitary,
        GroupKind::Bistochastic,
        GroupKind::UnitaryBistochastic,
    ];

    #[test]
    fn samplers_meet_postconditions() {
        for kind in KINDS {
            for n in 2..=5 {
                for seed in 0..20 {
                    for twist in [0, 1, 2, 3] {
                        let g = GroupSpec { kind, twist };
                        let m = sample_group_element(g, n, seed).unwrap();
                        assert!(m.unitarity_defect() <= SAMPLER_TOL, "{g} n={n} seed={seed}");
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let g = GroupSpec { kind: GroupKind::Unitary, twist: 3 };
        assert_eq!(sample_group_element(g, 3, 7).unwrap(), sample_group_element(g, 3, 7).unwrap());
        assert_ne!(sample_group_element(g, 3, 7).unwrap(), sample_group_element(g, 3, 8).unwrap());
    }

    #[test]
    fn matrix_text_round_trip() {
        let u = sample_group_element(GroupSpec::new(GroupKind::Unitary), 3, 4).unwrap();
        let back: ConcreteMatrix = u.to_string().parse().unwrap();
        assert!(back.max_diff(&u) < 1e-15);
        let m: ConcreteMatrix = "1 0 # first row\n\n0 -1i\n".parse().unwrap();
        assert_eq!(m.get(1, 1), Complex64::new(0.0, -1.0));
        assert!("1 2\n3".parse::<ConcreteMatrix>().is_err());
        assert!("1 x\n3 4".parse::<ConcreteMatrix>().is_err());
    }

    #[test]
    fn permutation_matrices() {
        let m = sample_group_element(GroupSpec::new(GroupKind::Symmetric), 3, 1).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let z = m.get(i, j);
                assert!(z == Complex64::new(0.0, 0.0) || z == Complex64::new(1.0, 0.0));
            }
        }
        let h = sample_group_element(GroupSpec::new(GroupKind::Hyperoctahedral), 4, 2).unwrap();
        check_membership(GroupKind::Hyperoctahedral, &h, 0.0).unwrap();
    }

    #[test]
    fn bistochastic_sums() {
        for seed in 0..10 {
            let m = sample_group_element(GroupSpec::new(GroupKind::Bistochastic), 3, seed).unwrap();
            assert!(m.sum_defect() <= SAMPLER_TOL);
            assert!(m.max_imag() == 0.0);
        }
    }

    #[test]
    fn rejects_non_members() {
        let diag = ConcreteMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0]);
        assert!(check_membership(GroupKind::Symmetric, &diag, 1e-12).is_err());
        assert!(check_membership(GroupKind::Hyperoctahedral, &diag, 1e-12).is_ok());
        assert!(check_membership(GroupKind::Bistochastic, &diag, 1e-12).is_err());
    }

    #[test]
    fn group_names() {
        for kind in KINDS {
            for twist in [0, 1, 4] {
                let g = GroupSpec { kind, twist };
                assert_eq!(parse_group(&g.to_string()).unwrap(), g);
            }
        }
        assert_eq!(parse_group("S").unwrap(), GroupSpec::new(GroupKind::Symmetric));
        assert_eq!(
            parse_group("Z3wrS").unwrap(),
            GroupSpec::new(GroupKind::WreathCyclic(3))
        );
        assert_eq!(parse_group("O:2").unwrap(), GroupSpec { kind: GroupKind::Orthogonal, twist: 2 });
        assert!(parse_group("Q_n").is_err());
    }
}
