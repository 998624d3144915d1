//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the libtest
//! harness; exits nonzero if any criterion fails. Criterion numbers given as
//! arguments restrict the run, e.g. `cargo test --test acceptance -- 1 7`.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use easyqg::base;
use easyqg::catalog::{catalog, CatalogEntry, Family, SliceCache, Source};
use easyqg::category::{generate_closure, slices_equal, Completeness};
use easyqg::enumerate::{all_colored_partitions, color_words, colored_partitions};
use easyqg::maps::{build_map, gram_matrix, permutation_partition, permutations, PartitionMap};
use easyqg::relation::emit_relation;
use easyqg::sample::verify_group_category;
use easyqg::{Color, ColoredPartition, PlainPartition};

const P_MAX: usize = 8;
const I_MAX: usize = 12;

/// Independent reference computations.
mod oracle {
    use easyqg::ColoredPartition;

    /// Bell numbers from the Bell triangle.
    pub fn bell(m: usize) -> usize {
        let mut row = vec![1usize];
        for _ in 0..m {
            let mut next = vec![*row.last().unwrap()];
            for x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        row[0]
    }

    fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (1..=n).map(move |x| {
                        let mut t = t.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// `T_p` as a dense 0/1 matrix straight from the definition: entry
    /// `(β, α)` is 1 iff all points of every block carry equal indices.
    pub fn dense_map(p: &ColoredPartition, n: usize) -> Vec<Vec<u8>> {
        let labels = p.labels();
        tuples(n, p.l())
            .iter()
            .map(|beta| {
                tuples(n, p.k())
                    .iter()
                    .map(|alpha| {
                        let idx: Vec<usize> = alpha.iter().chain(beta).copied().collect();
                        let ok = (0..idx.len()).all(|a| {
                            (0..idx.len()).all(|b| labels[a] != labels[b] || idx[a] == idx[b])
                        });
                        ok as u8
                    })
                    .collect()
            })
            .collect()
    }

    /// Permutations of `k` letters without a decreasing subsequence of
    /// length `n + 1`. Their count is the dimension of the span of the
    /// permutation operators on `(C^n)^{⊗k}`.
    pub fn permutations_avoiding(k: usize, n: usize) -> usize {
        fn longest_decreasing(s: &[usize]) -> usize {
            let mut best = vec![1; s.len()];
            for i in 0..s.len() {
                for j in 0..i {
                    if s[j] > s[i] {
                        best[i] = best[i].max(best[j] + 1);
                    }
                }
            }
            best.into_iter().max().unwrap_or(0)
        }
        let mut count = 0;
        let mut perm: Vec<usize> = (0..k).collect();
        heap(&mut perm, k, &mut |p| {
            if longest_decreasing(p) <= n {
                count += 1;
            }
        });
        count
    }

    fn heap(a: &mut Vec<usize>, m: usize, f: &mut impl FnMut(&[usize])) {
        if m <= 1 {
            f(a);
            return;
        }
        for i in 0..m {
            heap(a, m - 1, f);
            let j = if m % 2 == 0 { i } else { 0 };
            a.swap(j, m - 1);
        }
    }

    pub fn factorial(k: usize) -> usize {
        (1..=k).product()
    }

    fn sums(letter: &str, range: std::ops::RangeInclusive<usize>, conj: bool, row_first: bool, ext: &str) -> Vec<String> {
        range
            .map(|m| {
                let (row, col) = if row_first {
                    (format!("{letter}{m}"), format!("{ext}{m}"))
                } else {
                    (format!("{ext}{m}"), format!("{letter}{m}"))
                };
                format!("(sum_{letter}{m} u{}[{row}][{col}])", if conj { "*" } else { "" })
            })
            .collect()
    }

    /// `u_ij (Σ_k1 u_k1j1) … (Σ_kd u_kdjd) = (Σ_l1 u_i1l1) … (Σ_ld u_idld) u_ij`.
    pub fn positioner_relation(d: usize) -> String {
        let mut left = vec!["u[i][j]".to_string()];
        left.extend(sums("k", 1..=d, false, true, "j"));
        let mut right = sums("l", 1..=d, false, false, "i");
        right.push("u[i][j]".into());
        format!("{} = {}", left.join(" "), right.join(" "))
    }

    /// `u_ij (Σ_k1 u*_k1j1) = (Σ_l1 u_i1l1) u*_ij`.
    pub fn wbwb_positioner_relation() -> String {
        let mut left = vec!["u[i][j]".to_string()];
        left.extend(sums("k", 1..=1, true, true, "j"));
        let mut right = sums("l", 1..=1, false, false, "i");
        right.push("u*[i][j]".into());
        format!("{} = {}", left.join(" "), right.join(" "))
    }

    /// `u_ij (Σ_k1 u_k1j1) … (Σ_k(r-1) …) = (Σ_l1 u_i1l1) … (Σ_l(r+1) …) u*_ij`.
    pub fn shifted_positioner_relation(r: usize) -> String {
        let mut left = vec!["u[i][j]".to_string()];
        left.extend(sums("k", 1..=r - 1, false, true, "j"));
        let mut right = sums("l", 1..=r + 1, false, false, "i");
        right.push("u*[i][j]".into());
        format!("{} = {}", left.join(" "), right.join(" "))
    }
}

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn functor_laws() -> Outcome {
    let parts: Vec<ColoredPartition> = (0..=6).flat_map(all_colored_partitions).collect();
    // Parts are ordered by size; up_to[m] counts those with at most m points.
    let up_to: Vec<usize> = (0..=6).map(|m| parts.iter().filter(|p| p.size() <= m).count()).collect();
    let mut checked = [0usize; 3];
    for n in [2usize, 3] {
        // T_p only sees block structure: build one map per plain partition,
        // check it against the definition, and check that every coloring
        // yields the same map.
        let mut maps: HashMap<PlainPartition, PartitionMap> = HashMap::new();
        for p in &parts {
            let t = build_map(p, n).unwrap();
            match maps.get(&p.forget_colors()) {
                Some(known) => check(*known == t, || format!("T_{p} depends on colors at n={n}"))?,
                None => {
                    check(t.to_dense() == oracle::dense_map(p, n), || {
                        format!("T_{p} at n={n} differs from its definition")
                    })?;
                    maps.insert(p.forget_colors(), t);
                }
            }
        }
        let map = |p: &ColoredPartition| &maps[&p.forget_colors()];
        for p in &parts {
            check(*map(&p.involute()) == map(p).transpose(), || format!("adjoint law fails for {p} at n={n}"))?;
            checked[1] += 1;
        }
        for p in &parts {
            for q in &parts[..up_to[6 - p.size()]] {
                let pq = p.tensor(q);
                check(*map(&pq) == map(p).kron(map(q)), || format!("tensor law fails for {p}, {q} at n={n}"))?;
                checked[0] += 1;
                if p.l() == q.k() && p.lower_colors() == q.upper_colors() {
                    let (composed, rl) = p.compose(q).unwrap();
                    let scale = (n as u64).pow(rl as u32);
                    let expected: Vec<((u64, u64), u64)> =
                        map(&composed).coords().iter().map(|&c| (c, scale)).collect();
                    check(map(q).product(map(p)) == expected, || format!("composition law fails for {p} on top of {q} at n={n}"))?;
                    checked[2] += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} partitions, {} tensor pairs, {} adjoints, {} composable pairs over n=2,3",
        parts.len(),
        checked[0],
        checked[1],
        checked[2]
    ))
}

fn linear_independence() -> Outcome {
    let mut shapes = 0;
    for m in 0..=4 {
        // n = k + l; the empty shape uses n = 1.
        let n = m.max(1);
        for k in 0..=m {
            for colors in color_words(m) {
                let (upper, lower) = colors.split_at(k);
                let parts = colored_partitions(upper, lower);
                check(parts.len() == oracle::bell(m), || format!("|P({k},{})| = {} but Bell({m}) = {}", m - k, parts.len(), oracle::bell(m)))?;
                let rank = gram_matrix(&parts, n).unwrap().rank();
                check(rank == parts.len(), || format!("rank {rank} < {} for P({k},{}) at n={n}", parts.len(), m - k))?;
                shapes += 1;
            }
        }
    }
    check(oracle::bell(4) == 15 && colored_partitions(&[], &[Color::White; 4]).len() == 15, || "Bell(4) != 15".into())?;
    Ok(format!("{shapes} colorings with k+l <= 4 have full-rank Gram matrices"))
}

fn classification(cache: &mut SliceCache, entries: &[CatalogEntry]) -> Outcome {
    let mut heuristic = Vec::new();
    for e in entries {
        let s = cache.get(e, P_MAX, I_MAX).map_err(|err| format!("{}: {err}", e.name()))?;
        check(s.classify_case() == e.case, || format!("{}: case {} instead of {}", e.name(), s.classify_case(), e.case))?;
        check(s.colorization() == e.colorization, || {
            format!("{}: colorization {} instead of {}", e.name(), s.colorization(), e.colorization)
        })?;
        if e.global_parameter <= 4 {
            let g = s.global_parameter();
            check(g.value == e.global_parameter, || {
                format!("{}: global parameter {} instead of {}", e.name(), g.value, e.global_parameter)
            })?;
        }
        if s.completeness() != Completeness::Stable {
            heuristic.push(e.name());
        }
    }
    Ok(format!(
        "{} entries at P_max={P_MAX}; {} slices not probe-stable: {}",
        entries.len(),
        heuristic.len(),
        heuristic.join(" ")
    ))
}

fn separation(cache: &mut SliceCache, entries: &[CatalogEntry]) -> Outcome {
    for e in entries {
        cache.get(e, P_MAX, I_MAX).map_err(|err| err.to_string())?;
    }
    let cache = &*cache;
    let slice = |e: &CatalogEntry| cache.cached(e, P_MAX, I_MAX).expect("generated above");
    let mut unseparated = Vec::new();
    let mut pairs = 0;
    for (a_idx, a) in entries.iter().enumerate() {
        for b in &entries[a_idx + 1..] {
            if a.same_category(b) {
                continue;
            }
            pairs += 1;
            if slices_equal(slice(a), slice(b), P_MAX).unwrap() {
                unseparated.push(format!("{}~{}", a.name(), b.name()));
            }
        }
    }
    let mut msg = format!("{pairs} pairs, {} separated at bound {P_MAX}", pairs - unseparated.len());
    if !unseparated.is_empty() {
        msg.push_str(&format!("; bound-limited (no witness with <= {P_MAX} points): {}", unseparated.join(" ")));
    }
    Ok(msg)
}

fn nesting(cache: &mut SliceCache, entries: &[CatalogEntry]) -> Outcome {
    let mut positives = 0;
    for e in entries {
        let s = cache.get(e, P_MAX, I_MAX).map_err(|err| err.to_string())?;
        for k in [2, 3] {
            let tensor = s.contains(&base::white_pairs(k)).unwrap();
            let nested = s.contains(&base::nested_pair(k)).unwrap();
            check(tensor == nested, || format!("{}: tensor {tensor}, nested {nested} at k={k}", e.name()))?;
            positives += tensor as usize;
        }
    }
    Ok(format!("{} slices, {positives} positive instances", entries.len()))
}

fn local_identities() -> Outcome {
    let mut done = Vec::new();
    for family in [Family::HLoc, Family::SLoc, Family::BLoc, Family::BpLoc] {
        for k in [2, 3] {
            let (full, zero) = if family == Family::BpLoc {
                (vec![k, k, 0], vec![k, 0, 0])
            } else {
                (vec![k, k], vec![k, 0])
            };
            let a = generate_closure(&family.generators_unchecked(&full), P_MAX, I_MAX).unwrap();
            let b = generate_closure(&family.generators_unchecked(&zero), P_MAX, I_MAX).unwrap();
            check(slices_equal(&a, &b, P_MAX).unwrap(), || format!("{}: C({k},{k}) != C({k},0)", family.name()))?;
            done.push(format!("{}{k}", family.name()));
        }
    }
    Ok(format!("C(k,k) = C(k,0) at bound {P_MAX} for {}", done.join(" ")))
}

fn schur_weyl() -> Outcome {
    let mut out = Vec::new();
    for (k, n) in [(2, 2), (2, 3), (3, 3), (3, 2)] {
        let parts: Vec<ColoredPartition> =
            permutations(k).iter().map(|s| permutation_partition(s).unwrap()).collect();
        let rank = gram_matrix(&parts, n).unwrap().rank();
        let expected = oracle::permutations_avoiding(k, n);
        check(rank == expected, || format!("rank {rank} at (k,n)=({k},{n}), expected {expected}"))?;
        if n >= k {
            check(rank == oracle::factorial(k), || format!("rank {rank} < {k}! at n={n}"))?;
        } else {
            check(rank < oracle::factorial(k), || format!("rank {rank} = {k}! at n={n}"))?;
        }
        out.push(format!("({k},{n})->{rank}"));
    }
    Ok(out.join(" "))
}

fn group_cases() -> Outcome {
    let entries: Vec<CatalogEntry> = catalog(3)
        .into_iter()
        .filter(|e| e.source == Source::GroupCase && e.alias_of.is_none())
        .collect();
    let mut worst: f64 = 0.0;
    let mut names = Vec::new();
    for e in &entries {
        let group = e.group.expect("group-case entries carry a group");
        for n in [3, 4] {
            let r = verify_group_category(group, e, n, 20, 1, 1e-9).map_err(|err| format!("{}: {err}", e.name()))?;
            check(r.passed(), || format!("{} vs {group} at n={n}:\n{}", e.name(), r.render()))?;
            check(r.cross_check_deviation <= 1e-9, || format!("{}: cross-check deviation {:e}", e.name(), r.cross_check_deviation))?;
            worst = worst.max(r.max_deviation);
        }
        names.push(format!("{}:{group}", e.name()));
    }
    Ok(format!("{} pairs, worst deviation {worst:.1e}: {}", entries.len(), names.join(", ")))
}

fn positioner_relations() -> Outcome {
    let mut checked = 0;
    for d in [2, 3] {
        let got = emit_relation(&base::positioner(d).rot_t(d + 1).unwrap()).to_string();
        let want = oracle::positioner_relation(d);
        check(got == want, || format!("positioner({d}): {got:?} != {want:?}"))?;
        checked += 1;
        if d % 2 == 0 {
            let r = d / 2;
            let got = emit_relation(&base::positioner_shifted(r).rot_t(r).unwrap()).to_string();
            let want = oracle::shifted_positioner_relation(r);
            check(got == want, || format!("shifted positioner({r}): {got:?} != {want:?}"))?;
            checked += 1;
        }
    }
    let got = emit_relation(&base::positioner_wbwb().rot_t(2).unwrap()).to_string();
    let want = oracle::wbwb_positioner_relation();
    check(got == want, || format!("wbwb positioner: {got:?} != {want:?}"))?;
    Ok(format!("{} relations reproduced token-for-token", checked + 1))
}

fn main() -> ExitCode {
    let catalog4 = catalog(4);
    let catalog3 = catalog(3);
    let mut cache = SliceCache::new();
    // Optional arguments select criteria by number.
    let only: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    let mut run = |label: &str, f: &mut dyn FnMut() -> Outcome| {
        let number = label.split(' ').next().unwrap_or("");
        if !only.is_empty() && !only.iter().any(|o| o == number) {
            return;
        }
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS {label} ({secs:.1}s): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {label} ({secs:.1}s): {msg}");
            }
        }
    };
    run("1 functor laws", &mut functor_laws);
    run("2 linear independence", &mut linear_independence);
    run("3 classification regression", &mut || classification(&mut cache, &catalog4));
    run("4 separation", &mut || separation(&mut cache, &catalog3));
    run("5 nesting lemma", &mut || nesting(&mut cache, &catalog4));
    run("6 local C(k,k) = C(k,0)", &mut local_identities);
    run("7 Schur-Weyl", &mut schur_weyl);
    run("8 group cases", &mut group_cases);
    run("9 positioner relations", &mut positioner_relations);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
