//! Documented input/output examples across the category, map, relation and
//! group layers.

use easyqg::base;
use easyqg::catalog::{catalog, match_catalog_with, parse_entry_name, SliceCache};
use easyqg::category::{generate_closure, slices_equal, Case, Colorization, Membership};
use easyqg::maps::{gram_matrix, intertwiner_dimension, permutation_partition, permutations};
use easyqg::partition::parse_color_word;
use easyqg::relation::{check_relation, emit_relation};
use easyqg::sample::{
    sample_group_element, verify_group_category, verify_relations_on_group, ConcreteMatrix, GroupKind, GroupSpec,
};
use easyqg::{parse_partition, Color, ColoredPartition};
use Color::{Black as B, White as W};

fn lit(s: &str) -> ColoredPartition {
    parse_partition(s).unwrap()
}

fn names(entries: &[easyqg::catalog::CatalogEntry]) -> Vec<String> {
    entries.iter().map(|e| e.name()).collect()
}

#[test]
fn membership() {
    let empty = generate_closure(&[], 6, 10).unwrap();
    assert!(empty.contains(&base::identity(W, W)).unwrap());
    assert!(empty.contains(&lit("ox|;(u1 u2)")).unwrap());
    assert!(empty.contains(&base::pair(W, B)).unwrap());

    let crossing = generate_closure(&[base::crossing_white()], 4, 8).unwrap();
    assert!(crossing.contains(&base::crossing([W, B], [B, W])).unwrap());

    let four = generate_closure(&[base::four_block_wbwb()], 8, 12).unwrap();
    assert_eq!(four.membership(&base::singleton_pair()).unwrap(), Membership::No);

    let singletons = generate_closure(&[base::singleton_pair()], 6, 10).unwrap();
    assert!(singletons.contains(&base::singleton_pair()).unwrap());
}

#[test]
fn cases_and_colorization() {
    let empty = generate_closure(&[], 8, 12).unwrap();
    assert_eq!((empty.classify_case(), empty.colorization()), (Case::O, Colorization::Local));
    assert_eq!(empty.global_parameter().value, 0);

    let four = generate_closure(&[base::four_block_wbwb()], 8, 12).unwrap();
    assert_eq!(four.classify_case(), Case::H);

    let gens = [base::singleton_pair(), base::four_block_wbwb(), base::global_pairs(), base::singleton(W)];
    let s = generate_closure(&gens, 8, 12).unwrap();
    assert_eq!(s.classify_case(), Case::S);

    let g = generate_closure(&[base::global_pairs()], 8, 12).unwrap();
    assert_eq!(g.colorization(), Colorization::Global);

    for e in catalog(4).iter().filter(|e| e.source == easyqg::catalog::Source::GlobalNoncrossing) {
        assert_eq!(e.colorization, Colorization::Global, "{}", e.name());
    }
}

#[test]
fn global_parameters() {
    for (name, k) in [("S_glob(3)", 3), ("O_glob(2)", 2)] {
        let e = parse_entry_name(name).unwrap();
        let s = generate_closure(&e.generators, 8, 12).unwrap();
        assert_eq!(s.global_parameter().value, k, "{name}");
    }
}

#[test]
fn catalog_matches() {
    let entries = catalog(6);
    let mut cache = SliceCache::new();

    let s = generate_closure(&[base::crossing_white()], 8, 12).unwrap();
    assert_eq!(names(&match_catalog_with(&s, &entries, &mut cache)), ["Ogrp_loc"]);

    let gens = [base::b(3), base::four_block_wwbb(), base::four_block_wbwb()];
    let s = generate_closure(&gens, 8, 12).unwrap();
    assert_eq!(names(&match_catalog_with(&s, &entries, &mut cache)), ["H_loc(3,0)", "H_loc(3,3)"]);

    let gens = [base::identity(W, B), base::four_block_wbwb(), base::singleton(W)];
    let s = generate_closure(&gens, 8, 12).unwrap();
    let found = names(&match_catalog_with(&s, &entries, &mut cache));
    assert!(found.contains(&"S_glob(1)".to_string()), "{found:?}");
    assert!(found.contains(&"S_n+".to_string()), "{found:?}");
}

#[test]
fn slice_equality() {
    let e = parse_entry_name("S_loc(3,3)").unwrap();
    let a = generate_closure(&e.generators, 6, 10).unwrap();
    let b = generate_closure(&e.family.generators_unchecked(&[3, 0]), 6, 10).unwrap();
    assert!(slices_equal(&a, &b, 6).unwrap());

    let empty = generate_closure(&[], 4, 8).unwrap();
    let four = generate_closure(&[base::four_block_wbwb()], 4, 8).unwrap();
    assert!(!slices_equal(&empty, &four, 4).unwrap());
    assert!(slices_equal(&four, &four, 4).unwrap());
}

#[test]
fn intertwiner_dimensions() {
    let o = |w: &str| parse_color_word(w).unwrap();
    let empty = generate_closure(&[], 6, 10).unwrap();
    assert_eq!(intertwiner_dimension(&empty, &o("o"), &o("o"), 3).unwrap(), 1);

    let full = parse_entry_name("Sgrp_glob(1)").unwrap();
    let s = generate_closure(&full.generators, 4, 8).unwrap();
    assert_eq!(intertwiner_dimension(&s, &o("oo"), &o("oo"), 4).unwrap(), 15);

    let perms: Vec<ColoredPartition> =
        permutations(3).iter().map(|p| permutation_partition(p).unwrap()).collect();
    assert_eq!(gram_matrix(&perms, 3).unwrap().rank(), 6);

    let unitary = parse_entry_name("Ogrp_loc").unwrap();
    let s = generate_closure(&unitary.generators, 6, 10).unwrap();
    assert_eq!(intertwiner_dimension(&s, &o("ooo"), &o("ooo"), 3).unwrap(), 6);
}

#[test]
fn relations() {
    assert_eq!(
        emit_relation(&base::singletons(2, W)).to_string(),
        "(sum_l1 u[i1][l1]) (sum_l2 u[i2][l2]) = 1"
    );
    assert_eq!(
        emit_relation(&base::four_block_wbwb().rot_t(2).unwrap()).to_string(),
        "delta(i,i1) u[i][j] u*[i][j1] = delta(j,j1) u[i][j] u*[i1][j]"
    );

    let id = ConcreteMatrix::identity(3);
    for p in [base::identity(W, W), base::pair(B, W), base::four_block_wwbb()] {
        assert!(check_relation(&p, &id, 1e-9).unwrap().passed, "{p}");
    }
    let perm = sample_group_element(GroupSpec::new(GroupKind::Symmetric), 3, 42).unwrap();
    assert!(check_relation(&base::singleton(W), &perm, 1e-9).unwrap().passed);
    let diag = ConcreteMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0]);
    let r = check_relation(&base::singleton(W), &diag, 1e-9).unwrap();
    assert!(!r.passed);
    assert_eq!(r.max_deviation, 2.0);
}

#[test]
fn four_block_relation_is_orthogonality_of_products() {
    // u_ki u*_kj = 0 for i != j, checked on a permutation matrix and a
    // generic unitary.
    let p = base::four_block_wbwb().rot_t(2).unwrap();
    let perm = sample_group_element(GroupSpec::new(GroupKind::Hyperoctahedral), 3, 1).unwrap();
    assert!(check_relation(&p, &perm, 1e-9).unwrap().passed);
    let u = sample_group_element(GroupSpec::new(GroupKind::Unitary), 3, 1).unwrap();
    assert!(!check_relation(&p, &u, 1e-9).unwrap().passed);
}

#[test]
fn group_checks() {
    let s = parse_entry_name("Sgrp_glob(1)").unwrap();
    let sym = GroupSpec::new(GroupKind::Symmetric);
    assert!(verify_group_category(sym, &s, 4, 20, 0, 1e-9).unwrap().passed());

    let u = parse_entry_name("Ogrp_loc").unwrap();
    let unitary = GroupSpec::new(GroupKind::Unitary);
    assert!(verify_group_category(unitary, &u, 3, 20, 0, 1e-9).unwrap().passed());

    let orth = GroupSpec::new(GroupKind::Orthogonal);
    let report = verify_relations_on_group(orth, &s, 3, 5, 0, 1e-9).unwrap();
    assert!(!report.passed());
    assert!(report.render().ends_with("verdict: fail\n"));
    assert!(verify_group_category(orth, &s, 3, 5, 0, 1e-9).is_err());
}
