mod common;

use common::{collapse_brute, kostka_brute, lr_by_induction, parity_ok};
use proptest::prelude::*;
use saxl_core::hyperoctahedral::BcCharTable;
use saxl_core::orbit::{closure_leq, collapse, d_map, OrbitLabel, OrbitType};
use saxl_core::partition::{dominance, kostka, lr_coeff, Partition};
use saxl_core::symmetric::{mn_value, SnCharTable};

fn partition_strategy(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn orbit_ranks(ty: OrbitType, max_size: usize) -> impl Iterator<Item = usize> {
    (1..).take_while(move |&n| ty.partition_size(n) <= max_size)
}

#[test]
fn dmap_is_idempotent_up_to_three_and_increasing() {
    for ty in [OrbitType::A, OrbitType::B, OrbitType::C, OrbitType::D] {
        for n in orbit_ranks(ty, 12) {
            for o in OrbitLabel::all(ty, n) {
                let d1 = d_map(&o);
                let d2 = d_map(&d1);
                assert_eq!(d_map(&d2), d1, "d³ ≠ d at {o}");
                assert!(closure_leq(&o, &d2).unwrap().is_leq(), "d² < id at {o}");
            }
        }
    }
}

#[test]
fn dmap_reverses_closure_order() {
    for ty in [OrbitType::B, OrbitType::C, OrbitType::D] {
        for n in orbit_ranks(ty, 12) {
            let all = OrbitLabel::all(ty, n);
            for a in &all {
                for b in &all {
                    if closure_leq(a, b).unwrap().is_leq() {
                        assert!(closure_leq(&d_map(b), &d_map(a)).unwrap().is_leq(), "{a} ≤ {b} not reversed");
                    }
                }
            }
        }
    }
}

#[test]
fn collapse_matches_exhaustive_search() {
    for m in 1..=12 {
        for ty in [OrbitType::B, OrbitType::C, OrbitType::D] {
            if !parity_ok(ty, m) {
                continue;
            }
            for lambda in Partition::all(m) {
                assert_eq!(collapse(&lambda, ty).unwrap(), collapse_brute(&lambda, ty), "{ty} collapse of {lambda}");
            }
        }
    }
}

#[test]
fn kostka_and_lr_match_oracles_small() {
    for n in 0..=6 {
        let parts = Partition::all(n);
        for shape in &parts {
            for content in &parts {
                assert_eq!(kostka(shape, content).unwrap(), kostka_brute(shape, content), "K({shape},{content})");
            }
        }
        for a in 0..=n {
            for alpha in Partition::all(a) {
                for beta in Partition::all(n - a) {
                    for gamma in &parts {
                        assert_eq!(
                            lr_coeff(&alpha, &beta, gamma).unwrap(),
                            lr_by_induction(&alpha, &beta, gamma),
                            "c^{gamma}_({alpha}),({beta})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn character_tables_are_orthogonal() {
    for n in 1..=10 {
        SnCharTable::compute(n).verify_orthogonality().unwrap();
    }
    for n in 1..=5 {
        BcCharTable::compute(n).verify_orthogonality().unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transpose_is_an_involution_reversing_dominance(a in partition_strategy(6, 6), b in partition_strategy(6, 6)) {
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        if a.size() == b.size() {
            let d = dominance(&a, &b).unwrap();
            prop_assert_eq!(dominance(&b.transpose(), &a.transpose()).unwrap(), d);
        }
    }

    #[test]
    fn collapse_is_dominated_admissible_and_idempotent(lambda in partition_strategy(7, 7)) {
        prop_assume!(lambda.size() > 0 && lambda.size() <= 14);
        for ty in [OrbitType::B, OrbitType::C, OrbitType::D] {
            if !parity_ok(ty, lambda.size()) {
                continue;
            }
            let c = collapse(&lambda, ty).unwrap();
            prop_assert!(ty.admits(&c));
            prop_assert!(dominance(&c, &lambda).unwrap().is_leq());
            prop_assert_eq!(collapse(&c, ty).unwrap(), c.clone());
            if lambda.size() <= 10 {
                prop_assert_eq!(c, collapse_brute(&lambda, ty));
            }
        }
    }

    #[test]
    fn kostka_matches_tableau_count((shape, content) in (1usize..=9).prop_flat_map(|n| (partition_of(n), partition_of(n)))) {
        prop_assert_eq!(kostka(&shape, &content).unwrap(), kostka_brute(&shape, &content));
    }

    #[test]
    fn lr_matches_induced_characters(
        (alpha, beta, gamma) in (0usize..=5, 0usize..=4).prop_flat_map(|(a, b)| (partition_of(a), partition_of(b), partition_of(a + b)))
    ) {
        prop_assert_eq!(lr_coeff(&alpha, &beta, &gamma).unwrap(), lr_by_induction(&alpha, &beta, &gamma));
        prop_assert_eq!(lr_coeff(&alpha, &beta, &gamma).unwrap(), lr_coeff(&beta, &alpha, &gamma).unwrap());
        prop_assert_eq!(
            lr_coeff(&alpha, &beta, &gamma).unwrap(),
            lr_coeff(&alpha.transpose(), &beta.transpose(), &gamma.transpose()).unwrap()
        );
    }

    #[test]
    fn degree_is_character_at_identity(lambda in partition_strategy(5, 5)) {
        prop_assume!(lambda.size() > 0);
        let id = Partition::from_unsorted(vec![1; lambda.size()]);
        let v = mn_value(&lambda, &id).unwrap();
        prop_assert_eq!(num_bigint::BigUint::from(v as u128), lambda.dimension());
    }
}
