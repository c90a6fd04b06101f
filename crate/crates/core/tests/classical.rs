use std::collections::BTreeSet;

use num_bigint::BigUint;
use saxl_core::classical::{getallfamily_check, gsaxl_check_c, gsaxl_check_d, induction_identity_check, lemma48_check};
use saxl_core::hyperoctahedral::{
    bc_dimension, exterior_power_label, group_order_c, sign_label, sign_twist, BcCharTable,
};
use saxl_core::orbit::{is_special, OrbitLabel, OrbitType};
use saxl_core::partition::BiPartition;
use saxl_core::symbols::{
    families, family_id, family_members_c, family_members_d, good_family_classical, is_special_character,
    special_character_of_orbit, SymbolType,
};

#[test]
fn families_partition_the_irreducibles_with_one_special_each() {
    for n in 1..=6 {
        let fams = families(SymbolType::BC, n);
        let total: usize = fams.iter().map(|f| f.members.len()).sum();
        assert_eq!(total, BiPartition::all(n).len());
        for f in &fams {
            assert_eq!(f.special.len(), 1, "W(C_{n}) family {:?}", f.members);
        }
    }
}

#[test]
fn special_orbits_biject_onto_special_characters() {
    for ty in [OrbitType::B, OrbitType::C] {
        for n in 1..=6 {
            let specials: BTreeSet<BiPartition> =
                BiPartition::all(n).into_iter().filter(|c| is_special_character(c, SymbolType::BC)).collect();
            let image: Vec<BiPartition> = OrbitLabel::all(ty, n)
                .iter()
                .filter(|o| is_special(o))
                .map(|o| special_character_of_orbit(o).unwrap())
                .collect();
            let distinct: BTreeSet<BiPartition> = image.iter().cloned().collect();
            assert_eq!(distinct.len(), image.len(), "type {ty} rank {n}: not injective");
            assert_eq!(distinct, specials, "type {ty} rank {n}");
        }
    }
}

#[test]
fn explicit_families_are_families() {
    for k in 1..=3 {
        let members = family_members_c(k);
        let id = family_id(&members[0], SymbolType::BC);
        assert!(members.iter().all(|m| family_id(m, SymbolType::BC) == id));
        let good = good_family_classical(OrbitType::C, k * (k + 1)).unwrap();
        assert_eq!(good.len(), 1);
        let got: BTreeSet<_> = good[0].members.iter().cloned().collect();
        assert_eq!(got, members.iter().cloned().collect::<BTreeSet<_>>());

        let members = family_members_d(k);
        let id = family_id(&members[0], SymbolType::D);
        assert!(members.iter().all(|m| family_id(m, SymbolType::D) == id));
    }
}

#[test]
fn hyperoctahedral_table_identities() {
    for n in 1..=5 {
        let t = BcCharTable::compute(n);
        let sum_sq: BigUint = t.labels.iter().map(|c| bc_dimension(c).pow(2)).sum();
        assert_eq!(sum_sq, group_order_c(n));
        let sgn = t.character(&sign_label(n)).unwrap();
        for i in 0..=n {
            assert_eq!(
                t.exterior_power(i).unwrap(),
                t.character(&exterior_power_label(n, i)).unwrap(),
                "Λ^{i} on C_{n}"
            );
        }
        for chi in &t.labels {
            let f = t.character(chi).unwrap();
            let twisted: Vec<_> = f.iter().zip(&sgn).map(|(a, b)| a * b).collect();
            assert_eq!(twisted, t.character(&sign_twist(chi)).unwrap(), "{chi} ⊗ sgn");
        }
    }
}

#[test]
fn exterior_identity_small_ranks() {
    for n in 1..=4 {
        let r = lemma48_check(n, 8).unwrap();
        assert!(r.mismatches.is_empty(), "n={n}: {:?}", r.mismatches);
    }
}

#[test]
fn family_exhaustion_small_ranks() {
    for ty in [OrbitType::C, OrbitType::D] {
        for k in 1..=2 {
            let r = getallfamily_check(ty, k, 12).unwrap();
            assert!(r.passed(), "{ty} k={k}");
            assert_eq!(r.paths_agree, Some(true));
        }
    }
}

#[test]
fn family_squares_small_ranks() {
    let c = gsaxl_check_c(1, 3).unwrap();
    assert!(c.missing.is_empty() && c.passed(), "{:?}", c.missing);
    let d = gsaxl_check_d(2, 3).unwrap();
    assert!(d.missing.is_empty() && d.passed(), "{:?}", d.missing);
}

#[test]
fn induction_identity() {
    for k in 1..=2 {
        assert!(induction_identity_check(k, 3).unwrap().passed());
    }
}

#[test]
fn bounds_are_enforced() {
    assert!(lemma48_check(9, 8).is_err());
    assert!(gsaxl_check_c(4, 3).is_err());
}
