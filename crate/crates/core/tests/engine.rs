use std::time::{Duration, Instant};

use saxl_core::cache::{self, Cache};
use saxl_core::exact::dixon::character_table;
use saxl_core::exact::pin::{analyze, PinCover};
use saxl_core::exact::{GroupName, ReflectionGroup};
use saxl_core::symmetric::SnCharTable;

fn covers() -> Vec<GroupName> {
    let mut v = vec![GroupName::G2, GroupName::F4, GroupName::H3];
    v.extend((3..=12).map(GroupName::I2));
    v
}

#[test]
fn omega_scalars_are_positive_on_every_cover() {
    for name in covers() {
        let p = analyze(name, false).unwrap();
        assert!(!p.genuine.is_empty(), "{name}: no genuine characters");
        for g in &p.genuine {
            assert!(g.omega > 0.0 && g.omega_weighted > 0.0, "{name}: χ̃#{} has Ω ≤ 0", g.index);
        }
        assert!(p.exterior_power >= 1);
    }
}

#[test]
fn weighted_omega_is_rational_for_crystallographic_covers() {
    for name in [GroupName::G2, GroupName::F4] {
        let p = analyze(name, false).unwrap();
        for g in &p.genuine {
            assert!(!g.omega_weighted_exact.contains("E("), "{name}: Ω = {}", g.omega_weighted_exact);
        }
    }
}

#[test]
fn spinor_routes_agree_and_give_irreducibles() {
    for name in covers() {
        let cover = PinCover::build(ReflectionGroup::build(name).unwrap()).unwrap();
        let by_trace = cover.spinor_characters();
        assert_eq!(by_trace, cover.spinor_characters_by_matrices(), "{name}");
        let t = character_table(&cover.group).unwrap();
        for s in &by_trace {
            assert!(t.rows.iter().any(|r| r == s), "{name}: spinor character is not irreducible");
        }
    }
}

#[test]
fn sign_twist_of_spinors() {
    for name in covers() {
        let cover = PinCover::build(ReflectionGroup::build(name).unwrap()).unwrap();
        let sgn = cover.sign_character();
        let s = cover.spinor_characters();
        let twist = |f: &Vec<_>| -> Vec<_> { f.iter().zip(&sgn).map(|(a, b)| a * b).collect() };
        if name.rank() % 2 == 0 {
            assert_eq!(s.len(), 1);
            assert_eq!(twist(&s[0]), s[0], "{name}: S ⊗ sgn ≠ S");
        } else {
            assert_eq!(s.len(), 2);
            assert_eq!(twist(&s[0]), s[1], "{name}: S+ ⊗ sgn ≠ S-");
            assert_eq!(twist(&s[1]), s[0], "{name}: S- ⊗ sgn ≠ S+");
        }
    }
}

fn best(v: Vec<Duration>) -> Duration {
    v.into_iter().min().expect("nonempty")
}

#[test]
fn cached_sn_table_is_identical_and_faster() {
    let n = 10;
    let mut cold = Vec::new();
    let mut warm = Vec::new();
    for _ in 0..9 {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path());
        let t0 = Instant::now();
        let a = cache::sn_table(Some(&c), n).unwrap();
        cold.push(t0.elapsed());
        let t1 = Instant::now();
        let b = cache::sn_table(Some(&c), n).unwrap();
        warm.push(t1.elapsed());
        assert_eq!(a.rows, b.rows);
        assert_eq!(a.labels, b.labels);
        assert_eq!(b.rows, SnCharTable::compute(n).rows);
    }
    let (cold, warm) = (best(cold), best(warm));
    let ratio = cold.as_secs_f64() / warm.as_secs_f64();
    eprintln!("S_{n}: compute {cold:?}, cache hit {warm:?}, ratio {ratio:.1}");
    assert!(ratio >= 10.0, "cache hit only {ratio:.1}x faster");
}

#[test]
fn cached_reflection_table_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let c = Cache::new(dir.path());
    let (_, a) = cache::reflection_table(Some(&c), GroupName::F4).unwrap();
    let (_, b) = cache::reflection_table(Some(&c), GroupName::F4).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let bc1 = cache::bc_table(Some(&c), 4).unwrap();
    let bc2 = cache::bc_table(Some(&c), 4).unwrap();
    assert_eq!(bc1.to_json(), bc2.to_json());
}

#[test]
fn reflection_group_tables_are_exact() {
    let mut names = vec![GroupName::G2, GroupName::F4, GroupName::E6, GroupName::H3, GroupName::H4];
    names.extend((3..=8).map(GroupName::I2));
    for name in names {
        let g = ReflectionGroup::build(name).unwrap();
        assert_eq!(g.group.order(), name.order(), "{name}");
        character_table(&g.group).unwrap().verify().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    assert!(ReflectionGroup::build(GroupName::E7).is_err());
}

#[test]
fn cover_presentations_and_spinor_tensor_degrees() {
    for name in covers() {
        let p = analyze(name, false).unwrap();
        p.cover.check_presentation().unwrap();
        p.cover_table.verify().unwrap();
        let spinor_dim = p.cover.full_spinor()[p.cover.group.class_of(0)].as_integer().unwrap() as u64;
        for g in &p.genuine {
            let total: u64 =
                g.spinor_tensor.iter().enumerate().map(|(row, m)| m * p.base_table.table.degree(row)).sum();
            assert_eq!(total, g.dim * spinor_dim, "{name}: χ̃#{}", g.index);
        }
    }
}
