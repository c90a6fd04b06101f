//! Tensor-product checks on `W(C_n)` and `W(D_n)`: the exterior-algebra
//! Littlewood–Richardson identity, family tensor squares, the family
//! exhaustion statement for the self-dual minimal solvable orbit, and the
//! induction formula for `sigma_{(lambda, lambda)}`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperoctahedral::{bc_dimension, BcCharTable, BcClass, ClassFn, DLabel};
use crate::orbit::OrbitType;
use crate::partition::{lr_coeff, BiPartition, Partition};
use crate::symbols::{family_members_c, family_members_d, lr_constituents, minimal_rectangle};
use crate::symmetric::MnColumn;

pub const LEMMA48_DEFAULT_BOUND: usize = 8;
pub const GSAXL_C_DEFAULT_BOUND: usize = 3;
pub const GSAXL_D_DEFAULT_BOUND: usize = 3;
/// Largest rank at which the family-exhaustion check also decomposes with the
/// full `W(C_n)` table.
pub const DIRECT_PATH_MAX_N: usize = 12;

/// `1` for even rank, `2` for odd rank.
pub fn a_v(n: usize) -> u32 {
    if n.is_multiple_of(2) {
        1
    } else {
        2
    }
}

fn bound_check(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        return Err(Error::BoundExceeded { what, value, bound });
    }
    Ok(())
}

fn to_u64(v: &BigInt) -> u64 {
    v.to_u64().expect("multiplicity is a small nonnegative integer")
}

fn nonneg(v: BigInt) -> BigUint {
    v.to_biguint().expect("multiplicity is nonnegative")
}

/// One triple where the two sides of the exterior-algebra identity differ.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Lemma48Mismatch {
    pub chi: BiPartition,
    pub gamma: Partition,
    pub inner_product: u64,
    pub lr: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Lemma48Report {
    pub n: usize,
    pub a_v: u32,
    pub triples_checked: usize,
    /// Triples where `<sigma_{(alpha,beta)}, sigma_{(gamma,-)} ⊗ Λ V>` differs
    /// from `N^gamma_{alpha, beta^t}`.
    pub mismatches: Vec<Lemma48Mismatch>,
    /// Triples where the same identity with the left side scaled by `a_V`
    /// fails; nonzero exactly for odd `n`.
    pub weighted_mismatches: usize,
}

/// Compares `<sigma_{(alpha,beta)}, sigma_{(gamma,-)} ⊗ Λ V>` with
/// `N^gamma_{alpha, beta^t}` for every `(alpha, beta)` and `gamma` of size `n`.
pub fn lemma48_check(n: usize, bound: usize) -> Result<Lemma48Report> {
    bound_check("n", n, bound)?;
    let table = BcCharTable::compute(n);
    let ext = table.exterior_algebra();
    let gammas = Partition::all(n);
    let results: Vec<Result<(usize, Vec<Lemma48Mismatch>, usize)>> = gammas
        .par_iter()
        .map(|gamma| {
            let g = table.character(&BiPartition::new(gamma.clone(), Partition::empty()))?;
            let f: ClassFn = g.iter().zip(&ext).map(|(a, b)| a * b).collect();
            let mults = table.decompose(&f);
            let mut bad = Vec::new();
            let mut weighted = 0;
            for (chi, m) in table.labels.iter().zip(&mults) {
                let lr = lr_coeff(&chi.first, &chi.second.transpose(), gamma)?;
                let ip = to_u64(m);
                if ip != lr {
                    bad.push(Lemma48Mismatch { chi: chi.clone(), gamma: gamma.clone(), inner_product: ip, lr });
                }
                if ip * a_v(n) as u64 != lr {
                    weighted += 1;
                }
            }
            Ok((table.labels.len(), bad, weighted))
        })
        .collect();
    let mut report =
        Lemma48Report { n, a_v: a_v(n), triples_checked: 0, mismatches: Vec::new(), weighted_mismatches: 0 };
    for r in results {
        let (count, bad, weighted) = r?;
        report.triples_checked += count;
        report.mismatches.extend(bad);
        report.weighted_mismatches += weighted;
    }
    Ok(report)
}

/// Outcome of a family tensor-square containment check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GsaxlReport {
    pub conjecture: String,
    pub group: String,
    pub k: usize,
    pub n: usize,
    pub family: Vec<String>,
    pub missing: Vec<String>,
    #[serde(with = "crate::report::big_pairs")]
    pub multiplicities: Vec<(String, BigUint)>,
    /// Every constituent of some `Λ^i V ⊗ Λ^j V` occurs in the square.
    pub exterior_constituents_present: bool,
    /// Set when the check has nothing to compute.
    pub skipped: Option<String>,
}

impl GsaxlReport {
    pub fn passed(&self) -> bool {
        self.skipped.is_some() || self.exterior_constituents_present
    }
}

fn square(f: &[BigInt]) -> ClassFn {
    f.iter().map(|v| v * v).collect()
}

fn exterior_pair_constituents(table: &BcCharTable) -> Result<BTreeSet<usize>> {
    let powers: Vec<ClassFn> = (0..=table.n).map(|i| table.exterior_power(i)).collect::<Result<_>>()?;
    let mut present = BTreeSet::new();
    for i in 0..=table.n {
        for j in i..=table.n {
            let f: ClassFn = powers[i].iter().zip(&powers[j]).map(|(a, b)| a * b).collect();
            for (idx, m) in table.decompose(&f).iter().enumerate() {
                if !m.is_zero() {
                    present.insert(idx);
                }
            }
        }
    }
    Ok(present)
}

/// Squares the sum over the family of `((k^{k+1}), -)` in `W(C_{k(k+1)})`.
pub fn gsaxl_check_c(k: usize, bound: usize) -> Result<GsaxlReport> {
    bound_check("k", k, bound)?;
    let n = k * (k + 1);
    let table = BcCharTable::compute(n);
    gsaxl_c_with(&table, k)
}

pub fn gsaxl_c_with(table: &BcCharTable, k: usize) -> Result<GsaxlReport> {
    let n = k * (k + 1);
    if table.n != n {
        return Err(Error::SizeMismatch(table.n, n));
    }
    let family = family_members_c(k);
    let sq = square(&table.sum_of(&family)?);
    let mults = table.decompose(&sq);
    let ext = exterior_pair_constituents(table)?;
    let exterior_constituents_present = ext.iter().all(|&i| !mults[i].is_zero());
    let multiplicities: Vec<(String, BigUint)> =
        table.labels.iter().zip(mults).map(|(l, m)| (l.to_string(), nonneg(m))).collect();
    Ok(GsaxlReport {
        conjecture: "family tensor square contains every irreducible".into(),
        group: format!("W(C_{n})"),
        k,
        n,
        family: family.iter().map(|b| b.to_string()).collect(),
        missing: multiplicities.iter().filter(|(_, m)| m.is_zero()).map(|(l, _)| l.clone()).collect(),
        multiplicities,
        exterior_constituents_present,
        skipped: None,
    })
}

/// Squares the sum over the family of `((k^k), -)` in `W(D_{k^2})`.
pub fn gsaxl_check_d(k: usize, bound: usize) -> Result<GsaxlReport> {
    bound_check("k", k, bound)?;
    let n = k * k;
    let family = family_members_d(k);
    let unordered: Vec<BiPartition> = family.iter().filter(|b| b.first > b.second).cloned().collect();
    let mut report = GsaxlReport {
        conjecture: "family tensor square contains every irreducible".into(),
        group: format!("W(D_{n})"),
        k,
        n,
        family: unordered.iter().map(|b| DLabel::of(b).to_string()).collect(),
        missing: Vec::new(),
        multiplicities: Vec::new(),
        exterior_constituents_present: true,
        skipped: None,
    };
    if n < 2 {
        report.skipped = Some(format!("W(D_{n}) is degenerate at rank {n}"));
        return Ok(report);
    }
    let table = BcCharTable::compute(n);
    let sq = square(&table.sum_of(&unordered)?);
    let mults = table.decompose_restricted_to_d(&sq);
    let mut present = BTreeSet::new();
    let powers: Vec<ClassFn> = (0..=n).map(|i| table.exterior_power(i)).collect::<Result<_>>()?;
    for i in 0..=n {
        for j in i..=n {
            let f: ClassFn = powers[i].iter().zip(&powers[j]).map(|(a, b)| a * b).collect();
            for (l, m) in table.decompose_restricted_to_d(&f) {
                if !m.is_zero() {
                    present.insert(l);
                }
            }
        }
    }
    report.exterior_constituents_present = mults.iter().all(|(l, m)| !present.contains(l) || !m.is_zero());
    report.missing = mults.iter().filter(|(_, m)| m.is_zero()).map(|(l, _)| l.to_string()).collect();
    report.multiplicities = mults.into_iter().map(|(l, m)| (l.to_string(), nonneg(m))).collect();
    Ok(report)
}

/// The constituents of `sigma_{(lambda, -)} ⊗ Λ V` for the self-dual
/// minimal solvable orbit, compared with the explicit family.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GetAllFamilyReport {
    pub ty: OrbitType,
    pub k: usize,
    pub n: usize,
    pub lambda: Partition,
    /// Ordered bipartitions of the family (type D lists both orderings).
    pub family: Vec<BiPartition>,
    /// `W(C_n)` multiplicities from Littlewood–Richardson coefficients.
    pub lr: BTreeMap<BiPartition, u64>,
    /// The same multiplicities from the character table, when computed.
    pub direct: Option<BTreeMap<BiPartition, u64>>,
    /// `W(D_n)` multiplicities of each unordered pair (type D only).
    pub d_level: Option<BTreeMap<String, u64>>,
    pub constituents_match_family: bool,
    pub all_multiplicity_one: bool,
    pub paths_agree: Option<bool>,
    /// Every family member has a validating strict expansion witness.
    pub witnesses_valid: bool,
}

impl GetAllFamilyReport {
    pub fn passed(&self) -> bool {
        self.constituents_match_family
            && self.all_multiplicity_one
            && self.paths_agree.unwrap_or(true)
            && self.witnesses_valid
    }
}

/// Runs both computation paths where the table is within `direct_max_n`.
pub fn getallfamily_check(ty: OrbitType, k: usize, direct_max_n: usize) -> Result<GetAllFamilyReport> {
    let n = match ty {
        OrbitType::C => k * (k + 1),
        OrbitType::D => k * k,
        _ => return Err(Error::UnsupportedGroup(format!("type {ty}"))),
    };
    let lambda = minimal_rectangle(ty, n)?;
    let family = match ty {
        OrbitType::C => family_members_c(k),
        _ => family_members_d(k),
    };
    let lr = lr_constituents(&lambda)?;
    let direct = if n <= direct_max_n {
        let table = BcCharTable::compute(n);
        let g = table.character(&BiPartition::new(lambda.clone(), Partition::empty()))?;
        let f: ClassFn = g.iter().zip(table.exterior_algebra()).map(|(a, b)| a * b).collect();
        let mults = table.decompose(&f);
        Some(
            table
                .labels
                .iter()
                .zip(mults)
                .filter(|(_, m)| !m.is_zero())
                .map(|(l, m)| (l.clone(), to_u64(&m)))
                .collect::<BTreeMap<_, _>>(),
        )
    } else {
        None
    };
    let constituents: BTreeSet<&BiPartition> = lr.keys().collect();
    let fam: BTreeSet<&BiPartition> = family.iter().collect();
    let d_level = (ty == OrbitType::D).then(|| {
        let mut m: BTreeMap<String, u64> = BTreeMap::new();
        for (chi, c) in &lr {
            *m.entry(DLabel::of(chi).to_string()).or_default() += c;
        }
        m
    });
    let witnesses_valid = family.iter().all(|chi| {
        crate::partition::strict_expansion_witness(&chi.first, &chi.second, &lambda)
            .map(|w| w.validate().is_ok())
            .unwrap_or(false)
    });
    Ok(GetAllFamilyReport {
        ty,
        k,
        n,
        constituents_match_family: constituents == fam,
        all_multiplicity_one: lr.values().all(|&c| c == 1),
        paths_agree: direct.as_ref().map(|d| *d == lr),
        lambda,
        family,
        lr,
        direct,
        d_level,
        witnesses_valid,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InductionReport {
    pub k: usize,
    pub n: usize,
    pub classes_checked: usize,
    pub mismatched_classes: Vec<String>,
    /// `dim sigma_{(lambda,lambda)} = [W : H] (f^lambda)^2`.
    pub degree_ok: bool,
}

impl InductionReport {
    pub fn passed(&self) -> bool {
        self.mismatched_classes.is_empty() && self.degree_ok
    }
}

/// Induces `sigma_lambda ⊠ sigma_lambda ⊠ triv^{n/2} ⊠ sgn^{n/2}` from
/// `W(C_{n/2}) x W(C_{n/2})` class by class and compares it with
/// `sigma_{(lambda, lambda)}`, `lambda` the staircase of size `n/2`.
pub fn induction_identity_check(k: usize, bound: usize) -> Result<InductionReport> {
    bound_check("k", k, bound)?;
    let lambda = Partition::staircase(k as u32);
    let m = lambda.size();
    let n = 2 * m;
    let chi = BiPartition::new(lambda.clone(), lambda.clone());
    let classes = BcClass::all(n);
    let mismatched: Vec<String> = classes
        .par_iter()
        .filter_map(|c| {
            let induced = induced_value(c, &lambda);
            let direct = BigInt::from(crate::hyperoctahedral::bc_char_value(&chi, c).expect("sizes match"));
            (induced != direct).then(|| c.to_string())
        })
        .collect();
    let index = crate::symmetric::factorial(n) / (crate::symmetric::factorial(m) * crate::symmetric::factorial(m));
    let f = lambda.dimension();
    let degree_ok = bc_dimension(&chi) == index * &f * &f
        && induced_value(&BcClass::identity(n), &lambda) == BigInt::from(bc_dimension(&chi));
    Ok(InductionReport { k, n, classes_checked: classes.len(), mismatched_classes: mismatched, degree_ok })
}

/// `sum over splittings c = c1 + c2 of z(c) / (z(c1) z(c2)) f1(c1) f2(c2)`
/// with `f1 = chi^lambda` on the cycle type and `f2` the same twisted by the
/// parity of negative cycles.
fn induced_value(c: &BcClass, lambda: &Partition) -> BigInt {
    let m = lambda.size();
    // Distinct (length, negative) cycle kinds with their counts.
    let mut kinds: Vec<(u32, bool, usize)> = Vec::new();
    for (p, neg) in [(&c.positive, false), (&c.negative, true)] {
        for (l, a) in p.multiplicities() {
            kinds.push((l, neg, a));
        }
    }
    let zc = BigInt::from(c.centralizer_order());
    let mut total = BigInt::zero();
    let mut choice = vec![0usize; kinds.len()];
    loop {
        let size1: usize = kinds.iter().zip(&choice).map(|(k, &j)| k.0 as usize * j).sum();
        if size1 == m {
            let build = |first: bool| {
                let (mut pos, mut neg) = (Vec::new(), Vec::new());
                for (kd, &j) in kinds.iter().zip(&choice) {
                    let cnt = if first { j } else { kd.2 - j };
                    let target = if kd.1 { &mut neg } else { &mut pos };
                    target.extend(std::iter::repeat_n(kd.0, cnt));
                }
                BcClass::new(Partition::from_unsorted(pos), Partition::from_unsorted(neg))
            };
            let (c1, c2) = (build(true), build(false));
            let cycle_type =
                |x: &BcClass| Partition::from_unsorted(x.positive.parts().iter().chain(x.negative.parts()).copied());
            let f1 = MnColumn::new(&cycle_type(&c1)).value(lambda.parts());
            let mut f2 = MnColumn::new(&cycle_type(&c2)).value(lambda.parts());
            if c2.negative.len() % 2 == 1 {
                f2 = -f2;
            }
            let z = BigInt::from(c1.centralizer_order()) * BigInt::from(c2.centralizer_order());
            total += &zc * BigInt::from(f1) * BigInt::from(f2) / z;
        }
        // Next choice vector (mixed radix).
        let mut i = 0;
        loop {
            if i == kinds.len() {
                return total;
            }
            if choice[i] < kinds[i].2 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma48_small() {
        for n in 1..=4 {
            let r = lemma48_check(n, 8).unwrap();
            assert!(r.mismatches.is_empty(), "n={n}: {:?}", r.mismatches);
            assert_eq!(r.weighted_mismatches == 0, n % 2 == 0, "n={n}");
        }
        assert!(lemma48_check(9, 8).is_err());
    }

    #[test]
    fn c2_saxl() {
        let r = gsaxl_check_c(1, 3).unwrap();
        assert!(r.missing.is_empty());
        assert_eq!(r.family.len(), 3);
    }

    #[test]
    fn d4_saxl() {
        let r = gsaxl_check_d(2, 3).unwrap();
        assert!(r.missing.is_empty(), "{:?}", r.missing);
        assert!(gsaxl_check_d(1, 3).unwrap().skipped.is_some());
    }

    #[test]
    fn getallfamily_small() {
        let r = getallfamily_check(OrbitType::C, 1, 12).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.lr.len(), 3);
        let r = getallfamily_check(OrbitType::D, 2, 12).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn d_restriction_bookkeeping() {
        let table = BcCharTable::compute(4);
        let f = square(&table.sum_of(&family_members_d(2)[..3]).unwrap());
        for (label, m) in table.decompose_restricted_to_d(&f) {
            let (chi, scale) = match &label {
                DLabel::Pair(bp) => (bp.clone(), 1),
                DLabel::Split(a) => (BiPartition::new(a.clone(), a.clone()), 2),
            };
            let direct = table.inner_product_d(&f, &table.character(&chi).unwrap());
            assert_eq!(direct, m * scale, "{label}");
        }
    }

    #[test]
    fn induction_small() {
        assert!(induction_identity_check(1, 3).unwrap().passed());
        assert!(induction_identity_check(2, 3).unwrap().passed());
    }
}
