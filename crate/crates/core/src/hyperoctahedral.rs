//! Characters of the hyperoctahedral group `W(C_n)` (signed permutations) and
//! of its index-two subgroup `W(D_n)`.
//!
//! Classes are pairs of cycle types `(positive, negative)`. Irreducibles are
//! indexed by bipartitions `(alpha, beta)`: `(alpha, -)` is inflated from
//! `S_n`, `(-, (n))` is the sign of the `(Z/2)^n` factor, and values come from
//! the two-alphabet Murnaghan–Nakayama rule, where a rim hook removed from
//! `beta` along a negative cycle picks up an extra `-1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{lr_coeff, BiPartition, Partition};
use crate::symmetric::{factorial, rim_hooks};

/// A conjugacy class of signed permutations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BcClass {
    pub positive: Partition,
    pub negative: Partition,
}

impl BcClass {
    pub fn new(positive: Partition, negative: Partition) -> Self {
        Self { positive, negative }
    }

    pub fn n(&self) -> usize {
        self.positive.size() + self.negative.size()
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Partition::rectangle(1, n), Partition::empty())
    }

    /// `prod_l (2l)^{a_l} a_l! (2l)^{b_l} b_l!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for p in [&self.positive, &self.negative] {
            for (l, a) in p.multiplicities() {
                z *= BigUint::from(2 * l).pow(a as u32) * factorial(a);
            }
        }
        z
    }

    pub fn size(&self) -> BigUint {
        group_order_c(self.n()) / self.centralizer_order()
    }

    /// Lies in `W(D_n)`: an even number of negative cycles.
    pub fn in_d(&self) -> bool {
        self.negative.len().is_multiple_of(2)
    }

    /// Splits into two `W(D_n)` classes: no negative cycles, all cycles even.
    pub fn splits_in_d(&self) -> bool {
        self.negative.is_empty() && self.positive.parts().iter().all(|&l| l % 2 == 0)
    }

    /// All classes of `W(C_n)`, in the order of `BiPartition::all(n)`.
    pub fn all(n: usize) -> Vec<BcClass> {
        BiPartition::all(n).into_iter().map(|bp| BcClass::new(bp.first, bp.second)).collect()
    }

    /// Cycles as `(length, negative)`, longest first, positive before negative.
    fn cycles(&self) -> Vec<(u32, bool)> {
        let mut c: Vec<(u32, bool)> = self
            .positive
            .parts()
            .iter()
            .map(|&l| (l, false))
            .chain(self.negative.parts().iter().map(|&l| (l, true)))
            .collect();
        c.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        c
    }
}

impl fmt::Display for BcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.positive, self.negative)
    }
}

/// `2^n n!`.
pub fn group_order_c(n: usize) -> BigUint {
    (BigUint::one() << n) * factorial(n)
}

/// Evaluates characters on one class, memoized on the remaining bipartition.
struct WreathColumn {
    cycles: Vec<(u32, bool)>,
    memo: HashMap<(Vec<u32>, Vec<u32>), i128>,
}

impl WreathColumn {
    fn new(c: &BcClass) -> Self {
        Self { cycles: c.cycles(), memo: HashMap::new() }
    }

    fn value(&mut self, a: &[u32], b: &[u32]) -> i128 {
        let size: u32 = a.iter().sum::<u32>() + b.iter().sum::<u32>();
        if size == 0 {
            return 1;
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut rem: u32 = self.cycles.iter().map(|c| c.0).sum();
        let mut idx = 0;
        while rem > size {
            rem -= self.cycles[idx].0;
            idx += 1;
        }
        let (len, negative) = self.cycles[idx];
        let mut v = 0i128;
        for (rest, sign) in rim_hooks(a, len) {
            v += sign as i128 * self.value(&rest, b);
        }
        let twist = if negative { -1 } else { 1 };
        for (rest, sign) in rim_hooks(b, len) {
            v += (sign * twist) as i128 * self.value(a, &rest);
        }
        self.memo.insert(key, v);
        v
    }
}

/// `sigma_{(alpha, beta)}` on a class of `W(C_n)`.
pub fn bc_char_value(chi: &BiPartition, c: &BcClass) -> Result<i128> {
    if chi.size() != c.n() {
        return Err(Error::SizeMismatch(chi.size(), c.n()));
    }
    Ok(WreathColumn::new(c).value(chi.first.parts(), chi.second.parts()))
}

/// `binom(n, |alpha|) f^alpha f^beta`.
pub fn bc_dimension(chi: &BiPartition) -> BigUint {
    let n = chi.size();
    let a = chi.first.size();
    factorial(n) / (factorial(a) * factorial(n - a)) * chi.first.dimension() * chi.second.dimension()
}

/// Character table of `W(C_n)`; rows follow `BiPartition::all(n)` and
/// classes follow `BcClass::all(n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BcCharTable {
    pub n: usize,
    pub classes: Vec<BcClass>,
    pub class_sizes: Vec<BigUint>,
    pub labels: Vec<BiPartition>,
    pub rows: Vec<Vec<i128>>,
    index: HashMap<BiPartition, usize>,
}

/// A class function on `W(C_n)`, valued on `BcClass::all(n)`.
pub type ClassFn = Vec<BigInt>;

impl BcCharTable {
    pub fn compute(n: usize) -> Self {
        let classes = BcClass::all(n);
        let labels = BiPartition::all(n);
        let columns: Vec<Vec<i128>> = classes
            .par_iter()
            .map(|c| {
                let mut col = WreathColumn::new(c);
                labels.iter().map(|l| col.value(l.first.parts(), l.second.parts())).collect()
            })
            .collect();
        let rows = (0..labels.len()).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
        Self::from_rows(n, rows)
    }

    fn from_rows(n: usize, rows: Vec<Vec<i128>>) -> Self {
        let classes = BcClass::all(n);
        let labels = BiPartition::all(n);
        let class_sizes = classes.iter().map(BcClass::size).collect();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Self { n, classes, class_sizes, labels, rows, index }
    }

    pub fn order(&self) -> BigUint {
        group_order_c(self.n)
    }

    pub fn index_of(&self, chi: &BiPartition) -> Result<usize> {
        self.index.get(chi).copied().ok_or_else(|| Error::SizeMismatch(chi.size(), self.n))
    }

    pub fn character(&self, chi: &BiPartition) -> Result<ClassFn> {
        let i = self.index_of(chi)?;
        Ok(self.rows[i].iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn class_index(&self, c: &BcClass) -> Option<usize> {
        self.classes.iter().position(|x| x == c)
    }

    /// `<f, g>` over `W(C_n)`.
    pub fn inner_product(&self, f: &[BigInt], g: &[BigInt]) -> BigInt {
        let total: BigInt =
            self.class_sizes.iter().zip(f.iter().zip(g)).map(|(s, (a, b))| BigInt::from(s.clone()) * a * b).sum();
        let (q, r) = total.div_rem(&BigInt::from(self.order()));
        debug_assert!(r.is_zero(), "inner product not integral");
        q
    }

    /// Multiplicity of each irreducible (table order) in `f`.
    pub fn decompose(&self, f: &[BigInt]) -> Vec<BigInt> {
        (0..self.rows.len())
            .into_par_iter()
            .map(|i| {
                let g: Vec<BigInt> = self.rows[i].iter().map(|&v| BigInt::from(v)).collect();
                self.inner_product(f, &g)
            })
            .collect()
    }

    /// Character of `Λ^i V`, `V` the signed-permutation representation: the
    /// coefficient of `t^i` in `prod_{+l} (1 - (-t)^l) prod_{-l} (1 + (-t)^l)`.
    pub fn exterior_power(&self, i: usize) -> Result<ClassFn> {
        if i > self.n {
            return Err(Error::OutOfRange(format!("exterior power {i} of a rank {} space", self.n)));
        }
        Ok(self.classes.iter().map(|c| BigInt::from(exterior_coefficients(c)[i])).collect())
    }

    /// `sum_i Λ^i V`.
    pub fn exterior_algebra(&self) -> ClassFn {
        self.classes.iter().map(|c| BigInt::from(exterior_coefficients(c).iter().sum::<i64>())).collect()
    }

    /// Checks both orthogonality relations exactly.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let order = BigInt::from(self.order());
        let sizes: Vec<BigInt> = self.class_sizes.iter().map(|s| BigInt::from(s.clone())).collect();
        let k = self.rows.len();
        let bad = (0..k).into_par_iter().find_any(|&i| {
            (i..k).any(|j| {
                let s: BigInt = (0..k).map(|c| &sizes[c] * BigInt::from(self.rows[i][c] * self.rows[j][c])).sum();
                s != if i == j { order.clone() } else { BigInt::zero() }
            })
        });
        if let Some(i) = bad {
            return Err(Error::Mismatch(format!("W(C_{}) row orthogonality fails at {}", self.n, self.labels[i])));
        }
        let cents: Vec<BigInt> = self.classes.iter().map(|c| BigInt::from(c.centralizer_order())).collect();
        let bad = (0..k).into_par_iter().find_any(|&a| {
            (a..k).any(|b| {
                let s: BigInt = (0..k).map(|i| BigInt::from(self.rows[i][a] * self.rows[i][b])).sum();
                s != if a == b { cents[a].clone() } else { BigInt::zero() }
            })
        });
        if let Some(a) = bad {
            return Err(Error::Mismatch(format!("W(C_{}) column orthogonality fails at {}", self.n, self.classes[a])));
        }
        Ok(())
    }

    /// `sum_{chi in members} chi`.
    pub fn sum_of(&self, members: &[BiPartition]) -> Result<ClassFn> {
        let mut acc = vec![BigInt::zero(); self.classes.len()];
        for m in members {
            let i = self.index_of(m)?;
            for (a, &v) in acc.iter_mut().zip(&self.rows[i]) {
                *a += v;
            }
        }
        Ok(acc)
    }

    /// Multiplicity of each `W(D_n)` irreducible in the restriction of the
    /// `W(C_n)` class function `f`. Each unordered pair `{alpha, beta}` with
    /// `alpha != beta` is reported once under its larger ordering; a pair
    /// `alpha = beta` stands for each of its two split constituents, whose
    /// multiplicities agree because `f` is a `W(C_n)` class function.
    pub fn decompose_restricted_to_d(&self, f: &[BigInt]) -> Vec<(DLabel, BigInt)> {
        let c_mults = self.decompose(f);
        let mut out = Vec::new();
        for (i, l) in self.labels.iter().enumerate() {
            match l.first.cmp(&l.second) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => out.push((DLabel::Split(l.first.clone()), c_mults[i].clone())),
                std::cmp::Ordering::Greater => {
                    let j = self.index[&l.swapped()];
                    out.push((DLabel::Pair(l.clone()), &c_mults[i] + &c_mults[j]));
                }
            }
        }
        out
    }

    /// `<f, g>` over `W(D_n)` summed class by class, for `W(C_n)` class
    /// functions `f`, `g`.
    pub fn inner_product_d(&self, f: &[BigInt], g: &[BigInt]) -> BigInt {
        let total: BigInt = self
            .classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.in_d())
            .map(|(i, _)| BigInt::from(self.class_sizes[i].clone()) * &f[i] * &g[i])
            .sum();
        let half = BigInt::from(self.order()) / 2;
        let (q, r) = total.div_rem(&half);
        debug_assert!(r.is_zero(), "D inner product not integral");
        q
    }

    pub fn to_json(&self) -> BcTableJson {
        BcTableJson {
            n: self.n,
            classes: self.classes.iter().map(|c| c.to_string()).collect(),
            class_sizes: self.class_sizes.iter().map(|s| s.to_string()).collect(),
            rows: self
                .labels
                .iter()
                .zip(&self.rows)
                .map(|(l, r)| (l.to_string(), r.iter().map(|v| v.to_string()).collect()))
                .collect(),
        }
    }

    pub fn from_json(j: &BcTableJson) -> Result<Self> {
        let labels = BiPartition::all(j.n);
        let classes: Vec<String> = BcClass::all(j.n).iter().map(|c| c.to_string()).collect();
        if classes != j.classes || j.rows.len() != labels.len() {
            return Err(Error::Cache(format!("W(C_{}) table has unexpected classes", j.n)));
        }
        let mut rows = Vec::with_capacity(labels.len());
        for l in &labels {
            let r = j.rows.get(&l.to_string()).ok_or_else(|| Error::Cache(format!("missing row {l}")))?;
            let vals = r
                .iter()
                .map(|s| s.parse::<i128>().map_err(|e| Error::Cache(e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            if vals.len() != classes.len() {
                return Err(Error::Cache(format!("row {l} has the wrong length")));
            }
            rows.push(vals);
        }
        let t = Self::from_rows(j.n, rows);
        if t.class_sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>() != j.class_sizes {
            return Err(Error::Cache("class sizes differ".into()));
        }
        Ok(t)
    }
}

/// On-disk form of a `W(C_n)` table; integers are decimal strings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BcTableJson {
    pub n: usize,
    pub classes: Vec<String>,
    pub class_sizes: Vec<String>,
    pub rows: BTreeMap<String, Vec<String>>,
}

/// Label of a `W(D_n)` irreducible.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum DLabel {
    /// Unordered `{alpha, beta}`, stored with `alpha > beta`.
    Pair(BiPartition),
    /// Either constituent of the restriction of `(alpha, alpha)`.
    Split(Partition),
}

impl DLabel {
    /// The label of the restriction of `sigma_{(alpha, beta)}`.
    pub fn of(chi: &BiPartition) -> Self {
        match chi.first.cmp(&chi.second) {
            std::cmp::Ordering::Equal => DLabel::Split(chi.first.clone()),
            std::cmp::Ordering::Greater => DLabel::Pair(chi.clone()),
            std::cmp::Ordering::Less => DLabel::Pair(chi.swapped()),
        }
    }
}

impl fmt::Display for DLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DLabel::Pair(bp) => write!(f, "{{{}|{}}}", bp.first, bp.second),
            DLabel::Split(a) => write!(f, "{{{a}|{a}}}±"),
        }
    }
}

/// Coefficients of `det(1 + t w)` on the class, lowest degree first.
pub fn exterior_coefficients(c: &BcClass) -> Vec<i64> {
    let mut poly = vec![1i64];
    for (&l, negative) in
        c.positive.parts().iter().map(|l| (l, false)).chain(c.negative.parts().iter().map(|l| (l, true)))
    {
        // 1 - (-t)^l for a positive cycle, 1 + (-t)^l for a negative one.
        let sign_l = if l % 2 == 0 { 1 } else { -1 };
        let coeff = if negative { sign_l } else { -sign_l };
        let mut next = vec![0i64; poly.len() + l as usize];
        for (i, &a) in poly.iter().enumerate() {
            next[i] += a;
            next[i + l as usize] += coeff * a;
        }
        poly = next;
    }
    poly
}

/// The bipartition whose character is `Λ^i V` on `W(C_n)`.
pub fn exterior_power_label(n: usize, i: usize) -> BiPartition {
    BiPartition::new(Partition::from_unsorted([(n - i) as u32]), Partition::rectangle(1, i))
}

/// Index convention of the sign twist: `sigma_{(alpha, beta)} ⊗ sgn` is
/// `sigma_{(beta^t, alpha^t)}`.
pub fn sign_twist(chi: &BiPartition) -> BiPartition {
    BiPartition::new(chi.second.transpose(), chi.first.transpose())
}

/// The sign (determinant) character of `W(C_n)`.
pub fn sign_label(n: usize) -> BiPartition {
    BiPartition::new(Partition::empty(), Partition::rectangle(1, n))
}

/// Restriction multiplicities from `GL(V)` to `O(V)`:
/// `N_{lambda, mu} = sum_delta N^lambda_{delta, mu}` with `delta` running over
/// partitions whose rows all have even length.
pub fn gl_to_o_branching(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, u64>> {
    if lambda.len() > n {
        return Err(Error::OutOfRange(format!("{lambda} has more than {n} rows")));
    }
    let size = lambda.size();
    let mut out = BTreeMap::new();
    for m in (0..=size).rev().filter(|m| (size - m).is_multiple_of(2)) {
        for mu in Partition::all(m) {
            if !lambda.contains(&mu) {
                continue;
            }
            let mut total = 0;
            for delta in Partition::all(size - m) {
                if delta.parts().iter().all(|p| p % 2 == 0) {
                    total += lr_coeff(&delta, &mu, lambda)?;
                }
            }
            if total > 0 {
                out.insert(mu, total);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> BiPartition {
        s.parse().unwrap()
    }

    fn cls(s: &str) -> BcClass {
        let b = bp(s);
        BcClass::new(b.first, b.second)
    }

    #[test]
    fn value_examples() {
        for c in BcClass::all(3) {
            assert_eq!(bc_char_value(&bp("3|-"), &c).unwrap(), 1);
            let want = if c.negative.len() % 2 == 0 { 1 } else { -1 };
            assert_eq!(bc_char_value(&bp("-|3"), &c).unwrap(), want);
        }
        assert_eq!(bc_char_value(&bp("1|1"), &BcClass::identity(2)).unwrap(), 2);
        assert!(bc_char_value(&bp("1|1"), &cls("3|-")).is_err());
    }

    #[test]
    fn class_sizes_sum() {
        for n in 0..=6 {
            let total: BigUint = BcClass::all(n).iter().map(BcClass::size).sum();
            assert_eq!(total, group_order_c(n));
        }
        assert_eq!(BcClass::all(2).len(), 5);
    }

    #[test]
    fn c2_multiplicities() {
        let t = BcCharTable::compute(2);
        t.verify_orthogonality().unwrap();
        let x = t.character(&bp("1|1")).unwrap();
        let sq: Vec<BigInt> = x.iter().map(|v| v * v).collect();
        // V ⊗ V is a sum of four linear characters
        assert!(t.inner_product(&sq, &x).is_zero());
        // <chi chi, triv> = 1
        for l in &t.labels {
            let c = t.character(l).unwrap();
            let sq: Vec<BigInt> = c.iter().map(|v| v * v).collect();
            assert_eq!(t.inner_product(&sq, &t.character(&bp("2|-")).unwrap()), BigInt::one());
        }
    }

    #[test]
    fn exterior_powers_are_irreducible() {
        for n in 1..=6 {
            let t = BcCharTable::compute(n);
            for i in 0..=n {
                let e = t.exterior_power(i).unwrap();
                assert_eq!(t.inner_product(&e, &e), BigInt::one());
                assert_eq!(e, t.character(&exterior_power_label(n, i)).unwrap());
            }
            assert_eq!(t.exterior_power(n).unwrap(), t.character(&sign_label(n)).unwrap());
            assert!(t.exterior_power(n + 1).is_err());
        }
    }

    #[test]
    fn sign_twist_convention() {
        for n in 1..=5 {
            let t = BcCharTable::compute(n);
            let sgn = t.character(&sign_label(n)).unwrap();
            for l in &t.labels {
                let c = t.character(l).unwrap();
                let tw: Vec<BigInt> = c.iter().zip(&sgn).map(|(a, b)| a * b).collect();
                assert_eq!(tw, t.character(&sign_twist(l)).unwrap(), "{l}");
            }
        }
    }

    #[test]
    fn branching_examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        let b = gl_to_o_branching(&p("1"), 3).unwrap();
        assert_eq!(b.into_iter().collect::<Vec<_>>(), vec![(p("1"), 1)]);
        let b = gl_to_o_branching(&p("2"), 3).unwrap();
        assert_eq!(b.get(&Partition::empty()), Some(&1));
        assert_eq!(b.get(&p("2")), Some(&1));
    }
}
