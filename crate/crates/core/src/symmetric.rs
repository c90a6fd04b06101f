//! Characters of the symmetric group: class data, Murnaghan–Nakayama
//! evaluation, full tables, Kronecker multiplicities and the staircase
//! tensor-square checks.
//!
//! Character values of `S_n` are bounded by `sqrt(n!)`, so they fit an `i128`
//! far beyond any size this crate will ever tabulate; class sizes and inner
//! product sums are arbitrary precision.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `z(mu) = prod_m m^{a_m} a_m!`.
pub fn centralizer_order(mu: &Partition) -> BigUint {
    mu.multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (m, a)| acc * BigUint::from(m).pow(a as u32) * factorial(a))
}

/// Number of permutations with cycle type `mu`.
pub fn class_size(mu: &Partition) -> BigUint {
    factorial(mu.size()) / centralizer_order(mu)
}

/// A conjugacy class of `S_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnClass {
    pub cycle_type: Partition,
    pub size: BigUint,
}

impl SnClass {
    pub fn new(cycle_type: Partition) -> Self {
        let size = class_size(&cycle_type);
        Self { cycle_type, size }
    }
}

/// Removes a rim hook of length `len` from `shape` in every possible way,
/// returning the remaining shapes with the hook sign `(-1)^{height}`.
pub(crate) fn rim_hooks(shape: &[u32], len: u32) -> Vec<(Vec<u32>, i32)> {
    let rows = shape.len();
    // Beta-set with `rows` beads.
    let beta: Vec<i64> = shape.iter().enumerate().map(|(i, &p)| p as i64 + (rows - 1 - i) as i64).collect();
    let mut out = Vec::new();
    for i in 0..rows {
        let target = beta[i] - len as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> =
            nb.iter().enumerate().map(|(j, &b)| (b - (rows - 1 - j) as i64) as u32).filter(|&p| p > 0).collect();
        out.push((parts, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Evaluates characters on one class, memoizing on the remaining shape. The
/// cycle parts are consumed largest first, so the remaining size fixes how
/// many have been used and the shape alone is a sound key.
pub(crate) struct MnColumn {
    parts: Vec<u32>,
    memo: HashMap<Vec<u32>, i128>,
}

impl MnColumn {
    pub(crate) fn new(mu: &Partition) -> Self {
        Self { parts: mu.parts().to_vec(), memo: HashMap::new() }
    }

    pub(crate) fn value(&mut self, shape: &[u32]) -> i128 {
        let size: u32 = shape.iter().sum();
        if size == 0 {
            return 1;
        }
        if let Some(&v) = self.memo.get(shape) {
            return v;
        }
        // The largest remaining cycle is the first part whose suffix sums to `size`.
        let mut rem: u32 = self.parts.iter().sum();
        let mut idx = 0;
        while rem > size {
            rem -= self.parts[idx];
            idx += 1;
        }
        let len = self.parts[idx];
        let v = rim_hooks(shape, len).into_iter().map(|(rest, sign)| sign as i128 * self.value(&rest)).sum();
        self.memo.insert(shape.to_vec(), v);
        v
    }
}

/// `chi^lambda` on the class of cycle type `mu`.
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<i128> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(MnColumn::new(mu).value(lambda.parts()))
}

/// Full character table of `S_n`. Rows and classes are both indexed by
/// `Partition::all(n)` (reverse lexicographic order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnCharTable {
    pub n: usize,
    pub classes: Vec<SnClass>,
    pub labels: Vec<Partition>,
    pub rows: Vec<Vec<i128>>,
    index: HashMap<Partition, usize>,
}

impl SnCharTable {
    pub fn compute(n: usize) -> Self {
        let parts = Partition::all(n);
        let columns: Vec<Vec<i128>> = parts
            .par_iter()
            .map(|mu| {
                let mut col = MnColumn::new(mu);
                parts.iter().map(|lam| col.value(lam.parts())).collect()
            })
            .collect();
        let rows = (0..parts.len()).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
        Self::from_parts(n, parts, rows)
    }

    /// Table from rows in `Partition::all(n)` order, shape-checked only.
    pub fn from_rows(n: usize, rows: Vec<Vec<i128>>) -> Result<Self> {
        let labels = Partition::all(n);
        let k = labels.len();
        if rows.len() != k || rows.iter().any(|r| r.len() != k) {
            return Err(Error::Cache(format!("S_{n} table has the wrong shape")));
        }
        Ok(Self::from_parts(n, labels, rows))
    }

    fn from_parts(n: usize, labels: Vec<Partition>, rows: Vec<Vec<i128>>) -> Self {
        let classes = labels.iter().cloned().map(SnClass::new).collect();
        let index = labels.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Self { n, classes, labels, rows, index }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn row(&self, lambda: &Partition) -> Result<&[i128]> {
        self.index_of(lambda).map(|i| self.rows[i].as_slice()).ok_or_else(|| Error::SizeMismatch(lambda.size(), self.n))
    }

    /// `<f, g>` for class functions given by their values on `classes`.
    pub fn inner_product(&self, f: &[BigInt], g: &[BigInt]) -> BigInt {
        let total: BigInt =
            self.classes.iter().zip(f.iter().zip(g)).map(|(c, (a, b))| BigInt::from(c.size.clone()) * a * b).sum();
        let order = BigInt::from(factorial(self.n));
        let (q, r) = total.div_rem(&order);
        debug_assert!(r.is_zero(), "inner product not integral");
        q
    }

    /// Multiplicity of every irreducible in the class function `f`.
    pub fn decompose(&self, f: &[BigInt]) -> Vec<BigInt> {
        self.rows
            .par_iter()
            .map(|row| {
                let g: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
                self.inner_product(f, &g)
            })
            .collect()
    }

    pub fn row_big(&self, i: usize) -> Vec<BigInt> {
        self.rows[i].iter().map(|&v| BigInt::from(v)).collect()
    }

    /// Checks both orthogonality relations exactly.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let order = BigInt::from(factorial(self.n));
        let sizes: Vec<BigInt> = self.classes.iter().map(|c| BigInt::from(c.size.clone())).collect();
        let k = self.rows.len();
        let bad_row = (0..k).into_par_iter().find_any(|&i| {
            (i..k).any(|j| {
                let s: BigInt =
                    (0..k).map(|c| &sizes[c] * BigInt::from(self.rows[i][c]) * BigInt::from(self.rows[j][c])).sum();
                s != if i == j { order.clone() } else { BigInt::zero() }
            })
        });
        if let Some(i) = bad_row {
            return Err(Error::Mismatch(format!("row orthogonality fails at {}", self.labels[i])));
        }
        let cents: Vec<BigInt> = self.classes.iter().map(|c| BigInt::from(centralizer_order(&c.cycle_type))).collect();
        let bad_col = (0..k).into_par_iter().find_any(|&a| {
            (a..k).any(|b| {
                let s: BigInt = (0..k).map(|i| BigInt::from(self.rows[i][a]) * BigInt::from(self.rows[i][b])).sum();
                s != if a == b { cents[a].clone() } else { BigInt::zero() }
            })
        });
        if let Some(a) = bad_col {
            return Err(Error::Mismatch(format!("column orthogonality fails at {}", self.labels[a])));
        }
        Ok(())
    }

    pub fn to_json(&self) -> SnTableJson {
        SnTableJson {
            n: self.n,
            classes: self.labels.iter().map(|p| p.to_string()).collect(),
            class_sizes: self.classes.iter().map(|c| c.size.to_string()).collect(),
            rows: self
                .labels
                .iter()
                .zip(&self.rows)
                .map(|(l, r)| (l.to_string(), r.iter().map(|v| v.to_string()).collect()))
                .collect(),
        }
    }

    pub fn from_json(j: &SnTableJson) -> Result<Self> {
        let labels = Partition::all(j.n);
        let expect: Vec<String> = labels.iter().map(|p| p.to_string()).collect();
        if j.classes != expect || j.rows.len() != labels.len() {
            return Err(Error::Cache(format!("S_{} table has unexpected classes", j.n)));
        }
        let mut rows = Vec::with_capacity(labels.len());
        for l in &expect {
            let r = j.rows.get(l).ok_or_else(|| Error::Cache(format!("missing row {l}")))?;
            let vals = r
                .iter()
                .map(|s| s.parse::<i128>().map_err(|e| Error::Cache(e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            if vals.len() != labels.len() {
                return Err(Error::Cache(format!("row {l} has the wrong length")));
            }
            rows.push(vals);
        }
        let t = Self::from_parts(j.n, labels, rows);
        let sizes: Vec<String> = t.classes.iter().map(|c| c.size.to_string()).collect();
        if sizes != j.class_sizes {
            return Err(Error::Cache("class sizes differ".into()));
        }
        Ok(t)
    }
}

/// On-disk form of an `S_n` table; integers are decimal strings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SnTableJson {
    pub n: usize,
    pub classes: Vec<String>,
    pub class_sizes: Vec<String>,
    pub rows: BTreeMap<String, Vec<String>>,
}

/// `<chi^lambda chi^mu, chi^nu>`.
pub fn kronecker_mult(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    let n = lambda.size();
    for p in [mu, nu] {
        if p.size() != n {
            return Err(Error::SizeMismatch(n, p.size()));
        }
    }
    let mut total = BigInt::zero();
    for c in Partition::all(n) {
        let mut col = MnColumn::new(&c);
        let v = col.value(lambda.parts()) * col.value(mu.parts());
        total += BigInt::from(class_size(&c)) * BigInt::from(v) * BigInt::from(col.value(nu.parts()));
    }
    Ok((total / BigInt::from(factorial(n))).to_biguint().expect("multiplicity is nonnegative"))
}

/// Result of a tensor-square containment check over `S_n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ContainmentReport {
    pub n: usize,
    pub lambda: Partition,
    /// Multiplicity of each irreducible examined, in table order.
    #[serde(with = "crate::report::big_pairs")]
    pub multiplicities: Vec<(Partition, BigUint)>,
    pub missing: Vec<Partition>,
    /// `true` when every hook `(n - m, 1^m)` occurs.
    pub hook_complete: bool,
    /// `true` when every irreducible was examined (not just hooks).
    pub full: bool,
}

/// Largest `k` computed with the full table unless a caller raises the bound.
pub const SAXL_FULL_TABLE_MAX_K: usize = 5;
pub const SAXL_DEFAULT_BOUND: usize = 6;

/// Decomposes the square of the staircase character of `S_{k(k+1)/2}`.
///
/// Up to [`SAXL_FULL_TABLE_MAX_K`] every irreducible is examined; above it
/// only the hooks are, which needs one character row per hook.
pub fn saxl_check(k: usize, bound: usize) -> Result<ContainmentReport> {
    if k > bound {
        return Err(Error::BoundExceeded { what: "k", value: k, bound });
    }
    let lambda = Partition::staircase(k as u32);
    if k <= SAXL_FULL_TABLE_MAX_K {
        let table = SnCharTable::compute(lambda.size());
        square_containment(&table, &lambda)
    } else {
        hooks_only_square(&lambda)
    }
}

/// Same as [`saxl_check`] with a caller-supplied table.
pub fn square_containment(table: &SnCharTable, lambda: &Partition) -> Result<ContainmentReport> {
    let row = table.row(lambda)?;
    let sq: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v) * BigInt::from(v)).collect();
    Ok(containment_from(table, lambda, table.decompose(&sq)))
}

fn containment_from(table: &SnCharTable, lambda: &Partition, mults: Vec<BigInt>) -> ContainmentReport {
    let multiplicities: Vec<(Partition, BigUint)> = table
        .labels
        .iter()
        .cloned()
        .zip(mults.into_iter().map(|m| m.to_biguint().expect("nonnegative multiplicity")))
        .collect();
    let missing: Vec<Partition> = multiplicities.iter().filter(|(_, m)| m.is_zero()).map(|(p, _)| p.clone()).collect();
    let hook_complete = missing.iter().all(|p| !p.is_hook());
    ContainmentReport { n: table.n, lambda: lambda.clone(), multiplicities, missing, hook_complete, full: true }
}

fn hooks_only_square(lambda: &Partition) -> Result<ContainmentReport> {
    let n = lambda.size();
    let classes = Partition::all(n);
    // One column memo per class; each serves the staircase and every hook.
    let hooks: Vec<Partition> = (0..n as u32).map(|m| Partition::hook(n as u32, m)).collect();
    let per_class: Vec<Vec<BigInt>> = classes
        .par_iter()
        .map(|c| {
            let mut col = MnColumn::new(c);
            let size = BigInt::from(class_size(c));
            let lam = col.value(lambda.parts());
            let w = &size * BigInt::from(lam) * BigInt::from(lam);
            hooks.iter().map(|h| &w * BigInt::from(col.value(h.parts()))).collect()
        })
        .collect();
    let order = BigInt::from(factorial(n));
    let multiplicities: Vec<(Partition, BigUint)> = hooks
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let s: BigInt = per_class.iter().map(|v| &v[i]).sum();
            (h.clone(), (s / &order).to_biguint().expect("nonnegative multiplicity"))
        })
        .collect();
    let missing: Vec<Partition> = multiplicities.iter().filter(|(_, m)| m.is_zero()).map(|(p, _)| p.clone()).collect();
    Ok(ContainmentReport {
        n,
        lambda: lambda.clone(),
        hook_complete: missing.is_empty(),
        multiplicities,
        missing,
        full: false,
    })
}

/// Decomposes `chi^lambda ⊗ chi^lambda ⊗ (sum_{j <= n/2} chi^{(n-j, j)})`.
pub fn tensorprod_decompose_check(lambda: &Partition, table: Option<&SnCharTable>) -> Result<ContainmentReport> {
    let n = lambda.size();
    let owned;
    let table = match table {
        Some(t) if t.n == n => t,
        Some(t) => return Err(Error::SizeMismatch(n, t.n)),
        None => {
            owned = SnCharTable::compute(n);
            &owned
        }
    };
    let row = table.row(lambda)?;
    let k = table.labels.len();
    let mut two_row = vec![BigInt::zero(); k];
    for j in 0..=n / 2 {
        let p = Partition::from_unsorted([(n - j) as u32, j as u32]);
        for (acc, &v) in two_row.iter_mut().zip(table.row(&p)?) {
            *acc += v;
        }
    }
    let f: Vec<BigInt> = (0..k).map(|c| BigInt::from(row[c]) * BigInt::from(row[c]) * &two_row[c]).collect();
    Ok(containment_from(table, lambda, table.decompose(&f)))
}

/// The sign character value `(-1)^{n - len(mu)}`.
pub fn sign_value(mu: &Partition) -> i128 {
    if (mu.size() - mu.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn mn_examples() {
        for mu in Partition::all(5) {
            assert_eq!(mn_value(&p("5"), &mu).unwrap(), 1);
            assert_eq!(mn_value(&p("1,1,1,1,1"), &mu).unwrap(), sign_value(&mu));
        }
        assert_eq!(mn_value(&p("1,1,1,1"), &p("2,1,1")).unwrap(), -1);
        assert_eq!(mn_value(&p("2,1"), &p("3")).unwrap(), -1);
        assert!(mn_value(&p("2,1"), &p("2")).is_err());
    }

    #[test]
    fn kronecker_examples() {
        for lam in Partition::all(5) {
            assert_eq!(kronecker_mult(&lam, &lam, &p("5")).unwrap(), BigUint::one());
        }
        assert_eq!(kronecker_mult(&p("2,1"), &p("2,1"), &p("1,1,1")).unwrap(), BigUint::one());
        assert!(kronecker_mult(&p("2"), &p("1,1"), &p("2")).unwrap().is_zero());
    }

    #[test]
    fn small_saxl() {
        let r = saxl_check(2, 6).unwrap();
        assert!(r.missing.is_empty());
        let r = saxl_check(3, 6).unwrap();
        assert!(r.missing.is_empty() && r.hook_complete);
        assert_eq!(r.multiplicities.len(), 11);
        assert!(matches!(saxl_check(7, 6), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn tensor_three_factor() {
        assert!(tensorprod_decompose_check(&p("2,2"), None).unwrap().missing.is_empty());
        assert!(tensorprod_decompose_check(&p("2,2,2"), None).unwrap().missing.is_empty());
        let r = tensorprod_decompose_check(&p("5"), None).unwrap();
        let expect: Vec<Partition> = Partition::all(5).into_iter().filter(|q| q.len() > 2).collect();
        assert_eq!(r.missing, expect);
    }

    #[test]
    fn json_round_trip() {
        let t = SnCharTable::compute(6);
        let j = t.to_json();
        assert_eq!(SnCharTable::from_json(&j).unwrap(), t);
    }
}
